#include <doctest.h>

#include "oracles.hpp"
#include "springer/diagram.hpp"
#include "springer/error.hpp"
#include "springer/subspace.hpp"

using namespace springer;

namespace {
Matching M(const char* text) { return parse_matching(text).base(); }
}  // namespace

TEST_CASE("the X_{3,1} example") {
  auto a = M("4: u1-2 r3 r4"), b = M("4: r1 u2-3 r4"), c = M("4: r1 r2 u3-4");
  auto Sa = subspace_of(a), Sb = subspace_of(b), Sc = subspace_of(c);
  CHECK(Sa.to_string() == "(x1, x1, -p, p)");
  CHECK(subspace_of(a, Variant::Primed).to_string() == "(x1, -x1, p, p)");
  for (const auto* s : {&Sa, &Sb, &Sc}) CHECK(s->dimension() == 2);
  CHECK(Sa.intersect(Sb).to_string() == "(-p, -p, -p, p)");
  CHECK(Sb.intersect(Sc).to_string() == "(-p, p, p, p)");
  CHECK(Sa.intersect(Sc).empty());
  CHECK(Sa.intersect(Sa) == Sa);
  CHECK(Sa.contains(Sa.intersect(Sb)));
  CHECK(Sb.contains(Sa.intersect(Sc)));
  CHECK_FALSE(Sa.intersect(Sb).contains(Sa));
  CHECK(subspace_of(M("4: u1-2 u3-4")).free_classes() == 2);
}

TEST_CASE("intersections follow the glued manifold") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (const auto& a : enumerate(n, k)) {
        auto Sa = subspace_of(a);
        CHECK(Sa.dimension() == 2 * k);
        CHECK(Sa.gamma() == subspace_of(a, Variant::Primed));
        CHECK(Sa.gamma().gamma() == Sa);
        for (const auto& b : enumerate(n, k)) {
          auto I = Sa.intersect(subspace_of(b));
          if (compatible(a, b)) {
            REQUIRE_FALSE(I.empty());
            CHECK(I.free_classes() == glue(a, b).circle_count());
          } else {
            CHECK(I.empty());
          }
        }
      }
}

TEST_CASE("finite model agrees with the union-find") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (const auto& a : enumerate(n, k)) {
        CHECK(oracle::points_of(subspace_of(a)) == oracle::model_of(a).points());
        for (const auto& b : enumerate(n, k)) {
          auto I = subspace_of(a).intersect(subspace_of(b));
          auto want = oracle::meet_models(oracle::model_of(a), oracle::model_of(b)).points();
          CHECK(oracle::points_of(I) == want);
          auto pa = oracle::model_of(a).points();
          bool subset = std::includes(pa.begin(), pa.end(), want.begin(), want.end());
          CHECK(subspace_of(a).contains(I) == subset);
          auto pb = oracle::model_of(b).points();
          CHECK(subspace_of(a).contains(subspace_of(b)) == std::includes(pa.begin(), pa.end(), pb.begin(), pb.end()));
        }
      }
}

TEST_CASE("point maps") {
  CHECK_THROWS_AS(subspace_of(M("3: u1-2 r3")).eta(5), Error);
  CHECK_THROWS_AS(subspace_of(M("3: u1-2 r3")).iota(1), Error);
  CHECK(subspace_of(M("2: r1 r2")).eta(4).to_string() == "(p, -p, -p, p)");
  CHECK(subspace_of(M("2: r1 r2")).iota(4).to_string() == "(-p, -p, -p, p)");
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (const auto& a : enumerate(n, k)) {
        int target = 2 * n - 2 * k;
        auto Sa = subspace_of(a);
        CHECK(Sa.eta(target).gamma() == Sa.gamma().iota(target));
        // eta lands in the component of the completion.
        CHECK(subspace_of(complete(a)).contains(Sa.eta(target)));
      }
}

TEST_CASE("intersection lemmas") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      const auto& g = arrow_graph(n, k);
      const auto& nodes = g.nodes();
      std::vector<Subspace> S;
      for (const auto& a : nodes) S.push_back(subspace_of(a));
      for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = 0; b < nodes.size(); ++b) {
          if (!compatible(nodes[a], nodes[b])) continue;
          for (std::size_t c = 0; c < nodes.size(); ++c)
            if (g.distance(a, c) == g.distance(a, b) + g.distance(b, c))
              CHECK(S[a].intersect(S[c]) == S[a].intersect(S[b]).intersect(S[c]));
        }
      // Anything below a in the linear order meets S_a inside some S_{a1}, a1 -> a.
      auto order = g.linear_order();
      for (std::size_t pos = 0; pos < order.size(); ++pos) {
        auto a = g.index(order[pos]);
        for (std::size_t q = 0; q < pos; ++q) {
          auto b = g.index(order[q]);
          auto I = S[a].intersect(S[b]);
          if (I.empty()) continue;
          bool witnessed = false;
          for (auto a1 : g.predecessors(a)) witnessed |= S[a].intersect(S[a1]).contains(I);
          CHECK(witnessed);
        }
      }
    }
}
