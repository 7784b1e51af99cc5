#include <doctest.h>

#include <map>

#include "springer/diagram.hpp"
#include "springer/error.hpp"

using namespace springer;

namespace {
Matching M(const char* text) { return parse_matching(text).base(); }
}  // namespace

TEST_CASE("glue traces circles and lines") {
  auto g = glue(M("5: r1 u2-3 u4-5"), M("5: u1-2 u3-4 r5"));
  CHECK(g.size() == 1);
  CHECK(g.line_count() == 1);
  CHECK(g.components[0].vertices == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(compatible(M("5: r1 u2-3 u4-5"), M("5: u1-2 u3-4 r5")));

  auto c = glue(M("4: u1-2 u3-4"), M("4: u1-4 u2-3"));
  CHECK(c.size() == 1);
  CHECK(c.circle_count() == 1);

  CHECK_FALSE(compatible(M("4: u1-2 r3 r4"), M("4: r1 r2 u3-4")));
  CHECK_THROWS_AS(glue(M("4: u1-2 r3 r4"), M("4: u1-2 u3-4")), Error);

  for (int n = 1; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (const auto& a : enumerate(n, k)) {
        auto self = glue(a, a);
        CHECK(self.circle_count() == k);
        CHECK(self.line_count() == n - 2 * k);
        CHECK(compatible(a, a));
        for (const auto& b : enumerate(n, k)) {
          auto gb = glue(a, b);
          CHECK(gb.line_count() == n - 2 * k);
          int total = 0;
          for (const auto& comp : gb.components) {
            total += static_cast<int>(comp.vertices.size());
            if (comp.circle) CHECK(comp.vertices.size() % 2 == 0);
          }
          CHECK(total == n);
          CHECK(gb.size() <= n - k);
          if (compatible(a, b)) {
            // The t-th rays of a and b lie on one line.
            auto ra = a.rays(), rb = b.rays();
            for (std::size_t t = 0; t < ra.size(); ++t)
              CHECK(gb.component_of[ra[t]] == gb.component_of[rb[t]]);
          }
        }
      }
}

TEST_CASE("arrow moves") {
  CHECK(arrow_successors(M("4: r1 r2 u3-4")) == std::vector<Matching>{M("4: r1 u2-3 r4")});
  CHECK(arrow_successors(M("4: u1-2 u3-4")) == std::vector<Matching>{M("4: u1-4 u2-3")});
  CHECK(arrow_successors(M("4: u1-2 r3 r4")).empty());
  CHECK(linear_order(4, 1) == std::vector<Matching>{M("4: r1 r2 u3-4"), M("4: r1 u2-3 r4"), M("4: u1-2 r3 r4")});
  CHECK(linear_order(4, 2) == std::vector<Matching>{M("4: u1-2 u3-4"), M("4: u1-4 u2-3")});
  CHECK(linear_order(5, 0).size() == 1);

  for (int n = 1; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (auto tie : {TieBreak::Lex, TieBreak::ReverseLex, TieBreak::Random}) {
        auto order = linear_order(n, k, tie, 7);
        CHECK(order.size() == enumerate(n, k).size());
        std::map<Matching, std::size_t> pos;
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
        for (const auto& a : order)
          for (const auto& b : arrow_successors(a)) CHECK(pos[a] < pos[b]);
      }
}

TEST_CASE("distances and minimal sequences") {
  CHECK(distance(M("4: u1-2 u3-4"), M("4: u1-4 u2-3")) == 1);
  CHECK(distance(M("4: u1-2 r3 r4"), M("4: u1-2 r3 r4")) == 0);
  CHECK(distance(M("4: u1-2 r3 r4"), M("4: r1 r2 u3-4")) == 2);
  CHECK(minimal_sequence(M("4: u1-2 u3-4"), M("4: u1-4 u2-3")).length() == 1);
  CHECK(minimal_sequence(M("4: u1-2 u3-4"), M("4: u1-2 u3-4")).length() == 0);
  auto fig = minimal_sequence(M("5: r1 u2-3 u4-5"), M("5: u1-2 u3-4 r5"));
  CHECK(fig.length() == 2);
  CHECK(fig.certified);

  for (int n = 1; n <= 7; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      const auto& g = arrow_graph(n, k);
      for (const auto& a : g.nodes())
        for (const auto& b : g.nodes()) {
          auto d = distance(a, b);
          REQUIRE(d.has_value());
          auto seq = minimal_sequence(a, b);
          CHECK(seq.length() == *d);
          CHECK(seq.steps.front() == a);
          CHECK(seq.steps.back() == b);
          if (compatible(a, b)) {
            CHECK(*d == n - k - glue(a, b).size());
            CHECK(seq.certified);
            for (int t = 0; t < seq.length(); ++t)
              CHECK(glue(seq.steps[t], b).size() + 1 == glue(seq.steps[t + 1], b).size());
          }
        }
    }
}

TEST_CASE("winding parity between nested same-circle arcs") {
  for (int n = 2; n <= 8; n += 2)
    for (const auto& a : enumerate(n, n / 2))
      for (const auto& b : enumerate(n, n / 2)) {
        auto g = glue(a, b);
        for (const auto& outer : a.arcs())
          for (const auto& inner : a.arcs()) {
            if (!(outer.left < inner.left && inner.right < outer.right)) continue;
            int comp = g.component_of[outer.left];
            if (g.component_of[inner.left] != comp) continue;
            int between = 0;
            bool same_between = false;
            for (const auto& x : a.arcs())
              if (outer.left < x.left && x.left < inner.left && inner.right < x.right && x.right < outer.right) {
                ++between;
                same_between |= g.component_of[x.left] == comp;
              }
            if (!same_between) CHECK(between % 2 == 0);
          }
      }
}

TEST_CASE("meet elements") {
  CHECK(meet(M("4: u1-2 r3 r4"), M("4: r1 r2 u3-4")) == M("4: r1 r2 u3-4"));
  CHECK(meet(M("4: u1-2 u3-4"), M("4: u1-4 u2-3")) == M("4: u1-2 u3-4"));
  auto check_pair = [](const ArrowGraph& g, std::size_t ia, std::size_t ib) {
    auto c = meet(g.nodes()[ia], g.nodes()[ib]);
    auto ic = g.index(c);
    CHECK(g.precedes_or_equal(ic, ia));
    CHECK(g.precedes_or_equal(ic, ib));
    CHECK(g.distance(ia, ic) + g.distance(ic, ib) == g.distance(ia, ib));
  };
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      const auto& g = arrow_graph(n, k);
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
          if (compatible(g.nodes()[a], g.nodes()[b]) || 2 * k == n) check_pair(g, a, b);
    }
}
