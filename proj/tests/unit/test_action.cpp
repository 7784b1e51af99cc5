#include <doctest.h>

#include <random>

#include "springer/action.hpp"
#include "springer/error.hpp"

using namespace springer;

namespace {

HomClass cls(const std::string& s) { return parse_class(s); }

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

}  // namespace

TEST_CASE("act examples") {
  CHECK(act(parse_permutation("(1 2)", 2), cls("2: u1-2")) == cls("-1·(2: u1-2)"));
  CHECK(act(parse_permutation("(1 3)(2 4)", 4), cls("4: d1-2 d3-4")) == cls("4: d1-2 d3-4"));
  CHECK(act(parse_permutation("(1 2 3)", 3), cls("3: r1 d2-3")) == cls("3: r1 d2-3"));
  CHECK(act(parse_permutation("(2 3)", 4), cls("4: u1-2 u3-4")) == cls("(4: u1-2 u3-4) - (4: u1-4 u2-3)"));
  CHECK(act(Permutation(4), cls("4: u1-4 d2-3")) == reduce_to_class(cls("4: u1-4 d2-3")));
  CHECK_THROWS_AS(act(Permutation(3), cls("4: u1-2 u3-4")), Error);
}

TEST_CASE("act is a graded group action") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (int m = 0; m <= k; ++m)
        for (const auto& d : all_dotted_matchings(n, k, m)) {
          auto x = HomClass::of(d);
          auto s = random_perm(n, rng), t = random_perm(n, rng);
          auto y = act(s * t, x);
          CHECK(y == act(s, act(t, x)));
          if (!y.is_zero()) CHECK(y.grading() == m);
        }
}

TEST_CASE("representation matrices") {
  auto id = rep_matrix(Permutation(4), 4, 2, 1);
  CHECK(id == linalg::Matrix::identity(3));
  auto s1 = rep_matrix(Permutation::adjacent(4, 1), 4, 2, 2);
  CHECK(s1(0, 0) == -1);
  CHECK(s1(1, 0) == 0);
  auto r = character_table_check(4, 2);
  CHECK(r.ok());
  CHECK(r.traces[2] == std::vector<long long>{2, 0, 2, -1, 0});
  CHECK(r.traces[0] == std::vector<long long>{1, 1, 1, 1, 1});
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      auto rep = character_table_check(n, k);
      CHECK_MESSAGE(rep.ok(), (rep.failures.empty() ? "" : rep.failures.front()));
    }
}

TEST_CASE("line diagram route") {
  GammaConvention parity{GammaConvention::Key::Parity, -1};
  auto g = gamma_push(parse_matching("2: u1-2"), parity);
  CHECK(g.terms == std::map<TabloidKey, Rational>{{1, -1}, {2, 1}});
  const auto& cal = gamma_calibration();
  CHECK(cal.fitting == std::vector<GammaConvention>{parity});
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (int m = 0; m <= k; ++m)
        for (const auto& d : standard_basis(n, k, m))
          for (int i = 1; i < n; ++i) {
            auto s = Permutation::adjacent(n, i);
            CHECK(act_via_gamma(s, d) == act(s, HomClass::of(d)));
          }
  CHECK_THROWS_AS(act_via_gamma(Permutation(4), parse_matching("4: u1-4 d2-3")), Error);
}

TEST_CASE("chart anchors") {
  CHECK(classify(parse_matching("2: u1-2"), 1) == ChartCase::UndottedArc);
  CHECK(classify(parse_matching("4: u1-2 u3-4"), 2) == ChartCase::BothUndottedPair);
  CHECK(classify(parse_matching("3: r1 r2 r3"), 1) == ChartCase::BothRays);
  CHECK(classify(parse_matching("3: r1 d2-3"), 1) == ChartCase::RayDottedArc);
  CHECK(classify(parse_matching("3: r1 u2-3"), 1) == ChartCase::RayUndottedArc);
  std::map<ChartCase, int> seen;
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      auto c = derive_chart(n, k);
      CHECK_MESSAGE(c.ok(), (c.failures.empty() ? "" : c.failures.front()));
      for (const auto& e : c.entries) ++seen[e.kind];
    }
  CHECK(seen.size() == 7);
}

TEST_CASE("restriction and image stability") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      const int pad = n - 2 * k;
      for (int m = 0; m <= k; ++m)
        for (const auto& d : standard_basis(n, k, m))
          for (int i = 1; i < n; ++i) {
            auto s = Permutation::adjacent(n, i);
            auto shifted = Permutation::adjacent(n + pad, i + pad);
            auto lhs = f_embed(zeta(act(s, HomClass::of(d))), pad);
            CHECK(lhs == permute(shifted, f_embed(zeta(HomClass::of(d)), pad)));
            // The shifted generator keeps the completed image inside itself.
            HomClass img(n + pad, n - k);
            auto y = act(s, HomClass::of(d));
            for (const auto& [e, c] : y.terms()) img.add(complete(e), c);
            CHECK(act(shifted, HomClass::of(complete(d))) == reduce_to_class(img));
          }
    }
}
