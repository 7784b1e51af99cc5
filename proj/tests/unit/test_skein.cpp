#include <doctest.h>

#include <random>

#include "springer/action.hpp"
#include "springer/error.hpp"
#include "springer/skein.hpp"

using namespace springer;

namespace {

HomClass cls(const std::string& s) { return parse_class(s); }

const SkeinCalibration& calibrated() {
  static const SkeinCalibration c = calibrate(4);
  set_active_convention(c.convention);
  return c;
}

}  // namespace

TEST_CASE("flatten") {
  CHECK(flatten(3, {}).crossings.empty());
  CHECK(flatten(3, {1, 2}).crossings == std::vector<int>{2, 1});
  CHECK(flatten(3, {1, 1}).crossings == std::vector<int>{1, 1});
  CHECK_THROWS_AS(flatten(3, {3}), Error);
}

TEST_CASE("resolution at n = 2") {
  ResolutionConvention plain{1, 1, DotPlacement::None, true, true};
  auto m = parse_matching("2: u1-2");
  CHECK(resolve_evaluate(m, flatten(2, {}), plain) == HomClass::of(m));
  CHECK(resolve_evaluate(m, flatten(2, {1}), plain) == cls("-1·(2: u1-2)"));
  CHECK(resolve_evaluate(parse_matching("2: d1-2"), flatten(2, {1}), plain) == cls("2: d1-2"));
  // Without projection the dotted cap picks up an undotted cap.
  ResolutionConvention loose = plain;
  loose.graded_projection = false;
  CHECK(resolve_evaluate(parse_matching("2: d1-2"), flatten(2, {1}), loose).terms().size() == 2);
}

TEST_CASE("calibration") {
  clear_active_convention();
  CHECK_THROWS_AS(active_convention(), Error);
  CHECK_THROWS_AS(skein_act(Permutation(2), parse_matching("2: u1-2")), Error);
  CHECK(calibrate(2).ambiguous());
  const auto& c = calibrated();
  CHECK(c.fitting.size() == 1);
  CHECK(c.convention == ResolutionConvention{1, 1, DotPlacement::None, true, true});
  CHECK(active_convention() == c.convention);
}

TEST_CASE("skein action equals act") {
  calibrated();
  auto cyc = parse_permutation("(1 2 3)", 3);
  for (const auto& d : standard_basis(3, 1, 1)) CHECK(skein_act(cyc, d) == act(cyc, HomClass::of(d)));
  auto u = parse_matching("2: u1-2");
  CHECK(skein_act(Permutation(2), u) == HomClass::of(u));
  CHECK(skein_act(parse_permutation("(1 2)", 2), u) == cls("-1·(2: u1-2)"));
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (int m = 0; m <= k; ++m)
        for (const auto& d : standard_basis(n, k, m))
          for (int i = 1; i < n; ++i) {
            auto s = Permutation::adjacent(n, i);
            CHECK(skein_act(s, d) == act(s, HomClass::of(d)));
          }
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      auto basis = standard_basis(n, k, 0);
      for (int m = 1; m <= k; ++m)
        for (const auto& d : standard_basis(n, k, m)) basis.push_back(d);
      for (int t = 0; t < 100; ++t) {
        std::vector<int> w(rng() % 7);
        for (auto& x : w) x = 1 + static_cast<int>(rng() % (n - 1));
        const auto& d = basis[rng() % basis.size()];
        CHECK(skein_act(w, d) == act(Permutation::from_word(n, w), HomClass::of(d)));
      }
    }
}

TEST_CASE("evaluation order and word choice do not matter") {
  const auto& c = calibrated();
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (int m = 0; m <= k; ++m)
        for (const auto& d : standard_basis(n, k, m)) {
          auto t = flatten(n, {1, n - 1, 1});
          auto ref = resolve_evaluate(d, t, c.convention);
          for (std::uint64_t seed : {1u, 2u, 99u}) CHECK(resolve_evaluate(d, t, c.convention, seed) == ref);
          if (n >= 3) CHECK(skein_act(std::vector<int>{1, 2, 1}, d) == skein_act(std::vector<int>{2, 1, 2}, d));
          if (n >= 4) CHECK(skein_act(std::vector<int>{1, 3}, d) == skein_act(std::vector<int>{3, 1}, d));
        }
}
