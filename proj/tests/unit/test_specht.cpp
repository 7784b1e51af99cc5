#include <doctest.h>

#include <random>

#include "springer/error.hpp"
#include "springer/specht.hpp"

using namespace springer;

namespace {

TabloidVector v(int n, std::vector<int> bottom) { return TabloidVector::single(n, bottom); }

TabloidVector random_vector(int n, int m, std::mt19937_64& rng) {
  TabloidVector out(n, m);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (auto key : tabloid_keys(n, m)) out.add(key, coef(rng));
  return out;
}

// Brute-force character of the permutation module minus its (n-m+1, m-1)
// neighbour, i.e. the two-row character from fixed tabloids.
long long fixed_tabloids(const Permutation& s, int m) {
  long long count = 0;
  for (auto key : tabloid_keys(s.size(), m)) {
    TabloidKey img = 0;
    for (int x : tabloid_set(key)) img |= TabloidKey{1} << (s(x) - 1);
    if (img == key) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("permute relabels bottom rows") {
  CHECK(permute(parse_permutation("(2 3)", 4), v(4, {2, 4})) == v(4, {3, 4}));
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n)
    for (int m = 0; 2 * m <= n; ++m)
      for (int trial = 0; trial < 5; ++trial) {
        auto x = random_vector(n, m, rng);
        std::vector<int> a(n), b(n);
        std::iota(a.begin(), a.end(), 1);
        std::iota(b.begin(), b.end(), 1);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        Permutation s(a), t(b);
        CHECK(permute(Permutation(n), x) == x);
        CHECK(permute(s * t, x) == permute(s, permute(t, x)));
      }
  CHECK_THROWS_AS(permute(Permutation(3), v(4, {1})), Error);
}

TEST_CASE("polytabloids and matching vectors") {
  CHECK(polytabloid({{1, 3}, {2}}) == v(3, {2}) - v(3, {1}));
  CHECK(polytabloid({{1, 2, 3}, {}}) == v(3, {}));
  CHECK(polytabloid({{1, 3}, {2, 4}}) == v(4, {2, 4}) - v(4, {1, 4}) - v(4, {2, 3}) + v(4, {1, 3}));
  CHECK(matching_vector(parse_matching("3: u1-2 r3")) == v(3, {2}) - v(3, {1}));
  CHECK(matching_vector(parse_matching("4: d1-4 d2-3")) == v(4, {}));
  CHECK(matching_vector(parse_matching("4: u1-4 u2-3")) == v(4, {3, 4}) - v(4, {1, 3}) - v(4, {2, 4}) + v(4, {1, 2}));
  // Only undotted arcs matter.
  CHECK(matching_vector(parse_matching("5: u1-2 d3-4 r5")) == matching_vector(parse_matching("5: u1-2 r3 r4 r5")));
  CHECK(v(4, {2, 4}).to_string() == "v{2,4}");
}

TEST_CASE("zeta") {
  CHECK(zeta(parse_class("2: u1-2")) == v(2, {2}) - v(2, {1}));
  CHECK(zeta(HomClass(4, 2)).is_zero());
  CHECK(zeta(parse_class("(4: d1-2 u3-4) + (4: u1-2 d3-4) - (4: d1-4 u2-3) - (4: u1-4 d2-3)")).is_zero());
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (int m = 0; m <= k; ++m) {
        for (const auto& r : relation_instances(n, k, m)) CHECK(zeta(r).is_zero());
        if (n <= 6)
          for (const auto& d : all_dotted_matchings(n, k, m)) {
            auto x = HomClass::of(d);
            CHECK(zeta(x) == zeta(reduce_to_class(x)));
          }
      }
}

TEST_CASE("independence of both bases") {
  for (int n = 1; n <= 8; ++n)
    for (int m = 0; 2 * m <= n; ++m) {
      linalg::Matrix rows(0, tabloid_keys(n, m).size());
      for (const auto& t : standard_tableaux(n, m)) rows.append_row(polytabloid(t).dense());
      CHECK(linalg::rank(rows) == static_cast<std::size_t>(syt_count(n, m)));
      for (int k = m; 2 * k <= n; ++k) {
        linalg::Matrix mrows(0, tabloid_keys(n, m).size());
        for (const auto& d : standard_basis(n, k, m)) mrows.append_row(matching_vector(d).dense());
        CHECK(linalg::rank(mrows) == static_cast<std::size_t>(syt_count(n, m)));
      }
    }
}

TEST_CASE("modules agree") {
  auto r = modules_equal(4, 2, 2);
  CHECK(r.equal);
  CHECK(r.rank_tableaux == 2);
  CHECK(r.rank_matchings == 2);
  CHECK(modules_equal(5, 0, 2).equal);
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (int m = 0; m <= k; ++m) CHECK(modules_equal(n, m, k).equal);
  // Consecutive undotted caps give a polytabloid exactly.
  auto d = parse_matching("6: u1-2 u3-4 d5-6");
  CHECK(matching_vector(d) == polytabloid(tableau_of(d)));
  CHECK_THROWS_AS(modules_equal(4, 2, 1), Error);
}

TEST_CASE("f shifts bottom rows") {
  CHECK(f_embed(v(7, {2, 3}), 1) == v(8, {3, 4}));
  CHECK(f_embed(v(3, {}), 1) == v(4, {}));
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      const int pad = n - 2 * k;
      for (int m = 0; m <= k; ++m)
        for (const auto& d : standard_basis(n, k, m))
          CHECK(f_embed(matching_vector(d), pad) == matching_vector(complete(d)));
      std::mt19937_64 rng(n * 10 + k);
      for (int i = 1; i < n; ++i) {
        auto s = Permutation::adjacent(n, i);
        auto shifted = Permutation::adjacent(n + pad, i + pad);
        auto x = random_vector(n, k, rng);
        CHECK(f_embed(permute(s, x), pad) == permute(shifted, f_embed(x, pad)));
      }
    }
}

TEST_CASE("Murnaghan-Nakayama") {
  CHECK(irr_character({2, 2}, {1, 1, 1, 1}) == 2);
  CHECK(irr_character({2, 2}, {2, 2}) == 2);
  CHECK(irr_character({2, 2}, {3, 1}) == -1);
  CHECK(irr_character({2, 2}, {2, 1, 1}) == 0);
  CHECK(irr_character({2, 2}, {4}) == 0);
  CHECK(irr_character({1, 1, 1}, {2, 1}) == -1);
  for (int n = 1; n <= 8; ++n)
    for (const auto& mu : partitions_of(n)) {
      CHECK(irr_character({n}, mu) == 1);
      auto s = Permutation::of_cycle_type(mu);
      // chi^(n-m,m) = fixed m-tabloids minus fixed (m-1)-tabloids.
      for (int m = 0; 2 * m <= n; ++m) {
        long long expect = fixed_tabloids(s, m) - (m ? fixed_tabloids(s, m - 1) : 0);
        CHECK(irr_character(m ? std::vector<int>{n - m, m} : std::vector<int>{n}, mu) == expect);
      }
    }
}
