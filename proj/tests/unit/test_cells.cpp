#include <doctest.h>

#include "springer/cells.hpp"
#include "springer/diagram.hpp"
#include "springer/error.hpp"

using namespace springer;

namespace {
Matching M(const char* text) { return parse_matching(text).base(); }

std::vector<long long> sphere_power(int k) {
  std::vector<long long> p(2 * k + 1, 0);
  for (int j = 0; j <= k; ++j) p[2 * j] = binomial(k, j);
  return p;
}
}  // namespace

TEST_CASE("arc forests") {
  auto nested = arc_forest(M("4: u1-4 u2-3"));
  CHECK(nested.edges.size() == 1);
  CHECK(nested.roots == std::vector<Arc>{{1, 4}});
  auto flat = arc_forest(M("4: u1-2 u3-4"));
  CHECK(flat.edges.empty());
  CHECK(flat.roots.size() == 2);
  CHECK(arc_forest(M("3: r1 r2 r3")).vertices.empty());
  // The figure: a two-level tree beside a root with two children.
  auto fig = arc_forest(M("11: u1-4 u2-3 r5 u6-11 u7-8 u9-10"));
  CHECK(fig.roots == std::vector<Arc>{{1, 4}, {6, 11}});
  CHECK(fig.edges.size() == 3);
}

TEST_CASE("cell counts") {
  CHECK(poincare_polynomial(forest_cells(M("2: u1-2"))) == std::vector<long long>{1, 0, 1});
  auto nested = forest_cells(M("4: u1-4 u2-3"));
  CHECK(nested.size() == 4);
  CHECK(poincare_polynomial(nested) == std::vector<long long>{1, 0, 2, 0, 1});
  CHECK(poincare_polynomial(cartesian_cells(M("4: u1-2 u3-4"))) == std::vector<long long>{1, 0, 2, 0, 1});
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (const auto& a : enumerate(n, k)) {
        auto f = arc_forest(a);
        CHECK(static_cast<int>(f.edges.size() + f.roots.size()) == k);
        CHECK(poincare_polynomial(forest_cells(a)) == sphere_power(k));
        auto cc = cartesian_cells(a);
        CHECK(poincare_polynomial(cc) == sphere_power(k));
        for (const auto& c : cc) CHECK(as_dotted(a, c).grading() * 2 == c.dimension);
        for (const auto& c : forest_cells(a)) {
          auto closure = cell_closure(a, c);
          CHECK(closure.dimension() == c.dimension);
          CHECK(subspace_of(a).contains(closure));
        }
      }
}

TEST_CASE("subcomplexes for arrow pairs") {
  auto a = M("3: u1-2 r3"), b = M("3: r1 u2-3");
  auto cells = subcomplex_cells(a, b);
  REQUIRE(cells.size() == 1);
  CHECK(cell_closure(a, cells[0]).to_string() == "(-p, -p, -p)");
  CHECK_THROWS_AS(subcomplex_cells(a, a), Error);
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (const auto& x : enumerate(n, k))
        for (const auto& y : arrow_successors(x)) {
          // x -> y, so the cells live in S_y.
          auto sub = subcomplex_cells(y, x);
          auto I = subspace_of(y).intersect(subspace_of(x));
          CHECK(poincare_polynomial(sub) == sphere_power(glue(y, x).circle_count()));
          bool top_equal = false;
          for (const auto& c : sub) {
            auto closure = cell_closure(y, c);
            CHECK(I.contains(closure));
            top_equal |= closure == I;
          }
          CHECK(top_equal);
        }
}
