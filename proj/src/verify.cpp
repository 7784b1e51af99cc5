#include "springer/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "springer/action.hpp"
#include "springer/cells.hpp"
#include "springer/diagram.hpp"
#include "springer/error.hpp"
#include "springer/homology.hpp"
#include "springer/skein.hpp"
#include "springer/specht.hpp"
#include "springer/subspace.hpp"

namespace springer {

namespace {

struct Tally {
  SuiteResult& r;
  void operator()(bool cond, const std::string& what) {
    ++r.checks;
    if (!cond && r.ok) {
      r.ok = false;
      r.first_failure = what;
    }
  }
};

template <class F>
void each_type(int n_max, F f) {
  for (int n = 1; n <= n_max; ++n)
    for (int k = 0; 2 * k <= n; ++k) f(n, k);
}

std::string nk(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

void matching_suite(Tally& t, int n_max, std::uint64_t) {
  each_type(n_max, [&](int n, int k) {
    auto all = enumerate(n, k);
    t(static_cast<long long>(all.size()) == binomial(n, k) - (k ? binomial(n, k - 1) : 0), "count of B" + nk(n, k));
    for (int m = 0; m <= k; ++m)
      for (const auto& d : all_dotted_matchings(n, k, m)) {
        t(parse_matching(format(d)) == d, "codec round trip " + format(d));
        if (d.is_standard()) t(matching_of(tableau_of(d), k) == d, "tableau round trip " + format(d));
      }
    for (const auto& a : all) t(restrict_to(complete(a), k) == a, "restrict(complete) " + format(DottedMatching::all_undotted(a)));
  });
}

void diagram_suite(Tally& t, int n_max, std::uint64_t) {
  each_type(n_max, [&](int n, int k) {
    const auto& g = arrow_graph(n, k);
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b) {
        const auto &A = g.nodes()[a], &B = g.nodes()[b];
        if (!compatible(A, B)) continue;
        int d = g.distance(a, b);
        t(d == n - k - glue(A, B).size(), "distance formula " + nk(n, k));
        auto seq = minimal_sequence(A, B);
        t(seq.certified && seq.length() == d, "minimal sequence length " + nk(n, k));
        auto c = g.index(meet(A, B));
        t(g.precedes_or_equal(c, a) && g.precedes_or_equal(c, b) && g.distance(a, c) + g.distance(c, b) == d,
          "meet " + nk(n, k));
      }
  });
}

void subspace_suite(Tally& t, int n_max, std::uint64_t) {
  each_type(n_max, [&](int n, int k) {
    for (const auto& a : enumerate(n, k)) {
      auto Sa = subspace_of(a);
      t(Sa.dimension() == 2 * k, "dim S_a " + nk(n, k));
      t(Sa.gamma() == subspace_of(a, Variant::Primed), "gamma(S_a) = S'_a " + nk(n, k));
      t(subspace_of(complete(a)).contains(Sa.eta(2 * n - 2 * k)), "eta lands in S_phi(a) " + nk(n, k));
      t(subspace_of(complete(a), Variant::Primed).contains(Sa.gamma().iota(2 * n - 2 * k)),
        "commuting square " + nk(n, k));
      for (const auto& b : enumerate(n, k)) {
        auto I = Sa.intersect(subspace_of(b));
        bool ok = compatible(a, b) ? !I.empty() && I.free_classes() == glue(a, b).circle_count() : I.empty();
        t(ok, "intersection shape " + nk(n, k));
      }
    }
  });
}

void cells_suite(Tally& t, int n_max, std::uint64_t) {
  each_type(n_max, [&](int n, int k) {
    std::vector<long long> sphere(2 * k + 1, 0);
    for (int i = 0; i <= k; ++i) sphere[2 * i] = binomial(k, i);
    for (const auto& a : enumerate(n, k)) {
      t(poincare_polynomial(forest_cells(a)) == sphere, "forest Poincare polynomial " + nk(n, k));
      t(poincare_polynomial(cartesian_cells(a)) == sphere, "cartesian Poincare polynomial " + nk(n, k));
      for (const auto& b : arrow_successors(a)) {
        auto I = subspace_of(b).intersect(subspace_of(a));
        for (const auto& c : subcomplex_cells(b, a)) t(I.contains(cell_closure(b, c)), "subcomplex closure " + nk(n, k));
      }
    }
  });
}

void homology_suite(Tally& t, int n_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  each_type(n_max, [&](int n, int k) {
    t(betti(n, k) == presentation_betti(n, k), "betti = cokernel " + nk(n, k));
    auto other = presentation(n, k, linear_order(n, k, TieBreak::Random, rng())).ranks;
    t(other == betti(n, k), "betti along a random linear extension " + nk(n, k));
    for (int m = 0; m <= k; ++m)
      for (const auto& d : all_dotted_matchings(n, k, m)) {
        auto x = HomClass::of(d);
        t(reduce_by_rewriting(x, rng()) == reduce_to_class(x), "rewriting order " + format(d));
      }
  });
}

void specht_suite(Tally& t, int n_max, std::uint64_t) {
  each_type(n_max, [&](int n, int k) {
    for (int m = 0; m <= k; ++m) {
      t(modules_equal(n, m, k).equal, "W = V " + nk(n, k) + " m=" + std::to_string(m));
      for (const auto& r : relation_instances(n, k, m)) t(zeta(r).is_zero(), "zeta kills " + r.to_string());
      for (const auto& d : standard_basis(n, k, m))
        t(f_embed(matching_vector(d), n - 2 * k) == matching_vector(complete(d)), "f(e_M) = e_phi(M) " + format(d));
    }
  });
}

void action_suite(Tally& t, int n_max, std::uint64_t) {
  each_type(n_max, [&](int n, int k) {
    auto rep = character_table_check(n, k);
    t(rep.ok(), rep.ok() ? "" : rep.failures.front());
    auto chart = derive_chart(n, k);
    t(chart.ok(), chart.ok() ? "" : chart.failures.front());
    for (int m = 0; m <= k; ++m)
      for (const auto& d : standard_basis(n, k, m))
        for (int i = 1; i < n; ++i) {
          auto s = Permutation::adjacent(n, i);
          t(act_via_gamma(s, d) == act(s, HomClass::of(d)), "gamma route s" + std::to_string(i) + " on " + format(d));
        }
  });
}

void skein_suite(Tally& t, int n_max, std::uint64_t seed) {
  auto cal = calibrate(std::clamp(n_max, 3, 4));
  t(!cal.ambiguous(), "calibration is ambiguous");
  std::mt19937_64 rng(seed);
  each_type(n_max, [&](int n, int k) {
    if (n < 2) return;
    for (int m = 0; m <= k; ++m)
      for (const auto& d : standard_basis(n, k, m)) {
        for (int i = 1; i < n; ++i) {
          auto s = Permutation::adjacent(n, i);
          t(skein_act(s, d) == act(s, HomClass::of(d)), "skein s" + std::to_string(i) + " on " + format(d));
        }
        std::vector<int> w(rng() % 6);
        for (auto& x : w) x = 1 + static_cast<int>(rng() % (n - 1));
        t(skein_act(w, d) == act(Permutation::from_word(n, w), HomClass::of(d)), "skein word on " + format(d));
      }
  });
}

const std::vector<std::pair<std::string, std::function<void(Tally&, int, std::uint64_t)>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<void(Tally&, int, std::uint64_t)>>> s = {
      {"matching", matching_suite}, {"diagram", diagram_suite}, {"subspace", subspace_suite},
      {"cells", cells_suite},       {"homology", homology_suite}, {"specht", specht_suite},
      {"action", action_suite},     {"skein", skein_suite},
  };
  return s;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, f] : suites()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, int n_max, std::uint64_t seed) {
  for (const auto& [suite, f] : suites()) {
    if (suite != name) continue;
    SuiteResult r;
    r.name = name;
    Tally t{r};
    auto start = std::chrono::steady_clock::now();
    try {
      f(t, n_max, seed);
    } catch (const std::exception& e) {
      r.ok = false;
      if (r.first_failure.empty()) r.first_failure = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw Error(ErrorCode::DomainError, "unknown suite " + name);
}

std::vector<SuiteResult> verify_all(int n_max, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, n_max, seed));
  return out;
}

}  // namespace springer
