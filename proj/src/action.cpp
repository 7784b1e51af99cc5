#include "springer/action.hpp"

#include <memory>
#include <mutex>
#include <tuple>

#include "springer/error.hpp"

namespace springer {

namespace {

struct BasisSolver {
  std::vector<DottedMatching> basis;
  std::unique_ptr<linalg::SpanSolver> solver;
};

linalg::Row dense(int n, int m, const std::map<TabloidKey, Rational>& terms) {
  const auto& keys = tabloid_keys(n, m);
  linalg::Row row(keys.size());
  for (const auto& [key, c] : terms) row[std::lower_bound(keys.begin(), keys.end(), key) - keys.begin()] = c;
  return row;
}

const BasisSolver& zeta_solver(int n, int k, int m) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, BasisSolver> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace({n, k, m});
  if (fresh) {
    auto& s = it->second;
    s.basis = standard_basis(n, k, m);
    linalg::Matrix rows(0, tabloid_keys(n, m).size());
    for (const auto& d : s.basis) rows.append_row(zeta(HomClass::of(d)).dense());
    s.solver = std::make_unique<linalg::SpanSolver>(rows);
  }
  return it->second;
}

HomClass from_coordinates(int n, int k, const std::vector<DottedMatching>& basis, const linalg::Row& c) {
  HomClass out(n, k);
  for (std::size_t i = 0; i < basis.size(); ++i) out.add(basis[i], c[i]);
  return out;
}

}  // namespace

HomClass act(const Permutation& sigma, const HomClass& x) {
  if (sigma.size() != x.n()) throw Error(ErrorCode::SizeMismatch, "permutation on " + std::to_string(sigma.size()) + " letters acting on n=" + std::to_string(x.n()));
  auto g = x.grading();
  if (!g) return HomClass(x.n(), x.k());
  auto v = permute(sigma, zeta(x));
  const auto& s = zeta_solver(x.n(), x.k(), *g);
  auto c = s.solver->solve(v.dense());
  if (!c) throw Error(ErrorCode::SolveFailed, "permuted class left the span of the standard basis");
  return from_coordinates(x.n(), x.k(), s.basis, *c);
}

linalg::Matrix rep_matrix(const Permutation& sigma, int n, int k, int m) {
  static std::mutex mu;
  static std::map<std::tuple<Permutation, int, int>, linalg::Matrix> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({sigma, k, m});
    if (it != cache.end()) return it->second;
  }
  const auto& basis = zeta_solver(n, k, m).basis;
  linalg::Matrix out(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto y = act(sigma, HomClass::of(basis[j]));
    for (std::size_t i = 0; i < basis.size(); ++i) out(i, j) = y.coefficient(basis[i]);
  }
  if (!out.is_integral()) throw Error(ErrorCode::SolveFailed, "non-integral representation matrix");
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_tuple(sigma, k, m), out);
  return out;
}

std::string GammaConvention::label() const {
  return std::string(key == Key::Parity ? "parity" : "endpoint") + (sign < 0 ? "-" : "+");
}

LineDiagramClass gamma_push(const DottedMatching& m, const GammaConvention& c) {
  LineDiagramClass out{m.n(), {{0, Rational(1)}}};
  for (const auto& a : m.undotted_arcs()) {
    int marked = c.key == GammaConvention::Key::Parity ? (a.left % 2 ? a.left : a.right) : a.left;
    int other = marked == a.left ? a.right : a.left;
    std::map<TabloidKey, Rational> next;
    for (const auto& [key, v] : out.terms) {
      next[key | (TabloidKey{1} << (marked - 1))] += v * c.sign;
      next[key | (TabloidKey{1} << (other - 1))] += v;
    }
    out.terms = std::move(next);
  }
  return out;
}

LineDiagramClass permute(const Permutation& sigma, const LineDiagramClass& x) {
  LineDiagramClass out{x.n, {}};
  for (const auto& [key, v] : x.terms) {
    TabloidKey img = 0;
    for (int p : tabloid_set(key)) img |= TabloidKey{1} << (sigma(p) - 1);
    out.terms[img] += v;
  }
  return out;
}

HomClass act_via_gamma(const Permutation& sigma, const DottedMatching& standard, const GammaConvention& c) {
  if (!standard.is_standard()) throw Error(ErrorCode::NotStandard, format(standard) + " is not standard");
  const int n = standard.n(), k = standard.k(), m = standard.grading();
  auto basis = standard_basis(n, k, m);
  linalg::Matrix rows(0, tabloid_keys(n, m).size());
  for (const auto& d : basis) rows.append_row(dense(n, m, gamma_push(d, c).terms));
  linalg::SpanSolver solver(rows);
  auto coords = solver.solve(dense(n, m, permute(sigma, gamma_push(standard, c)).terms));
  if (!coords) throw Error(ErrorCode::PullbackFailed, "permuted line diagram is outside the image of gamma_*");
  return from_coordinates(n, k, basis, *coords);
}

GammaCalibration calibrate_gamma(int n_max) {
  GammaCalibration out;
  out.n_max = n_max;
  for (auto key : {GammaConvention::Key::Parity, GammaConvention::Key::Endpoint})
    for (int sign : {-1, 1}) {
      GammaConvention c{key, sign};
      bool fits = true;
      for (int n = 2; n <= n_max && fits; ++n)
        for (int k = 0; 2 * k <= n && fits; ++k)
          for (int m = 0; m <= k && fits; ++m)
            for (const auto& d : standard_basis(n, k, m))
              for (int i = 1; i < n && fits; ++i) {
                auto s = Permutation::adjacent(n, i);
                try {
                  fits = act_via_gamma(s, d, c) == act(s, HomClass::of(d));
                } catch (const Error&) {
                  fits = false;
                }
              }
      if (fits) out.fitting.push_back(c);
    }
  if (out.fitting.empty()) throw Error(ErrorCode::NoConventionFits, "no line-diagram sign convention matches the tabloid action");
  out.convention = out.fitting.front();
  return out;
}

const GammaCalibration& gamma_calibration() {
  static const GammaCalibration cal = calibrate_gamma(4);
  return cal;
}

HomClass act_via_gamma(const Permutation& sigma, const DottedMatching& standard) {
  return act_via_gamma(sigma, standard, gamma_calibration().convention);
}

std::string_view case_description(ChartCase c) {
  switch (c) {
    case ChartCase::BothDottedArcs: return "i and i+1 on dotted arcs";
    case ChartCase::UndottedArc: return "(i,i+1) is an undotted arc";
    case ChartCase::DottedUndottedPair: return "one dotted arc and one undotted arc";
    case ChartCase::BothUndottedPair: return "two undotted arcs";
    case ChartCase::BothRays: return "two rays";
    case ChartCase::RayDottedArc: return "a ray and a dotted arc";
    case ChartCase::RayUndottedArc: return "a ray and an undotted arc";
  }
  return "";
}

ChartCase classify(const DottedMatching& m, int i) {
  const auto& b = m.base();
  if (i < 1 || i >= m.n()) throw Error(ErrorCode::DomainError, "position out of range");
  bool ray1 = b.is_ray(i), ray2 = b.is_ray(i + 1);
  if (ray1 && ray2) return ChartCase::BothRays;
  if (ray1 || ray2) {
    int v = ray1 ? i + 1 : i;
    return m.is_dotted_at(v) ? ChartCase::RayDottedArc : ChartCase::RayUndottedArc;
  }
  if (b.partner(i) == i + 1) return m.is_dotted_at(i) ? ChartCase::BothDottedArcs : ChartCase::UndottedArc;
  bool d1 = m.is_dotted_at(i), d2 = m.is_dotted_at(i + 1);
  if (d1 && d2) return ChartCase::BothDottedArcs;
  if (!d1 && !d2) return ChartCase::BothUndottedPair;
  return ChartCase::DottedUndottedPair;
}

Chart derive_chart(int n, int k) {
  Chart chart{n, k, {}, {}};
  for (int m = 0; m <= k; ++m)
    for (const auto& d : standard_basis(n, k, m))
      for (int i = 1; i < n; ++i) {
        auto kind = classify(d, i);
        auto out = act(Permutation::adjacent(n, i), HomClass::of(d));
        chart.entries.push_back({kind, i, d, out});
        std::string where = "s" + std::to_string(i) + " on " + format(d) + ": ";
        switch (kind) {
          case ChartCase::UndottedArc:
            if (!(out == HomClass::of(d, -1))) chart.failures.push_back(where + "expected -M, got " + out.to_string());
            break;
          case ChartCase::BothDottedArcs:
          case ChartCase::BothRays:
          case ChartCase::RayDottedArc:
            if (out.terms().size() != 1) chart.failures.push_back(where + "expected one term, got " + out.to_string());
            break;
          default:
            if (out.terms().size() != 2) chart.failures.push_back(where + "expected two terms, got " + out.to_string());
        }
      }
  return chart;
}

CharacterReport character_table_check(int n, int k) {
  CharacterReport r{n, k, {}, {}};
  const auto classes = partitions_of(n);
  for (int m = 0; m <= k; ++m) {
    std::vector<long long> traces;
    std::vector<int> shape = m ? std::vector<int>{n - m, m} : std::vector<int>{n};
    for (const auto& mu : classes) {
      auto t = rep_matrix(Permutation::of_cycle_type(mu), n, k, m).trace();
      long long tr = t.get_num().get_si();
      long long want = irr_character(shape, mu);
      traces.push_back(tr);
      if (tr != want)
        r.failures.push_back("m=" + std::to_string(m) + " class " + Permutation::of_cycle_type(mu).cycle_string() + ": trace " +
                             std::to_string(tr) + " != " + std::to_string(want));
    }
    r.traces.push_back(traces);
    auto size = zeta_solver(n, k, m).basis.size();
    auto id = linalg::Matrix::identity(size);
    std::vector<linalg::Matrix> s;
    for (int i = 1; i < n; ++i) s.push_back(rep_matrix(Permutation::adjacent(n, i), n, k, m));
    for (int i = 0; i + 1 < n; ++i) {
      std::string tag = "m=" + std::to_string(m) + " s" + std::to_string(i + 1);
      if (!(s[i] * s[i] == id)) r.failures.push_back(tag + " squared is not the identity");
      if (i + 1 < n - 1) {
        auto b = s[i] * s[i + 1];
        if (!(b * b * b == id)) r.failures.push_back(tag + " braid relation fails");
      }
      for (int j = i + 2; j + 1 < n; ++j)
        if (!(s[i] * s[j] == s[j] * s[i])) r.failures.push_back(tag + " does not commute with s" + std::to_string(j + 1));
    }
  }
  return r;
}

}  // namespace springer
