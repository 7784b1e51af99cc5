#include "springer/skein.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>

#include "springer/action.hpp"
#include "springer/error.hpp"
#include "springer/specht.hpp"

namespace springer {

FlatTangle flatten(int n, const std::vector<int>& word) {
  for (int w : word)
    if (w < 1 || w >= n) throw Error(ErrorCode::DomainError, "crossing position " + std::to_string(w) + " out of range");
  return {n, std::vector<int>(word.rbegin(), word.rend())};
}

std::string ResolutionConvention::label() const {
  static const char* names[] = {"none", "upper", "lower", "both"};
  return "identity=" + std::to_string(identity) + " turnback=" + std::to_string(turnback) +
         " dots=" + names[static_cast<int>(placement)] + " projection=" + (graded_projection ? "on" : "off") + " twist=" + (orientation_twist ? "on" : "off");
}

std::vector<ResolutionConvention> convention_family() {
  std::vector<ResolutionConvention> out;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (auto p : {DotPlacement::None, DotPlacement::UpperArc, DotPlacement::LowerArc, DotPlacement::Both})
        for (bool proj : {false, true})
          for (bool twist : {false, true}) out.push_back({a, b, p, proj, twist});
  return out;
}

namespace {

// Points: level l in 0..L, position 1..n, id = l*(n+1)+p. Edges carry dots.
struct Graph {
  explicit Graph(int size) : adj(size) {}
  struct Edge {
    int to;
    int dots;
  };
  std::vector<std::vector<Edge>> adj;
  void link(int a, int b, int dots) {
    adj[a].push_back({b, dots});
    adj[b].push_back({a, dots});
  }
};

struct Strand {
  std::vector<int> top;  // top-level positions on the component
  int dots = 0;
  int infinite_ends = 0;
};

}  // namespace

std::map<DottedMatching, Rational> resolve_terms(const DottedMatching& m, const FlatTangle& t,
                                                const ResolutionConvention& c, std::uint64_t seed) {
  const int n = m.n(), L = static_cast<int>(t.crossings.size());
  if (t.n != n) throw Error(ErrorCode::SizeMismatch, "tangle and matching sizes differ");
  auto id = [n](int level, int p) { return level * (n + 1) + p; };
  const bool dot_up = c.placement == DotPlacement::UpperArc || c.placement == DotPlacement::Both;
  const bool dot_low = c.placement == DotPlacement::LowerArc || c.placement == DotPlacement::Both;
  std::mt19937_64 rng(seed);

  std::map<DottedMatching, Rational> acc;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L); ++mask) {
    Graph g((L + 1) * (n + 1));
    std::vector<int> ray_end((L + 1) * (n + 1), 0);
    for (const auto& a : m.base().arcs()) g.link(id(0, a.left), id(0, a.right), m.is_dotted(a) ? 1 : 0);
    for (int r : m.base().rays()) ray_end[id(0, r)] = 1;
    Rational coef = 1;
    for (int l = 0; l < L; ++l) {
      int x = t.crossings[l];
      bool turn = (mask >> l) & 1U;
      for (int p = 1; p <= n; ++p)
        if (!turn || (p != x && p != x + 1)) g.link(id(l, p), id(l + 1, p), 0);
      if (turn) {
        g.link(id(l, x), id(l, x + 1), dot_low ? 1 : 0);
        g.link(id(l + 1, x), id(l + 1, x + 1), dot_up ? 1 : 0);
        coef *= c.turnback;
      } else {
        coef *= c.identity;
      }
    }
    if (coef == 0) continue;

    std::vector<Strand> comps;
    std::vector<bool> seen(g.adj.size(), false);
    for (int level = 0; level <= L; ++level)
      for (int p = 1; p <= n; ++p) {
        int s = id(level, p);
        if (seen[s]) continue;
        Strand comp;
        std::vector<int> stack{s};
        seen[s] = true;
        int edge_dots = 0;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          comp.infinite_ends += ray_end[v];
          if (v / (n + 1) == L) comp.top.push_back(v % (n + 1));
          for (const auto& e : g.adj[v]) {
            edge_dots += e.dots;
            if (!seen[e.to]) {
              seen[e.to] = true;
              stack.push_back(e.to);
            }
          }
        }
        // Each edge is seen from both ends; rays carry an implicit dot.
        comp.dots = edge_dots / 2 + comp.infinite_ends;
        comps.push_back(std::move(comp));
      }
    std::shuffle(comps.begin(), comps.end(), rng);

    Rational factor = coef;
    std::vector<Arc> arcs;
    std::vector<int> rays, dotted;
    for (const auto& comp : comps) {
      if (comp.dots >= 2) {
        factor = 0;
        break;
      }
      if (comp.top.empty()) {
        factor *= comp.dots == 1 ? 1 : -2;
      } else if (comp.top.size() == 1) {
        rays.push_back(comp.top[0]);
      } else {
        int a = std::min(comp.top[0], comp.top[1]), b = std::max(comp.top[0], comp.top[1]);
        arcs.push_back({a, b});
        if (comp.dots == 1) dotted.push_back(a);
      }
    }
    if (factor == 0) continue;
    std::sort(rays.begin(), rays.end());
    DottedMatching out(Matching::from_parts(n, arcs, rays), dotted);
    if (c.graded_projection && out.grading() != m.grading()) continue;
    acc[out] += factor;
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return acc;
}

HomClass resolve_evaluate(const DottedMatching& m, const FlatTangle& t, const ResolutionConvention& c,
                          std::uint64_t seed) {
  const int n = m.n();
  auto acc = resolve_terms(m, t, c, seed);
  std::map<int, HomClass> by_grading;
  for (const auto& [d, v] : acc) {
    auto [it, fresh] = by_grading.try_emplace(d.grading(), n, m.k());
    it->second.add(d, c.orientation_twist ? v * (zeta_sign(m) * zeta_sign(d)) : v);
  }
  HomClass out(n, m.k());
  for (const auto& [gr, x] : by_grading) out += reduce_to_class(x);
  return out;
}

namespace {

std::mutex active_mu;
std::optional<ResolutionConvention> active;

bool fits(const ResolutionConvention& c, int n_max) {
  for (int n = 2; n <= n_max; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (int m = 0; m <= k; ++m)
        for (const auto& d : standard_basis(n, k, m))
          for (int i = 1; i < n; ++i)
            if (!(resolve_evaluate(d, flatten(n, {i}), c) == act(Permutation::adjacent(n, i), HomClass::of(d)))) return false;
  return true;
}

}  // namespace

SkeinCalibration calibrate(int n_max) {
  SkeinCalibration out;
  out.n_max = n_max;
  for (const auto& c : convention_family())
    if (fits(c, n_max)) out.fitting.push_back(c);
  if (out.fitting.empty()) throw Error(ErrorCode::NoConventionFits, "no resolution convention reproduces the action");
  out.convention = *std::min_element(out.fitting.begin(), out.fitting.end());
  set_active_convention(out.convention);
  return out;
}

void set_active_convention(const ResolutionConvention& c) {
  std::lock_guard<std::mutex> lock(active_mu);
  active = c;
}

void clear_active_convention() {
  std::lock_guard<std::mutex> lock(active_mu);
  active.reset();
}

ResolutionConvention active_convention() {
  std::lock_guard<std::mutex> lock(active_mu);
  if (!active) throw Error(ErrorCode::UncalibratedConvention, "no resolution convention is active; run calibrate first");
  return *active;
}

HomClass skein_act(const std::vector<int>& word, const DottedMatching& m) {
  return resolve_evaluate(m, flatten(m.n(), word), active_convention());
}

HomClass skein_act(const Permutation& sigma, const DottedMatching& m) {
  if (sigma.size() != m.n()) throw Error(ErrorCode::SizeMismatch, "permutation and matching sizes differ");
  return skein_act(sigma.reduced_word(), m);
}

}  // namespace springer
