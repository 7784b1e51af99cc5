#include "springer/diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <random>
#include <stdexcept>

#include "springer/error.hpp"

namespace springer {

namespace {

void require_same_type(const Matching& a, const Matching& b) {
  if (a.n() != b.n() || a.k() != b.k()) throw Error(ErrorCode::TypeMismatch, "matchings of different type");
}

std::optional<Matching> try_build(int n, std::vector<Arc> arcs, std::vector<int> rays) {
  try {
    return Matching::from_parts(n, std::move(arcs), std::move(rays));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

int GluedOneManifold::circle_count() const {
  int c = 0;
  for (const auto& comp : components) c += comp.circle ? 1 : 0;
  return c;
}

GluedOneManifold glue(const Matching& a, const Matching& b) {
  require_same_type(a, b);
  const int n = a.n();
  GluedOneManifold g;
  g.n = n;
  g.component_of.assign(n + 1, -1);

  // Walk from `start` leaving through a (top) or b until a ray or back home.
  auto trace = [&](int start, bool top, Component& comp) {
    int v = start;
    while (true) {
      comp.vertices.push_back(v);
      g.component_of[v] = static_cast<int>(g.components.size());
      int p = top ? a.partner(v) : b.partner(v);
      if (p == 0) return top ? End::Up : End::Down;
      if (p == start) return End::Up;
      v = p;
      top = !top;
    }
  };

  for (int v = 1; v <= n; ++v) {
    if (g.component_of[v] != -1) continue;
    bool ray_a = a.is_ray(v), ray_b = b.is_ray(v);
    if (!ray_a && !ray_b) continue;
    Component comp;
    comp.first_end = ray_a ? End::Up : End::Down;
    if (ray_a && ray_b) {
      comp.vertices.push_back(v);
      g.component_of[v] = static_cast<int>(g.components.size());
      comp.second_end = End::Down;
    } else {
      comp.second_end = trace(v, !ray_a, comp);
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    comp.vertices.erase(std::unique(comp.vertices.begin(), comp.vertices.end()), comp.vertices.end());
    g.components.push_back(std::move(comp));
  }
  for (int v = 1; v <= n; ++v) {
    if (g.component_of[v] != -1) continue;
    Component comp;
    comp.circle = true;
    trace(v, true, comp);
    std::sort(comp.vertices.begin(), comp.vertices.end());
    comp.vertices.erase(std::unique(comp.vertices.begin(), comp.vertices.end()), comp.vertices.end());
    g.components.push_back(std::move(comp));
  }
  return g;
}

bool compatible(const Matching& a, const Matching& b) {
  for (const auto& c : glue(a, b).components)
    if (!c.circle && c.first_end == c.second_end) return false;
  return true;
}

std::vector<std::pair<Matching, ArrowMove>> arrow_moves_from(const Matching& a) {
  std::vector<std::pair<Matching, ArrowMove>> out;
  const auto& arcs = a.arcs();
  for (std::size_t x = 0; x < arcs.size(); ++x)
    for (std::size_t y = 0; y < arcs.size(); ++y) {
      const Arc p = arcs[x], q = arcs[y];
      if (!(p.right < q.left)) continue;
      std::vector<Arc> next;
      for (const auto& r : arcs)
        if (r != p && r != q) next.push_back(r);
      next.push_back({p.left, q.right});
      next.push_back({p.right, q.left});
      if (auto m = try_build(a.n(), next, a.rays()))
        out.emplace_back(*m, ArrowMove{MoveKind::Quadruple, p.left, p.right, q.left, q.right});
    }
  auto rays = a.rays();
  for (int i : rays)
    for (const auto& q : arcs) {
      if (!(i < q.left)) continue;
      std::vector<Arc> next;
      for (const auto& r : arcs)
        if (r != q) next.push_back(r);
      next.push_back({i, q.left});
      std::vector<int> next_rays;
      for (int r : rays)
        if (r != i) next_rays.push_back(r);
      next_rays.push_back(q.right);
      if (auto m = try_build(a.n(), next, next_rays))
        out.emplace_back(*m, ArrowMove{MoveKind::Triple, i, q.left, q.right, 0});
    }
  return out;
}

std::vector<Matching> arrow_successors(const Matching& a) {
  std::vector<Matching> out;
  for (auto& [m, mv] : arrow_moves_from(a)) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ArrowMove> arrow_between(const Matching& source, const Matching& target) {
  if (source.n() != target.n() || source.k() != target.k()) return std::nullopt;
  for (auto& [m, mv] : arrow_moves_from(source))
    if (m == target) return mv;
  return std::nullopt;
}

ArrowGraph::ArrowGraph(int n, int k) : n_(n), k_(k), nodes_(enumerate(n, k)) {
  const std::size_t N = nodes_.size();
  succ_.resize(N);
  pred_.resize(N);
  for (std::size_t a = 0; a < N; ++a)
    for (const auto& m : arrow_successors(nodes_[a])) {
      std::size_t b = index(m);
      succ_[a].push_back(b);
      pred_[b].push_back(a);
    }
  dist_.assign(N * N, -1);
  reach_.assign(N * N, 0);
  for (std::size_t s = 0; s < N; ++s) {
    std::deque<std::size_t> q{s};
    dist_[s * N + s] = 0;
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      for (const auto* list : {&succ_[v], &pred_[v]})
        for (auto w : *list)
          if (dist_[s * N + w] < 0) {
            dist_[s * N + w] = dist_[s * N + v] + 1;
            q.push_back(w);
          }
    }
    std::vector<std::size_t> stack{s};
    reach_[s * N + s] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : succ_[v])
        if (!reach_[s * N + w]) {
          reach_[s * N + w] = 1;
          stack.push_back(w);
        }
    }
  }
}

std::size_t ArrowGraph::index(const Matching& m) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), m);
  if (it == nodes_.end() || *it != m) throw Error(ErrorCode::NotFound, "matching not of this type");
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::vector<std::size_t> ArrowGraph::shortest_path(std::size_t a, std::size_t b) const {
  if (distance(a, b) < 0) return {};
  std::vector<std::size_t> path{a};
  while (path.back() != b) {
    auto v = path.back();
    bool moved = false;
    for (const auto* list : {&succ_[v], &pred_[v]}) {
      for (auto w : *list)
        if (distance(w, b) == distance(v, b) - 1) {
          path.push_back(w);
          moved = true;
          break;
        }
      if (moved) break;
    }
  }
  return path;
}

std::vector<Matching> ArrowGraph::linear_order(TieBreak tie, std::uint64_t seed) const {
  const std::size_t N = size();
  std::vector<std::string> keys(N);
  for (std::size_t i = 0; i < N; ++i) keys[i] = nodes_[i].key();
  std::vector<std::uint64_t> rank(N);
  std::mt19937_64 rng(seed);
  for (auto& r : rank) r = rng();
  auto before = [&](std::size_t x, std::size_t y) {
    switch (tie) {
      case TieBreak::Lex: return keys[x] < keys[y];
      case TieBreak::ReverseLex: return keys[x] > keys[y];
      case TieBreak::Random: return rank[x] < rank[y];
    }
    return x < y;
  };
  auto cmp = [&](std::size_t x, std::size_t y) { return before(y, x); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> ready(cmp);
  std::vector<std::size_t> indeg(N);
  for (std::size_t v = 0; v < N; ++v) {
    indeg[v] = pred_[v].size();
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<Matching> out;
  while (!ready.empty()) {
    auto v = ready.top();
    ready.pop();
    out.push_back(nodes_[v]);
    for (auto w : succ_[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (out.size() != N) throw Error(ErrorCode::CycleDetected, "arrow relation has a cycle");
  return out;
}

const ArrowGraph& arrow_graph(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<ArrowGraph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, k}];
  if (!slot) slot = std::make_unique<ArrowGraph>(n, k);
  return *slot;
}

std::vector<Matching> linear_order(int n, int k, TieBreak tie, std::uint64_t seed) {
  return arrow_graph(n, k).linear_order(tie, seed);
}

std::optional<int> distance(const Matching& a, const Matching& b) {
  require_same_type(a, b);
  const auto& g = arrow_graph(a.n(), a.k());
  int d = g.distance(g.index(a), g.index(b));
  if (compatible(a, b) && d != a.n() - a.k() - glue(a, b).size())
    throw std::logic_error("distance disagrees with the component count formula");
  if (d < 0) return std::nullopt;
  return d;
}

MoveSequence minimal_sequence(const Matching& a, const Matching& b) {
  require_same_type(a, b);
  MoveSequence seq;
  if (!compatible(a, b)) {
    const auto& g = arrow_graph(a.n(), a.k());
    auto path = g.shortest_path(g.index(a), g.index(b));
    if (path.empty()) throw Error(ErrorCode::NotFound, "no path between matchings");
    for (auto v : path) seq.steps.push_back(g.nodes()[v]);
    for (std::size_t t = 0; t + 1 < path.size(); ++t)
      seq.forward.push_back(arrow_between(seq.steps[t], seq.steps[t + 1]).has_value());
    seq.certified = false;
    return seq;
  }

  Matching cur = complete(a);
  const Matching target = complete(b);
  std::vector<Matching> lifted{cur};
  while (cur != target) {
    std::optional<Arc> pick;
    for (const auto& arc : target.arcs()) {
      if (cur.has_arc(arc.left, arc.right)) continue;
      if (!pick || arc.right - arc.left < pick->right - pick->left) pick = arc;
    }
    int i = pick->left, j = pick->right;
    int kk = cur.partner(i), l = cur.partner(j);
    std::vector<Arc> next;
    for (const auto& arc : cur.arcs())
      if (arc.left != std::min(i, kk) && arc.left != std::min(j, l)) next.push_back(arc);
    next.push_back({i, j});
    next.push_back({std::min(kk, l), std::max(kk, l)});
    cur = Matching::from_parts(cur.n(), next, {});
    lifted.push_back(cur);
  }
  for (const auto& x : lifted) seq.steps.push_back(restrict_to(x, a.k()));
  for (std::size_t t = 0; t + 1 < seq.steps.size(); ++t) {
    bool fwd = arrow_between(seq.steps[t], seq.steps[t + 1]).has_value();
    if (!fwd && !arrow_between(seq.steps[t + 1], seq.steps[t]))
      throw std::logic_error("lifted sequence step is not an arrow move");
    seq.forward.push_back(fwd);
  }
  return seq;
}

namespace {

std::optional<std::size_t> meet_rec(const ArrowGraph& g, std::size_t a, std::size_t b) {
  int d = g.distance(a, b);
  for (auto a1 : g.predecessors(a))
    if (g.distance(a1, b) == d - 1) {
      if (auto c = meet_rec(g, a1, b)) return c;
    }
  if (g.precedes_or_equal(a, b)) return a;
  return std::nullopt;
}

bool is_meet(const ArrowGraph& g, std::size_t a, std::size_t b, std::size_t c) {
  return g.precedes_or_equal(c, a) && g.precedes_or_equal(c, b) &&
         g.distance(a, c) + g.distance(c, b) == g.distance(a, b);
}

}  // namespace

Matching meet(const Matching& a, const Matching& b) {
  require_same_type(a, b);
  const auto& g = arrow_graph(a.n(), a.k());
  std::size_t ia = g.index(a), ib = g.index(b);
  if (g.distance(ia, ib) < 0) throw Error(ErrorCode::NotFound, "matchings are disconnected");
  if (auto c = meet_rec(g, ia, ib); c && is_meet(g, ia, ib, *c)) return g.nodes()[*c];
  for (std::size_t c = 0; c < g.size(); ++c)
    if (is_meet(g, ia, ib, c)) return g.nodes()[c];
  throw Error(ErrorCode::NotFound, "no meet element");
}

}  // namespace springer
