#include "springer/homology.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <tuple>

#include "springer/error.hpp"

namespace springer {

namespace {

struct DotArc {
  Arc arc;
  bool dotted;
};

DottedMatching build(int n, const std::vector<DotArc>& arcs, const std::vector<int>& rays) {
  std::vector<Arc> plain;
  std::vector<int> dotted;
  for (const auto& d : arcs) {
    plain.push_back(d.arc);
    if (d.dotted) dotted.push_back(std::min(d.arc.left, d.arc.right));
  }
  return DottedMatching(Matching::from_parts(n, plain, rays), dotted);
}

// Arcs of m except the listed ones, keeping their dots.
std::vector<DotArc> arcs_except(const DottedMatching& m, std::initializer_list<Arc> skip) {
  std::vector<DotArc> out;
  for (const auto& a : m.base().arcs())
    if (std::find(skip.begin(), skip.end(), a) == skip.end()) out.push_back({a, m.is_dotted(a)});
  return out;
}

std::vector<DotArc> with(std::vector<DotArc> v, std::initializer_list<DotArc> extra) {
  v.insert(v.end(), extra.begin(), extra.end());
  return v;
}

}  // namespace

HomClass HomClass::of(const DottedMatching& m, const Rational& c) {
  HomClass h(m.n(), m.k());
  h.add(m, c);
  return h;
}

Rational HomClass::coefficient(const DottedMatching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> HomClass::grading() const {
  std::optional<int> g;
  for (const auto& [m, c] : terms_) {
    int mg = m.grading();
    if (g && *g != mg) throw Error(ErrorCode::InhomogeneousClass, "class mixes gradings " + std::to_string(*g) + " and " + std::to_string(mg));
    g = mg;
  }
  return g;
}

bool HomClass::is_integral() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

HomClass& HomClass::add(const DottedMatching& m, const Rational& c) {
  if (m.n() != n_ || m.k() != k_) throw Error(ErrorCode::TypeMismatch, "term " + format(m) + " has the wrong type");
  if (c == 0) return *this;
  auto& slot = terms_[m];
  slot += c;
  if (slot == 0) terms_.erase(m);
  return *this;
}

HomClass& HomClass::operator+=(const HomClass& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

HomClass& HomClass::operator-=(const HomClass& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

HomClass HomClass::operator*(const Rational& c) const {
  HomClass out(n_, k_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
  return out;
}

std::string HomClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    out += a.get_str() + "·(" + format(m) + ")";
    first = false;
  }
  return out;
}

HomClass parse_class(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) { throw Error(ErrorCode::SyntaxError, msg + " at position " + std::to_string(pos)); };
  skip();
  if (text.find('(') == std::string::npos) {
    auto m = parse_matching(text);
    return HomClass::of(m);
  }
  std::optional<HomClass> out;
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    Rational c = 1;
    if (pos > start) {
      try {
        c = Rational(text.substr(start, pos - start));
        c.canonicalize();
      } catch (const std::invalid_argument&) {
        fail("bad coefficient");
      }
    }
    skip();
    if (text.compare(pos, 2, "·") == 0)
      pos += 2;
    else if (pos < text.size() && text[pos] == '*')
      ++pos;
    skip();
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) fail("unterminated term");
    auto m = parse_matching(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    if (!out) out = HomClass(m.n(), m.k());
    out->add(m, c * sign);
    first = false;
  }
  if (!out) fail("empty class");
  return *out;
}

std::vector<RelationInstance> typed_relation_instances(int n, int k, int m) {
  std::vector<RelationInstance> out;
  for (const auto& x : enumerate(n, k))
    for (const auto& [y, mv] : arrow_moves_from(x)) {
      std::vector<Arc> common;
      std::vector<Arc> involved_x, involved_y;
      if (mv.kind == MoveKind::Quadruple) {
        involved_x = {{mv.i, mv.j}, {mv.k, mv.l}};
        involved_y = {{mv.i, mv.l}, {mv.j, mv.k}};
      } else {
        involved_x = {{mv.j, mv.k}};
        involved_y = {{mv.i, mv.j}};
      }
      for (const auto& a : x.arcs())
        if (std::find(involved_x.begin(), involved_x.end(), a) == involved_x.end()) common.push_back(a);
      const int c = static_cast<int>(common.size());
      for (unsigned mask = 0; mask < (1U << c); ++mask) {
        int undotted = std::popcount(mask);
        std::vector<int> dots;
        for (int t = 0; t < c; ++t)
          if (!((mask >> t) & 1U)) dots.push_back(common[t].left);
        auto dm = [&](const Matching& base, std::initializer_list<int> extra) {
          auto d = dots;
          d.insert(d.end(), extra.begin(), extra.end());
          return DottedMatching(base, d);
        };
        if (mv.kind == MoveKind::Quadruple) {
          if (undotted + 1 == m) {
            HomClass r(n, k);
            r.add(dm(x, {mv.i}), 1).add(dm(x, {mv.k}), 1).add(dm(y, {mv.i}), -1).add(dm(y, {mv.j}), -1);
            out.push_back({RelationType::I, r});
          }
          if (undotted == m) {
            HomClass r(n, k);
            r.add(dm(x, {mv.i, mv.k}), 1).add(dm(y, {mv.i, mv.j}), -1);
            out.push_back({RelationType::II, r});
          }
        } else if (undotted == m) {
          HomClass r(n, k);
          r.add(dm(x, {mv.j}), 1).add(dm(y, {mv.i}), -1);
          out.push_back({RelationType::III, r});
        }
      }
    }
  return out;
}

std::vector<HomClass> relation_instances(int n, int k, int m) {
  std::vector<HomClass> out;
  for (auto& r : typed_relation_instances(n, k, m)) out.push_back(std::move(r.value));
  return out;
}

Reducer::Reducer(int n, int k, int m) : n_(n), k_(k), m_(m), basis_(standard_basis(n, k, m)) {
  for (const auto& d : all_dotted_matchings(n, k, m))
    if (!d.is_standard()) columns_.push_back(d);
  const std::size_t nonstandard = columns_.size();
  columns_.insert(columns_.end(), basis_.begin(), basis_.end());
  for (std::size_t i = 0; i < columns_.size(); ++i) column_of_[columns_[i]] = i;

  linalg::SparseEchelon ech;
  for (const auto& r : relation_instances(n, k, m)) {
    linalg::SparseRow row;
    for (const auto& [d, c] : r.terms()) row[column_of_.at(d)] = c;
    ech.insert(std::move(row));
  }
  if (ech.rank() != nonstandard)
    throw std::logic_error("relation span does not complement the standard basis");
  for (std::size_t c = 0; c < nonstandard; ++c)
    if (!ech.has_pivot(c)) throw std::logic_error("nonstandard generator not eliminated");
  // One fully reduced row per nonstandard column: e_c = sum of standard terms.
  for (std::size_t c = 0; c < nonstandard; ++c) {
    linalg::SparseRow unit{{c, Rational(1)}};
    pivot_rows_[c] = ech.reduce(unit, nonstandard);
  }
}

std::vector<Rational> Reducer::coordinates(const HomClass& x) const {
  if (x.n() != n_ || x.k() != k_) throw Error(ErrorCode::TypeMismatch, "class of the wrong type");
  if (auto g = x.grading(); g && *g != m_) throw Error(ErrorCode::InhomogeneousClass, "class of the wrong grading");
  const std::size_t nonstandard = columns_.size() - basis_.size();
  std::vector<Rational> out(basis_.size());
  for (const auto& [d, c] : x.terms()) {
    std::size_t col = column_of_.at(d);
    if (col >= nonstandard) {
      out[col - nonstandard] += c;
      continue;
    }
    for (const auto& [sc, v] : pivot_rows_.at(col)) out[sc - nonstandard] += c * v;
  }
  return out;
}

const Reducer& reducer(int n, int k, int m) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Reducer>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, k, m}];
  if (!slot) slot = std::make_unique<Reducer>(n, k, m);
  return *slot;
}

namespace {

HomClass rewrite_term(const DottedMatching& t, std::mt19937_64& rng) {
  const int n = t.n(), k = t.k();
  const auto& base = t.base();
  std::vector<std::pair<Arc, Arc>> nested;  // (dotted inner, parent)
  for (const auto& a : t.dotted_arcs())
    if (auto p = base.parent(a)) nested.emplace_back(a, *p);
  HomClass out(n, k);
  auto rays = base.rays();
  if (!nested.empty()) {
    auto [in, par] = nested[std::uniform_int_distribution<std::size_t>(0, nested.size() - 1)(rng)];
    // par = (i,l), in = (j,k) unnest to (i,j), (k,l).
    Arc P{par.left, in.left}, Q{in.right, par.right};
    auto rest = arcs_except(t, {in, par});
    if (t.is_dotted(par)) {
      out.add(build(n, with(rest, {{P, true}, {Q, true}}), rays), 1);
    } else {
      out.add(build(n, with(rest, {{P, true}, {Q, false}}), rays), 1);
      out.add(build(n, with(rest, {{P, false}, {Q, true}}), rays), 1);
      out.add(build(n, with(rest, {{par, true}, {in, false}}), rays), -1);
    }
    return out;
  }
  // No nested dots: move the first offending ray left past the nearest
  // dotted arc.
  for (int r : rays) {
    std::optional<Arc> near;
    for (const auto& a : t.dotted_arcs())
      if (a.right < r && (!near || a.left > near->left)) near = a;
    if (!near) continue;
    std::vector<int> next_rays;
    for (int x : rays) next_rays.push_back(x == r ? near->left : x);
    auto rest = arcs_except(t, {*near});
    out.add(build(n, with(rest, {{Arc{near->right, r}, true}}), next_rays), 1);
    return out;
  }
  throw std::logic_error("no rewrite applies to " + format(t));
}

}  // namespace

HomClass reduce_by_rewriting(const HomClass& x, std::uint64_t seed) {
  x.grading();
  std::mt19937_64 rng(seed);
  HomClass cur = x;
  while (true) {
    std::vector<DottedMatching> bad;
    for (const auto& [d, c] : cur.terms())
      if (!d.is_standard()) bad.push_back(d);
    if (bad.empty()) return cur;
    auto t = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
    Rational c = cur.coefficient(t);
    cur.add(t, -c);
    cur += rewrite_term(t, rng) * c;
  }
}

std::vector<Rational> reduce(const HomClass& x) {
  auto g = x.grading();
  if (!g) return {};
  const auto& red = reducer(x.n(), x.k(), *g);
  auto coords = red.coordinates(x);
  auto rewritten = reduce_by_rewriting(x);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (rewritten.coefficient(red.basis()[i]) != coords[i])
      throw std::logic_error("row reduction and rewriting disagree");
  for (const auto& c : coords)
    if (c.get_den() != 1) throw std::logic_error("non-integral reduction");
  return coords;
}

HomClass reduce_to_class(const HomClass& x) {
  auto g = x.grading();
  HomClass out(x.n(), x.k());
  if (!g) return out;
  auto coords = reduce(x);
  const auto& basis = reducer(x.n(), x.k(), *g).basis();
  for (std::size_t i = 0; i < coords.size(); ++i) out.add(basis[i], coords[i]);
  return out;
}

std::vector<long long> betti(int n, int k) {
  std::vector<long long> out;
  for (int m = 0; m <= k; ++m) out.push_back(static_cast<long long>(standard_basis(n, k, m).size()));
  return out;
}

namespace {

// Class in H_*(S_a) of the intersection with S_b, free circles chosen by mask.
HomClass push(const Matching& a, const Matching& b, std::uint64_t free_circles) {
  auto g = glue(a, b);
  // Each entry: set of undotted arcs (by left endpoint) with coefficient 1.
  std::vector<std::vector<int>> choices{{}};
  int circle = 0;
  for (const auto& comp : g.components) {
    if (!comp.circle) continue;
    bool free = (free_circles >> circle) & 1U;
    ++circle;
    if (!free) continue;
    std::vector<int> lefts;
    for (int v : comp.vertices)
      if (a.partner(v) > v) lefts.push_back(v);
    std::vector<std::vector<int>> next;
    for (const auto& ch : choices)
      for (int l : lefts) {
        auto e = ch;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    choices = std::move(next);
  }
  if (free_circles >> circle) throw Error(ErrorCode::DomainError, "circle mask exceeds the circle count");
  HomClass out(a.n(), a.k());
  for (const auto& ch : choices) {
    std::vector<int> dotted;
    for (const auto& arc : a.arcs())
      if (std::find(ch.begin(), ch.end(), arc.left) == ch.end()) dotted.push_back(arc.left);
    out.add(DottedMatching(a, dotted), 1);
  }
  return out;
}

}  // namespace

HomClass pushforward_inclusion(const Matching& a, const Matching& b, std::uint64_t free_circles) {
  if (!arrow_between(b, a) && !arrow_between(a, b)) throw Error(ErrorCode::NotAnArrowPair, "matchings are not arrow-related");
  return push(a, b, free_circles);
}

std::vector<HomClass> psi_minus_image(int n, int k, int m) {
  std::vector<HomClass> out;
  for (const auto& x : enumerate(n, k))
    for (const auto& y : arrow_successors(x)) {
      int circles = glue(y, x).circle_count();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << circles); ++mask)
        if (std::popcount(mask) == m) out.push_back(push(y, x, mask) - push(x, y, mask));
    }
  return out;
}

Presentation presentation(int n, int k, const std::vector<Matching>& order) {
  Presentation p;
  std::vector<std::map<DottedMatching, std::size_t>> columns(k + 1);
  for (int m = 0; m <= k; ++m) {
    auto all = all_dotted_matchings(n, k, m);
    for (std::size_t i = 0; i < all.size(); ++i) columns[m][all[i]] = i;
  }
  std::vector<linalg::SparseEchelon> ech(k + 1);
  std::vector<long long> gens(k + 1, 0);
  std::vector<Matching> seen;
  for (const auto& a : order) {
    for (const auto& b : seen) {
      if (arrow_between(a, b)) throw Error(ErrorCode::CycleDetected, "order is not a linear extension");
      if (!arrow_between(b, a)) continue;
      int circles = glue(a, b).circle_count();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << circles); ++mask) {
        int m = std::popcount(mask);
        HomClass rel = push(a, b, mask) - push(b, a, mask);
        linalg::SparseRow row;
        for (const auto& [d, c] : rel.terms()) row[columns[m].at(d)] = c;
        ech[m].insert(std::move(row));
      }
    }
    for (int m = 0; m <= k; ++m) gens[m] += binomial(k, m);
    seen.push_back(a);
    std::vector<long long> ranks(k + 1);
    for (int m = 0; m <= k; ++m) ranks[m] = gens[m] - static_cast<long long>(ech[m].rank());
    p.stages.push_back(ranks);
  }
  if (!p.stages.empty()) p.ranks = p.stages.back();
  return p;
}

std::vector<long long> presentation_betti(int n, int k) { return presentation(n, k, linear_order(n, k)).ranks; }

}  // namespace springer
