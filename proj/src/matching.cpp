#include "springer/matching.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>

#include "springer/error.hpp"

namespace springer {

namespace {

std::string arc_text(int i, int j) { return std::to_string(i) + "-" + std::to_string(j); }

}  // namespace

Matching Matching::from_parts(int n, std::vector<Arc> arcs, std::vector<int> rays) {
  if (n < 0 || n > 64) throw Error(ErrorCode::DomainError, "vertex count must lie in 0..64");
  Matching m;
  m.n_ = n;
  m.partner_.assign(n, -1);
  auto claim = [&](int v, int p) {
    if (v < 1 || v > n) throw Error(ErrorCode::DomainError, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (m.partner_[v - 1] != -1) throw Error(ErrorCode::VertexReuse, "vertex " + std::to_string(v) + " used twice");
    m.partner_[v - 1] = p;
  };
  for (auto& a : arcs) {
    if (a.left > a.right) std::swap(a.left, a.right);
    if (a.left == a.right) throw Error(ErrorCode::VertexReuse, "arc " + arc_text(a.left, a.right) + " is a loop");
    claim(a.left, a.right);
    claim(a.right, a.left);
  }
  for (int r : rays) claim(r, 0);
  for (int v = 1; v <= n; ++v)
    if (m.partner_[v - 1] == -1) throw Error(ErrorCode::BadCounts, "vertex " + std::to_string(v) + " is not covered");

  std::sort(arcs.begin(), arcs.end());
  for (const auto& a : arcs)
    for (const auto& b : arcs)
      if (a.left < b.left && b.left < a.right && a.right < b.right)
        throw Error(ErrorCode::CrossingArcs, "arcs " + arc_text(a.left, a.right) + " and " + arc_text(b.left, b.right) + " cross");
  for (int r : rays)
    for (const auto& a : arcs)
      if (a.left < r && r < a.right)
        throw Error(ErrorCode::RayUnderArc, "ray " + std::to_string(r) + " lies under arc " + arc_text(a.left, a.right));
  m.arcs_ = std::move(arcs);
  return m;
}

Matching Matching::rays_only(int n) {
  std::vector<int> rays(n);
  for (int i = 0; i < n; ++i) rays[i] = i + 1;
  return from_parts(n, {}, rays);
}

std::vector<int> Matching::rays() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (is_ray(v)) out.push_back(v);
  return out;
}

Arc Matching::arc_at(int v) const {
  int p = partner(v);
  if (p == 0) throw Error(ErrorCode::DomainError, "vertex " + std::to_string(v) + " carries a ray");
  return {std::min(v, p), std::max(v, p)};
}

int Matching::depth(const Arc& a) const {
  int d = 0;
  for (const auto& b : arcs_)
    if (b.left < a.left && a.right < b.right) ++d;
  return d;
}

std::optional<Arc> Matching::parent(const Arc& a) const {
  std::optional<Arc> best;
  for (const auto& b : arcs_)
    if (b.left < a.left && a.right < b.right && (!best || b.left > best->left)) best = b;
  return best;
}

std::string Matching::key() const { return format(DottedMatching::all_undotted(*this)); }

DottedMatching::DottedMatching(Matching base, const std::vector<int>& dotted_left_endpoints)
    : base_(std::move(base)) {
  for (int v : dotted_left_endpoints) {
    if (v < 1 || v > base_.n() || base_.is_ray(v) || base_.partner(v) < v)
      throw Error(ErrorCode::DotOnNonArc, "no arc starts at vertex " + std::to_string(v));
    dotted_ |= std::uint64_t{1} << (v - 1);
  }
}

DottedMatching DottedMatching::all_dotted(const Matching& base) {
  std::vector<int> lefts;
  for (const auto& a : base.arcs()) lefts.push_back(a.left);
  return DottedMatching(base, lefts);
}

DottedMatching DottedMatching::all_undotted(const Matching& base) { return DottedMatching(base, {}); }

bool DottedMatching::is_dotted_at(int v) const {
  if (base_.is_ray(v)) return true;
  return is_dotted(base_.arc_at(v));
}

std::vector<Arc> DottedMatching::dotted_arcs() const {
  std::vector<Arc> out;
  for (const auto& a : base_.arcs())
    if (is_dotted(a)) out.push_back(a);
  return out;
}

std::vector<Arc> DottedMatching::undotted_arcs() const {
  std::vector<Arc> out;
  for (const auto& a : base_.arcs())
    if (!is_dotted(a)) out.push_back(a);
  return out;
}

int DottedMatching::grading() const { return static_cast<int>(undotted_arcs().size()); }

DottedMatching DottedMatching::with_dot(const Arc& a, bool dotted) const {
  if (!base_.has_arc(a.left, a.right)) throw Error(ErrorCode::DotOnNonArc, "no arc " + arc_text(a.left, a.right));
  DottedMatching out = *this;
  std::uint64_t bit = std::uint64_t{1} << (a.left - 1);
  out.dotted_ = dotted ? (dotted_ | bit) : (dotted_ & ~bit);
  return out;
}

bool DottedMatching::is_standard() const {
  auto rays = base_.rays();
  for (const auto& a : dotted_arcs()) {
    if (base_.depth(a) > 0) return false;
    for (int r : rays)
      if (r > a.left) return false;
  }
  return true;
}

DottedMatching validate(const RawMatching& raw) {
  std::vector<Arc> arcs;
  for (auto [i, j] : raw.undotted) arcs.push_back({std::min(i, j), std::max(i, j)});
  for (auto [i, j] : raw.dotted) arcs.push_back({std::min(i, j), std::max(i, j)});
  Matching base = Matching::from_parts(raw.n, arcs, raw.rays);
  std::vector<int> lefts;
  for (auto [i, j] : raw.dotted) lefts.push_back(std::min(i, j));
  return DottedMatching(base, lefts);
}

std::vector<Matching> enumerate(int n, int k) {
  if (n < 0 || k < 0 || 2 * k > n) throw Error(ErrorCode::DomainError, "need 0 <= k <= n/2");
  std::vector<Matching> out;
  std::vector<Arc> arcs;
  std::vector<int> rays, open;
  std::function<void(int)> rec = [&](int v) {
    int closed = static_cast<int>(arcs.size());
    if (v > n) {
      if (open.empty() && closed == k) out.push_back(Matching::from_parts(n, arcs, rays));
      return;
    }
    int remaining = n - v + 1;
    int opened = static_cast<int>(open.size());
    // Arcs still to be opened must fit in the remaining vertices.
    if (closed + opened > k || opened > remaining) return;
    if (open.empty()) {
      rays.push_back(v);
      rec(v + 1);
      rays.pop_back();
    }
    open.push_back(v);
    rec(v + 1);
    open.pop_back();
    if (!open.empty()) {
      int l = open.back();
      open.pop_back();
      arcs.push_back({l, v});
      rec(v + 1);
      arcs.pop_back();
      open.push_back(l);
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

Matching complete(const Matching& a) {
  int r = a.ray_count();
  std::vector<Arc> arcs;
  for (const auto& arc : a.arcs()) arcs.push_back({arc.left + r, arc.right + r});
  auto rays = a.rays();
  for (int t = 1; t <= r; ++t) arcs.push_back({r - t + 1, rays[t - 1] + r});
  return Matching::from_parts(a.n() + r, arcs, {});
}

DottedMatching complete(const DottedMatching& m) {
  int r = m.base().ray_count();
  Matching c = complete(m.base());
  std::vector<int> lefts;
  for (int t = 1; t <= r; ++t) lefts.push_back(t);
  for (const auto& a : m.dotted_arcs()) lefts.push_back(a.left + r);
  return DottedMatching(c, lefts);
}

Matching restrict_to(const Matching& completed, int k_target) {
  int N = completed.n();
  if (completed.ray_count() != 0) throw Error(ErrorCode::DomainError, "restriction needs a matching without rays");
  int r = N / 2 - k_target;
  if (k_target < 0 || r < 0) throw Error(ErrorCode::DomainError, "target arc count out of range");
  std::vector<Arc> arcs;
  std::vector<int> rays;
  for (const auto& a : completed.arcs()) {
    if (a.right <= r)
      throw Error(ErrorCode::NotInRestrictableSet, "arc " + arc_text(a.left, a.right) + " lies inside the first " + std::to_string(r) + " vertices");
    if (a.left <= r)
      rays.push_back(a.right - r);
    else
      arcs.push_back({a.left - r, a.right - r});
  }
  return Matching::from_parts(N - r, arcs, rays);
}

bool StandardTableau::is_valid() const {
  if (bottom.size() > top.size()) return false;
  std::vector<bool> seen(n() + 1, false);
  for (const auto* row : {&top, &bottom})
    for (std::size_t t = 0; t < row->size(); ++t) {
      int x = (*row)[t];
      if (x < 1 || x > n() || seen[x]) return false;
      seen[x] = true;
      if (t > 0 && (*row)[t - 1] >= x) return false;
    }
  for (std::size_t t = 0; t < bottom.size(); ++t)
    if (bottom[t] <= top[t]) return false;
  return true;
}

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

long long syt_count(int n, int m) {
  if (2 * m > n || m < 0) return 0;
  return binomial(n, m) - binomial(n, m - 1);
}

std::vector<StandardTableau> standard_tableaux(int n, int m) {
  std::vector<StandardTableau> out;
  if (m < 0 || 2 * m > n) return out;
  StandardTableau cur;
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      if (cur.m() == m) out.push_back(cur);
      return;
    }
    if (cur.m() < m && cur.bottom.size() < cur.top.size()) {
      cur.bottom.push_back(v);
      rec(v + 1);
      cur.bottom.pop_back();
    }
    if (static_cast<int>(cur.top.size()) < n - m) {
      cur.top.push_back(v);
      rec(v + 1);
      cur.top.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.bottom < b.bottom; });
  return out;
}

StandardTableau tableau_of(const DottedMatching& m) {
  if (!m.is_standard()) throw Error(ErrorCode::NotStandard, format(m) + " is not standard");
  std::vector<bool> bottom(m.n() + 1, false);
  for (const auto& a : m.undotted_arcs()) bottom[a.right] = true;
  StandardTableau t;
  for (int v = 1; v <= m.n(); ++v) (bottom[v] ? t.bottom : t.top).push_back(v);
  return t;
}

DottedMatching matching_of(const StandardTableau& t, int k) {
  int n = t.n(), m = t.m();
  if (!t.is_valid() || m > k || 2 * k > n) throw Error(ErrorCode::ShapeMismatch, "tableau shape incompatible with type (" + std::to_string(n - k) + "," + std::to_string(k) + ")");
  std::vector<bool> used(n + 1, false);
  std::vector<Arc> arcs;
  for (int b : t.bottom) {
    int l = b - 1;
    while (l >= 1 && used[l]) --l;
    used[b] = used[l] = true;
    arcs.push_back({l, b});
  }
  std::vector<int> rays, lefts;
  int need = n - 2 * k;
  std::vector<int> empty;
  for (int v = 1; v <= n; ++v)
    if (!used[v]) empty.push_back(v);
  for (int i = 0; i < need; ++i) rays.push_back(empty[i]);
  for (std::size_t i = need; i + 1 < empty.size(); i += 2) {
    arcs.push_back({empty[i], empty[i + 1]});
    lefts.push_back(empty[i]);
  }
  return DottedMatching(Matching::from_parts(n, arcs, rays), lefts);
}

DottedMatching standard_layout(const std::vector<Arc>& undotted, int n, int k) {
  if (static_cast<int>(undotted.size()) > k || 2 * k > n)
    throw Error(ErrorCode::NoStandardCompletion, "too many undotted arcs");
  StandardTableau t;
  std::vector<bool> bottom(n + 1, false), seen(n + 1, false);
  for (const auto& a : undotted) {
    for (int v : {a.left, a.right}) {
      if (v < 1 || v > n || seen[v]) throw Error(ErrorCode::NoStandardCompletion, "undotted arcs overlap or leave 1..n");
      seen[v] = true;
    }
    bottom[std::max(a.left, a.right)] = true;
  }
  for (int v = 1; v <= n; ++v) (bottom[v] ? t.bottom : t.top).push_back(v);
  if (!t.is_valid()) throw Error(ErrorCode::NoStandardCompletion, "no standard completion");
  DottedMatching out = matching_of(t, k);
  std::vector<Arc> want;
  for (const auto& a : undotted) want.push_back({std::min(a.left, a.right), std::max(a.left, a.right)});
  std::sort(want.begin(), want.end());
  if (out.undotted_arcs() != want) throw Error(ErrorCode::NoStandardCompletion, "no standard completion");
  return out;
}

std::vector<DottedMatching> standard_basis(int n, int k, int m) {
  std::vector<DottedMatching> out;
  if (m < 0 || m > k) return out;
  for (const auto& t : standard_tableaux(n, m)) out.push_back(matching_of(t, k));
  return out;
}

std::vector<DottedMatching> all_dotted_matchings(int n, int k, int m) {
  std::vector<DottedMatching> out;
  if (m < 0 || m > k) return out;
  for (const auto& a : enumerate(n, k)) {
    const auto& arcs = a.arcs();
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
      if (std::popcount(mask) != m) continue;
      std::vector<int> lefts;
      for (int i = 0; i < k; ++i)
        if (!((mask >> i) & 1U)) lefts.push_back(arcs[i].left);
      out.emplace_back(a, lefts);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class MatchingParser {
 public:
  explicit MatchingParser(std::string_view text) : text_(text) {}

  DottedMatching parse() {
    RawMatching raw;
    skip_ws();
    raw.n = number();
    skip_ws();
    expect(':');
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      char c = text_[pos_];
      if (c == 'r') {
        ++pos_;
        raw.rays.push_back(number());
      } else if (c == 'u' || c == 'd') {
        ++pos_;
        int i = number();
        expect('-');
        int j = number();
        if (i >= j) fail("arc endpoints must satisfy i<j");
        (c == 'u' ? raw.undotted : raw.dotted).emplace_back(i, j);
      } else {
        fail("expected 'u', 'd' or 'r'");
      }
      any = true;
      if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) fail("expected whitespace");
    }
    if (!any && raw.n > 0) fail("expected at least one item");
    return validate(raw);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, msg + " at position " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) {
      pos_ = start;
      fail("expected a number");
    }
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DottedMatching parse_matching(std::string_view text) { return MatchingParser(text).parse(); }

std::string format(const DottedMatching& m) {
  std::string out = std::to_string(m.n()) + ":";
  for (int v = 1; v <= m.n(); ++v) {
    int p = m.base().partner(v);
    if (p == 0) {
      out += " r" + std::to_string(v);
    } else if (p > v) {
      out += m.is_dotted({v, p}) ? " d" : " u";
      out += arc_text(v, p);
    }
  }
  return out;
}

}  // namespace springer
