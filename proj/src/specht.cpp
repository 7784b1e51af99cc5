#include "springer/specht.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>

#include "springer/error.hpp"

namespace springer {

TabloidKey tabloid_key(const std::vector<int>& bottom) {
  TabloidKey k = 0;
  for (int v : bottom) k |= TabloidKey{1} << (v - 1);
  return k;
}

std::vector<int> tabloid_set(TabloidKey key) {
  std::vector<int> out;
  for (int v = 1; key; ++v, key >>= 1)
    if (key & 1U) out.push_back(v);
  return out;
}

TabloidVector TabloidVector::single(int n, const std::vector<int>& bottom) {
  TabloidVector v(n, static_cast<int>(bottom.size()));
  v.add(tabloid_key(bottom), 1);
  return v;
}

Rational TabloidVector::coefficient(const std::vector<int>& bottom) const {
  auto it = coords_.find(tabloid_key(bottom));
  return it == coords_.end() ? Rational(0) : it->second;
}

TabloidVector& TabloidVector::add(TabloidKey key, const Rational& c) {
  if (std::popcount(key) != m_ || (n_ < 64 && (key >> n_) != 0))
    throw Error(ErrorCode::SizeMismatch, "tabloid outside U_(" + std::to_string(n_ - m_) + "," + std::to_string(m_) + ")");
  if (c == 0) return *this;
  auto& slot = coords_[key];
  slot += c;
  if (slot == 0) coords_.erase(key);
  return *this;
}

TabloidVector& TabloidVector::operator+=(const TabloidVector& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) m_ = o.m_;
  if (n_ != o.n_) throw Error(ErrorCode::SizeMismatch, "tabloid vectors of different size");
  for (const auto& [key, c] : o.coords_) add(key, c);
  return *this;
}

TabloidVector& TabloidVector::operator-=(const TabloidVector& o) { return *this += o * -1; }

TabloidVector TabloidVector::operator*(const Rational& c) const {
  TabloidVector out(n_, m_);
  if (c == 0) return out;
  for (const auto& [key, v] : coords_) out.coords_[key] = v * c;
  return out;
}

bool TabloidVector::operator==(const TabloidVector& o) const {
  if (n_ != o.n_) return false;
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return m_ == o.m_ && coords_ == o.coords_;
}

const std::vector<TabloidKey>& tabloid_keys(int n, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<TabloidKey>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace({n, m});
  if (fresh)
    for (TabloidKey key = 0; key < (TabloidKey{1} << n); ++key)
      if (std::popcount(key) == m) it->second.push_back(key);
  return it->second;
}

linalg::Row TabloidVector::dense() const {
  const auto& keys = tabloid_keys(n_, m_);
  linalg::Row row(keys.size());
  for (const auto& [key, c] : coords_) row[std::lower_bound(keys.begin(), keys.end(), key) - keys.begin()] = c;
  return row;
}

std::string TabloidVector::to_string() const {
  if (coords_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : coords_) {
    Rational a = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (a != 1) out += a.get_str() + "·";
    out += "v{";
    auto set = tabloid_set(key);
    for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
    out += "}";
    first = false;
  }
  return out;
}

TabloidVector permute(const Permutation& sigma, const TabloidVector& v) {
  if (sigma.size() != v.n()) throw Error(ErrorCode::SizeMismatch, "permutation and vector sizes differ");
  TabloidVector out(v.n(), v.m());
  for (const auto& [key, c] : v.coords()) {
    TabloidKey img = 0;
    for (int x : tabloid_set(key)) img |= TabloidKey{1} << (sigma(x) - 1);
    out.add(img, c);
  }
  return out;
}

namespace {

// Alternating sum over swaps inside each pair: unswapped picks `second`.
TabloidVector pair_expansion(int n, const std::vector<std::pair<int, int>>& pairs, const std::vector<int>& fixed) {
  const int m = static_cast<int>(pairs.size());
  TabloidVector out(n, m + static_cast<int>(fixed.size()));
  TabloidKey base = tabloid_key(fixed);
  for (unsigned mask = 0; mask < (1U << m); ++mask) {
    TabloidKey key = base;
    for (int t = 0; t < m; ++t) key |= TabloidKey{1} << (((mask >> t) & 1U ? pairs[t].first : pairs[t].second) - 1);
    out.add(key, std::popcount(mask) % 2 ? -1 : 1);
  }
  return out;
}

}  // namespace

TabloidVector polytabloid(const StandardTableau& t) {
  std::vector<std::pair<int, int>> cols;
  for (std::size_t c = 0; c < t.bottom.size(); ++c) cols.emplace_back(t.top[c], t.bottom[c]);
  return pair_expansion(t.n(), cols, {});
}

TabloidVector matching_vector(const DottedMatching& m) {
  std::vector<std::pair<int, int>> arcs;
  for (const auto& a : m.undotted_arcs()) arcs.emplace_back(a.left, a.right);
  return pair_expansion(m.n(), arcs, {});
}

int zeta_sign(const DottedMatching& m) {
  int odd = 0;
  for (const auto& a : m.undotted_arcs()) odd += a.right % 2;
  return odd % 2 ? -1 : 1;
}

TabloidVector zeta(const HomClass& x) {
  auto g = x.grading();
  TabloidVector out(x.n(), g.value_or(0));
  for (const auto& [d, c] : x.terms()) out += matching_vector(d) * (c * zeta_sign(d));
  return out;
}

TabloidVector f_embed(const TabloidVector& v, int padding) {
  if (padding < 0) throw Error(ErrorCode::PadSizeMismatch, "negative padding");
  TabloidVector out(v.n() + padding, v.m());
  for (const auto& [key, c] : v.coords()) out.add(key << padding, c);
  return out;
}

ModuleComparison modules_equal(int n, int m, int k) {
  if (m > k || 2 * k > n) throw Error(ErrorCode::ShapeMismatch, "need m <= k <= n/2");
  linalg::Matrix t_rows(0, tabloid_keys(n, m).size()), m_rows(0, tabloid_keys(n, m).size());
  for (const auto& t : standard_tableaux(n, m)) t_rows.append_row(polytabloid(t).dense());
  for (const auto& d : standard_basis(n, k, m)) m_rows.append_row(matching_vector(d).dense());
  ModuleComparison out;
  out.rank_tableaux = linalg::rank(t_rows);
  out.rank_matchings = linalg::rank(m_rows);
  out.equal = out.rank_tableaux == t_rows.rows() && out.rank_matchings == m_rows.rows() &&
              linalg::same_row_space(t_rows, m_rows);
  if (!out.equal) return out;
  linalg::SpanSolver in_t(t_rows), in_m(m_rows);
  out.matchings_in_tableaux = linalg::Matrix(0, t_rows.rows());
  out.tableaux_in_matchings = linalg::Matrix(0, m_rows.rows());
  for (std::size_t i = 0; i < m_rows.rows(); ++i) out.matchings_in_tableaux.append_row(*in_t.solve(m_rows.row(i)));
  for (std::size_t i = 0; i < t_rows.rows(); ++i) out.tableaux_in_matchings.append_row(*in_m.solve(t_rows.row(i)));
  return out;
}

namespace {

// Beta-set form: removing a rim hook of length h moves a bead from b to b-h.
long long mn(std::vector<int> beta, const std::vector<int>& cycles, std::size_t idx) {
  if (idx == cycles.size()) return 1;
  const int h = cycles[idx];
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    if (b - h < 0 || std::find(beta.begin(), beta.end(), b - h) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > b - h && x < b) ++between;
    auto next = beta;
    next[i] = b - h;
    long long sub = mn(next, cycles, idx + 1);
    total += between % 2 ? -sub : sub;
  }
  return total;
}

}  // namespace

long long irr_character(const std::vector<int>& shape, const std::vector<int>& cycle_type) {
  int a = std::accumulate(shape.begin(), shape.end(), 0);
  int b = std::accumulate(cycle_type.begin(), cycle_type.end(), 0);
  if (a != b) throw Error(ErrorCode::SizeMismatch, "shape and cycle type sizes differ");
  const int r = static_cast<int>(shape.size());
  std::vector<int> beta;
  for (int i = 0; i < r; ++i) beta.push_back(shape[i] + (r - 1 - i));
  return mn(beta, cycle_type, 0);
}

}  // namespace springer
