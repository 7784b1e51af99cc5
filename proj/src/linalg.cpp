#include "springer/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace springer::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::vector<Row> rows, std::size_t cols) {
  Matrix m;
  m.cols_ = cols;
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

void Matrix::append_row(Row r) {
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.push_back(std::move(r));
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(rows(), rhs.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (data_[i][k] == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += data_[i][k] * rhs(k, j);
    }
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return cols_ == rhs.cols_ && data_ == rhs.data_;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < rows() && i < cols_; ++i) t += data_[i][i];
  return t;
}

bool Matrix::is_integral() const {
  for (const auto& r : data_)
    for (const auto& x : r)
      if (x.get_den() != 1) return false;
  return true;
}

namespace {

// In-place elimination on `rows`; applies the same row operations to
// `companion` when given. Returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<Row>& rows, std::size_t cols,
                                   std::vector<Row>* companion) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    if (companion) std::swap((*companion)[r], (*companion)[sel]);

    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    if (companion)
      for (auto& x : (*companion)[r]) x *= inv;

    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
      if (companion) {
        auto& dst = (*companion)[i];
        const auto& src = (*companion)[r];
        for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= f * src[j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  if (companion) companion->resize(r);
  return pivots;
}

std::vector<Row> rows_of(const Matrix& m) {
  std::vector<Row> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

}  // namespace

Echelon rref(const Matrix& m) {
  auto rows = rows_of(m);
  auto piv = eliminate(rows, m.cols(), nullptr);
  return {Matrix::from_rows(std::move(rows), m.cols()), std::move(piv)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

bool same_row_space(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  std::size_t ra = rank(a);
  if (ra != rank(b)) return false;
  Matrix both = a;
  for (std::size_t i = 0; i < b.rows(); ++i) both.append_row(b.row(i));
  return rank(both) == ra;
}

SpanSolver::SpanSolver(const Matrix& basis_rows) {
  auto rows = rows_of(basis_rows);
  auto comp = rows_of(Matrix::identity(basis_rows.rows()));
  auto piv = eliminate(rows, basis_rows.cols(), &comp);
  if (piv.size() != basis_rows.rows()) throw std::invalid_argument("SpanSolver: dependent basis");
  echelon_ = {Matrix::from_rows(std::move(rows), basis_rows.cols()), std::move(piv)};
  transform_ = Matrix::from_rows(std::move(comp), basis_rows.rows());
}

std::optional<Row> SpanSolver::solve(const Row& v) const {
  const auto& red = echelon_.reduced;
  if (v.size() != red.cols()) return std::nullopt;
  // In the reduced basis the coordinate of row r is v at its pivot column.
  Row residual = v;
  Row y(red.rows());
  for (std::size_t r = 0; r < red.rows(); ++r) {
    y[r] = v[echelon_.pivots[r]];
    if (y[r] == 0) continue;
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= y[r] * red(r, j);
  }
  for (const auto& x : residual)
    if (x != 0) return std::nullopt;
  Row c(transform_.cols());
  for (std::size_t r = 0; r < red.rows(); ++r) {
    if (y[r] == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += y[r] * transform_(r, j);
  }
  return c;
}

SparseRow SparseEchelon::reduce(SparseRow r, std::size_t limit) const {
  auto it = r.begin();
  while (it != r.end() && it->first < limit) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    const std::size_t c = it->first;
    const Rational f = it->second;
    for (const auto& [col, val] : p->second) {
      auto& slot = r[col];
      slot -= f * val;
      if (slot == 0) r.erase(col);
    }
    it = r.upper_bound(c);
  }
  return r;
}

bool SparseEchelon::insert(SparseRow r) {
  r = reduce(std::move(r));
  if (r.empty()) return false;
  const Rational lead = r.begin()->second;
  for (auto& [col, val] : r) val /= lead;
  const std::size_t c = r.begin()->first;
  pivots_.emplace(c, std::move(r));
  return true;
}

}  // namespace springer::linalg
