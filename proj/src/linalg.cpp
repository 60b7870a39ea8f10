#include "centerpoint/linalg.hpp"

#include "centerpoint/errors.hpp"

namespace centerpoint {

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldContext& ctx)
    : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols, ctx.zero()) {}

Matrix Matrix::identity(std::size_t n, const FieldContext& ctx) {
  Matrix m(n, n, ctx);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, const FieldContext& ctx) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, ctx);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ContextMismatch("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Scalar> Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

std::vector<Scalar> Matrix::column_vector(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, ctx_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Scalar Matrix::trace() const {
  Scalar s = ctx_.zero();
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw ContextMismatch("vector length does not match matrix");
  std::vector<Scalar> out(rows_, ctx_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
    }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ContextMismatch("matrix shapes do not compose");
  Matrix m(a.rows_, b.cols_, a.ctx_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ContextMismatch("matrix shapes differ");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ContextMismatch("matrix shapes differ");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.data_) x = s * x;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

EchelonForm row_echelon(Matrix m) {
  EchelonForm out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(lead, j));
    const Scalar inv = m(lead, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(lead, j).is_zero()) m(lead, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(lead, j).is_zero()) m(r, j) -= f * m(lead, j);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Matrix row_space_basis(const Matrix& m) {
  auto e = row_echelon(m);
  Matrix out(e.pivots.size(), m.cols(), m.context());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = e.reduced(r, c);
  return out;
}

Matrix nullspace(const Matrix& m) {
  auto e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix out(free_cols.size(), m.cols(), m.context());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto f = free_cols[k];
    out(k, f) = m.context().one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) out(k, e.pivots[r]) = -e.reduced(r, f);
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ContextMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.context());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.context().one();
  }
  auto e = row_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n, m.context());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw ContextMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = m.context().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return m.context().zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar f = m(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw ContextMismatch("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1, m.context());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = row_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), m.context().zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

}  // namespace centerpoint
