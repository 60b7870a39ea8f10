#pragma once

// Dense exact linear algebra over any FieldContext.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "centerpoint/scalar.hpp"

namespace centerpoint {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const FieldContext& ctx);
  static Matrix identity(std::size_t n, const FieldContext& ctx);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, const FieldContext& ctx);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldContext& context() const { return ctx_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Scalar> row_vector(std::size_t r) const;
  std::vector<Scalar> column_vector(std::size_t c) const;

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldContext ctx_ = FieldContext::rationals();
  std::vector<Scalar> data_;
};

struct EchelonForm {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

EchelonForm row_echelon(Matrix m);
std::size_t rank(const Matrix& m);
/// Nonzero rows of the reduced echelon form: a canonical basis of the row space.
Matrix row_space_basis(const Matrix& m);
/// Rows form a basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);
/// Some x with m x = b, if one exists.
std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> b);

}  // namespace centerpoint
