#pragma once

// Dense exact linear algebra over a cyclotomic field.

#include <optional>
#include <vector>

#include "twistlab/cyclotomic.hpp"

namespace twistlab {

class Matrix {
 public:
  Matrix() = default;
  Matrix(ContextPtr ctx, std::size_t rows, std::size_t cols);

  static Matrix identity(ContextPtr ctx, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const ContextPtr& context() const { return ctx_; }

  CycloScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycloScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  CycloScalar trace() const;
  Matrix transpose() const;

  /// Appends the rows of o below this matrix; column counts must agree.
  void append_rows(const Matrix& o);

 private:
  ContextPtr ctx_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<CycloScalar> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in order.
std::vector<std::size_t> rref(Matrix& a);

std::size_t rank(Matrix a);

/// Basis of {v : a v = 0}, one vector per free column.
std::vector<std::vector<CycloScalar>> nullspace(Matrix a);

std::optional<Matrix> inverse(const Matrix& a);

/// Some solution of a x = b, if one exists.
std::optional<std::vector<CycloScalar>> solve(const Matrix& a, const std::vector<CycloScalar>& b);

}  // namespace twistlab
