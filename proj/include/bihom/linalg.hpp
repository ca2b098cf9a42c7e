#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bihom/scalar.hpp"

namespace bihom {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
/// v += s * w
void axpy(Vec& v, const Scalar& s, const Vec& w);
Vec concat(const Vec& a, const Vec& b);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from rows; throws DimensionMismatch on ragged input.
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols_if_empty = 0);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows_if_empty = 0);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;

  Vec operator*(const Vec& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix pow(unsigned k) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix a);
std::size_t rank(const Matrix& a);
/// Basis of {x : A x = 0}; one vector per free column, in column order.
std::vector<Vec> nullspace(const Matrix& a);

struct LinearSolution {
  std::optional<Vec> particular;  // absent iff the system is inconsistent
  std::vector<Vec> kernel_basis;
};
LinearSolution solve_linear(const Matrix& a, const Vec& b);

Scalar determinant(const Matrix& a);
/// Throws Error(SingularMap) when a is singular.
Matrix inverse(const Matrix& a);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

}  // namespace bihom
