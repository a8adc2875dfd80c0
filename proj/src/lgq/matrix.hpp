#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lgq/scalar.hpp"

namespace lgq {

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(const Scalar& c, const Vec& x);
bool is_zero(const Vec& x);

/// Kronecker product of coordinate vectors; index (i, j) maps to
/// i * dim(y) + j, matching the lexicographic tensor basis order.
Vec kron(const Vec& x, const Vec& y);

/// Standard basis vector of the given dimension.
Vec unit_vec(std::size_t dim, std::size_t index);

/// Dense matrix over the coefficient field, row major. Entry (r, c) is the
/// coefficient of basis vector r in the image of basis vector c, so columns
/// are images and composition is the usual matrix product.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);
  static Matrix diagonal(const Vec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c);
  const Scalar& at(std::size_t r, std::size_t c) const;

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;

  bool operator==(const Matrix& rhs) const;
  bool is_zero() const;

  Vec apply(const Vec& x) const;
  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;

  static Matrix kron(const Matrix& a, const Matrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Concatenate two matrices with equal row counts side by side.
Matrix hcat(const Matrix& a, const Matrix& b);

/// Rows [r0, r1) of m as a new matrix.
Matrix rows_slice(const Matrix& m, std::size_t r0, std::size_t r1);

/// The pivot columns of m, forming a basis of its column space.
Matrix column_space_basis(const Matrix& m);

/// Reduced row echelon form in place. Returns the pivot columns (their
/// count is the rank). Pivots prefer low-complexity entries to keep the
/// intermediate rational functions small.
std::vector<std::size_t> rref_in_place(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of the right kernel {x : m x = 0}.
std::vector<Vec> kernel_basis(const Matrix& m);

struct LinearSolution {
  Vec particular;
  std::vector<Vec> homogeneous;  // kernel basis; empty means unique
};

/// Exact solution set of A x = b, or nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Vec& b);

/// Inverse of a square matrix; throws StructureError when singular.
Matrix inverse(const Matrix& m);

}  // namespace lgq
