#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "weylsnp/rational.hpp"

namespace weylsnp {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

/// Dense row-major matrix over exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);
  static Matrix diagonal(const Vector& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  /// Entries in row-major order.
  const std::vector<Scalar>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& m);
/// a·b − b·a
Matrix commutator(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. The pivot of each column is the nonzero entry of
/// smallest height (numerator plus denominator bit size) below the current row.
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> kernel(const Matrix& m);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
Matrix inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Linear subspace of Q^n kept as a reduced row echelon basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim);

  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  /// Basis vectors as columns.
  Matrix basis_matrix() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Coordinates of `v` in basis(). Throws DomainError if v is not in the subspace.
  Vector coordinates(const Vector& v) const;

  /// Equality by mutual containment.
  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

/// {x : <v, x>_G = 0 for all v in s}.
Subspace orthogonal_complement(const Subspace& s, const Matrix& gram);

}  // namespace weylsnp
