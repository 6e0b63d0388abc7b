#pragma once

#include <cstddef>
#include <vector>

#include "weylsnp/lie_algebra.hpp"

namespace weylsnp {

/// Symmetric positive-definite Gram matrix. Positivity is checked exactly through the leading
/// principal minors.
class InnerProduct {
 public:
  /// Throws ValidationError if not symmetric, NotPositiveDefinite if some leading minor is <= 0.
  explicit InnerProduct(Matrix gram);
  static InnerProduct identity(std::size_t n);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Scalar operator()(const Vector& x, const Vector& y) const;
  Scalar norm2(const Vector& x) const { return (*this)(x, x); }
  /// G x, the covector <x, .>
  Vector lower(const Vector& x) const { return gram_ * x; }

 private:
  Matrix gram_;
};

/// Lie algebra with a left-invariant metric.
class MetricLieAlgebra {
 public:
  MetricLieAlgebra(LieAlgebra algebra, InnerProduct metric);

  std::size_t dim() const { return algebra_.dim(); }
  const LieAlgebra& algebra() const { return algebra_; }
  const InnerProduct& metric() const { return metric_; }

 private:
  LieAlgebra algebra_;
  InnerProduct metric_;
};

/// Affine connection on left-invariant fields: ∇_{e_i} e_j = Σ_k gamma(i, j, k) e_k.
class Connection {
 public:
  Connection(std::size_t dim, std::vector<Scalar> gamma);

  std::size_t dim() const { return dim_; }
  const Scalar& gamma(std::size_t i, std::size_t j, std::size_t k) const { return gamma_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Scalar>& coefficients() const { return gamma_; }

  friend bool operator==(const Connection& a, const Connection& b) {
    return a.dim_ == b.dim_ && a.gamma_ == b.gamma_;
  }

 private:
  std::size_t dim_;
  std::vector<Scalar> gamma_;
};

/// Koszul formula for left-invariant fields:
/// 2<∇_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
Connection levi_civita(const MetricLieAlgebra& m);

Vector covariant_derivative(const Connection& c, const Vector& x, const Vector& y);

/// R(x,y)z = ∇_x∇_y z - ∇_y∇_x z - ∇_{[x,y]} z. All fields are left-invariant, so the
/// derivative terms reduce to repeated application of the connection coefficients.
Vector curvature_tensor(const MetricLieAlgebra& m, const Connection& c, const Vector& x, const Vector& y,
                        const Vector& z);

/// K(x,y) = <R(x,y)y, x> / (|x|^2|y|^2 - <x,y>^2) for the Levi-Civita connection.
/// Throws DegeneratePlane when x, y are dependent.
Scalar sectional_curvature(const MetricLieAlgebra& m, const Vector& x, const Vector& y);
/// Same, reusing an already computed connection.
Scalar sectional_curvature(const MetricLieAlgebra& m, const Connection& c, const Vector& x, const Vector& y);

/// ∇_{e_i} E = 0 for every i.
bool is_parallel(const MetricLieAlgebra& m, const Vector& field);

/// Gram-Schmidt of the standard basis in index order, exact. `change` has the new orthonormal
/// basis as columns; `algebra` carries the brackets in that basis.
struct ExactFrame {
  Matrix change;
  LieAlgebra algebra;
};
/// Throws InexactSqrt when a Gram-Schmidt norm is not a rational square.
ExactFrame orthonormalize_exact(const MetricLieAlgebra& m);

struct NumericFrame {
  std::size_t dim = 0;
  std::vector<double> change;     // row-major, columns are the orthonormal vectors
  std::vector<double> constants;  // c^k_{ij} at [(i*n+j)*n+k]
};
inline constexpr double kOrthonormalTolerance = 1e-12;
/// Floating-point Gram-Schmidt in the same order. The result is checked to be orthonormal to
/// within kOrthonormalTolerance.
NumericFrame orthonormalize_numeric(const MetricLieAlgebra& m);

}  // namespace weylsnp
