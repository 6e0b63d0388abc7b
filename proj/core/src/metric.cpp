#include "weylsnp/metric.hpp"

#include <cmath>

#include "weylsnp/errors.hpp"

namespace weylsnp {

InnerProduct::InnerProduct(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() == 0) throw ValidationError("Gram matrix must be square and non-empty");
  if (!gram_.is_symmetric()) throw ValidationError("Gram matrix is not symmetric");
  // Leading minors via elimination without pivoting: all pivots > 0 <=> all minors > 0.
  Matrix a = gram_;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(a(c, c)) <= 0)
      throw NotPositiveDefinite("Gram matrix is not positive definite (leading minor " + std::to_string(c + 1) +
                                " is not positive)");
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Scalar f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
}

InnerProduct InnerProduct::identity(std::size_t n) { return InnerProduct(Matrix::identity(n)); }

Scalar InnerProduct::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("inner product: vector of wrong length");
  return dot(x, gram_ * y);
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra algebra, InnerProduct metric)
    : algebra_(std::move(algebra)), metric_(std::move(metric)) {
  if (algebra_.dim() != metric_.dim()) throw DimensionMismatch("metric and algebra dimensions differ");
}

Connection::Connection(std::size_t dim, std::vector<Scalar> gamma) : dim_(dim), gamma_(std::move(gamma)) {
  if (gamma_.size() != dim_ * dim_ * dim_) throw DimensionMismatch("connection table has wrong size");
}

Connection levi_civita(const MetricLieAlgebra& m) {
  const std::size_t n = m.dim();
  const LieAlgebra& g = m.algebra();
  const Matrix& gram = m.metric().gram();
  // structure constants lowered: lowered[i][j][k] = <[e_i,e_j], e_k>
  std::vector<Scalar> lowered(n * n * n);
  auto low = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return lowered[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector b = g.bracket_basis(i, j);
      if (is_zero(b)) continue;
      const Vector bl = gram * b;
      for (std::size_t k = 0; k < n; ++k) low(i, j, k) = bl[k];
    }

  const Matrix gram_inv = inverse(gram);
  std::vector<Scalar> gamma(n * n * n);
  Vector koszul(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) koszul[k] = (low(i, j, k) - low(j, k, i) + low(k, i, j)) / 2;
      const Vector coeffs = gram_inv * koszul;
      for (std::size_t k = 0; k < n; ++k) gamma[(i * n + j) * n + k] = coeffs[k];
    }
  return Connection(n, std::move(gamma));
}

Vector covariant_derivative(const Connection& c, const Vector& x, const Vector& y) {
  const std::size_t n = c.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("covariant_derivative: vector of wrong length");
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(c.gamma(i, j, k)) != 0) r[k] += xy * c.gamma(i, j, k);
    }
  }
  return r;
}

Vector curvature_tensor(const MetricLieAlgebra& m, const Connection& c, const Vector& x, const Vector& y,
                        const Vector& z) {
  if (c.dim() != m.dim()) throw DimensionMismatch("curvature_tensor: connection dimension differs");
  const Vector yz = covariant_derivative(c, y, z);
  const Vector xz = covariant_derivative(c, x, z);
  return covariant_derivative(c, x, yz) - covariant_derivative(c, y, xz) -
         covariant_derivative(c, m.algebra().bracket(x, y), z);
}

Scalar sectional_curvature(const MetricLieAlgebra& m, const Connection& c, const Vector& x, const Vector& y) {
  const InnerProduct& g = m.metric();
  const Scalar area = g.norm2(x) * g.norm2(y) - g(x, y) * g(x, y);
  if (sgn(area) == 0) throw DegeneratePlane("sectional_curvature: vectors are linearly dependent");
  return g(curvature_tensor(m, c, x, y, y), x) / area;
}

Scalar sectional_curvature(const MetricLieAlgebra& m, const Vector& x, const Vector& y) {
  return sectional_curvature(m, levi_civita(m), x, y);
}

bool is_parallel(const MetricLieAlgebra& m, const Vector& field) {
  if (field.size() != m.dim()) throw DimensionMismatch("is_parallel: vector of wrong length");
  const Connection c = levi_civita(m);
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (!is_zero(covariant_derivative(c, unit_vector(m.dim(), i), field))) return false;
  return true;
}

ExactFrame orthonormalize_exact(const MetricLieAlgebra& m) {
  const std::size_t n = m.dim();
  const InnerProduct& g = m.metric();
  std::vector<Vector> frame;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = unit_vector(n, i);
    for (const Vector& u : frame) v = v - g(v, u) * u;
    Scalar root;
    const Scalar norm2 = g.norm2(v);
    if (!rational_sqrt(norm2, root))
      throw InexactSqrt("orthonormalize: squared norm " + to_string(norm2) + " of vector " + std::to_string(i + 1) +
                        " is not a rational square");
    frame.push_back(Scalar(1 / root) * v);
  }
  Matrix change = Matrix::from_columns(frame);
  LieAlgebra algebra = change_basis(m.algebra(), change);
  return {std::move(change), std::move(algebra)};
}

NumericFrame orthonormalize_numeric(const MetricLieAlgebra& m) {
  const std::size_t n = m.dim();
  std::vector<double> gram(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i * n + j] = to_double(m.metric().gram()(i, j));
  auto ip = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += a[i] * gram[i * n + j] * b[j];
    return s;
  };

  std::vector<std::vector<double>> frame;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v(n, 0.0);
    v[i] = 1.0;
    for (const auto& u : frame) {
      const double p = ip(v, u);
      for (std::size_t k = 0; k < n; ++k) v[k] -= p * u[k];
    }
    const double norm = std::sqrt(ip(v, v));
    for (double& x : v) x /= norm;
    frame.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(ip(frame[i], frame[j]) - (i == j ? 1.0 : 0.0)) > kOrthonormalTolerance)
        throw DomainError("orthonormalize_numeric: frame is not orthonormal to tolerance");

  NumericFrame out;
  out.dim = n;
  out.change.assign(n * n, 0.0);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) out.change[r * n + c] = frame[c][r];

  // Brackets of frame vectors in e-coordinates, then expressed in the frame: coefficient of
  // f_k is <[f_i,f_j], f_k> since the frame is orthonormal.
  std::vector<double> cst(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) cst[(a * n + b) * n + k] = to_double(m.algebra().constant(a, b, k));
  out.constants.assign(n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> br(n, 0.0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const double w = frame[i][a] * frame[j][b];
          if (w == 0.0) continue;
          for (std::size_t k = 0; k < n; ++k) br[k] += w * cst[(a * n + b) * n + k];
        }
      for (std::size_t k = 0; k < n; ++k) out.constants[(i * n + j) * n + k] = ip(br, frame[k]);
    }
  return out;
}

}  // namespace weylsnp
