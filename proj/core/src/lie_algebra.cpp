#include "weylsnp/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "weylsnp/errors.hpp"

namespace weylsnp {

namespace {

void require_dim(const LieAlgebra& algebra, const Vector& x, const char* what) {
  if (x.size() != algebra.dim()) throw DimensionMismatch(what);
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Scalar> constants, std::vector<std::string> labels)
    : dim_(dim), constants_(std::move(constants)), labels_(std::move(labels)) {
  if (dim_ == 0) throw InvalidArgument("Lie algebra of dimension 0");
  if (constants_.size() != dim_ * dim_ * dim_) throw DimensionMismatch("structure constant table has wrong size");
  if (!labels_.empty() && labels_.size() != dim_) throw DimensionMismatch("label count does not match dimension");
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, std::vector<Scalar>(dim * dim * dim)); }

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, std::span<const BracketEntry> entries,
                                     std::vector<std::string> labels) {
  std::vector<Scalar> c(dim * dim * dim);
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) throw InvalidArgument("bracket index out of range");
    if (e.i == e.j) {
      if (sgn(e.value) != 0) throw InvalidArgument("[e_i, e_i] must vanish");
      continue;
    }
    c[(e.i * dim + e.j) * dim + e.k] += e.value;
    c[(e.j * dim + e.i) * dim + e.k] -= e.value;
  }
  return LieAlgebra(dim, std::move(c), std::move(labels));
}

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, std::initializer_list<BracketEntry> entries,
                                     std::vector<std::string> labels) {
  return from_brackets(dim, std::span<const BracketEntry>(entries.begin(), entries.size()), std::move(labels));
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket: vector of wrong length");
  Vector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = constant(i, j, k);
        if (sgn(c) != 0) r[k] += xy * c;
      }
    }
  }
  return r;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector r(dim_);
  for (std::size_t k = 0; k < dim_; ++k) r[k] = constant(i, j, k);
  return r;
}

std::string ValidationReport::describe() const {
  std::ostringstream os;
  if (ok()) {
    os << "valid";
    return os.str();
  }
  if (antisymmetry_violation) {
    const auto& v = *antisymmetry_violation;
    os << "antisymmetry fails: c^" << v[2] + 1 << "_{" << v[0] + 1 << v[1] + 1 << "} != -c^" << v[2] + 1 << "_{"
       << v[1] + 1 << v[0] + 1 << "}";
  }
  if (jacobi_violation) {
    const auto& v = *jacobi_violation;
    if (antisymmetry_violation) os << "; ";
    os << "Jacobi fails for (e" << v[0] + 1 << ", e" << v[1] + 1 << ", e" << v[2] + 1 << "), component e" << v[3] + 1;
  }
  return os.str();
}

ValidationReport validate(const LieAlgebra& algebra) {
  ValidationReport report;
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n && report.antisymmetric; ++i)
    for (std::size_t j = i; j < n && report.antisymmetric; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (algebra.constant(i, j, k) != -algebra.constant(j, i, k)) {
          report.antisymmetric = false;
          report.antisymmetry_violation = std::array<std::size_t, 3>{i, j, k};
          break;
        }

  // sum_m c^m_{ij} c^l_{mk} + c^m_{jk} c^l_{mi} + c^m_{ki} c^l_{mj} = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector jac(n);
        auto accumulate = [&](std::size_t a, std::size_t b, std::size_t c) {
          for (std::size_t m = 0; m < n; ++m) {
            const Scalar& cab = algebra.constant(a, b, m);
            if (sgn(cab) == 0) continue;
            for (std::size_t l = 0; l < n; ++l) {
              const Scalar& cmc = algebra.constant(m, c, l);
              if (sgn(cmc) != 0) jac[l] += cab * cmc;
            }
          }
        };
        accumulate(i, j, k);
        accumulate(j, k, i);
        accumulate(k, i, j);
        for (std::size_t l = 0; l < n; ++l) {
          if (sgn(jac[l]) != 0) {
            report.jacobi = false;
            report.jacobi_violation = std::array<std::size_t, 4>{i, j, k, l};
            return report;
          }
        }
      }
  return report;
}

Matrix ad_matrix(const LieAlgebra& algebra, const Vector& x) {
  require_dim(algebra, x, "ad_matrix: vector of wrong length");
  const std::size_t n = algebra.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = algebra.constant(i, j, k);
        if (sgn(c) != 0) m(k, j) += x[i] * c;
      }
  }
  return m;
}

bool is_unimodular(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Scalar tr;
    for (std::size_t k = 0; k < n; ++k) tr += algebra.constant(i, k, k);
    if (sgn(tr) != 0) return false;
  }
  return true;
}

Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b) {
  std::vector<Vector> products;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      Vector z = algebra.bracket(x, y);
      if (!is_zero(z)) products.push_back(std::move(z));
    }
  return Subspace::span(algebra.dim(), products);
}

Subspace derived_algebra(const LieAlgebra& algebra) {
  const auto g = Subspace::full(algebra.dim());
  return bracket_span(algebra, g, g);
}

Series series(const LieAlgebra& algebra) {
  Series s;
  const auto g = Subspace::full(algebra.dim());

  s.derived.push_back(g);
  while (true) {
    const Subspace& last = s.derived.back();
    Subspace next = bracket_span(algebra, last, last);
    const bool stalled = next.dim() == last.dim();
    s.derived.push_back(std::move(next));
    if (s.derived.back().is_zero() || stalled) break;
  }
  s.is_solvable = s.derived.back().is_zero();

  s.lower_central.push_back(g);
  while (true) {
    const Subspace& last = s.lower_central.back();
    Subspace next = bracket_span(algebra, g, last);
    const bool stalled = next.dim() == last.dim();
    s.lower_central.push_back(std::move(next));
    if (s.lower_central.back().is_zero() || stalled) break;
  }
  s.is_nilpotent = s.lower_central.back().is_zero();
  if (s.is_nilpotent) s.nilpotency_class = s.lower_central.size() - 1;
  return s;
}

Subspace center(const LieAlgebra& algebra) {
  // x central <=> sum_i x_i c^k_{ij} = 0 for all j, k
  const std::size_t n = algebra.dim();
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) stacked(j * n + k, i) = algebra.constant(i, j, k);
  const auto vecs = kernel(stacked);
  return Subspace::span(n, vecs);
}

VergneType vergne_type(const LieAlgebra& algebra) {
  const Series s = series(algebra);
  if (!s.is_nilpotent) throw NotNilpotent("Vergne type is defined only for nilpotent algebras");
  VergneType type;
  for (std::size_t i = 1; i < s.lower_central.size(); ++i)
    type.push_back(s.lower_central[i - 1].dim() - s.lower_central[i].dim());
  return type;
}

std::optional<std::pair<std::size_t, std::size_t>> metabelian_signature(const LieAlgebra& algebra) {
  const auto g = Subspace::full(algebra.dim());
  const Subspace d = bracket_span(algebra, g, g);
  if (!bracket_span(algebra, d, d).is_zero()) return std::nullopt;
  if (!bracket_span(algebra, g, d).is_zero()) return std::nullopt;
  return std::make_pair(algebra.dim() - d.dim(), d.dim());
}

std::optional<std::pair<std::size_t, std::size_t>> derivation_defect(const LieAlgebra& algebra, const Matrix& d) {
  const std::size_t n = algebra.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionMismatch("derivation matrix has wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    const Vector dei = d.column(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = d * algebra.bracket_basis(i, j);
      const Vector rhs = algebra.bracket(dei, unit_vector(n, j)) + algebra.bracket(unit_vector(n, i), d.column(j));
      if (lhs != rhs) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool is_derivation(const LieAlgebra& algebra, const Matrix& d) { return !derivation_defect(algebra, d); }

LieAlgebra semidirect_sum(const LieAlgebra& a, const LieAlgebra& n, std::span<const Matrix> phi) {
  if (phi.size() != a.dim()) throw InvalidArgument("semidirect_sum: need one matrix per basis vector of a");
  if (!std::all_of(a.constants().begin(), a.constants().end(), [](const Scalar& c) { return sgn(c) == 0; }))
    throw InvalidArgument("semidirect_sum: the acting algebra must be abelian");
  for (std::size_t p = 0; p < phi.size(); ++p) {
    if (auto defect = derivation_defect(n, phi[p])) {
      throw NotADerivation("semidirect_sum: phi(a_" + std::to_string(p + 1) + ") violates the Leibniz rule on (e" +
                               std::to_string(defect->first + 1) + ", e" + std::to_string(defect->second + 1) + ")",
                           defect->first, defect->second);
    }
  }
  for (std::size_t p = 0; p < phi.size(); ++p)
    for (std::size_t q = p + 1; q < phi.size(); ++q)
      if (!commutator(phi[p], phi[q]).is_zero())
        throw NonCommutingImages("semidirect_sum: phi(a_" + std::to_string(p + 1) + ") and phi(a_" +
                                 std::to_string(q + 1) + ") do not commute");

  const std::size_t dn = n.dim();
  const std::size_t total = dn + a.dim();
  std::vector<Scalar> c(total * total * total);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return c[(i * total + j) * total + k]; };
  for (std::size_t i = 0; i < dn; ++i)
    for (std::size_t j = 0; j < dn; ++j)
      for (std::size_t k = 0; k < dn; ++k) at(i, j, k) = n.constant(i, j, k);
  for (std::size_t p = 0; p < a.dim(); ++p)
    for (std::size_t j = 0; j < dn; ++j)
      for (std::size_t k = 0; k < dn; ++k) {
        at(dn + p, j, k) = phi[p](k, j);
        at(j, dn + p, k) = -phi[p](k, j);
      }

  std::vector<std::string> labels;
  if (!n.labels().empty()) {
    labels = n.labels();
    for (std::size_t p = 0; p < a.dim(); ++p)
      labels.push_back(a.labels().empty() ? "a" + std::to_string(p + 1) : a.labels()[p]);
  }
  return LieAlgebra(total, std::move(c), std::move(labels));
}

LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix& change) {
  const std::size_t n = algebra.dim();
  if (change.rows() != n || change.cols() != n) throw DimensionMismatch("change_basis: matrix has wrong shape");
  const Matrix inv = inverse(change);
  std::vector<Vector> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = change.column(i);
  std::vector<Scalar> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector b = inv * algebra.bracket(cols[i], cols[j]);
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = b[k];
    }
  return LieAlgebra(n, std::move(c));
}

LieAlgebra restrict_to(const LieAlgebra& algebra, const Subspace& s) {
  if (s.is_zero()) throw DomainError("restrict_to: zero subspace");
  const std::size_t d = s.dim();
  std::vector<Scalar> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector b = algebra.bracket(s.basis()[i], s.basis()[j]);
      if (!s.contains(b)) throw DomainError("restrict_to: subspace is not a subalgebra");
      const Vector coords = s.coordinates(b);
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = coords[k];
    }
  return LieAlgebra(d, std::move(c));
}

bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to, const Matrix& p) {
  if (p.rows() != to.dim() || p.cols() != from.dim()) throw DimensionMismatch("is_homomorphism: wrong shape");
  for (std::size_t i = 0; i < from.dim(); ++i)
    for (std::size_t j = i + 1; j < from.dim(); ++j)
      if (p * from.bracket_basis(i, j) != to.bracket(p.column(i), p.column(j))) return false;
  return true;
}

}  // namespace weylsnp
