#include "weylsnp/constructors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "weylsnp/errors.hpp"

namespace weylsnp {

namespace {

void require_alternating(const Matrix& f, const char* what) {
  if (!f.is_square()) throw InvalidArgument(std::string(what) + ": form must be square");
  if (!f.is_antisymmetric()) throw InvalidArgument(std::string(what) + ": form is not alternating");
}

// [e_i,e_j] = value e_k, 1-based
BracketEntry br(std::size_t i, std::size_t j, std::size_t k, Scalar value = 1) { return {i - 1, j - 1, k - 1, value}; }

std::vector<std::string> dyer_labels() {
  std::vector<std::string> l;
  for (int i = 1; i <= 9; ++i) l.push_back("X" + std::to_string(i));
  return l;
}

}  // namespace

Matrix standard_symplectic(std::size_t n) {
  Matrix f(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    f(2 * k, 2 * k + 1) = 1;
    f(2 * k + 1, 2 * k) = -1;
  }
  return f;
}

LieAlgebra heisenberg(const Matrix& form) {
  require_alternating(form, "heisenberg");
  const std::size_t m = form.rows();
  if (m == 0 || m % 2 != 0) throw OddDimension("heisenberg: form size must be even and positive");
  if (sgn(determinant(form)) == 0) throw DegenerateForm("heisenberg: form is degenerate");
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (sgn(form(i, j)) != 0) entries.push_back({i, j, m, form(i, j)});
  return LieAlgebra::from_brackets(m + 1, entries);
}

LieAlgebra n2_heisenberg(const Matrix& f1, const Matrix& f2) {
  require_alternating(f1, "n2_heisenberg");
  require_alternating(f2, "n2_heisenberg");
  if (f1.rows() != f2.rows()) throw DimensionMismatch("n2_heisenberg: forms have different sizes");
  const std::size_t n = f1.rows();
  if (rank(Matrix::from_rows({f1.data(), f2.data()})) < 2)
    throw NotSurjective("n2_heisenberg: forms are linearly dependent, the bracket is not onto <x, y>");
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(f1(i, j)) != 0) entries.push_back({i, j, n, f1(i, j)});
      if (sgn(f2(i, j)) != 0) entries.push_back({i, j, n + 1, f2(i, j)});
    }
  return LieAlgebra::from_brackets(n + 2, entries);
}

LieAlgebra dyer_printed_table() {
  return LieAlgebra::from_brackets(9,
                                   {br(1, 2, 3), br(1, 3, 4), br(1, 5, 7), br(1, 8, 9), br(2, 3, 5), br(2, 4, 7),
                                    br(2, 5, 6), br(2, 7, 8, -1), br(3, 7, 9), br(4, 5, 9, -1)},
                                   dyer_labels());
}

LieAlgebra dyer() {
  // Graded by weight (X1, X2 of weight 1) with [X3,X7] = -X9, and completed by the degree-shifting
  // brackets [X1,X4] = X8, [X2,X6] = X9 that remove every diagonal derivation.
  return LieAlgebra::from_brackets(
      9,
      {br(1, 2, 3), br(1, 3, 4), br(1, 5, 7), br(1, 8, 9), br(2, 3, 5), br(2, 4, 7), br(2, 5, 6), br(2, 7, 8, -1),
       br(3, 7, 9, -1), br(4, 5, 9, -1), br(1, 6, 8, -3), br(3, 5, 8, -2), br(1, 4, 8), br(2, 6, 9)},
      dyer_labels());
}

Vector flatten(const Matrix& m) { return m.data(); }

std::vector<Matrix> as_matrices(const Subspace& space, std::size_t n) {
  if (space.ambient_dim() != n * n) throw DimensionMismatch("as_matrices: ambient dimension is not n^2");
  std::vector<Matrix> out;
  for (const Vector& v : space.basis()) out.emplace_back(n, n, v);
  return out;
}

namespace {

// Rows of the Leibniz system D[e_i,e_j] = [De_i,e_j] + [e_i,De_j], unknown D(r,c) at r*n+c.
std::vector<Vector> leibniz_rows(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(n * n);
        for (std::size_t m = 0; m < n; ++m) row[k * n + m] += g.constant(i, j, m);
        for (std::size_t r = 0; r < n; ++r) {
          row[r * n + i] -= g.constant(r, j, k);
          row[r * n + j] -= g.constant(i, r, k);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  return rows;
}

Subspace solve_rows(std::size_t n, const std::vector<Vector>& rows) {
  if (rows.empty()) return Subspace::full(n * n);
  return Subspace::span(n * n, kernel(Matrix::from_rows(rows)));
}

}  // namespace

Subspace derivations(const LieAlgebra& algebra) { return solve_rows(algebra.dim(), leibniz_rows(algebra)); }

Subspace skew_derivations(const LieAlgebra& algebra, const InnerProduct& metric) {
  const std::size_t n = algebra.dim();
  if (metric.dim() != n) throw DimensionMismatch("skew_derivations: metric dimension differs");
  const Matrix& g = metric.gram();
  std::vector<Vector> rows = leibniz_rows(algebra);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) {
      Vector row(n * n);
      for (std::size_t r = 0; r < n; ++r) {
        row[r * n + q] += g(p, r);
        row[r * n + p] += g(r, q);
      }
      rows.push_back(std::move(row));
    }
  return solve_rows(n, rows);
}

LieAlgebra derivation_algebra(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const Subspace der = derivations(algebra);
  const std::vector<Matrix> basis = as_matrices(der, n);
  const std::size_t d = basis.size();
  std::vector<Scalar> c(d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const Vector coords = der.coordinates(flatten(commutator(basis[a], basis[b])));
      for (std::size_t k = 0; k < d; ++k) {
        c[(a * d + b) * d + k] = coords[k];
        c[(b * d + a) * d + k] = -coords[k];
      }
    }
  return LieAlgebra(d, std::move(c));
}

bool is_characteristically_nilpotent(const LieAlgebra& algebra) {
  return series(derivation_algebra(algebra)).is_nilpotent;
}

GtTensor parse_gt_tensor(std::string_view text, std::size_t m, std::size_t n) {
  GtTensor t{m, n, {}};
  std::set<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> seen;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view group = text.substr(pos, end - pos);
    const std::string where = " at offset " + std::to_string(pos);
    if (group.size() != 3) throw ParseError("GT term '" + std::string(group) + "' is not a digit triple" + where);
    for (char ch : group)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError("GT term '" + std::string(group) + "' contains a non-digit" + where);
    const GtTerm term{static_cast<std::size_t>(group[0] - '0'), static_cast<std::size_t>(group[1] - '0'),
                      static_cast<std::size_t>(group[2] - '0')};
    if (term.a == term.b) throw ParseError("GT term '" + std::string(group) + "' repeats an index" + where);
    if (term.a < 1 || term.a > m || term.b < 1 || term.b > m)
      throw RangeError("GT term '" + std::string(group) + "': U index outside 1.." + std::to_string(m) + where);
    if (term.c < 1 || term.c > n)
      throw RangeError("GT term '" + std::string(group) + "': V index outside 1.." + std::to_string(n) + where);
    if (!seen.insert({{std::min(term.a, term.b), std::max(term.a, term.b)}, term.c}).second)
      throw DuplicateTerm("GT term '" + std::string(group) + "' duplicates an earlier term" + where);
    t.terms.push_back(term);
    pos = end;
  }
  return t;
}

std::string to_string(const GtTensor& tensor) {
  std::string out;
  for (const GtTerm& t : tensor.terms) {
    if (!out.empty()) out += ' ';
    out += std::to_string(t.a) + std::to_string(t.b) + std::to_string(t.c);
  }
  return out;
}

GtAlgebra gt_algebra(const GtTensor& tensor) {
  const std::size_t m = tensor.m;
  std::vector<BracketEntry> entries;
  for (const GtTerm& t : tensor.terms) entries.push_back({t.a - 1, t.b - 1, m + t.c - 1, 1});
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("u" + std::to_string(i));
  for (std::size_t i = 1; i <= tensor.n; ++i) labels.push_back("v" + std::to_string(i));
  LieAlgebra algebra = LieAlgebra::from_brackets(m + tensor.n, entries, std::move(labels));
  const auto sig = metabelian_signature(algebra);
  if (!sig) throw DomainError("gt_algebra: result is not metabelian");
  return {std::move(algebra), sig->second == tensor.n, *sig};
}

MetricLieAlgebra build_snp_extension(const LieAlgebra& n, const InnerProduct& metric, std::span<const Matrix> phi) {
  if (phi.empty()) throw InvalidArgument("build_snp_extension: a must have dimension at least 1");
  if (metric.dim() != n.dim()) throw DimensionMismatch("build_snp_extension: metric dimension differs");
  if (!is_unimodular(n)) throw NotUnimodular("build_snp_extension: n is not unimodular");
  const Matrix& g = metric.gram();
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const Matrix& d = phi[i];
    if (d.rows() != n.dim() || d.cols() != n.dim()) throw DimensionMismatch("build_snp_extension: derivation size");
    if (!is_derivation(n, d))
      throw NotSkewDerivation("build_snp_extension: image of a_" + std::to_string(i + 1) + " is not a derivation");
    const Matrix gd = g * d;
    if (!(gd + gd.transpose()).is_zero())
      throw NotSkewDerivation("build_snp_extension: image of a_" + std::to_string(i + 1) + " is not skew-symmetric");
  }
  const std::size_t k = phi.size();
  LieAlgebra sum = semidirect_sum(LieAlgebra::abelian(k), n, phi);
  const std::size_t total = n.dim() + k;
  Matrix gram(total, total);
  for (std::size_t i = 0; i < n.dim(); ++i)
    for (std::size_t j = 0; j < n.dim(); ++j) gram(i, j) = g(i, j);
  for (std::size_t i = n.dim(); i < total; ++i) gram(i, i) = 1;
  return MetricLieAlgebra(std::move(sum), InnerProduct(std::move(gram)));
}

MetricLieAlgebra build_snp_extension(const LieAlgebra& n, const InnerProduct& metric, const Matrix& derivation,
                                     std::size_t a_dim) {
  if (a_dim == 0) throw InvalidArgument("build_snp_extension: a must have dimension at least 1");
  std::vector<Matrix> phi(a_dim, Matrix(n.dim(), n.dim()));
  phi[0] = derivation;
  return build_snp_extension(n, metric, phi);
}

LieAlgebra realification(std::size_t dim, const std::vector<Scalar>& re, const std::vector<Scalar>& im) {
  const std::size_t d3 = dim * dim * dim;
  if (re.size() != d3 || (!im.empty() && im.size() != d3))
    throw DimensionMismatch("realification: structure constant arrays have wrong size");
  const std::size_t n = 2 * dim;
  std::vector<Scalar> c(n * n * n);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return c[(i * n + j) * n + k]; };
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& x = re[(a * dim + b) * dim + k];
        const Scalar y = im.empty() ? Scalar(0) : im[(a * dim + b) * dim + k];
        const std::size_t xa = 2 * a, ya = 2 * a + 1, xb = 2 * b, yb = 2 * b + 1, xk = 2 * k, yk = 2 * k + 1;
        // [f_a, f_b] = (x + iy) f_k
        at(xa, xb, xk) += x;
        at(xa, xb, yk) += y;
        // [f_a, i f_b] = [i f_a, f_b] = (ix - y) f_k
        at(xa, yb, xk) -= y;
        at(xa, yb, yk) += x;
        at(ya, xb, xk) -= y;
        at(ya, xb, yk) += x;
        // [i f_a, i f_b] = -(x + iy) f_k
        at(ya, yb, xk) -= x;
        at(ya, yb, yk) -= y;
      }
  return LieAlgebra(n, std::move(c));
}

LieAlgebra realification(const LieAlgebra& algebra) {
  return realification(algebra.dim(), algebra.constants(), {});
}

Matrix complex_structure(std::size_t complex_dim) {
  Matrix j(2 * complex_dim, 2 * complex_dim);
  for (std::size_t k = 0; k < complex_dim; ++k) {
    j(2 * k + 1, 2 * k) = 1;
    j(2 * k, 2 * k + 1) = -1;
  }
  return j;
}

}  // namespace weylsnp
