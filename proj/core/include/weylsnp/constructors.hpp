#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylsnp/metric.hpp"

namespace weylsnp {

/// Block-diagonal form on R^{2n} with F(e_{2k-1}, e_{2k}) = 1.
Matrix standard_symplectic(std::size_t n);

/// [v,w] = F(v,w) x on V + <x>, with x last.
/// Throws InvalidArgument (not antisymmetric), OddDimension, DegenerateForm.
LieAlgebra heisenberg(const Matrix& form);

/// [v,w] = F1(v,w) x + F2(v,w) y on V + <x, y>, with x, y last.
/// Throws NotSurjective when F1 and F2 are linearly dependent.
LieAlgebra n2_heisenberg(const Matrix& f1, const Matrix& f2);

/// Nine-dimensional characteristically nilpotent algebra of Dyer type (see README for the
/// correction applied to the commonly reprinted table).
LieAlgebra dyer();
/// The commonly reprinted table, which violates the Jacobi identity.
LieAlgebra dyer_printed_table();

/// Derivations as a subspace of flattened n x n matrices (row-major).
Subspace derivations(const LieAlgebra& algebra);
/// Derivations D with G D + D^T G = 0.
Subspace skew_derivations(const LieAlgebra& algebra, const InnerProduct& metric);
std::vector<Matrix> as_matrices(const Subspace& space, std::size_t n);
Vector flatten(const Matrix& m);

/// Der(L) with the commutator bracket, in the basis of `derivations(L)`.
LieAlgebra derivation_algebra(const LieAlgebra& algebra);
/// True iff Der(L) is nilpotent. For the abelian line Der = gl(1) is abelian, so this is true.
bool is_characteristically_nilpotent(const LieAlgebra& algebra);

struct GtTerm {
  std::size_t a;
  std::size_t b;
  std::size_t c;
  friend bool operator==(const GtTerm&, const GtTerm&) = default;
};

/// f in Λ²U* ⊗ V written as digit triples "abc", each standing for e^a ∧ e^b ⊗ e_c.
struct GtTensor {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<GtTerm> terms;
  friend bool operator==(const GtTensor&, const GtTensor&) = default;
};

/// Throws ParseError, RangeError, DuplicateTerm.
GtTensor parse_gt_tensor(std::string_view text, std::size_t m, std::size_t n);
std::string to_string(const GtTensor& tensor);

struct GtAlgebra {
  LieAlgebra algebra;
  bool surjective = false;
  std::pair<std::size_t, std::size_t> signature;
};

/// Metabelian algebra on U + V (U first) with [u_a, u_b] = Σ v_c.
GtAlgebra gt_algebra(const GtTensor& tensor);

/// Semidirect sum n + a with phi(a_1) = D, phi(a_i) = 0 otherwise; metric g_n + identity.
/// The coordinates of a come last. Throws NotUnimodular, NotSkewDerivation.
MetricLieAlgebra build_snp_extension(const LieAlgebra& n, const InnerProduct& metric, const Matrix& derivation,
                                     std::size_t a_dim);
/// Same with one commuting skew derivation per basis vector of a.
MetricLieAlgebra build_snp_extension(const LieAlgebra& n, const InnerProduct& metric, std::span<const Matrix> phi);

/// Real form of a complex algebra with structure constants re + i im. Complex basis vector
/// f_k becomes the real pair (f_k, i f_k) at indices 2k, 2k+1.
LieAlgebra realification(std::size_t dim, const std::vector<Scalar>& re, const std::vector<Scalar>& im);
LieAlgebra realification(const LieAlgebra& algebra);
/// Multiplication by i in the realified basis.
Matrix complex_structure(std::size_t complex_dim);

}  // namespace weylsnp
