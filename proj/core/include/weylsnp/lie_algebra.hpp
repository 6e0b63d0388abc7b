#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weylsnp/linalg.hpp"

namespace weylsnp {

/// One structure constant: c^k_{ij}, i.e. the e_k coefficient of [e_i, e_j]. Indices are 0-based.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Scalar value;
};

/// Finite-dimensional real Lie algebra given by rational structure constants in a fixed basis.
///
/// The constructor stores constants as given; it does not enforce antisymmetry or Jacobi so that
/// validate() can report what is wrong with a table. Use from_brackets() to build a table from
/// the i<j half.
class LieAlgebra {
 public:
  /// `constants[(i * n + j) * n + k]` is c^k_{ij}. Throws InvalidArgument for dim 0.
  LieAlgebra(std::size_t dim, std::vector<Scalar> constants, std::vector<std::string> labels = {});

  static LieAlgebra abelian(std::size_t dim);
  /// Sets c^k_{ij} = value and c^k_{ji} = -value for each entry; repeated entries accumulate.
  static LieAlgebra from_brackets(std::size_t dim, std::span<const BracketEntry> entries,
                                  std::vector<std::string> labels = {});
  static LieAlgebra from_brackets(std::size_t dim, std::initializer_list<BracketEntry> entries,
                                  std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& constants() const { return constants_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Vector bracket(const Vector& x, const Vector& y) const;
  /// [e_i, e_j]
  Vector bracket_basis(std::size_t i, std::size_t j) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

 private:
  std::size_t dim_;
  std::vector<Scalar> constants_;
  std::vector<std::string> labels_;
};

struct ValidationReport {
  bool antisymmetric = true;
  bool jacobi = true;
  /// (i, j, k) with c^k_{ij} != -c^k_{ji}
  std::optional<std::array<std::size_t, 3>> antisymmetry_violation;
  /// (i, j, k, l): the e_l coefficient of the Jacobiator of (e_i, e_j, e_k) is nonzero
  std::optional<std::array<std::size_t, 4>> jacobi_violation;

  bool ok() const { return antisymmetric && jacobi; }
  /// One line, 1-based indices.
  std::string describe() const;
};

ValidationReport validate(const LieAlgebra& algebra);

/// Matrix of y -> [x, y].
Matrix ad_matrix(const LieAlgebra& algebra, const Vector& x);
bool is_unimodular(const LieAlgebra& algebra);

/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b);
Subspace derived_algebra(const LieAlgebra& algebra);

struct Series {
  /// g, [g,g], [[g,g],[g,g]], ... up to the first repeated or zero term
  std::vector<Subspace> derived;
  /// g, [g,g], [g,[g,g]], ... up to the first repeated or zero term
  std::vector<Subspace> lower_central;
  bool is_solvable = false;
  bool is_nilpotent = false;
  /// Index of the first zero term of the lower central series (abelian: 1, h_3: 2).
  std::optional<std::size_t> nilpotency_class;
};

Series series(const LieAlgebra& algebra);
Subspace center(const LieAlgebra& algebra);

using VergneType = std::vector<std::size_t>;
/// Throws NotNilpotent.
VergneType vergne_type(const LieAlgebra& algebra);

/// (dim g/[g,g], dim [g,g]) when g is metabelian.
std::optional<std::pair<std::size_t, std::size_t>> metabelian_signature(const LieAlgebra& algebra);

/// First basis pair (i, j) where D[e_i,e_j] != [De_i,e_j] + [e_i,De_j], if any.
std::optional<std::pair<std::size_t, std::size_t>> derivation_defect(const LieAlgebra& algebra, const Matrix& d);
bool is_derivation(const LieAlgebra& algebra, const Matrix& d);

/// Semidirect sum n ⋊ a with a abelian. The result's basis is the basis of n followed by the
/// basis of a, and [a_i, x] = phi[i] x for x in n.
/// Throws InvalidArgument, NotADerivation, NonCommutingImages.
LieAlgebra semidirect_sum(const LieAlgebra& a, const LieAlgebra& n, std::span<const Matrix> phi);

/// Structure constants in the basis given by the columns of `change` (must be invertible).
LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix& change);

/// The subalgebra `s` written in the coordinates of s.basis(). Throws DomainError if s is not
/// closed under the bracket.
LieAlgebra restrict_to(const LieAlgebra& algebra, const Subspace& s);

/// True when P[x, y] = [Px, Py] on basis pairs (P maps `from` into `to`).
bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to, const Matrix& p);

}  // namespace weylsnp
