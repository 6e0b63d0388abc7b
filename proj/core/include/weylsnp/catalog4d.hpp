#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylsnp/metric.hpp"

namespace weylsnp {

/// The eleven 4-dimensional unimodular solvable Lie algebras (including the abelian one).
enum class Family {
  R4,
  NilxR,
  Nil4,
  Sol4_mn,
  Sol3xR,
  Sol4_0,
  Sol4_0_prime,
  Sol4_mu,
  IsomR2xR,
  Sol4_1,
  NilRtimesS1,
};

std::span<const Family> all_families();
/// Stable identifier, e.g. "nil_x_r".
std::string_view family_id(Family f);
std::string_view family_display_name(Family f);
/// Throws InvalidArgument for an unknown identifier.
Family parse_family(std::string_view id);

enum class Range {
  Real,
  Positive,        // > 0
  NonNegative,     // >= 0
  OpenUnit,        // 0 < x < 1
  HalfOpenUnit,    // 0 < x <= 1
  GreaterThanOne,  // > 1
};

struct ParamSpec {
  std::string name;
  Range range;
  Scalar default_value;
};

using Params = std::map<std::string, Scalar>;

std::vector<ParamSpec> param_specs(Family f);
Params default_params(Family f);
/// Fills unspecified parameters with defaults and checks every range and cross-parameter
/// constraint. Throws InvalidArgument for unknown names, InadmissibleParams otherwise.
Params complete_params(Family f, const Params& given);

/// Brackets in the standard basis e1..e4.
LieAlgebra standard_algebra(Family f, const Params& params);
/// Columns are the Milnor base X1..X4 in e-coordinates.
Matrix milnor_basis(Family f, const Params& params);
/// Standard-basis algebra with the metric that makes the Milnor base orthonormal,
/// G = (B B^T)^{-1}.
MetricLieAlgebra build(Family f, const Params& params);

struct ExpectedSnp {
  Family family;
  Subspace space{4};
  std::string description;
  /// The family's zero answer is settled only by reference to other cases.
  bool inferred_answer = false;
};

ExpectedSnp expected_snp(Family f, const Params& params);

/// Numerators and denominators uniform in [1, 20]; signs and forms chosen per range.
Params random_params(Family f, std::mt19937_64& rng);

struct LabeledParams {
  std::string label;
  Params params;
};

/// Variants of `base` on the parameter boundaries, including the ones that switch the answer.
std::vector<LabeledParams> boundary_variants(Family f, const Params& base);

/// Overrides c^k_{ij} = value and c^k_{ji} = -value (0-based) in one family's algebra.
struct BracketMutation {
  Family family;
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Scalar value;
};

struct SweepCase {
  Family family;
  std::size_t trial;
  std::string label;
  Params params;
  Subspace expected{4};
  Subspace computed{4};
  bool match = false;
  bool inferred_answer = false;
};

struct SweepReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<SweepCase> cases;
  std::size_t mismatches = 0;
};

/// Compares snp_space(build(f, p)) with expected_snp(f, p) over random and boundary draws.
/// Each (seed, family, trial) triple has its own generator.
SweepReport verify_classification(std::size_t trials, std::uint64_t seed,
                                  std::optional<BracketMutation> mutation = std::nullopt);

std::mt19937_64 trial_rng(std::uint64_t seed, Family f, std::size_t trial);

std::string describe(const Params& params);

}  // namespace weylsnp
