#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylsnp/metric.hpp"

namespace weylsnp {

/// ∇̂_X Y = ∇_X Y - φ(Y)X - φ(X)Y + <X,Y>E with φ = <E, .>.
struct WeylConnection {
  MetricLieAlgebra base;
  Vector field;
  Vector phi;  // covector G E
  Connection gamma_hat;
};

WeylConnection weyl_connection(const MetricLieAlgebra& m, const Vector& field);

/// k̂(x,y) = <R̂(x,y)y, x> / (|x|^2|y|^2 - <x,y>^2). Throws DegeneratePlane.
Scalar weyl_sectional(const WeylConnection& w, const Vector& x, const Vector& y);

/// Floating-point copy of a connection together with its algebra and metric, for sampling.
class NumericCurvature {
 public:
  NumericCurvature(const MetricLieAlgebra& m, const Connection& c);

  std::size_t dim() const { return n_; }
  /// Returns nullopt when |x|^2|y|^2 - <x,y>^2 is below `min_area`.
  std::optional<double> sectional(std::span<const double> x, std::span<const double> y, double min_area = 0.0) const;
  double inner(std::span<const double> x, std::span<const double> y) const;

 private:
  std::vector<double> nabla(std::span<const double> x, std::span<const double> y) const;
  std::vector<double> bracket(std::span<const double> x, std::span<const double> y) const;

  std::size_t n_;
  std::vector<double> constants_;
  std::vector<double> gram_;
  std::vector<double> gamma_;
};

/// True iff <[E,Y],Y> = 0 for every Y ⊥ E, tested on a basis of E^⊥ by polarization.
/// Throws ZeroField when E = 0.
bool check_w2(const MetricLieAlgebra& m, const Vector& field);

struct SamplingSummary {
  std::size_t samples = 0;
  std::size_t positive_count = 0;
  double max_value = 0.0;
};

struct SnpOptions {
  std::size_t w1_samples = 0;  // 0 disables the W1 sampling check
  std::uint64_t seed = 1;
};

struct SnpReport {
  Subspace solution_space{1};
  bool is_central_only = true;
  bool parallel_verified = true;
  bool w2_verified = true;
  bool unimodular = true;
  /// Riemannian sectional curvature sampled on planes containing each solution basis vector.
  std::optional<SamplingSummary> w1;
  std::vector<std::string> warnings;
};

/// E ⊥ [g,g] and ad_E skew-symmetric, solved exactly as a linear system in E.
SnpReport snp_space(const MetricLieAlgebra& m, const SnpOptions& options = {});

inline constexpr double kStretchTolerance = 1e-9;
inline constexpr double kMinPlaneArea = 1e-8;

struct StretchVerdict {
  double gamma = 0.0;
  double max_value = 0.0;
  std::size_t positive_count = 0;
  bool non_positive = true;
};

struct StretchScan {
  std::vector<double> gamma_grid;
  /// Smallest grid value from which every verdict is non-positive.
  std::optional<double> gamma0;
  std::size_t plane_samples = 0;
  std::vector<StretchVerdict> verdicts;
};

/// Samples `samples` planes once (uniform coordinates in [-1,1], near-degenerate planes
/// rejected) and evaluates k̂ for the field γE at each grid value.
/// Throws ZeroField, InvalidArgument for an empty or non-increasing grid.
StretchScan stretch_scan(const MetricLieAlgebra& m, const Vector& field, std::span<const double> grid,
                         std::size_t samples, std::uint64_t seed);

struct StructureReport {
  Subspace complement{1};  // s = E^⊥
  bool is_ideal = false;
  bool solvable = false;
  bool unimodular = false;
  bool skew_action = false;
  bool derived_match = false;  // [s,s] = [g,g]
  std::size_t derived_dim = 0;
  std::size_t complement_derived_dim = 0;
  /// [g,g] = [s,s] + ad_E(s), which always holds when s is an ideal complementary to E.
  bool derived_decomposition = false;

  bool all_passed() const { return is_ideal && solvable && unimodular && skew_action && derived_match; }
};

/// Checks the decomposition g = <E> + s for a non-central SNP field.
/// Throws ZeroField, NotInSnpSpace, CentralField.
StructureReport verify_structure(const MetricLieAlgebra& m, const Vector& field);

}  // namespace weylsnp
