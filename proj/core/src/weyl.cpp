#include "weylsnp/weyl.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "weylsnp/errors.hpp"

namespace weylsnp {

namespace {

void require_field(const MetricLieAlgebra& m, const Vector& field, const char* what) {
  if (field.size() != m.dim()) throw DimensionMismatch(std::string(what) + ": field has wrong length");
  if (is_zero(field)) throw ZeroField(std::string(what) + ": field is zero");
}

std::vector<double> to_doubles(const Vector& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](const Scalar& s) { return to_double(s); });
  return out;
}

}  // namespace

WeylConnection weyl_connection(const MetricLieAlgebra& m, const Vector& field) {
  const std::size_t n = m.dim();
  if (field.size() != n) throw DimensionMismatch("weyl_connection: field has wrong length");
  const Connection lc = levi_civita(m);
  const Vector phi = m.metric().lower(field);
  const Matrix& gram = m.metric().gram();

  std::vector<Scalar> gamma = lc.coefficients();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar* g = &gamma[(i * n + j) * n];
      g[i] -= phi[j];
      g[j] -= phi[i];
      if (sgn(gram(i, j)) != 0)
        for (std::size_t k = 0; k < n; ++k) g[k] += gram(i, j) * field[k];
    }
  return {m, field, phi, Connection(n, std::move(gamma))};
}

Scalar weyl_sectional(const WeylConnection& w, const Vector& x, const Vector& y) {
  return sectional_curvature(w.base, w.gamma_hat, x, y);
}

NumericCurvature::NumericCurvature(const MetricLieAlgebra& m, const Connection& c)
    : n_(m.dim()),
      constants_(to_doubles(m.algebra().constants())),
      gram_(to_doubles(m.metric().gram().data())),
      gamma_(to_doubles(c.coefficients())) {
  if (c.dim() != n_) throw DimensionMismatch("NumericCurvature: connection dimension differs");
}

double NumericCurvature::inner(std::span<const double> x, std::span<const double> y) const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s += x[i] * gram_[i * n_ + j] * y[j];
  return s;
}

std::vector<double> NumericCurvature::nabla(std::span<const double> x, std::span<const double> y) const {
  std::vector<double> r(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const double w = x[i] * y[j];
      if (w == 0.0) continue;
      for (std::size_t k = 0; k < n_; ++k) r[k] += w * gamma_[(i * n_ + j) * n_ + k];
    }
  return r;
}

std::vector<double> NumericCurvature::bracket(std::span<const double> x, std::span<const double> y) const {
  std::vector<double> r(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const double w = x[i] * y[j];
      if (w == 0.0) continue;
      for (std::size_t k = 0; k < n_; ++k) r[k] += w * constants_[(i * n_ + j) * n_ + k];
    }
  return r;
}

std::optional<double> NumericCurvature::sectional(std::span<const double> x, std::span<const double> y,
                                                  double min_area) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("sectional: vector of wrong length");
  const double xy = inner(x, y);
  const double area = inner(x, x) * inner(y, y) - xy * xy;
  if (area <= min_area) return std::nullopt;
  const std::vector<double> yy = nabla(y, y);
  const std::vector<double> xy_ = nabla(x, y);
  const std::vector<double> a = nabla(x, yy);
  const std::vector<double> b = nabla(y, xy_);
  const std::vector<double> c = nabla(bracket(x, y), y);
  std::vector<double> r(n_);
  for (std::size_t k = 0; k < n_; ++k) r[k] = a[k] - b[k] - c[k];
  return inner(r, x) / area;
}

bool check_w2(const MetricLieAlgebra& m, const Vector& field) {
  require_field(m, field, "check_w2");
  const Vector fields[] = {field};
  const Subspace perp = orthogonal_complement(Subspace::span(m.dim(), fields), m.metric().gram());
  const auto& ys = perp.basis();
  std::vector<Vector> images;
  images.reserve(ys.size());
  for (const Vector& y : ys) images.push_back(m.algebra().bracket(field, y));
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i; j < ys.size(); ++j)
      if (sgn(m.metric()(images[i], ys[j]) + m.metric()(images[j], ys[i])) != 0) return false;
  return true;
}

SnpReport snp_space(const MetricLieAlgebra& m, const SnpOptions& options) {
  const std::size_t n = m.dim();
  const LieAlgebra& g = m.algebra();
  const Matrix& gram = m.metric().gram();

  std::vector<Vector> rows;
  const Subspace derived = derived_algebra(g);
  for (const Vector& w : derived.basis()) rows.push_back(gram * w);

  // (G ad_m + ad_m^T G)(p,q) for p <= q, one row per entry, one column per coordinate of E.
  std::vector<Matrix> sym(n);
  for (std::size_t e = 0; e < n; ++e) {
    const Matrix a = ad_matrix(g, unit_vector(n, e));
    const Matrix ga = gram * a;
    sym[e] = ga + ga.transpose();
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) {
      Vector row(n);
      for (std::size_t e = 0; e < n; ++e) row[e] = sym[e](p, q);
      if (!is_zero(row)) rows.push_back(std::move(row));
    }

  SnpReport report;
  report.unimodular = is_unimodular(g);
  if (!report.unimodular) report.warnings.emplace_back("algebra is not unimodular; the classification does not apply");

  if (rows.empty()) {
    report.solution_space = Subspace::full(n);
  } else {
    const std::vector<Vector> ker = kernel(Matrix::from_rows(rows));
    report.solution_space = Subspace::span(n, ker);
  }
  report.is_central_only = center(g).contains(report.solution_space);

  for (const Vector& e : report.solution_space.basis()) {
    if (!is_parallel(m, e)) report.parallel_verified = false;
    if (!check_w2(m, e)) report.w2_verified = false;
  }
  if (!report.parallel_verified) report.warnings.emplace_back("a solution vector is not parallel");
  if (!report.w2_verified) report.warnings.emplace_back("a solution vector fails W2");

  if (options.w1_samples > 0 && !report.solution_space.is_zero() && n > 1) {
    const NumericCurvature curv(m, levi_civita(m));
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    SamplingSummary summary;
    summary.max_value = -std::numeric_limits<double>::infinity();
    for (const Vector& e : report.solution_space.basis()) {
      const std::vector<double> x = to_doubles(e);
      std::size_t taken = 0;
      std::size_t attempts = 0;
      while (taken < options.w1_samples && attempts < 100 * options.w1_samples) {
        ++attempts;
        std::vector<double> y(n);
        for (double& v : y) v = unit(rng);
        const auto k = curv.sectional(x, y, kMinPlaneArea);
        if (!k) continue;
        ++taken;
        summary.max_value = std::max(summary.max_value, *k);
        if (*k > kStretchTolerance) ++summary.positive_count;
      }
      summary.samples += taken;
    }
    if (summary.samples == 0) summary.max_value = 0.0;
    if (summary.positive_count > 0) report.warnings.emplace_back("W1 sampling found a positive curvature");
    report.w1 = summary;
  }
  return report;
}

StretchScan stretch_scan(const MetricLieAlgebra& m, const Vector& field, std::span<const double> grid,
                         std::size_t samples, std::uint64_t seed) {
  require_field(m, field, "stretch_scan");
  if (grid.empty()) throw InvalidArgument("stretch_scan: empty gamma grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw InvalidArgument("stretch_scan: gamma values must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw InvalidArgument("stretch_scan: gamma grid must be strictly increasing");
  }
  const std::size_t n = m.dim();
  if (n < 2) throw InvalidArgument("stretch_scan: dimension must be at least 2");

  const NumericCurvature flat(m, levi_civita(m));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<std::vector<double>> xs, ys;
  while (xs.size() < samples) {
    std::vector<double> x(n), y(n);
    for (double& v : x) v = unit(rng);
    for (double& v : y) v = unit(rng);
    const double xy = flat.inner(x, y);
    if (flat.inner(x, x) * flat.inner(y, y) - xy * xy < kMinPlaneArea) continue;
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
  }

  StretchScan scan;
  scan.gamma_grid.assign(grid.begin(), grid.end());
  scan.plane_samples = samples;
  for (double gamma : grid) {
    const WeylConnection w = weyl_connection(m, Scalar(gamma) * field);
    const NumericCurvature curv(m, w.gamma_hat);
    StretchVerdict v;
    v.gamma = gamma;
    v.max_value = samples == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < samples; ++s) {
      const double k = *curv.sectional(xs[s], ys[s]);
      v.max_value = std::max(v.max_value, k);
      if (k > kStretchTolerance) ++v.positive_count;
    }
    v.non_positive = v.positive_count == 0;
    scan.verdicts.push_back(v);
  }
  for (std::size_t i = scan.verdicts.size(); i-- > 0;) {
    if (!scan.verdicts[i].non_positive) break;
    scan.gamma0 = scan.verdicts[i].gamma;
  }
  return scan;
}

StructureReport verify_structure(const MetricLieAlgebra& m, const Vector& field) {
  require_field(m, field, "verify_structure");
  const std::size_t n = m.dim();
  const LieAlgebra& g = m.algebra();
  if (!snp_space(m).solution_space.contains(field))
    throw NotInSnpSpace("verify_structure: field does not satisfy the SNP conditions");
  if (center(g).contains(field)) throw CentralField("verify_structure: field is central");

  StructureReport r;
  const Vector fields[] = {field};
  r.complement = orthogonal_complement(Subspace::span(n, fields), m.metric().gram());
  const Subspace& s = r.complement;

  r.is_ideal = s.contains(bracket_span(g, Subspace::full(n), s));
  if (r.is_ideal) {
    const LieAlgebra sub = restrict_to(g, s);
    r.solvable = series(sub).is_solvable;
    r.unimodular = is_unimodular(sub);
  }

  r.skew_action = true;
  std::vector<Vector> images;
  for (const Vector& y : s.basis()) images.push_back(g.bracket(field, y));
  for (std::size_t i = 0; i < images.size() && r.skew_action; ++i) {
    if (!s.contains(images[i])) r.skew_action = false;
    for (std::size_t j = i; j < images.size() && r.skew_action; ++j)
      if (sgn(m.metric()(images[i], s.basis()[j]) + m.metric()(s.basis()[i], images[j])) != 0) r.skew_action = false;
  }

  const Subspace gg = derived_algebra(g);
  const Subspace ss = bracket_span(g, s, s);
  r.derived_dim = gg.dim();
  r.complement_derived_dim = ss.dim();
  r.derived_match = gg == ss;
  r.derived_decomposition = gg == ss.sum(Subspace::span(n, images));
  return r;
}

}  // namespace weylsnp
