#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "weylsnp/catalog4d.hpp"
#include "weylsnp/constructors.hpp"
#include "weylsnp/errors.hpp"
#include "weylsnp/weyl.hpp"

using namespace weylsnp;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i - 1); }

Subspace line(std::size_t n, std::size_t i) {
  const Vector v[] = {e(n, i)};
  return Subspace::span(n, v);
}

MetricLieAlgebra abelian4() { return MetricLieAlgebra(LieAlgebra::abelian(4), InnerProduct::identity(4)); }

// e(2) = Lie algebra of the Euclidean motions of the plane: [h,x] = y, [h,y] = -x
LieAlgebra euclidean2() { return LieAlgebra::from_brackets(3, {{0, 1, 2, 1}, {0, 2, 1, -1}}); }

}  // namespace

TEST(WeylConnection, ZeroFieldIsLeviCivita) {
  testkit::Rng rng(1);
  for (int t = 0; t < 10; ++t) {
    const MetricLieAlgebra m = testkit::random_metric_algebra(rng);
    EXPECT_EQ(weyl_connection(m, zero_vector(m.dim())).gamma_hat, levi_civita(m));
  }
}

TEST(WeylConnection, AbelianSubstitution) {
  const WeylConnection w = weyl_connection(abelian4(), e(4, 1));
  EXPECT_EQ(covariant_derivative(w.gamma_hat, e(4, 1), e(4, 1)), Scalar(-1) * e(4, 1));
  EXPECT_EQ(covariant_derivative(w.gamma_hat, e(4, 2), e(4, 2)), e(4, 1));
}

TEST(WeylConnection, NilxRParallelField) {
  const MetricLieAlgebra m = build(Family::NilxR, {{"b11", Scalar(3, 2)}});
  const WeylConnection w = weyl_connection(m, e(4, 2));
  EXPECT_EQ(covariant_derivative(w.gamma_hat, e(4, 2), e(4, 2)), Scalar(-1) * e(4, 2));
}

TEST(WeylConnection, CoefficientsFollowTheDefiningFormula) {
  testkit::Rng rng(2);
  for (int t = 0; t < 15; ++t) {
    const MetricLieAlgebra m = testkit::random_metric_algebra(rng, 5);
    const std::size_t n = m.dim();
    const Vector field = testkit::random_vector(rng, n);
    const WeylConnection w = weyl_connection(m, field);
    const Connection lc = levi_civita(m);
    const InnerProduct& g = m.metric();
    for (int s = 0; s < 5; ++s) {
      const Vector x = testkit::random_vector(rng, n), y = testkit::random_vector(rng, n);
      const Vector expected = covariant_derivative(lc, x, y) - g(field, y) * x - g(field, x) * y + g(x, y) * field;
      EXPECT_EQ(covariant_derivative(w.gamma_hat, x, y), expected);
    }
  }
}

TEST(WeylConnection, TorsionFreeAndScalesMetricByPhi) {
  testkit::Rng rng(3);
  for (int t = 0; t < 25; ++t) {
    const MetricLieAlgebra m = testkit::random_metric_algebra(rng);
    const std::size_t n = m.dim();
    const Vector field = testkit::random_vector(rng, n);
    const WeylConnection w = weyl_connection(m, field);
    const InnerProduct& g = m.metric();
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        EXPECT_EQ(covariant_derivative(w.gamma_hat, e(n, i), e(n, j)) - covariant_derivative(w.gamma_hat, e(n, j), e(n, i)),
                  m.algebra().bracket(e(n, i), e(n, j)));
        for (std::size_t k = 1; k <= n; ++k) {
          const Scalar lhs = g(covariant_derivative(w.gamma_hat, e(n, i), e(n, j)), e(n, k)) +
                             g(e(n, j), covariant_derivative(w.gamma_hat, e(n, i), e(n, k)));
          EXPECT_EQ(lhs, Scalar(-2 * g(field, e(n, i)) * g(e(n, j), e(n, k))));
        }
      }
  }
}

TEST(WeylSectional, ZeroFieldIsRiemannian) {
  testkit::Rng rng(4);
  const MetricLieAlgebra m = testkit::random_metric_algebra(rng, 5);
  const WeylConnection w = weyl_connection(m, zero_vector(m.dim()));
  const Vector x = testkit::random_nonzero_vector(rng, m.dim());
  Vector y = testkit::random_vector(rng, m.dim());
  y[0] += 1;
  if (m.dim() > 1 && sgn(m.metric().norm2(x) * m.metric().norm2(y) - m.metric()(x, y) * m.metric()(x, y)) != 0)
    EXPECT_EQ(weyl_sectional(w, x, y), sectional_curvature(m, x, y));
}

TEST(WeylSectional, FlatBaseClosedForm) {
  // on a flat base k(x,y) = -|E - proj_{<x,y>} E|^2
  testkit::Rng rng(5);
  const MetricLieAlgebra m = abelian4();
  for (int t = 0; t < 30; ++t) {
    const Vector field = testkit::random_vector(rng, 4);
    const Vector x = testkit::random_vector(rng, 4), y = testkit::random_vector(rng, 4);
    const Scalar xx = dot(x, x), xy = dot(x, y), yy = dot(y, y);
    const Scalar det = xx * yy - xy * xy;
    if (sgn(det) == 0) continue;
    const Scalar a = dot(field, x), b = dot(field, y);
    const Scalar proj2 = (a * a * yy - 2 * a * b * xy + b * b * xx) / det;
    EXPECT_EQ(weyl_sectional(weyl_connection(m, field), x, y), Scalar(proj2 - dot(field, field)));
  }
  for (int gamma : {1, 10, 100}) {
    const WeylConnection w = weyl_connection(m, Scalar(gamma) * e(4, 1));
    EXPECT_EQ(weyl_sectional(w, e(4, 1), e(4, 2)), 0);
    EXPECT_EQ(weyl_sectional(w, e(4, 2), e(4, 3)), Scalar(-gamma * gamma));
  }
}

TEST(WeylSectional, NumericMatchesExact) {
  testkit::Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    const MetricLieAlgebra m = testkit::random_metric_algebra(rng, 5);
    if (m.dim() < 2) continue;
    const WeylConnection w = weyl_connection(m, testkit::random_vector(rng, m.dim()));
    const NumericCurvature num(m, w.gamma_hat);
    const Vector x = testkit::random_vector(rng, m.dim()), y = testkit::random_vector(rng, m.dim());
    const InnerProduct& g = m.metric();
    if (sgn(g.norm2(x) * g.norm2(y) - g(x, y) * g(x, y)) == 0) continue;
    std::vector<double> xd, yd;
    for (const auto& v : x) xd.push_back(to_double(v));
    for (const auto& v : y) yd.push_back(to_double(v));
    const double exact = to_double(weyl_sectional(w, x, y));
    EXPECT_NEAR(*num.sectional(xd, yd), exact, 1e-9 * (1 + std::abs(exact)));
  }
}

TEST(CheckW2, Examples) {
  EXPECT_TRUE(check_w2(abelian4(), {1, 2, 0, -1}));
  const MetricLieAlgebra sol = build(Family::Sol4_0, {{"b13", 0}, {"b44", 1}});
  EXPECT_FALSE(check_w2(sol, e(4, 4)));
  const MetricLieAlgebra isom = build(Family::IsomR2xR, {{"b13", 0}, {"b23", 0}});
  EXPECT_TRUE(check_w2(isom, e(4, 3)));
  EXPECT_THROW(check_w2(sol, zero_vector(4)), ZeroField);
}

TEST(SnpSpace, CatalogExamples) {
  for (const Scalar b11 : {Scalar(1), Scalar(1, 3), Scalar(17, 2)}) {
    const SnpReport r = snp_space(build(Family::NilxR, {{"b11", b11}}));
    EXPECT_EQ(r.solution_space, line(4, 2));
    EXPECT_TRUE(r.is_central_only);
  }
  EXPECT_TRUE(snp_space(build(Family::Nil4, {{"b11", 2}, {"b12", Scalar(1, 3)}, {"b22", 5}})).solution_space.is_zero());
  const SnpReport nil_s1 = snp_space(build(Family::NilRtimesS1, {{"b11", 3}, {"b12", 0}, {"b33", 1}, {"b44", 2}}));
  EXPECT_EQ(nil_s1.solution_space, line(4, 4));
  EXPECT_FALSE(nil_s1.is_central_only);
  EXPECT_EQ(snp_space(build(Family::Sol3xR, {{"b12", 0}, {"b13", 0}, {"b23", 4}})).solution_space, line(4, 1));
  EXPECT_EQ(snp_space(abelian4()).solution_space, Subspace::full(4));
}

TEST(SnpSpace, NonUnimodularWarns) {
  const MetricLieAlgebra m(LieAlgebra::from_brackets(2, {{0, 1, 1, 1}}), InnerProduct::identity(2));
  const SnpReport r = snp_space(m);
  EXPECT_FALSE(r.unimodular);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(SnpSpace, SolutionsAreParallelAndSatisfyW2) {
  testkit::Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    const MetricLieAlgebra m = testkit::random_metric_algebra(rng);
    const SnpReport r = snp_space(m, {20, 5});
    EXPECT_TRUE(r.parallel_verified);
    EXPECT_TRUE(r.w2_verified);
    for (const auto& v : r.solution_space.basis()) {
      EXPECT_TRUE(is_parallel(m, v));
      EXPECT_TRUE(check_w2(m, v));
    }
    if (r.w1) EXPECT_EQ(r.w1->positive_count, 0u);
  }
}

TEST(SnpSpace, EquivariantUnderChangeOfBasis) {
  testkit::Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const MetricLieAlgebra m = testkit::random_metric_algebra(rng, 5);
    const Matrix p = testkit::random_invertible(rng, m.dim());
    const MetricLieAlgebra moved(change_basis(m.algebra(), p),
                                 InnerProduct(p.transpose() * m.metric().gram() * p));
    const Subspace s = snp_space(m).solution_space;
    std::vector<Vector> mapped;
    const Matrix pinv = inverse(p);
    for (const auto& v : s.basis()) mapped.push_back(pinv * v);
    EXPECT_EQ(snp_space(moved).solution_space, Subspace::span(m.dim(), mapped));
  }
}

TEST(StretchScan, FlatAbelianIsNonPositive) {
  const double grid[] = {1, 2, 4, 8};
  const StretchScan s = stretch_scan(abelian4(), e(4, 1), grid, 200, 42);
  ASSERT_EQ(s.verdicts.size(), 4u);
  for (const auto& v : s.verdicts) EXPECT_TRUE(v.non_positive);
  EXPECT_EQ(s.gamma0, 1.0);
}

TEST(StretchScan, DeterministicForSeed) {
  const MetricLieAlgebra m = build(Family::Sol4_0, {{"b13", 0}, {"b44", 1}});
  const double grid[] = {100};
  const StretchScan a = stretch_scan(m, e(4, 4), grid, 300, 9);
  const StretchScan b = stretch_scan(m, e(4, 4), grid, 300, 9);
  EXPECT_EQ(a.verdicts[0].max_value, b.verdicts[0].max_value);
  EXPECT_EQ(a.verdicts[0].positive_count, b.verdicts[0].positive_count);
}

TEST(StretchScan, ArgumentChecks) {
  const double decreasing[] = {2, 1};
  const double fine[] = {1};
  EXPECT_THROW(stretch_scan(abelian4(), e(4, 1), decreasing, 10, 1), InvalidArgument);
  EXPECT_THROW(stretch_scan(abelian4(), e(4, 1), std::span<const double>{}, 10, 1), InvalidArgument);
  EXPECT_THROW(stretch_scan(abelian4(), zero_vector(4), fine, 10, 1), ZeroField);
}

TEST(VerifyStructure, NilRtimesS1) {
  const MetricLieAlgebra m = build(Family::NilRtimesS1, {{"b12", 0}, {"b33", 1}});
  const StructureReport r = verify_structure(m, e(4, 4));
  EXPECT_EQ(r.complement.dim(), 3u);
  EXPECT_TRUE(r.is_ideal);
  EXPECT_TRUE(r.solvable);
  EXPECT_TRUE(r.unimodular);
  EXPECT_TRUE(r.skew_action);
  // [s,s] = span(e1) while [g,g] = span(e1,e2,e3): the rotation contributes e2, e3
  EXPECT_FALSE(r.derived_match);
  EXPECT_EQ(r.complement_derived_dim, 1u);
  EXPECT_EQ(r.derived_dim, 3u);
  EXPECT_TRUE(r.derived_decomposition);
}

TEST(VerifyStructure, Errors) {
  EXPECT_THROW(verify_structure(build(Family::NilxR, {}), e(4, 2)), CentralField);
  EXPECT_THROW(verify_structure(build(Family::Sol4_0, {}), e(4, 4)), NotInSnpSpace);
  EXPECT_THROW(verify_structure(build(Family::Sol4_0, {}), zero_vector(4)), ZeroField);
}

TEST(VerifyStructure, ExtensionOfEuclideanAlgebraPassesAll) {
  Matrix rot(3, 3);
  rot(2, 1) = 1;
  rot(1, 2) = -1;
  const MetricLieAlgebra m = build_snp_extension(euclidean2(), InnerProduct::identity(3), rot, 1);
  const StructureReport r = verify_structure(m, e(4, 4));
  EXPECT_TRUE(r.all_passed());
  EXPECT_TRUE(r.derived_decomposition);
}
