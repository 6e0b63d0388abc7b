#include <gtest/gtest.h>

#include <chrono>

#include "support/oracles.hpp"
#include "weylsnp/catalog4d.hpp"
#include "weylsnp/errors.hpp"
#include "weylsnp/weyl.hpp"

using namespace weylsnp;

namespace {

Vector e(std::size_t i) { return unit_vector(4, i - 1); }

Subspace line(std::size_t i) {
  const Vector v[] = {e(i)};
  return Subspace::span(4, v);
}

}  // namespace

TEST(Families, IdentifiersRoundTrip) {
  EXPECT_EQ(all_families().size(), 11u);
  for (Family f : all_families()) EXPECT_EQ(parse_family(family_id(f)), f);
  EXPECT_EQ(family_id(Family::NilxR), "nil_x_r");
  EXPECT_EQ(family_id(Family::Sol4_0), "sol4_0");
  EXPECT_EQ(family_id(Family::IsomR2xR), "isom_r2_x_r");
  EXPECT_THROW(parse_family("sol5"), InvalidArgument);
}

TEST(Build, NilxRUnitParameter) {
  const MetricLieAlgebra m = build(Family::NilxR, {{"b11", 1}});
  EXPECT_EQ(m.metric().gram(), Matrix::identity(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Vector expected(4);
      if (i == 2 && j == 3) expected = e(1);
      if (i == 3 && j == 2) expected = Scalar(-1) * e(1);
      EXPECT_EQ(m.algebra().bracket_basis(i, j), expected);
    }
}

TEST(Build, NilxRScalesFirstVector) {
  const MetricLieAlgebra m = build(Family::NilxR, {{"b11", 2}});
  EXPECT_EQ(m.metric().norm2(Scalar(2) * e(1)), 1);
  EXPECT_EQ(m.metric().norm2(e(2)), 1);
}

TEST(Build, Sol0DiagonalAction) {
  const MetricLieAlgebra m = build(Family::Sol4_0, {{"b13", 0}, {"b44", 1}});
  EXPECT_EQ(ad_matrix(m.algebra(), e(4)), Matrix::diagonal({1, 1, -2, 0}));
  EXPECT_EQ(m.metric().gram(), Matrix::identity(4));
}

TEST(Build, SolMnEigenvalues) {
  const MetricLieAlgebra m = build(Family::Sol4_mn, {{"lambda", 2}});
  // [e4, e_i] on e1..e3
  EXPECT_EQ(m.algebra().bracket(e(4), e(1)), Scalar(2) * e(1));
  EXPECT_EQ(m.algebra().bracket(e(4), e(2)), e(2));
  EXPECT_EQ(m.algebra().bracket(e(4), e(3)), Scalar(-3) * e(3));
}

TEST(Build, MilnorBaseIsOrthonormal) {
  std::mt19937_64 rng(3);
  for (Family f : all_families())
    for (int t = 0; t < 5; ++t) {
      const Params p = random_params(f, rng);
      const MetricLieAlgebra m = build(f, p);
      const Matrix b = milnor_basis(f, p);
      EXPECT_EQ(b.transpose() * m.metric().gram() * b, Matrix::identity(4)) << family_id(f) << " " << describe(p);
    }
}

TEST(Build, ParameterErrors) {
  EXPECT_THROW(build(Family::NilxR, {{"b11", 0}}), InadmissibleParams);
  EXPECT_THROW(build(Family::Nil4, {{"b12", -1}}), InadmissibleParams);
  EXPECT_THROW(build(Family::Sol4_mn, {{"lambda", 1}}), InadmissibleParams);
  EXPECT_THROW(build(Family::IsomR2xR, {{"b22", 1}}), InadmissibleParams);
  EXPECT_THROW(build(Family::NilRtimesS1, {{"b33", Scalar(3, 2)}}), InadmissibleParams);
  EXPECT_THROW(build(Family::NilRtimesS1, {{"b33", 1}, {"b13", 1}}), InadmissibleParams);
  EXPECT_THROW(build(Family::NilRtimesS1, {{"b33", Scalar(1, 2)}, {"b12", 1}, {"b13", -1}}), InadmissibleParams);
  EXPECT_THROW(build(Family::NilxR, {{"b22", 1}}), InvalidArgument);
  try {
    build(Family::Sol4_0, {{"b44", -3}});
    FAIL();
  } catch (const InadmissibleParams& err) {
    EXPECT_NE(std::string(err.what()).find("b44"), std::string::npos);
  }
}

TEST(Build, InverseGramIsQuadraticInEachParameter) {
  // B B^T has entries of degree <= 2 in the parameters: third differences vanish
  for (Family f : all_families())
    for (const auto& spec : param_specs(f)) {
      if (spec.range == Range::OpenUnit || spec.range == Range::HalfOpenUnit) {
        std::vector<Matrix> samples;
        for (int t = 1; t <= 4; ++t) {
          Params p = default_params(f);
          if (f == Family::NilRtimesS1) p["b33"] = Scalar(1, 2);
          p[spec.name] = Scalar(t) / 5;
          samples.push_back(inverse(build(f, p).metric().gram()));
        }
        EXPECT_TRUE((samples[3] - Scalar(3) * samples[2] + Scalar(3) * samples[1] - samples[0]).is_zero());
        continue;
      }
      std::vector<Matrix> samples;
      for (int t = 2; t <= 5; ++t) {
        Params p = default_params(f);
        if (f == Family::NilRtimesS1) p["b33"] = Scalar(1, 2);
        p[spec.name] = Scalar(t);
        samples.push_back(inverse(build(f, p).metric().gram()));
      }
      EXPECT_TRUE((samples[3] - Scalar(3) * samples[2] + Scalar(3) * samples[1] - samples[0]).is_zero())
          << family_id(f) << " " << spec.name;
    }
}

TEST(Catalog, EveryAlgebraValidAndUnimodular) {
  std::mt19937_64 rng(5);
  for (Family f : all_families())
    for (int t = 0; t < 5; ++t) {
      const LieAlgebra g = build(f, random_params(f, rng)).algebra();
      EXPECT_TRUE(validate(g).ok()) << family_id(f);
      EXPECT_TRUE(testkit::naive_jacobi(g)) << family_id(f);
      EXPECT_TRUE(is_unimodular(g)) << family_id(f);
      EXPECT_TRUE(series(g).is_solvable) << family_id(f);
    }
}

TEST(Catalog, NilpotentLowerCentralDimensions) {
  auto dims = [](Family f) {
    std::vector<std::size_t> d;
    for (const auto& s : series(standard_algebra(f, {})).lower_central) d.push_back(s.dim());
    return d;
  };
  EXPECT_EQ(dims(Family::Nil4), (std::vector<std::size_t>{4, 2, 1, 0}));
  EXPECT_EQ(dims(Family::NilxR), (std::vector<std::size_t>{4, 1, 0}));
  EXPECT_EQ(testkit::naive_lower_central_dims(standard_algebra(Family::Nil4, {})), dims(Family::Nil4));
}

TEST(ExpectedSnp, Examples) {
  EXPECT_TRUE(expected_snp(Family::Nil4, {{"b12", 3}}).space.is_zero());
  EXPECT_EQ(expected_snp(Family::Sol3xR, {{"b12", 0}, {"b13", 0}}).space, line(1));
  EXPECT_TRUE(expected_snp(Family::Sol3xR, {{"b12", 0}, {"b13", 1}}).space.is_zero());
  EXPECT_EQ(expected_snp(Family::R4, {}).space, Subspace::full(4));
  EXPECT_EQ(expected_snp(Family::NilxR, {{"b11", 5}}).space, line(2));
  EXPECT_EQ(expected_snp(Family::IsomR2xR, {{"b13", 0}, {"b23", 0}}).space, line(3));
  EXPECT_TRUE(expected_snp(Family::IsomR2xR, {{"b23", 2}}).space.is_zero());
  EXPECT_EQ(expected_snp(Family::NilRtimesS1, {{"b33", 1}, {"b12", 0}}).space, line(4));
  EXPECT_TRUE(expected_snp(Family::NilRtimesS1, {{"b33", Scalar(1, 2)}, {"b12", 0}, {"b13", 0}}).space.is_zero());
  EXPECT_THROW(expected_snp(Family::NilxR, {{"b11", -1}}), InadmissibleParams);
}

TEST(ExpectedSnp, InferredFamiliesAreFlagged) {
  for (Family f : all_families())
    EXPECT_EQ(expected_snp(f, {}).inferred_answer, f == Family::Sol4_mn || f == Family::Sol4_mu);
}

TEST(RandomParams, AdmissibleAndReproducible) {
  for (Family f : all_families()) {
    std::mt19937_64 a = trial_rng(11, f, 3), b = trial_rng(11, f, 3), c = trial_rng(11, f, 4);
    const Params pa = random_params(f, a);
    EXPECT_EQ(pa, random_params(f, b));
    EXPECT_EQ(complete_params(f, pa), pa);
    if (!param_specs(f).empty()) EXPECT_NE(pa, random_params(f, c));
  }
}

TEST(BoundaryVariants, IncludeAnswerSwitchingDraws) {
  const auto v = boundary_variants(Family::IsomR2xR, default_params(Family::IsomR2xR));
  bool found = false;
  for (const auto& lp : v) found |= expected_snp(Family::IsomR2xR, lp.params).space == line(3);
  EXPECT_TRUE(found);
  EXPECT_TRUE(boundary_variants(Family::R4, {}).empty());
}

TEST(Sweep, SingleTrialNilxR) {
  const SweepReport r = verify_classification(1, 7);
  for (const auto& c : r.cases)
    if (c.family == Family::NilxR) EXPECT_TRUE(c.match);
}

TEST(Sweep, TwentyFiveTrialsHaveNoMismatch) {
  const auto start = std::chrono::steady_clock::now();
  const SweepReport r = verify_classification(25, 7);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(r.mismatches, 0u);
  EXPECT_GE(r.cases.size(), 25u * all_families().size());
  EXPECT_LT(seconds, 5.0);
  for (const auto& c : r.cases) EXPECT_TRUE(c.match) << family_id(c.family) << " " << c.label << " " << describe(c.params);
}

TEST(Sweep, CorruptedBracketIsDetected) {
  // flipping [e4,e2] = -e3 in the S^1 rotation breaks skewness of ad e4
  const SweepReport r = verify_classification(2, 7, BracketMutation{Family::NilRtimesS1, 3, 1, 2, 1});
  EXPECT_GT(r.mismatches, 0u);
  for (const auto& c : r.cases)
    if (!c.match) EXPECT_EQ(c.family, Family::NilRtimesS1);
}

TEST(Sweep, NonCentralSolutionsAreRotationExtensions) {
  const SweepReport r = verify_classification(5, 3);
  std::size_t non_central = 0;
  for (const auto& c : r.cases) {
    if (c.computed.is_zero()) continue;
    const MetricLieAlgebra m = build(c.family, c.params);
    const Subspace z = center(m.algebra());
    for (const auto& v : c.computed.basis()) {
      if (z.contains(v)) continue;
      ++non_central;
      EXPECT_EQ(c.family, Family::NilRtimesS1);
      const StructureReport s = verify_structure(m, v);
      EXPECT_TRUE(s.is_ideal && s.solvable && s.unimodular && s.skew_action);
      // [s,s] is the centre of the Heisenberg ideal while [g,g] is the whole ideal
      EXPECT_FALSE(s.derived_match);
      EXPECT_TRUE(s.derived_decomposition);
    }
  }
  EXPECT_GT(non_central, 0u);
}

TEST(Sweep, RejectsZeroTrials) { EXPECT_THROW(verify_classification(0, 1), InvalidArgument); }
