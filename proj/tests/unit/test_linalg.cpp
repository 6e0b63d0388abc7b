#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "weylsnp/errors.hpp"
#include "weylsnp/linalg.hpp"

using namespace weylsnp;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), Scalar(3, 2));
  EXPECT_EQ(parse_rational("-2"), Scalar(-2));
  EXPECT_EQ(parse_rational("+7/21"), Scalar(1, 3));
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"", "1.5", "1/0", "a", "1/", "/2", "1//2", "1e3", " 1"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, ExactSquareRoots) {
  Scalar r;
  EXPECT_TRUE(rational_sqrt(Scalar(9, 4), r));
  EXPECT_EQ(r, Scalar(3, 2));
  EXPECT_FALSE(rational_sqrt(Scalar(2), r));
  EXPECT_FALSE(rational_sqrt(Scalar(-1), r));
}

TEST(Matrix, InverseAndDeterminant) {
  const Matrix a = Matrix::from_rows({{2, 1}, {1, 1}});
  EXPECT_EQ(determinant(a), 1);
  EXPECT_EQ(inverse(a), Matrix::from_rows({{1, -1}, {-1, 2}}));
  EXPECT_THROW(inverse(Matrix::from_rows({{1, 2}, {2, 4}})), SingularMatrix);
}

TEST(Matrix, KernelOfRankDeficient) {
  const Matrix a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  EXPECT_EQ(rank(a), 1u);
  const auto ker = kernel(a);
  ASSERT_EQ(ker.size(), 2u);
  for (const auto& v : ker) EXPECT_TRUE(is_zero(a * v));
}

TEST(Matrix, SolveReturnsNothingForInconsistentSystem) {
  const Matrix a = Matrix::from_rows({{1, 1}, {1, 1}});
  EXPECT_FALSE(solve(a, {1, 2}).has_value());
  const auto x = solve(a, {2, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, (Vector{2, 2}));
}

TEST(Matrix, RandomInverseProperty) {
  testkit::Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 6;
    const Matrix p = testkit::random_invertible(rng, n);
    EXPECT_EQ(p * inverse(p), Matrix::identity(n));
    EXPECT_EQ(Scalar(determinant(p) * determinant(inverse(p))), 1);
  }
}

TEST(Subspace, EqualityIsBasisIndependent) {
  const std::vector<Vector> a{{1, 1, 0}, {0, 1, 0}};
  const std::vector<Vector> b{{1, 0, 0}, {3, 5, 0}};
  EXPECT_EQ(Subspace::span(3, a), Subspace::span(3, b));
  EXPECT_FALSE(Subspace::span(3, a) == Subspace::full(3));
}

TEST(Subspace, SumIntersectAndDimensionFormula) {
  testkit::Rng rng(5);
  for (int t = 0; t < 25; ++t) {
    std::vector<Vector> va, vb;
    for (int i = 0; i < 2; ++i) va.push_back(testkit::random_vector(rng, 5));
    for (int i = 0; i < 3; ++i) vb.push_back(testkit::random_vector(rng, 5));
    const Subspace a = Subspace::span(5, va), b = Subspace::span(5, vb);
    const Subspace s = a.sum(b), i = a.intersect(b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(s.contains(a));
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
  }
}

TEST(Subspace, CoordinatesRoundTrip) {
  const std::vector<Vector> vs{{1, 2, 0}, {0, 1, 1}};
  const Subspace s = Subspace::span(3, vs);
  const Vector v = Scalar(2) * vs[0] + Scalar(-3) * vs[1];
  const Vector c = s.coordinates(v);
  Vector back = zero_vector(3);
  for (std::size_t i = 0; i < c.size(); ++i) back = back + c[i] * s.basis()[i];
  EXPECT_EQ(back, v);
  EXPECT_THROW(s.coordinates({1, 0, 0}), DomainError);
}

TEST(Subspace, OrthogonalComplement) {
  const Matrix g = Matrix::from_rows({{2, 1, 0}, {1, 2, 0}, {0, 0, 1}});
  const std::vector<Vector> e1{{1, 0, 0}};
  const Subspace perp = orthogonal_complement(Subspace::span(3, e1), g);
  EXPECT_EQ(perp.dim(), 2u);
  for (const auto& v : perp.basis()) EXPECT_EQ(dot(e1[0], g * v), 0);
}
