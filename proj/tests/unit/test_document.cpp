#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support/generators.hpp"
#include "weylsnp/catalog4d.hpp"
#include "weylsnp/document.hpp"
#include "weylsnp/errors.hpp"

using namespace weylsnp;

namespace {

std::string error_of(std::string_view text) {
  try {
    load_document(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Document, LoadsMinimalHeisenberg) {
  const MetricLieAlgebra m = load_document(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "value": "1"}]})");
  EXPECT_EQ(m.dim(), 3u);
  EXPECT_EQ(m.algebra().bracket_basis(0, 1), (Vector{0, 0, 1}));
  EXPECT_EQ(m.algebra().bracket_basis(1, 0), (Vector{0, 0, -1}));
  EXPECT_EQ(m.metric().gram(), Matrix::identity(3));
}

TEST(Document, AcceptsIntegersLabelsAndGram) {
  const MetricLieAlgebra m = load_document(R"({
    "dim": 2,
    "labels": ["a", "b"],
    "brackets": [],
    "gram": [["2", 1], [1, "3/2"]]
  })");
  EXPECT_EQ(m.algebra().labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(m.metric().gram()(1, 1), Scalar(3, 2));
  EXPECT_EQ(m.metric().gram()(1, 0), 1);
}

TEST(Document, RoundTrip) {
  testkit::Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const MetricLieAlgebra m = testkit::random_metric_algebra(rng);
    const std::string text = save_document(m);
    const MetricLieAlgebra back = load_document(text);
    EXPECT_EQ(back.algebra(), m.algebra());
    EXPECT_EQ(back.metric().gram(), m.metric().gram());
    EXPECT_EQ(save_document(back), text);
  }
}

TEST(Document, SavedFormIsSorted) {
  const std::string text = save_document(build(Family::NilxR, {{"b11", 2}}));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_NE(text.find(R"("i": 3,)"), std::string::npos);
  EXPECT_NE(text.find(R"("1/4")"), std::string::npos);
  EXPECT_EQ(text.find(R"("i": 4,)"), std::string::npos);
}

TEST(Document, SyntaxErrorReportsLine) {
  const std::string msg = error_of("{\n  \"dim\": 3,\n  \"brackets\": [,]\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_THROW(load_document("{"), ParseError);
}

TEST(Document, FieldErrorsCarryPaths) {
  EXPECT_NE(error_of(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "value": 0.5}]})").find("brackets[0].value"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 3, "brackets": [{"i": 1, "j": 4, "k": 3, "value": "1"}]})").find("brackets[0].j"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "value": "1"}]})").find("'k'"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 2, "gram": [["1", "0"], ["0", "x"]]})").find("gram[1][1]"), std::string::npos);
  EXPECT_THROW(load_document(R"({"dim": 0})"), ParseError);
  EXPECT_THROW(load_document(R"({"dim": 2, "labels": ["a"]})"), ParseError);
  EXPECT_THROW(load_document(R"([1, 2])"), ParseError);
}

TEST(Document, FloatsAreRejected) {
  EXPECT_THROW(load_document(R"({"dim": 2, "gram": [[1.0, 0], [0, 1]]})"), ParseError);
}

TEST(Document, AlgebraicErrors) {
  EXPECT_THROW(load_document(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "value": "1"},
                                                          {"i": 3, "j": 1, "k": 1, "value": "1"}]})"),
               ValidationError);
  EXPECT_THROW(load_document(R"({"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 2, "value": "1"}]})"), ValidationError);
  EXPECT_THROW(load_document(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "value": "1"},
                                                          {"i": 2, "j": 1, "k": 3, "value": "1"}]})"),
               ValidationError);
  EXPECT_NO_THROW(load_document(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "value": "1"},
                                                             {"i": 2, "j": 1, "k": 3, "value": "-1"}]})"));
  EXPECT_THROW(load_document(R"({"dim": 2, "gram": [["1", "2"], ["2", "1"]]})"), NotPositiveDefinite);
}

TEST(Document, LoadsFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "weylsnp_document_test.json";
  {
    std::ofstream out(path);
    out << save_document(build(Family::Sol4_0, {}));
  }
  EXPECT_EQ(load_document_file(path).algebra(), build(Family::Sol4_0, {}).algebra());
  std::filesystem::remove(path);
  EXPECT_THROW(load_document_file(path), ParseError);
}
