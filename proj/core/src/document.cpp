#include "weylsnp/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "weylsnp/errors.hpp"

namespace weylsnp {

namespace {

using json = nlohmann::json;

Scalar read_scalar(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Scalar(v.dump());
  if (v.is_number_float()) throw ParseError(path + ": floating-point literals are not accepted, use \"p/q\"");
  throw ParseError(path + ": expected a rational string");
}

std::size_t read_index(const json& v, const std::string& path, std::size_t dim) {
  if (!v.is_number_integer()) throw ParseError(path + ": expected an integer index");
  const long long i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim)
    throw ParseError(path + ": index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(i - 1);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + ": missing field '" + key + "'");
  return *it;
}

}  // namespace

MetricLieAlgebra load_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte offset; convert it to a line number
    std::size_t line = 1;
    for (std::size_t p = 0; p < e.byte && p < text.size(); ++p)
      if (text[p] == '\n') ++line;
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");

  const json& dim_field = require(doc, "dim", "document");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 1)
    throw ParseError("dim: expected a positive integer");
  const std::size_t n = dim_field.get<std::size_t>();

  std::vector<std::string> labels;
  if (const auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array() || it->size() != n) throw ParseError("labels: expected an array of " + std::to_string(n) + " strings");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*it)[i].is_string()) throw ParseError("labels[" + std::to_string(i) + "]: expected a string");
      labels.push_back((*it)[i].get<std::string>());
    }
  }

  std::vector<Scalar> c(n * n * n);
  std::vector<bool> set(n * n * n, false);
  const json& brackets = doc.contains("brackets") ? doc["brackets"] : json::array();
  if (!brackets.is_array()) throw ParseError("brackets: expected an array");
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string path = "brackets[" + std::to_string(e) + "]";
    const json& entry = brackets[e];
    if (!entry.is_object()) throw ParseError(path + ": expected an object");
    const std::size_t i = read_index(require(entry, "i", path), path + ".i", n);
    const std::size_t j = read_index(require(entry, "j", path), path + ".j", n);
    const std::size_t k = read_index(require(entry, "k", path), path + ".k", n);
    const Scalar value = read_scalar(require(entry, "value", path), path + ".value");
    if (i == j) {
      if (sgn(value) != 0) throw ValidationError(path + ": [e_i, e_i] must vanish");
      continue;
    }
    const std::size_t a = (i * n + j) * n + k;
    const std::size_t b = (j * n + i) * n + k;
    if (set[a] && c[a] != value) throw ValidationError(path + ": conflicts with an earlier entry");
    c[a] = value;
    c[b] = -value;
    set[a] = set[b] = true;
  }
  LieAlgebra algebra(n, std::move(c), std::move(labels));
  const ValidationReport report = validate(algebra);
  if (!report.ok()) throw ValidationError(report.describe());

  Matrix gram = Matrix::identity(n);
  if (const auto it = doc.find("gram"); it != doc.end()) {
    if (!it->is_array() || it->size() != n) throw ParseError("gram: expected " + std::to_string(n) + " rows");
    for (std::size_t r = 0; r < n; ++r) {
      const json& row = (*it)[r];
      const std::string rpath = "gram[" + std::to_string(r) + "]";
      if (!row.is_array() || row.size() != n) throw ParseError(rpath + ": expected " + std::to_string(n) + " entries");
      for (std::size_t col = 0; col < n; ++col)
        gram(r, col) = read_scalar(row[col], rpath + "[" + std::to_string(col) + "]");
    }
  }
  return MetricLieAlgebra(std::move(algebra), InnerProduct(std::move(gram)));
}

MetricLieAlgebra load_document_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_document(ss.str());
}

std::string save_document(const MetricLieAlgebra& model) {
  const std::size_t n = model.dim();
  const LieAlgebra& g = model.algebra();
  nlohmann::ordered_json doc;
  doc["dim"] = n;
  if (!g.labels().empty()) doc["labels"] = g.labels();
  doc["brackets"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(g.constant(i, j, k)) != 0)
          doc["brackets"].push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", to_string(g.constant(i, j, k))}});
  nlohmann::ordered_json gram = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < n; ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(to_string(model.metric().gram()(r, c)));
    gram.push_back(std::move(row));
  }
  doc["gram"] = std::move(gram);
  return doc.dump(2) + "\n";
}

}  // namespace weylsnp
