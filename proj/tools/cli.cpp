#include "cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylsnp/catalog4d.hpp"
#include "weylsnp/constructors.hpp"
#include "weylsnp/document.hpp"
#include "weylsnp/errors.hpp"
#include "weylsnp/weyl.hpp"

namespace weylsnp::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr const char* kCurvatureConvention =
    "R(x,y)z = D_x D_y z - D_y D_x z - D_[x,y] z; k = <R(x,y)y,x> / |x ^ y|^2";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json vec(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json subspace(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(vec(v));
  return Json{{"dim", s.dim()}, {"basis", basis}};
}

Json matrix(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vec(m.row(r)));
  return rows;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Vector parse_vector(const std::string& text, std::size_t dim, const char* what) {
  Vector v;
  for (const auto& part : split(text, ',')) v.push_back(parse_rational(part));
  if (v.size() != dim)
    throw DimensionMismatch(std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " +
                            std::to_string(dim));
  return v;
}

// rows separated by ';', entries by ','
Matrix parse_matrix(const std::string& text) {
  std::vector<Vector> rows;
  for (const auto& row : split(text, ';')) {
    Vector r;
    for (const auto& part : split(row, ',')) r.push_back(parse_rational(part));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ParseError("matrix rows have different lengths");
  return Matrix::from_rows(rows);
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  for (const auto& part : split(text, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || part.empty()) throw ParseError("grid value '" + part + "' is not a number");
    grid.push_back(v);
  }
  return grid;
}

Json validation_json(const ValidationReport& r) {
  Json j{{"antisymmetric", r.antisymmetric}, {"jacobi", r.jacobi}, {"ok", r.ok()}};
  if (!r.ok()) j["message"] = r.describe();
  return j;
}

Json analyze(const MetricLieAlgebra& m) {
  const LieAlgebra& g = m.algebra();
  const Series s = series(g);
  Json derived = Json::array(), lower = Json::array();
  for (const auto& t : s.derived) derived.push_back(t.dim());
  for (const auto& t : s.lower_central) lower.push_back(t.dim());
  Json j{{"dim", g.dim()},
         {"validation", validation_json(validate(g))},
         {"unimodular", is_unimodular(g)},
         {"series",
          {{"derived_dims", derived},
           {"lower_central_dims", lower},
           {"solvable", s.is_solvable},
           {"nilpotent", s.is_nilpotent},
           {"nilpotency_class", s.nilpotency_class ? Json(*s.nilpotency_class) : Json(nullptr)}}},
         {"derived_algebra", subspace(derived_algebra(g))},
         {"center", subspace(center(g))}};
  j["vergne_type"] = s.is_nilpotent ? Json(vergne_type(g)) : Json(nullptr);
  const auto sig = metabelian_signature(g);
  j["metabelian_signature"] = sig ? Json::array({sig->first, sig->second}) : Json(nullptr);
  return j;
}

Json snp_json(const SnpReport& r) {
  Json j{{"solution_space", subspace(r.solution_space)},
         {"is_central_only", r.is_central_only},
         {"parallel_verified", r.parallel_verified},
         {"w2_verified", r.w2_verified},
         {"unimodular", r.unimodular}};
  if (r.w1)
    j["w1_sampling"] = {{"samples", r.w1->samples},
                        {"positive_count", r.w1->positive_count},
                        {"max_value", r.w1->max_value}};
  else
    j["w1_sampling"] = nullptr;
  j["warnings"] = r.warnings;
  j["curvature_convention"] = kCurvatureConvention;
  return j;
}

Json structure_json(const StructureReport& r) {
  return Json{{"complement", subspace(r.complement)},
              {"is_ideal", r.is_ideal},
              {"solvable", r.solvable},
              {"unimodular", r.unimodular},
              {"skew_action", r.skew_action},
              {"derived_match", r.derived_match},
              {"derived_dim", r.derived_dim},
              {"complement_derived_dim", r.complement_derived_dim},
              {"derived_decomposition", r.derived_decomposition},
              {"all_passed", r.all_passed()}};
}

Json params_json(const Params& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = to_string(v);
  return j;
}

Json sweep_json(const SweepReport& r) {
  Json families = Json::array();
  for (Family f : all_families()) {
    std::size_t cases = 0, nonzero = 0, mismatches = 0;
    bool inferred = false;
    for (const auto& c : r.cases) {
      if (c.family != f) continue;
      ++cases;
      if (!c.expected.is_zero()) ++nonzero;
      if (!c.match) ++mismatches;
      inferred = c.inferred_answer;
    }
    families.push_back({{"family", family_id(f)},
                        {"cases", cases},
                        {"nonzero_expected", nonzero},
                        {"mismatches", mismatches},
                        {"inferred_answer", inferred}});
  }
  Json bad = Json::array();
  for (const auto& c : r.cases)
    if (!c.match)
      bad.push_back({{"family", family_id(c.family)},
                     {"trial", c.trial},
                     {"draw", c.label},
                     {"params", params_json(c.params)},
                     {"expected", subspace(c.expected)},
                     {"computed", subspace(c.computed)}});
  return Json{{"trials", r.trials}, {"seed", r.seed},         {"cases", r.cases.size()},
              {"mismatches", r.mismatches}, {"families", families}, {"mismatch_details", bad}};
}

Json derivations_json(const LieAlgebra& g, const Subspace& space, bool skew) {
  Json basis = Json::array();
  for (const auto& d : as_matrices(space, g.dim())) basis.push_back(matrix(d));
  Json j{{"skew", skew}, {"dim", space.dim()}, {"basis", basis}};
  if (!skew) j["characteristically_nilpotent"] = is_characteristically_nilpotent(g);
  return j;
}

Json gt_json(const GtTensor& t) {
  const GtAlgebra a = gt_algebra(t);
  Json terms = Json::array();
  for (const auto& term : t.terms) terms.push_back(Json::array({term.a, term.b, term.c}));
  return Json{{"m", t.m},
              {"n", t.n},
              {"terms", terms},
              {"normalized", to_string(t)},
              {"dim", a.algebra.dim()},
              {"surjective", a.surjective},
              {"signature", Json::array({a.signature.first, a.signature.second})}};
}

Json scan_json(const StretchScan& s) {
  Json verdicts = Json::array();
  for (const auto& v : s.verdicts)
    verdicts.push_back({{"gamma", v.gamma},
                        {"max_value", v.max_value},
                        {"positive_count", v.positive_count},
                        {"non_positive", v.non_positive}});
  return Json{{"gamma_grid", s.gamma_grid},
              {"gamma0", s.gamma0 ? Json(*s.gamma0) : Json(nullptr)},
              {"plane_samples", s.plane_samples},
              {"tolerance", kStretchTolerance},
              {"verdicts", verdicts},
              {"curvature_convention", kCurvatureConvention}};
}

void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !flat(v) && !v.empty()) {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      } else if (flat(v)) {
        os << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
        os << "]\n";
      } else {
        os << pad << k << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (flat(v)) {
        os << pad << "- [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
        os << "]\n";
      } else if (v.is_structured()) {
        os << pad << "-\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << "- " << scalar(v) << "\n";
      }
    }
  }
}

struct Options {
  std::string format = "text";
  std::string file;
  std::string field;
  std::string grid = "1,10,100";
  std::string derivation;
  std::string tensor;
  std::string family;
  std::vector<std::string> params;
  std::size_t trials = 25;
  std::uint64_t seed = 1;
  std::size_t samples = 500;
  std::size_t w1_samples = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t adim = 1;
  bool skew = false;
};

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + item + "'");
    p[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return p;
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact analysis of Lie algebras with left-invariant metrics and invariant Weyl connections",
               "weylsnp"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* analyze_cmd = app.add_subcommand("analyze", "Validation, unimodularity, series, center, Vergne type");
  analyze_cmd->add_option("file", o.file, "Algebra document")->required();

  auto* snp_cmd = app.add_subcommand("snp", "Solution space of the SNP conditions");
  snp_cmd->add_option("file", o.file, "Algebra document")->required();
  snp_cmd->add_option("--w1-samples", o.w1_samples, "Planes sampled per solution vector for W1");
  snp_cmd->add_option("--seed", o.seed, "Sampling seed");

  auto* structure_cmd = app.add_subcommand("structure", "Decomposition checks for a non-central SNP field");
  structure_cmd->add_option("file", o.file, "Algebra document")->required();
  structure_cmd->add_option("--field", o.field, "Field coordinates, comma separated")->required();

  auto* classify_cmd = app.add_subcommand("classify4d", "Sweep the 4-dimensional catalog");
  classify_cmd->add_option("--trials", o.trials, "Random draws per family")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--seed", o.seed, "Sweep seed");

  auto* der_cmd = app.add_subcommand("derivations", "Derivation algebra");
  der_cmd->add_option("file", o.file, "Algebra document")->required();
  der_cmd->add_flag("--skew", o.skew, "Only derivations skew-symmetric for the document metric");

  auto* gt_cmd = app.add_subcommand("gt", "Tensor-notation metabelian algebras");
  gt_cmd->require_subcommand(1);
  auto* gt_parse_cmd = gt_cmd->add_subcommand("parse", "Parse a digit-triple tensor");
  gt_parse_cmd->add_option("tensor", o.tensor, "Whitespace separated digit triples")->required();
  gt_parse_cmd->add_option("--m", o.m, "dim U")->required();
  gt_parse_cmd->add_option("--n", o.n, "dim V")->required();

  auto* extend_cmd = app.add_subcommand("extend", "Semidirect extension by a skew derivation");
  extend_cmd->add_option("file", o.file, "Algebra document")->required();
  extend_cmd->add_option("--derivation", o.derivation, "Matrix, rows separated by ';'")->required();
  extend_cmd->add_option("--adim", o.adim, "Dimension of the abelian factor")->check(CLI::PositiveNumber);

  auto* scan_cmd = app.add_subcommand("scan", "Sampled Weyl sectional curvature along gamma E");
  scan_cmd->add_option("file", o.file, "Algebra document")->required();
  scan_cmd->add_option("--field", o.field, "Field coordinates, comma separated")->required();
  scan_cmd->add_option("--grid", o.grid, "Increasing gamma values, comma separated");
  scan_cmd->add_option("--samples", o.samples, "Number of planes");
  scan_cmd->add_option("--seed", o.seed, "Sampling seed");

  auto* catalog_cmd = app.add_subcommand("catalog", "4-dimensional catalog");
  catalog_cmd->require_subcommand(1);
  auto* catalog_list_cmd = catalog_cmd->add_subcommand("list", "Families and parameters");
  auto* catalog_export_cmd = catalog_cmd->add_subcommand("export", "Write a family member as a document");
  catalog_export_cmd->add_option("family", o.family, "Family identifier")->required();
  catalog_export_cmd->add_option("--param", o.params, "name=value, repeatable");

  Result result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kUsageError;
    result.err = std::string("error: ") + e.what() + "\n" + app.help();
    return result;
  }

  Json report;
  report["schema_version"] = kSchemaVersion;
  bool raw_document = false;
  try {
    if (analyze_cmd->parsed()) {
      report["command"] = "analyze";
      report["result"] = analyze(load_document_file(o.file));
    } else if (snp_cmd->parsed()) {
      report["command"] = "snp";
      report["result"] = snp_json(snp_space(load_document_file(o.file), SnpOptions{o.w1_samples, o.seed}));
    } else if (structure_cmd->parsed()) {
      report["command"] = "structure";
      const MetricLieAlgebra m = load_document_file(o.file);
      report["result"] = structure_json(verify_structure(m, parse_vector(o.field, m.dim(), "--field")));
    } else if (classify_cmd->parsed()) {
      report["command"] = "classify4d";
      const SweepReport sweep = verify_classification(o.trials, o.seed);
      report["result"] = sweep_json(sweep);
      if (sweep.mismatches > 0) result.exit_code = kMismatch;
    } else if (der_cmd->parsed()) {
      report["command"] = "derivations";
      const MetricLieAlgebra m = load_document_file(o.file);
      const Subspace space = o.skew ? skew_derivations(m.algebra(), m.metric()) : derivations(m.algebra());
      report["result"] = derivations_json(m.algebra(), space, o.skew);
    } else if (gt_parse_cmd->parsed()) {
      report["command"] = "gt parse";
      report["result"] = gt_json(parse_gt_tensor(o.tensor, o.m, o.n));
    } else if (extend_cmd->parsed()) {
      report["command"] = "extend";
      const MetricLieAlgebra base = load_document_file(o.file);
      const MetricLieAlgebra ext = build_snp_extension(base.algebra(), base.metric(), parse_matrix(o.derivation), o.adim);
      const SnpReport snp = snp_space(ext);
      std::vector<Vector> a;
      for (std::size_t i = base.dim(); i < ext.dim(); ++i) a.push_back(unit_vector(ext.dim(), i));
      report["result"] = {{"dim", ext.dim()},
                          {"a_indices", Json::array()},
                          {"snp", snp_json(snp)},
                          {"snp_contains_a", snp.solution_space.contains(Subspace::span(ext.dim(), a))},
                          {"document", Json::parse(save_document(ext))}};
      for (std::size_t i = base.dim(); i < ext.dim(); ++i) report["result"]["a_indices"].push_back(i + 1);
    } else if (scan_cmd->parsed()) {
      report["command"] = "scan";
      const MetricLieAlgebra m = load_document_file(o.file);
      const std::vector<double> grid = parse_grid(o.grid);
      report["result"] = scan_json(stretch_scan(m, parse_vector(o.field, m.dim(), "--field"), grid, o.samples, o.seed));
    } else if (catalog_list_cmd->parsed()) {
      report["command"] = "catalog list";
      Json families = Json::array();
      for (Family f : all_families()) {
        Json params = Json::array();
        for (const auto& s : param_specs(f)) params.push_back({{"name", s.name}, {"default", to_string(s.default_value)}});
        families.push_back({{"id", family_id(f)}, {"name", family_display_name(f)}, {"params", params}});
      }
      report["result"] = families;
    } else if (catalog_export_cmd->parsed()) {
      result.out = save_document(build(parse_family(o.family), parse_params(o.params)));
      raw_document = true;
    }
  } catch (const UsageError& e) {
    result.exit_code = kUsageError;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  } catch (const ParseError& e) {
    result.exit_code = kParseError;
    result.err = std::string("parse error: ") + e.what() + "\n";
    return result;
  } catch (const ValidationError& e) {
    result.exit_code = kValidationError;
    result.err = std::string("validation error: ") + e.what() + "\n";
    return result;
  } catch (const DimensionMismatch& e) {
    result.exit_code = kUsageError;
    result.err = std::string("dimension mismatch: ") + e.what() + "\n";
    return result;
  } catch (const Error& e) {
    result.exit_code = kDomainError;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }

  if (raw_document) return result;
  if (o.format == "json") {
    result.out = report.dump(2) + "\n";
  } else {
    std::ostringstream os;
    render_text(report, os, 0);
    result.out = os.str();
  }
  return result;
}

}  // namespace weylsnp::cli
