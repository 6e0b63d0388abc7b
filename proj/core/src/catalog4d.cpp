#include "weylsnp/catalog4d.hpp"

#include <array>
#include <sstream>

#include "weylsnp/errors.hpp"
#include "weylsnp/weyl.hpp"

namespace weylsnp {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view id;
  std::string_view name;
};

constexpr std::array<FamilyInfo, 11> kFamilies{{
    {Family::R4, "r4", "R^4"},
    {Family::NilxR, "nil_x_r", "Nil x R"},
    {Family::Nil4, "nil4", "Nil^4"},
    {Family::Sol4_mn, "sol4_mn", "Sol^4_{m,n}"},
    {Family::Sol3xR, "sol3_x_r", "Sol^3 x R"},
    {Family::Sol4_0, "sol4_0", "Sol^4_0"},
    {Family::Sol4_0_prime, "sol4_0_prime", "Sol'^4_0"},
    {Family::Sol4_mu, "sol4_mu", "Sol^4_mu"},
    {Family::IsomR2xR, "isom_r2_x_r", "Isom_0(R^2)~ x R"},
    {Family::Sol4_1, "sol4_1", "Sol^4_1"},
    {Family::NilRtimesS1, "nil_r_times_s1", "(Nil x| S^1)~"},
}};

constexpr std::array<Family, 11> kFamilyList{Family::R4,          Family::NilxR,    Family::Nil4,   Family::Sol4_mn,
                                             Family::Sol3xR,      Family::Sol4_0,   Family::Sol4_0_prime,
                                             Family::Sol4_mu,     Family::IsomR2xR, Family::Sol4_1,
                                             Family::NilRtimesS1};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw InvalidArgument("unknown family");
}

// 1-based bracket [e_i, e_j] = value e_k
BracketEntry br(std::size_t i, std::size_t j, std::size_t k, Scalar value = 1) { return {i - 1, j - 1, k - 1, value}; }

bool in_range(const Scalar& v, Range r) {
  switch (r) {
    case Range::Real: return true;
    case Range::Positive: return sgn(v) > 0;
    case Range::NonNegative: return sgn(v) >= 0;
    case Range::OpenUnit: return sgn(v) > 0 && v < 1;
    case Range::HalfOpenUnit: return sgn(v) > 0 && v <= 1;
    case Range::GreaterThanOne: return v > 1;
  }
  return false;
}

std::string range_text(const std::string& name, Range r) {
  switch (r) {
    case Range::Real: return name + " real";
    case Range::Positive: return name + " > 0";
    case Range::NonNegative: return name + " >= 0";
    case Range::OpenUnit: return "0 < " + name + " < 1";
    case Range::HalfOpenUnit: return "0 < " + name + " <= 1";
    case Range::GreaterThanOne: return name + " > 1";
  }
  return name;
}

ParamSpec pos(const char* n) { return {n, Range::Positive, 1}; }
ParamSpec nonneg(const char* n) { return {n, Range::NonNegative, 0}; }
ParamSpec real(const char* n) { return {n, Range::Real, 0}; }

const Scalar& get(const Params& p, const char* name) {
  const auto it = p.find(name);
  if (it == p.end()) throw InvalidArgument(std::string("missing parameter ") + name);
  return it->second;
}

Scalar draw_magnitude(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 20);
  const int num = d(rng);
  const int den = d(rng);
  Scalar v(num, den);
  v.canonicalize();
  return v;
}

Scalar draw(Range r, std::mt19937_64& rng) {
  switch (r) {
    case Range::Real: {
      const Scalar m = draw_magnitude(rng);
      return std::bernoulli_distribution(0.5)(rng) ? Scalar(-m) : m;
    }
    case Range::Positive:
    case Range::NonNegative: return draw_magnitude(rng);
    case Range::OpenUnit:
    case Range::HalfOpenUnit: {
      const int den = std::uniform_int_distribution<int>(2, 20)(rng);
      const int num = std::uniform_int_distribution<int>(1, den - 1)(rng);
      Scalar v(num, den);
      v.canonicalize();
      return v;
    }
    case Range::GreaterThanOne: return 1 + draw_magnitude(rng);
  }
  return 0;
}

Vector e(std::size_t i) { return unit_vector(4, i - 1); }

}  // namespace

std::span<const Family> all_families() { return kFamilyList; }

std::string_view family_id(Family f) { return info(f).id; }

std::string_view family_display_name(Family f) { return info(f).name; }

Family parse_family(std::string_view id) {
  for (const auto& i : kFamilies)
    if (i.id == id) return i.family;
  throw InvalidArgument("unknown family '" + std::string(id) + "'");
}

std::vector<ParamSpec> param_specs(Family f) {
  switch (f) {
    case Family::R4: return {};
    case Family::NilxR: return {pos("b11")};
    case Family::Nil4: return {pos("b11"), nonneg("b12"), pos("b22")};
    case Family::Sol4_mn:
      return {{"lambda", Range::GreaterThanOne, 2}, nonneg("b12"), real("b13"), nonneg("b23"), pos("b44")};
    case Family::Sol3xR: return {nonneg("b12"), real("b13"), nonneg("b23"), pos("b44")};
    case Family::Sol4_0: return {nonneg("b13"), pos("b44")};
    case Family::Sol4_0_prime: return {pos("b22"), nonneg("b13"), real("b23"), pos("b44")};
    case Family::Sol4_mu: return {pos("mu"), nonneg("b12"), real("b13"), nonneg("b23"), pos("b44")};
    case Family::IsomR2xR:
      return {{"b22", Range::OpenUnit, Scalar(1, 2)}, nonneg("b13"), nonneg("b23"), pos("b44")};
    case Family::Sol4_1: return {pos("b11"), nonneg("b12"), real("b13"), nonneg("b23"), pos("b44")};
    case Family::NilRtimesS1:
      return {pos("b11"), real("b12"), real("b13"), {"b33", Range::HalfOpenUnit, 1}, pos("b44")};
  }
  return {};
}

Params default_params(Family f) {
  Params p;
  for (const auto& s : param_specs(f)) p[s.name] = s.default_value;
  return p;
}

Params complete_params(Family f, const Params& given) {
  const std::vector<ParamSpec> specs = param_specs(f);
  Params p = default_params(f);
  for (const auto& [name, value] : given) {
    if (!p.contains(name))
      throw InvalidArgument("family " + std::string(family_id(f)) + " has no parameter '" + name + "'");
    p[name] = value;
  }
  for (const auto& s : specs)
    if (!in_range(p[s.name], s.range))
      throw InadmissibleParams(std::string(family_id(f)) + ": " + s.name + " = " + to_string(p[s.name]) +
                               " violates " + range_text(s.name, s.range));
  if (f == Family::NilRtimesS1) {
    if (p["b33"] == 1) {
      if (sgn(p["b13"]) != 0) throw InadmissibleParams("nil_r_times_s1: b33 = 1 requires b13 = 0");
      if (sgn(p["b12"]) < 0) throw InadmissibleParams("nil_r_times_s1: b33 = 1 requires b12 >= 0");
    } else if (sgn(p["b12"] * p["b13"]) < 0) {
      throw InadmissibleParams("nil_r_times_s1: 0 < b33 < 1 requires b12 * b13 >= 0");
    }
  }
  return p;
}

LieAlgebra standard_algebra(Family f, const Params& params) {
  const Params p = complete_params(f, params);
  switch (f) {
    case Family::R4: return LieAlgebra::abelian(4);
    case Family::NilxR: return LieAlgebra::from_brackets(4, {br(3, 4, 1)});
    case Family::Nil4: return LieAlgebra::from_brackets(4, {br(2, 4, 1), br(3, 4, 2)});
    case Family::Sol4_mn: {
      const Scalar& l = get(p, "lambda");
      return LieAlgebra::from_brackets(4, {br(4, 1, 1, l), br(4, 2, 2), br(4, 3, 3, -1 - l)});
    }
    case Family::Sol3xR: return LieAlgebra::from_brackets(4, {br(4, 2, 2), br(4, 3, 3, -1)});
    case Family::Sol4_0: return LieAlgebra::from_brackets(4, {br(4, 1, 1), br(4, 2, 2), br(4, 3, 3, -2)});
    case Family::Sol4_0_prime:
      return LieAlgebra::from_brackets(4, {br(4, 1, 1), br(4, 2, 1), br(4, 2, 2), br(4, 3, 3, -2)});
    case Family::Sol4_mu: {
      const Scalar& mu = get(p, "mu");
      return LieAlgebra::from_brackets(
          4, {br(4, 1, 1, mu), br(4, 1, 2, -1), br(4, 2, 1), br(4, 2, 2, mu), br(4, 3, 3, -2 * mu)});
    }
    case Family::IsomR2xR: return LieAlgebra::from_brackets(4, {br(4, 1, 2, -1), br(4, 2, 1)});
    case Family::Sol4_1: return LieAlgebra::from_brackets(4, {br(2, 3, 1), br(4, 2, 2), br(4, 3, 3, -1)});
    case Family::NilRtimesS1: return LieAlgebra::from_brackets(4, {br(2, 3, 1), br(4, 2, 3, -1), br(4, 3, 2)});
  }
  throw InvalidArgument("unknown family");
}

Matrix milnor_basis(Family f, const Params& params) {
  const Params p = complete_params(f, params);
  auto v = [&](const char* name) -> Scalar { return p.contains(name) ? p.at(name) : Scalar(0); };
  std::vector<Vector> x = {e(1), e(2), e(3), e(4)};
  switch (f) {
    case Family::R4: break;
    case Family::NilxR: x[0] = v("b11") * e(1); break;
    case Family::Nil4:
      x[0] = v("b11") * e(1);
      x[1] = v("b12") * e(1) + v("b22") * e(2);
      break;
    case Family::Sol4_0:
      x[2] = v("b13") * e(1) + e(3);
      x[3] = v("b44") * e(4);
      break;
    case Family::Sol4_0_prime:
    case Family::IsomR2xR:
      x[1] = v("b22") * e(2);
      x[2] = v("b13") * e(1) + v("b23") * e(2) + e(3);
      x[3] = v("b44") * e(4);
      break;
    case Family::Sol4_mn:
    case Family::Sol3xR:
    case Family::Sol4_mu:
    case Family::Sol4_1:
      x[0] = (f == Family::Sol4_1 ? v("b11") : Scalar(1)) * e(1);
      x[1] = v("b12") * e(1) + e(2);
      x[2] = v("b13") * e(1) + v("b23") * e(2) + e(3);
      x[3] = v("b44") * e(4);
      break;
    case Family::NilRtimesS1:
      x[0] = v("b11") * e(1);
      x[1] = v("b12") * e(1) + e(2);
      x[2] = v("b13") * e(1) + v("b33") * e(3);
      x[3] = v("b44") * e(4);
      break;
  }
  return Matrix::from_columns(x);
}

MetricLieAlgebra build(Family f, const Params& params) {
  const Matrix b = milnor_basis(f, params);
  return MetricLieAlgebra(standard_algebra(f, params), InnerProduct(inverse(b * b.transpose())));
}

ExpectedSnp expected_snp(Family f, const Params& params) {
  const Params p = complete_params(f, params);
  ExpectedSnp out{f, Subspace(4), "zero", f == Family::Sol4_mn || f == Family::Sol4_mu};
  auto line = [&](std::size_t i, const char* text) {
    const Vector v[] = {e(i)};
    out.space = Subspace::span(4, v);
    out.description = text;
  };
  switch (f) {
    case Family::R4:
      out.space = Subspace::full(4);
      out.description = "all of R^4";
      break;
    case Family::NilxR: line(2, "span(e2)"); break;
    case Family::Sol3xR:
      if (sgn(p.at("b12")) == 0 && sgn(p.at("b13")) == 0) line(1, "span(e1)");
      break;
    case Family::IsomR2xR:
      if (sgn(p.at("b13")) == 0 && sgn(p.at("b23")) == 0) line(3, "span(e3)");
      break;
    case Family::NilRtimesS1:
      if (p.at("b33") == 1 && sgn(p.at("b12")) == 0) line(4, "span(e4)");
      break;
    default: break;
  }
  return out;
}

Params random_params(Family f, std::mt19937_64& rng) {
  Params p;
  for (const auto& s : param_specs(f)) p[s.name] = draw(s.range, rng);
  if (f == Family::NilRtimesS1) {
    if (std::bernoulli_distribution(0.5)(rng)) {
      p["b33"] = 1;
      p["b13"] = 0;
      p["b12"] = abs(p["b12"]);
    } else {
      const Scalar unit = draw(Range::OpenUnit, rng);
      p["b33"] = unit;
      if (sgn(p["b12"] * p["b13"]) < 0) p["b13"] = -p["b13"];
    }
  }
  return complete_params(f, p);
}

std::vector<LabeledParams> boundary_variants(Family f, const Params& base) {
  std::vector<LabeledParams> out;
  Params zeroed = base;
  bool any = false;
  for (const auto& s : param_specs(f))
    if (s.range == Range::NonNegative) {
      zeroed[s.name] = 0;
      any = true;
    }
  if (any) out.push_back({"nonnegative parameters zero", complete_params(f, zeroed)});

  auto variant = [&](const char* label, std::initializer_list<std::pair<const char*, Scalar>> changes) {
    Params p = base;
    for (const auto& [name, value] : changes) p[name] = value;
    out.push_back({label, complete_params(f, p)});
  };
  switch (f) {
    case Family::Sol3xR: variant("b12 = b13 = 0", {{"b12", 0}, {"b13", 0}}); break;
    case Family::IsomR2xR: variant("b13 = b23 = 0", {{"b13", 0}, {"b23", 0}}); break;
    case Family::NilRtimesS1:
      variant("second form, b12 = 0", {{"b33", 1}, {"b13", 0}, {"b12", 0}});
      variant("first form, b12 = b13 = 0",
              {{"b33", base.at("b33") == 1 ? Scalar(1, 2) : base.at("b33")}, {"b12", 0}, {"b13", 0}});
      break;
    default: break;
  }
  return out;
}

std::mt19937_64 trial_rng(std::uint64_t seed, Family f, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

SweepReport verify_classification(std::size_t trials, std::uint64_t seed, std::optional<BracketMutation> mutation) {
  if (trials == 0) throw InvalidArgument("verify_classification: trials must be at least 1");
  SweepReport report;
  report.trials = trials;
  report.seed = seed;

  for (Family f : all_families()) {
    for (std::size_t t = 0; t < trials; ++t) {
      std::mt19937_64 rng = trial_rng(seed, f, t);
      std::vector<LabeledParams> draws{{"random", random_params(f, rng)}};
      for (auto& b : boundary_variants(f, draws.front().params)) draws.push_back(std::move(b));

      for (const auto& d : draws) {
        MetricLieAlgebra m = build(f, d.params);
        if (mutation && mutation->family == f) {
          std::vector<Scalar> c = m.algebra().constants();
          c[(mutation->i * 4 + mutation->j) * 4 + mutation->k] = mutation->value;
          c[(mutation->j * 4 + mutation->i) * 4 + mutation->k] = -mutation->value;
          m = MetricLieAlgebra(LieAlgebra(4, std::move(c)), m.metric());
        }
        const ExpectedSnp expected = expected_snp(f, d.params);
        SweepCase c{f, t, d.label, d.params, expected.space, snp_space(m).solution_space, false,
                    expected.inferred_answer};
        c.match = c.expected == c.computed;
        if (!c.match) ++report.mismatches;
        report.cases.push_back(std::move(c));
      }
    }
  }
  return report;
}

std::string describe(const Params& params) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : params) {
    if (!first) os << ", ";
    first = false;
    os << name << '=' << to_string(value);
  }
  return os.str();
}

}  // namespace weylsnp
