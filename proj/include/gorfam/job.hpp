#ifndef GORFAM_JOB_HPP
#define GORFAM_JOB_HPP

#include <gorfam/family.hpp>
#include <gorfam/resolution.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace gorfam {

using json = nlohmann::json;

struct JobAssumptions {
  std::optional<int> lci_outside_codim;  // asserted depth_{I(Z)} B
  bool char_not_2 = false;
  bool assume_ext2_zero = false;

  friend bool operator==(const JobAssumptions& a, const JobAssumptions& b)
  {
    return a.lci_outside_codim == b.lci_outside_codim && a.char_not_2 == b.char_not_2 &&
           a.assume_ext2_zero == b.assume_ext2_zero;
  }
};

struct JobInput {
  Codim2Data data;
  ConstructionKind construction = ConstructionKind::h1_mu4;
  long long s_lo = 0, s_hi = 0;  // inclusive range
  JobAssumptions assumptions;

  friend bool operator==(const JobInput& a, const JobInput& b)
  {
    return a.data == b.data && a.construction == b.construction && a.s_lo == b.s_lo &&
           a.s_hi == b.s_hi && a.assumptions == b.assumptions;
  }
};

struct ResolutionInfo {
  long long duality_twist = 0;
  // one (twist, multiplicity) table per term F_0..F_L
  std::vector<std::vector<std::pair<long long, long long>>> terms;
  bool minimal = true;
  std::vector<TwistCoincidence> coincidences;
  std::vector<RankCorrection> rank_corrections;

  friend bool operator==(const ResolutionInfo& a, const ResolutionInfo& b)
  {
    return a.duality_twist == b.duality_twist && a.terms == b.terms && a.minimal == b.minimal &&
           a.coincidences == b.coincidences && a.rank_corrections == b.rank_corrections;
  }
};

struct ProfileInfo {
  enum class Kind { artinian, scheme };
  Kind kind = Kind::artinian;
  // artinian
  long long socle_degree = 0;
  std::vector<Int> h_vector;
  // scheme
  long long scheme_dim = -1;
  std::vector<std::string> hilbert_poly;  // exact rational coefficients, constant first
  std::optional<Int> degree, genus;

  friend bool operator==(const ProfileInfo& a, const ProfileInfo& b)
  {
    return a.kind == b.kind && a.socle_degree == b.socle_degree && a.h_vector == b.h_vector &&
           a.scheme_dim == b.scheme_dim && a.hilbert_poly == b.hilbert_poly &&
           a.degree == b.degree && a.genus == b.genus;
  }
};

struct JobEntry {
  long long s = 0;
  std::optional<std::string> error;  // set when this entry failed; other fields may be absent
  std::vector<std::string> warnings;
  std::vector<std::string> assumptions;  // required hypotheses plus user assertions
  std::optional<FamilyReport> family;
  std::optional<ResolutionInfo> resolution;
  std::optional<ProfileInfo> profile;

  friend bool operator==(const JobEntry& a, const JobEntry& b)
  {
    return a.s == b.s && a.error == b.error && a.warnings == b.warnings &&
           a.assumptions == b.assumptions && a.family == b.family &&
           a.resolution == b.resolution && a.profile == b.profile;
  }
};

struct JobReport {
  JobInput input;
  std::vector<JobEntry> entries;

  friend bool operator==(const JobReport& a, const JobReport& b)
  {
    return a.input == b.input && a.entries == b.entries;
  }
};

// ---------------------------------------------------------------------------
// input parsing

namespace detail {

inline long long require_integer(const json& j, const char* what)
{
  if (!j.is_number_integer())
    throw InputError(InputErrorKind::schema, std::string(what) + " must be an integer");
  return j.get<long long>();
}

inline std::vector<int> require_int_list(const json& j, const char* what)
{
  if (!j.is_array() || j.empty())
    throw InputError(InputErrorKind::schema, std::string(what) + " must be a nonempty array");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(static_cast<int>(require_integer(e, what)));
  return out;
}

}  // namespace detail

inline JobInput parse_input(const json& doc)
{
  if (!doc.is_object())
    throw InputError(InputErrorKind::schema, "input document must be a JSON object");
  for (const char* key : {"num_vars", "gen_degrees", "rel_degrees", "construction", "s"})
    if (!doc.contains(key))
      throw InputError(InputErrorKind::schema, std::string("missing field: ") + key);

  JobInput in;
  in.data.num_vars = static_cast<int>(detail::require_integer(doc["num_vars"], "num_vars"));
  in.data.gen_degrees = detail::require_int_list(doc["gen_degrees"], "gen_degrees");
  in.data.rel_degrees = detail::require_int_list(doc["rel_degrees"], "rel_degrees");

  if (!doc["construction"].is_string())
    throw InputError(InputErrorKind::schema, "construction must be a string");
  auto kind = construction_from_string(doc["construction"].get<std::string>());
  if (!kind)
    throw InputError(InputErrorKind::schema,
                     "construction must be one of k_section, h1_mu4, h1_mu5, nb");
  in.construction = *kind;

  const json& s = doc["s"];
  if (s.is_number_integer()) {
    in.s_lo = in.s_hi = s.get<long long>();
  } else if (s.is_array() && s.size() == 2) {
    in.s_lo = detail::require_integer(s[0], "s range");
    in.s_hi = detail::require_integer(s[1], "s range");
  } else {
    throw InputError(InputErrorKind::schema, "s must be an integer or a two-element array");
  }
  if (in.s_lo > in.s_hi)
    throw InputError(InputErrorKind::schema, "s range must satisfy s_lo <= s_hi");

  if (doc.contains("assumptions")) {
    const json& a = doc["assumptions"];
    if (!a.is_object()) throw InputError(InputErrorKind::schema, "assumptions must be an object");
    if (a.contains("lci_outside_codim"))
      in.assumptions.lci_outside_codim =
          static_cast<int>(detail::require_integer(a["lci_outside_codim"], "lci_outside_codim"));
    if (a.contains("char_not_2")) {
      if (!a["char_not_2"].is_boolean())
        throw InputError(InputErrorKind::schema, "char_not_2 must be a boolean");
      in.assumptions.char_not_2 = a["char_not_2"].get<bool>();
    }
    if (a.contains("assume_ext2_zero")) {
      if (!a["assume_ext2_zero"].is_boolean())
        throw InputError(InputErrorKind::schema, "assume_ext2_zero must be a boolean");
      in.assumptions.assume_ext2_zero = a["assume_ext2_zero"].get<bool>();
    }
  }

  in.data.validate();  // HilbertBurchViolation / MinimalityViolation / SchemaError

  const int mu = in.data.mu();
  if (in.construction == ConstructionKind::h1_mu4 && mu != 4)
    throw InputError(InputErrorKind::construction_mu, "h1_mu4 requires exactly 4 generators");
  if (in.construction == ConstructionKind::h1_mu5 && mu != 5)
    throw InputError(InputErrorKind::construction_mu, "h1_mu5 requires exactly 5 generators");
  if (in.construction == ConstructionKind::k_section && mu > 5)
    throw InputError(InputErrorKind::construction_mu, "k_section requires mu <= 5");
  return in;
}

inline JobInput parse_input(const std::string& text)
{
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded())
    throw InputError(InputErrorKind::schema, "not valid JSON");
  return parse_input(doc);
}

// ---------------------------------------------------------------------------
// running a job

namespace detail {

inline ProfileInfo profile_from_expr(const DimExpr& expr)
{
  ProfileInfo p;
  HilbertPolynomial hp = hilbert_polynomial(expr);
  if (hp.poly.is_zero()) {
    p.kind = ProfileInfo::Kind::artinian;
    p.h_vector = h_vector(expr);
    p.socle_degree = static_cast<long long>(p.h_vector.size()) - 1;
    return p;
  }
  p.kind = ProfileInfo::Kind::scheme;
  p.scheme_dim = hp.poly.degree();
  for (const Rat& c : hp.poly.coefficients()) p.hilbert_poly.push_back(c.str());
  if (p.scheme_dim == 1 && boost::multiprecision::denominator(hp.poly.coefficient(1)) == 1 &&
      boost::multiprecision::denominator(hp.poly.coefficient(0)) == 1) {
    p.degree = boost::multiprecision::numerator(hp.poly.coefficient(1));
    p.genus = Int(1) - boost::multiprecision::numerator(hp.poly.coefficient(0));
  }
  return p;
}

inline ProfileInfo profile_from_resolution(const ResolutionSpec& res)
{
  const int N = res.terms.front().num_vars();
  if (static_cast<long long>(res.length()) == N) {
    auto art = artinian_profile(res);
    ProfileInfo p;
    p.kind = ProfileInfo::Kind::artinian;
    p.socle_degree = art->socle_degree;
    p.h_vector = art->h_vector;
    return p;
  }
  SchemeProfile sp = scheme_profile(res);
  ProfileInfo p;
  p.kind = ProfileInfo::Kind::scheme;
  p.scheme_dim = sp.scheme_dim;
  for (const Rat& c : sp.hilbert_polynomial.coefficients()) p.hilbert_poly.push_back(c.str());
  p.degree = sp.degree;
  p.genus = sp.genus;
  return p;
}

/// Negative values of any module constructor signal that the exactness
/// hypotheses behind the formulas fail for this degree data.
inline std::vector<std::string> validity_warnings(const Codim2Modules& m)
{
  std::vector<std::string> out;
  const std::pair<const char*, const DimExpr*> exprs[] = {
      {"ideal", &m.ideal()},
      {"quotient", &m.quotient()},
      {"canonical", &m.canonical()},
      {"ideal_square", &m.ideal_square()},
      {"conormal", &m.conormal()},
      {"normal", &m.normal()},
      {"koszul_h1", &m.koszul_h1()},
      {"h1_dual", &m.h1_dual()},
      {"koszul_h2", &m.koszul_h2()},
      {"s2_canonical", &m.s2_canonical()},
      {"hom_s2h1_canonical", &m.hom_s2h1_canonical()},
      {"hom_conormal_conormal", &m.hom_conormal_conormal()}};
  for (const auto& [name, expr] : exprs) {
    const long long hi = expr->stability_bound().value_or(0) + 5;
    for (long long v = -10; v <= hi; ++v) {
      if (expr->eval(v) < 0) {
        std::ostringstream msg;
        msg << name << " has negative dimension " << expr->eval(v) << " in degree " << v
            << "; the degree data violates the exactness hypotheses";
        out.push_back(msg.str());
        break;
      }
    }
  }
  return out;
}

inline JobEntry run_entry(const Codim2Modules& modules, const JobInput& in, long long s,
                          const std::vector<std::string>& shared_warnings)
{
  JobEntry entry;
  entry.s = s;
  entry.warnings = shared_warnings;
  try {
    switch (in.construction) {
      case ConstructionKind::k_section:
        entry.family = family_dim_canonical_section(modules, s);
        break;
      case ConstructionKind::h1_mu4:
        entry.family = family_dim_h1_mu4(modules, s);
        break;
      case ConstructionKind::h1_mu5:
        entry.family = family_dim_h1_mu5(modules, s);
        break;
      case ConstructionKind::nb:
        entry.family = family_dim_nb(modules, s, in.assumptions.assume_ext2_zero);
        break;
    }
    entry.assumptions = entry.family->assumptions;
    if (in.assumptions.lci_outside_codim) {
      std::ostringstream msg;
      msg << "user asserts depth_{I(Z)} B >= " << *in.assumptions.lci_outside_codim;
      entry.assumptions.push_back(msg.str());
    }
    if (in.assumptions.char_not_2) entry.assumptions.push_back("user asserts char(k) != 2");

    ConstructionSpec cons{in.construction, s};
    if (in.construction == ConstructionKind::k_section) {
      // No mapping-cone template; Hilbert data still follows from the
      // defining two-term sequence.
      entry.profile = profile_from_expr(sequence_hilbert_expr(modules, cons));
    } else {
      ResolutionSpec res = mapping_cone_resolution(modules.data(), cons);
      ResolutionInfo info;
      info.rank_corrections = reconcile_self_duality(res);
      info.duality_twist = res.duality_twist;
      for (const FreeModule& f : res.terms) {
        std::vector<std::pair<long long, long long>> table;
        for (const auto& [twist, mult] : f.twist_multiplicities())
          table.push_back({twist, static_cast<long long>(mult)});
        info.terms.push_back(std::move(table));
      }
      MinimalityFlag flag = minimality_flag(res);
      info.minimal = flag.minimal;
      info.coincidences = flag.coincidences;
      entry.resolution = std::move(info);
      if (!hilbert_function_crosscheck(modules, cons))
        entry.warnings.push_back("resolution Hilbert function disagrees with the sequence");
      entry.profile = profile_from_resolution(res);
    }
  } catch (const std::exception& e) {
    entry.error = e.what();
  }
  return entry;
}

}  // namespace detail

/// Runs the job: one entry per s, computed independently (and concurrently),
/// reported in increasing order of s. Per-entry failures are recorded in the
/// entry, never aborting the batch.
inline JobReport run(const JobInput& in)
{
  JobReport report;
  report.input = in;
  Codim2Modules modules(in.data);
  const std::vector<std::string> shared_warnings = detail::validity_warnings(modules);

  std::vector<std::future<JobEntry>> futures;
  for (long long s = in.s_lo; s <= in.s_hi; ++s)
    futures.push_back(std::async(std::launch::async, [&, s] {
      return detail::run_entry(modules, in, s, shared_warnings);
    }));
  for (auto& f : futures) report.entries.push_back(f.get());
  return report;
}

// ---------------------------------------------------------------------------
// JSON emission and reparsing

namespace detail {

inline json int_to_json(const Int& v)
{
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

inline Int int_from_json(const json& j)
{
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw InputError(InputErrorKind::schema, "expected an integer value");
}

inline json opt_int_to_json(const std::optional<Int>& v)
{
  if (!v) return "indeterminate";
  return int_to_json(*v);
}

inline std::optional<Int> opt_int_from_json(const json& j)
{
  if (j.is_string() && j.get<std::string>() == "indeterminate") return std::nullopt;
  return int_from_json(j);
}

inline json to_json(const FamilyDimension& d)
{
  json out;
  switch (d.kind) {
    case FamilyDimension::Kind::exact:
      out["kind"] = "exact";
      out["value"] = int_to_json(d.value);
      break;
    case FamilyDimension::Kind::interval:
      out["kind"] = "interval";
      out["lower"] = d.lower ? int_to_json(*d.lower) : json("unknown");
      out["upper"] = d.upper ? int_to_json(*d.upper) : json("unknown");
      break;
    case FamilyDimension::Kind::indeterminate:
      out["kind"] = "indeterminate";
      break;
  }
  return out;
}

inline FamilyDimension family_dimension_from_json(const json& j)
{
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "exact") return FamilyDimension::exact(int_from_json(j.at("value")));
  if (kind == "indeterminate") return FamilyDimension::indeterminate();
  FamilyDimension d;
  d.kind = FamilyDimension::Kind::interval;
  if (!(j.at("lower").is_string() && j.at("lower").get<std::string>() == "unknown"))
    d.lower = int_from_json(j.at("lower"));
  if (!(j.at("upper").is_string() && j.at("upper").get<std::string>() == "unknown"))
    d.upper = int_from_json(j.at("upper"));
  return d;
}

inline json to_json(const RegimeFlags& f)
{
  return json{{"simplified_h1", f.simplified_h1},
              {"codim_range", f.codim_range},
              {"nb_exact", f.nb_exact},
              {"h2_zero", f.h2_zero}};
}

inline RegimeFlags regime_from_json(const json& j)
{
  RegimeFlags f;
  f.simplified_h1 = j.at("simplified_h1").get<bool>();
  f.codim_range = j.at("codim_range").get<bool>();
  f.nb_exact = j.at("nb_exact").get<bool>();
  f.h2_zero = j.at("h2_zero").get<bool>();
  return f;
}

inline json to_json(const FamilyReport& r)
{
  json breakdown = json::array();
  for (const auto& [term, value] : r.breakdown)
    breakdown.push_back(json{{"term", term}, {"value", opt_int_to_json(value)}});
  return json{{"dimension", to_json(r.dimension)},
              {"stratum_codim", opt_int_to_json(r.stratum_codim)},
              {"regime", to_json(r.regime)},
              {"breakdown", breakdown},
              {"assumptions", r.assumptions}};
}

inline FamilyReport family_from_json(const json& j)
{
  FamilyReport r;
  r.dimension = family_dimension_from_json(j.at("dimension"));
  r.stratum_codim = opt_int_from_json(j.at("stratum_codim"));
  r.regime = regime_from_json(j.at("regime"));
  for (const auto& e : j.at("breakdown"))
    r.breakdown.push_back({e.at("term").get<std::string>(), opt_int_from_json(e.at("value"))});
  r.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  return r;
}

inline json to_json(const ResolutionInfo& r)
{
  json terms = json::array();
  for (const auto& table : r.terms) {
    json term = json::array();
    for (const auto& [twist, mult] : table) term.push_back(json::array({twist, mult}));
    terms.push_back(term);
  }
  json coincidences = json::array();
  for (const auto& c : r.coincidences)
    coincidences.push_back(json{{"first_term", c.first_term}, {"twist", c.twist}});
  json corrections = json::array();
  for (const auto& c : r.rank_corrections)
    corrections.push_back(json{{"term", c.term},
                               {"twist", c.twist},
                               {"old_multiplicity", c.old_multiplicity},
                               {"new_multiplicity", c.new_multiplicity}});
  return json{{"duality_twist", r.duality_twist},
              {"terms", terms},
              {"minimal", r.minimal},
              {"twist_coincidences", coincidences},
              {"rank_corrections", corrections}};
}

inline ResolutionInfo resolution_from_json(const json& j)
{
  ResolutionInfo r;
  r.duality_twist = j.at("duality_twist").get<long long>();
  for (const auto& term : j.at("terms")) {
    std::vector<std::pair<long long, long long>> table;
    for (const auto& e : term) table.push_back({e.at(0).get<long long>(), e.at(1).get<long long>()});
    r.terms.push_back(std::move(table));
  }
  r.minimal = j.at("minimal").get<bool>();
  for (const auto& c : j.at("twist_coincidences"))
    r.coincidences.push_back(
        {c.at("first_term").get<std::size_t>(), c.at("twist").get<long long>()});
  for (const auto& c : j.at("rank_corrections"))
    r.rank_corrections.push_back({c.at("term").get<std::size_t>(), c.at("twist").get<long long>(),
                                  c.at("old_multiplicity").get<std::size_t>(),
                                  c.at("new_multiplicity").get<std::size_t>()});
  return r;
}

inline json to_json(const ProfileInfo& p)
{
  if (p.kind == ProfileInfo::Kind::artinian) {
    json hv = json::array();
    for (const Int& h : p.h_vector) hv.push_back(int_to_json(h));
    return json{{"kind", "artinian"}, {"socle_degree", p.socle_degree}, {"h_vector", hv}};
  }
  json out{{"kind", "scheme"},
           {"scheme_dim", p.scheme_dim},
           {"hilbert_polynomial", p.hilbert_poly}};
  if (p.degree) out["degree"] = int_to_json(*p.degree);
  if (p.genus) out["genus"] = int_to_json(*p.genus);
  return out;
}

inline ProfileInfo profile_from_json(const json& j)
{
  ProfileInfo p;
  if (j.at("kind").get<std::string>() == "artinian") {
    p.kind = ProfileInfo::Kind::artinian;
    p.socle_degree = j.at("socle_degree").get<long long>();
    for (const auto& h : j.at("h_vector")) p.h_vector.push_back(int_from_json(h));
    return p;
  }
  p.kind = ProfileInfo::Kind::scheme;
  p.scheme_dim = j.at("scheme_dim").get<long long>();
  p.hilbert_poly = j.at("hilbert_polynomial").get<std::vector<std::string>>();
  if (j.contains("degree")) p.degree = int_from_json(j.at("degree"));
  if (j.contains("genus")) p.genus = int_from_json(j.at("genus"));
  return p;
}

inline json to_json(const JobInput& in)
{
  json out{{"num_vars", in.data.num_vars},
           {"gen_degrees", in.data.gen_degrees},
           {"rel_degrees", in.data.rel_degrees},
           {"construction", to_string(in.construction)},
           {"s", json::array({in.s_lo, in.s_hi})}};
  json a = json::object();
  if (in.assumptions.lci_outside_codim) a["lci_outside_codim"] = *in.assumptions.lci_outside_codim;
  a["char_not_2"] = in.assumptions.char_not_2;
  a["assume_ext2_zero"] = in.assumptions.assume_ext2_zero;
  out["assumptions"] = a;
  return out;
}

inline json to_json(const JobEntry& e)
{
  json out{{"s", e.s}, {"warnings", e.warnings}, {"assumptions", e.assumptions}};
  if (e.error) out["error"] = *e.error;
  if (e.family) out["family"] = to_json(*e.family);
  if (e.resolution) out["resolution"] = to_json(*e.resolution);
  if (e.profile) out["profile"] = to_json(*e.profile);
  return out;
}

inline JobEntry entry_from_json(const json& j)
{
  JobEntry e;
  e.s = j.at("s").get<long long>();
  e.warnings = j.at("warnings").get<std::vector<std::string>>();
  e.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  if (j.contains("error")) e.error = j.at("error").get<std::string>();
  if (j.contains("family")) e.family = family_from_json(j.at("family"));
  if (j.contains("resolution")) e.resolution = resolution_from_json(j.at("resolution"));
  if (j.contains("profile")) e.profile = profile_from_json(j.at("profile"));
  return e;
}

}  // namespace detail

inline json report_to_json(const JobReport& report)
{
  json entries = json::array();
  for (const auto& e : report.entries) entries.push_back(detail::to_json(e));
  return json{{"input", detail::to_json(report.input)}, {"entries", entries}};
}

inline JobReport report_from_json(const json& doc)
{
  JobReport report;
  report.input = parse_input(doc.at("input"));
  for (const auto& e : doc.at("entries")) report.entries.push_back(detail::entry_from_json(e));
  return report;
}

// ---------------------------------------------------------------------------
// text emission

namespace detail {

inline std::string polynomial_text(const std::vector<std::string>& coeffs)
{
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == "0") continue;
    if (!first) out << " + ";
    out << coeffs[i];
    if (i == 1) out << "*v";
    if (i > 1) out << "*v^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

inline std::string dimension_text(const FamilyDimension& d)
{
  std::ostringstream out;
  switch (d.kind) {
    case FamilyDimension::Kind::exact: out << d.value << " (exact)"; break;
    case FamilyDimension::Kind::interval:
      out << "[" << (d.lower ? d.lower->str() : std::string("unknown")) << ", "
          << (d.upper ? d.upper->str() : std::string("unknown")) << "]";
      break;
    case FamilyDimension::Kind::indeterminate: out << "indeterminate"; break;
  }
  return out.str();
}

inline std::string regime_text(const RegimeFlags& f)
{
  std::ostringstream out;
  bool any = false;
  auto add = [&](bool flag, const char* name) {
    if (!flag) return;
    if (any) out << ", ";
    out << name;
    any = true;
  };
  add(f.simplified_h1, "simplified_h1");
  add(f.codim_range, "codim_range");
  add(f.nb_exact, "nb_exact");
  add(f.h2_zero, "h2_zero");
  if (!any) out << "none";
  return out.str();
}

}  // namespace detail

enum class EmitFormat { text, json };

/// Renders the report. The JSON form mirrors the report structure field by
/// field and reparses losslessly via report_from_json. `width` is a soft hint
/// for the text form.
inline std::string emit(const JobReport& report, EmitFormat format, int width = 100)
{
  if (format == EmitFormat::json) return report_to_json(report).dump(2);

  std::ostringstream out;
  const JobInput& in = report.input;
  auto join = [](const std::vector<int>& xs) {
    std::ostringstream s;
    for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? " " : "") << xs[i];
    return s.str();
  };
  out << "construction: " << to_string(in.construction) << "\n";
  out << "ambient variables: " << in.data.num_vars << "\n";
  out << "generator degrees: " << join(in.data.gen_degrees) << "\n";
  out << "relation degrees:  " << join(in.data.rel_degrees) << "\n";
  out << "s range: [" << in.s_lo << ", " << in.s_hi << "]\n";

  for (const JobEntry& e : report.entries) {
    out << "\n" << std::string(static_cast<std::size_t>(width > 8 ? width : 8), '-') << "\n";
    out << "s = " << e.s << "\n";
    if (e.error) {
      out << "  error: " << *e.error << "\n";
    }
    for (const auto& w : e.warnings) out << "  warning: " << w << "\n";
    if (e.family) {
      const FamilyReport& f = *e.family;
      out << "  family dimension: " << detail::dimension_text(f.dimension) << "\n";
      out << "  stratum codimension: "
          << (f.stratum_codim ? f.stratum_codim->str() : std::string("indeterminate")) << "\n";
      out << "  regime: " << detail::regime_text(f.regime) << "\n";
      out << "  breakdown:\n";
      for (const auto& [term, value] : f.breakdown)
        out << "    " << term << " = " << (value ? value->str() : std::string("indeterminate"))
            << "\n";
    }
    if (e.resolution) {
      const ResolutionInfo& r = *e.resolution;
      out << "  resolution (duality twist " << r.duality_twist << "):\n";
      for (std::size_t k = 0; k < r.terms.size(); ++k) {
        out << "    F" << k << ":";
        if (r.terms[k].empty()) out << " 0";
        for (const auto& [twist, mult] : r.terms[k]) {
          out << " R(" << twist << ")";
          if (mult != 1) out << "^" << mult;
        }
        out << "\n";
      }
      out << "  minimal: " << (r.minimal ? "yes" : "possibly not") << "\n";
      for (const auto& c : r.coincidences)
        out << "    twist " << c.twist << " shared by F" << c.first_term << " and F"
            << c.first_term + 1 << "\n";
      for (const auto& c : r.rank_corrections)
        out << "    corrected-rank: term F" << c.term << " twist " << c.twist << " multiplicity "
            << c.old_multiplicity << " -> " << c.new_multiplicity << "\n";
    }
    if (e.profile) {
      const ProfileInfo& p = *e.profile;
      if (p.kind == ProfileInfo::Kind::artinian) {
        out << "  socle degree: " << p.socle_degree << "\n";
        out << "  h-vector:";
        for (const Int& h : p.h_vector) out << " " << h;
        out << "\n";
      } else {
        out << "  scheme dimension: " << p.scheme_dim << "\n";
        out << "  Hilbert polynomial: " << detail::polynomial_text(p.hilbert_poly) << "\n";
        if (p.degree) out << "  degree: " << *p.degree << "\n";
        if (p.genus) out << "  genus: " << *p.genus << "\n";
      }
    }
    if (!e.assumptions.empty()) {
      out << "  assumptions:\n";
      for (const auto& a : e.assumptions) out << "    - " << a << "\n";
    }
  }
  return out.str();
}

}  // namespace gorfam

#endif  // GORFAM_JOB_HPP
