#ifndef GORFAM_FAMILY_HPP
#define GORFAM_FAMILY_HPP

#include <gorfam/codim2.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gorfam {

/// The four section constructions: a regular section of M*(s) for
/// M = K_B (rank 1), M = H_1 with mu = 4 (rank 2), M = N_B (rank 2),
/// M = H_1 with mu = 5 (rank 3).
enum class ConstructionKind { k_section, h1_mu4, h1_mu5, nb };

inline const char* to_string(ConstructionKind k)
{
  switch (k) {
    case ConstructionKind::k_section: return "k_section";
    case ConstructionKind::h1_mu4: return "h1_mu4";
    case ConstructionKind::h1_mu5: return "h1_mu5";
    case ConstructionKind::nb: return "nb";
  }
  return "?";
}

inline std::optional<ConstructionKind> construction_from_string(std::string_view s)
{
  if (s == "k_section") return ConstructionKind::k_section;
  if (s == "h1_mu4") return ConstructionKind::h1_mu4;
  if (s == "h1_mu5") return ConstructionKind::h1_mu5;
  if (s == "nb") return ConstructionKind::nb;
  return std::nullopt;
}

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::h1_mu4;
  long long s = 0;

  /// Rank r of the section module M.
  int rank() const
  {
    switch (kind) {
      case ConstructionKind::k_section: return 1;
      case ConstructionKind::h1_mu4: return 2;
      case ConstructionKind::nb: return 2;
      case ConstructionKind::h1_mu5: return 3;
    }
    return 0;
  }

  /// Twist t with wedge^r M = K_B(t); 0 is the reference twist for K_B itself.
  long long section_twist(const Codim2Data& d) const
  {
    switch (kind) {
      case ConstructionKind::k_section: return 0;
      case ConstructionKind::h1_mu4:
      case ConstructionKind::h1_mu5: return d.twist_h1();
      case ConstructionKind::nb: return d.twist_nb();
    }
    return 0;
  }

  /// Socle twist j with K_A = A(j): j = r*s - t.
  long long socle_twist(const Codim2Data& d) const { return rank() * s - section_twist(d); }

  /// Twist b of the last term of the self-dual resolution: b = -j - N.
  long long duality_twist(const Codim2Data& d) const { return -socle_twist(d) - d.num_vars; }

  void check_mu(const Codim2Data& d) const
  {
    const int mu = d.mu();
    switch (kind) {
      case ConstructionKind::h1_mu4:
        if (mu != 4) throw WrongMuError("h1_mu4 requires exactly 4 generators");
        return;
      case ConstructionKind::h1_mu5:
        if (mu != 5) throw WrongMuError("h1_mu5 requires exactly 5 generators");
        return;
      case ConstructionKind::k_section:
        if (mu > 5) throw WrongMuError("k_section is only computable for mu <= 5");
        return;
      case ConstructionKind::nb: return;
    }
  }

  friend bool operator==(const ConstructionSpec& a, const ConstructionSpec& b)
  {
    return a.kind == b.kind && a.s == b.s;
  }
};

/// Degree-range predicates controlling which terms of the dimension formulas
/// are certified to vanish or to split.
struct RegimeFlags {
  bool simplified_h1 = false;  // s > max n2_j - min n2_j
  bool codim_range = false;    // max n2_j - 2 min n1_i < s <= max n2_j - min n2_j
  bool nb_exact = false;       // s > 2 max n2_j - min n1_i
  bool h2_zero = false;        // 2s > max n2_j - 2 min n2_j

  static RegimeFlags of(const Codim2Data& d, long long s)
  {
    RegimeFlags f;
    f.simplified_h1 = s > d.max_rel() - static_cast<long long>(d.min_rel());
    f.codim_range = (s > d.max_rel() - 2LL * d.min_gen()) && !f.simplified_h1;
    f.nb_exact = s > 2LL * d.max_rel() - d.min_gen();
    f.h2_zero = 2 * s > d.max_rel() - 2LL * d.min_rel();
    return f;
  }

  friend bool operator==(const RegimeFlags& a, const RegimeFlags& b)
  {
    return a.simplified_h1 == b.simplified_h1 && a.codim_range == b.codim_range &&
           a.nb_exact == b.nb_exact && a.h2_zero == b.h2_zero;
  }
};

/// Family dimension: an exact value, an upper bound with an uncertified lower
/// gap, or no certified value at all.
struct FamilyDimension {
  enum class Kind { exact, interval, indeterminate };
  Kind kind = Kind::indeterminate;
  Int value;                           // meaningful when kind == exact
  std::optional<Int> lower, upper;     // interval endpoints; lower may be absent

  static FamilyDimension exact(Int v)
  {
    FamilyDimension d;
    d.kind = Kind::exact;
    d.value = v;
    d.lower = d.upper = v;
    return d;
  }
  static FamilyDimension upper_bound(Int hi)
  {
    FamilyDimension d;
    d.kind = Kind::interval;
    d.upper = hi;
    return d;
  }
  static FamilyDimension indeterminate() { return FamilyDimension{}; }

  friend bool operator==(const FamilyDimension& a, const FamilyDimension& b)
  {
    return a.kind == b.kind && a.value == b.value && a.lower == b.lower && a.upper == b.upper;
  }
};

using Breakdown = std::vector<std::pair<std::string, std::optional<Int>>>;

struct FamilyReport {
  FamilyDimension dimension;
  std::optional<Int> stratum_codim;  // nullopt when no value is certified
  RegimeFlags regime;
  Breakdown breakdown;
  std::vector<std::string> assumptions;

  friend bool operator==(const FamilyReport& a, const FamilyReport& b)
  {
    return a.dimension == b.dimension && a.stratum_codim == b.stratum_codim &&
           a.regime == b.regime && a.breakdown == b.breakdown && a.assumptions == b.assumptions;
  }
};

namespace detail {

/// Least degree in which the section module can have a nonzero element; the
/// kernel ideal of B -> A lives in degrees >= s + this.
inline long long section_module_min_degree(const Codim2Data& d, ConstructionKind kind)
{
  switch (kind) {
    case ConstructionKind::h1_mu4:
    case ConstructionKind::h1_mu5: return d.min_rel();
    case ConstructionKind::nb: return d.min_gen() - static_cast<long long>(d.max_rel());
    case ConstructionKind::k_section: return d.num_vars - static_cast<long long>(d.max_rel());
  }
  return 0;
}

/// True when degree reasons force hom_R(I_B, ker(B->A))_0 = 0, in which case
/// the stratum codimension needs no generality hypothesis.
inline bool generality_excluded_by_degrees(const Codim2Data& d, ConstructionKind kind, long long s)
{
  return s + section_module_min_degree(d, kind) > d.max_gen();
}

inline const char* kGeneralityNote =
    "stratum codimension is conditional on (B -> A) being general with respect to "
    "hom_R(I_B, I_{A/B})_0";

inline void echo_construction_hypotheses(ConstructionKind kind, std::vector<std::string>& out)
{
  switch (kind) {
    case ConstructionKind::h1_mu4:
      out.push_back(
          "Proj(B) - Z is a local complete intersection with depth_{I(Z)} B >= 2 "
          "(not verifiable from degree data)");
      break;
    case ConstructionKind::h1_mu5:
      out.push_back(
          "Proj(B) - Z is a local complete intersection with depth_{I(Z)} B >= 3 "
          "(not verifiable from degree data)");
      out.push_back("char(k) != 2");
      break;
    case ConstructionKind::nb:
      out.push_back(
          "Proj(B) - Z is a local complete intersection with depth_{I(Z)} B >= 4 "
          "(not verifiable from degree data)");
      out.push_back("char(k) != 2");
      break;
    case ConstructionKind::k_section:
      out.push_back("B is licci (automatic for a codimension-two CM quotient)");
      break;
  }
  out.push_back("the chosen section is regular on Proj(B) - Z");
}

}  // namespace detail

/// Stratum codimension for the mu = 4 first-Koszul-homology construction:
/// 0 in the simplified range, dim R_{-s} in the codimension range, and
/// uncertified otherwise.
inline std::optional<Int> stratum_codim_h1_mu4(const Codim2Modules& m, long long s)
{
  if (m.data().mu() != 4) throw WrongMuError("stratum_codim_h1_mu4 requires mu = 4");
  RegimeFlags f = RegimeFlags::of(m.data(), s);
  if (f.simplified_h1) return Int(0);
  if (f.codim_range) return m.ring().eval(-s);
  return std::nullopt;
}

/// Dimension of the family of Gorenstein quotients cut out by regular
/// sections of H_1*(s) when I_B has 4 generators. Always exact.
inline FamilyReport family_dim_h1_mu4(const Codim2Modules& m, long long s)
{
  const Codim2Data& d = m.data();
  if (d.mu() != 4) throw WrongMuError("family_dim_h1_mu4 requires mu = 4");
  const long long t = d.twist_h1();

  const Int n0 = m.normal().eval(0);
  const Int h1s = m.h1_dual().eval(s);
  const Int hom0 = m.hom_s2h1_canonical().eval(0);
  const Int kb = m.canonical().eval(t - 2 * s);
  const Int d_kb = m.delta_canonical(t, -2 * s);
  const Int d_h1 = m.delta_h1(-s);
  const Int dim = n0 + h1s - 1 - hom0 + kb + d_kb - d_h1;

  FamilyReport r;
  r.regime = RegimeFlags::of(d, s);
  r.dimension = FamilyDimension::exact(dim);
  r.stratum_codim = stratum_codim_h1_mu4(m, s);
  r.breakdown = {{"dim_N_B_0", n0},
                 {"dim_H1_dual_s", h1s},
                 {"hom_S2H1_KB_t_at_0", hom0},
                 {"dim_KB_t_minus_2s", kb},
                 {"delta_KB_t_minus_2s", d_kb},
                 {"delta_H1_minus_s", d_h1}};
  if (r.regime.simplified_h1) {
    const Int short_form = n0 + h1s - 1 - hom0;
    if (short_form != dim)
      throw std::logic_error("simplified formula disagrees with the full formula");
    r.breakdown.push_back({"dim_simplified_formula", short_form});
  }
  detail::echo_construction_hypotheses(ConstructionKind::h1_mu4, r.assumptions);
  if (r.regime.codim_range &&
      !detail::generality_excluded_by_degrees(d, ConstructionKind::h1_mu4, s))
    r.assumptions.push_back(detail::kGeneralityNote);
  return r;
}

/// Dimension of the family obtained from regular sections of N_B*(s).
/// Exact in the regime s > 2 max n2 - min n1; for smaller s (mu = 3 only)
/// an exact value under the user-asserted vanishing of Ext^2(N_B, N_B)_0,
/// otherwise an upper bound with an uncertified lower gap.
inline FamilyReport family_dim_nb(const Codim2Modules& m, long long s, bool assume_ext2_zero)
{
  const Codim2Data& d = m.data();
  FamilyReport r;
  r.regime = RegimeFlags::of(d, s);

  const Int eta_s = m.conormal().eval(s);
  Int eta_rel = 0, eta_gen = 0;
  for (int b : d.rel_degrees) eta_rel += m.conormal().eval(b);
  for (int a : d.gen_degrees) eta_gen += m.conormal().eval(a);
  const Int epsilon = eta_s + eta_rel - eta_gen;

  const Int n0 = m.normal().eval(0);
  const Int homcc = m.hom_conormal_conormal().eval(0);
  if (epsilon != n0 + eta_s - homcc)
    throw std::logic_error("the two normal-section dimension formulas disagree");

  r.breakdown = {{"eta_s", eta_s},
                 {"sum_eta_rel_degrees", eta_rel},
                 {"sum_eta_gen_degrees", eta_gen},
                 {"dim_N_B_0", n0},
                 {"hom_conormal_conormal_0", homcc},
                 {"epsilon", epsilon}};
  detail::echo_construction_hypotheses(ConstructionKind::nb, r.assumptions);

  if (r.regime.nb_exact) {
    r.dimension = FamilyDimension::exact(epsilon);
    r.stratum_codim = Int(0);
    return r;
  }

  if (d.mu() != 3)
    throw WrongMuError("family_dim_nb below the exact range requires mu = 3");
  const long long t = d.twist_nb();
  const Int d_kb = m.delta_canonical(t, -2 * s);
  const Int d_nb = m.delta_normal_mu3(-s);
  const Int kb = m.canonical().eval(t - 2 * s);
  const Int upper = epsilon + (d_kb - d_nb) + kb;
  r.breakdown.push_back({"delta_KB_N_minus_2s", d_kb});
  r.breakdown.push_back({"delta_NB_minus_s", d_nb});
  r.breakdown.push_back({"dim_KB_N_minus_2s", kb});
  if (assume_ext2_zero) {
    r.dimension = FamilyDimension::exact(upper);
    r.assumptions.push_back("Ext^2_B(N_B, N_B)_0 = 0 (user-asserted)");
  } else {
    r.dimension = FamilyDimension::upper_bound(upper);
    r.assumptions.push_back(
        "lower endpoint uncertified: ext^2_B(N_B, N_B)_0 has no formula in degree data");
  }
  r.stratum_codim = std::nullopt;
  return r;
}

/// Dimension of the family obtained from regular sections of H_1*(s) when
/// I_B has 5 generators. Exact when both guarded terms resolve.
inline FamilyReport family_dim_h1_mu5(const Codim2Modules& m, long long s)
{
  const Codim2Data& d = m.data();
  if (d.mu() != 5) throw WrongMuError("family_dim_h1_mu5 requires mu = 5");
  const long long t = d.twist_h1();

  const Int n0 = m.normal().eval(0);
  const Int h1s = m.h1_dual().eval(s);
  const Int hom_s = m.hom_s2h1_canonical().eval(-s);
  const std::optional<Int> hom_h1h1 = m.hom_h1_h1_deg0();
  const Int kb = m.canonical().eval(t - 3 * s);
  const Int d_h1 = m.delta_h1(-s);
  const Int d_kb = m.delta_canonical(t, -3 * s);
  const std::optional<Int> d_h2 = m.delta_h2(-2 * s);

  FamilyReport r;
  r.regime = RegimeFlags::of(d, s);
  r.breakdown = {{"dim_N_B_0", n0},
                 {"dim_H1_dual_s", h1s},
                 {"hom_S2H1_KB_t_minus_s", hom_s},
                 {"hom_H1_H1_0", hom_h1h1},
                 {"dim_KB_t_minus_3s", kb},
                 {"delta_H1_minus_s", d_h1},
                 {"delta_KB_t_minus_3s", d_kb},
                 {"delta_H2_minus_2s", d_h2}};
  detail::echo_construction_hypotheses(ConstructionKind::h1_mu5, r.assumptions);

  if (hom_h1h1 && d_h2) {
    const Int delta = d_h1 + d_kb - *d_h2;
    r.dimension = FamilyDimension::exact(n0 + h1s + hom_s - *hom_h1h1 - kb - delta);
  } else {
    r.dimension = FamilyDimension::indeterminate();
  }

  if (r.regime.simplified_h1) {
    r.stratum_codim = Int(0);
  } else if (r.regime.codim_range && d_h2 && *d_h2 == 0 && d_kb == 0) {
    r.stratum_codim = m.ext1_conormal_h1(s);
    if (!detail::generality_excluded_by_degrees(d, ConstructionKind::h1_mu5, s))
      r.assumptions.push_back(detail::kGeneralityNote);
  } else {
    r.stratum_codim = std::nullopt;
  }
  return r;
}

/// Dimension of the family obtained from codimension-one quotients
/// 0 -> K_B(-s) -> B -> A -> 0. The ambient family dimension of B is
/// dim(N_B)_0, the tangent-space dimension at the unobstructed base point.
inline FamilyReport family_dim_canonical_section(const Codim2Modules& m, long long s)
{
  const Codim2Data& d = m.data();
  if (d.mu() > 5) throw WrongMuError("family_dim_canonical_section requires mu <= 5");

  const Int n0 = m.normal().eval(0);
  const Int kdual = m.canonical_dual().eval(s);
  const Int d_kb = m.delta_canonical(0, -s);

  FamilyReport r;
  r.regime = RegimeFlags::of(d, s);
  r.dimension = FamilyDimension::exact(n0 + kdual - 1 - d_kb);
  r.breakdown = {{"dim_N_B_0", n0}, {"dim_KB_dual_s", kdual}, {"delta_KB_minus_s", d_kb}};
  detail::echo_construction_hypotheses(ConstructionKind::k_section, r.assumptions);

  // hom(I/I^2, K_B)_{-s} is forced to vanish for s > max n1 + max n2 - N, and
  // then the stratum codimension is ext^1(I/I^2, K_B)_{-s} = -delta(K_B)_{-s}.
  if (s > d.max_gen() + static_cast<long long>(d.max_rel()) - d.num_vars) {
    r.stratum_codim = -d_kb;
    if (!detail::generality_excluded_by_degrees(d, ConstructionKind::k_section, s))
      r.assumptions.push_back(detail::kGeneralityNote);
  } else {
    r.stratum_codim = std::nullopt;
  }
  return r;
}

}  // namespace gorfam

#endif  // GORFAM_FAMILY_HPP
