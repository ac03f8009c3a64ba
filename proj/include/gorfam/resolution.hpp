#ifndef GORFAM_RESOLUTION_HPP
#define GORFAM_RESOLUTION_HPP

#include <gorfam/codim2.hpp>
#include <gorfam/family.hpp>

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace gorfam {

/// Twist data of a graded free resolution F_0 <- ... <- F_L of the Gorenstein
/// quotient A, with F_0 = R and the self-duality F_k = Hom(F_{L-k}, R(b)).
struct ResolutionSpec {
  std::vector<FreeModule> terms;  // F_0 .. F_L
  long long duality_twist = 0;    // b
  ConstructionSpec construction;

  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }

  friend bool operator==(const ResolutionSpec& a, const ResolutionSpec& b)
  {
    return a.terms == b.terms && a.duality_twist == b.duality_twist &&
           a.construction == b.construction;
  }
};

/// Mapping-cone resolution of A over R, concatenating the free resolutions of
/// B and of the section module terms along the defining exact sequence.
inline ResolutionSpec mapping_cone_resolution(const Codim2Data& d, const ConstructionSpec& c)
{
  d.validate();
  c.check_mu(d);
  const int N = d.num_vars;
  std::vector<long long> g1t, g2t;
  for (int a : d.gen_degrees) g1t.push_back(-a);
  for (int b : d.rel_degrees) g2t.push_back(-b);
  const FreeModule G1(N, g1t), G2(N, g2t);
  const FreeModule R = FreeModule::ring(N);
  const long long s = c.s;
  const long long b = c.duality_twist(d);

  ResolutionSpec res;
  res.construction = c;
  res.duality_twist = b;

  switch (c.kind) {
    case ConstructionKind::h1_mu4:
      // Cone over 0 -> K_B(t-2s) -> H_1(-s) -> B -> A -> 0 with
      // H_1 resolved by [G2 <- wedge^2 G1 <- wedge^2 G2] and
      // K_B(t-2s) = K_B(N)(b) resolved by [G2* <- G1* <- R](b).
      res.terms = {R,
                   direct_sum(G1, G2.twisted(-s)),
                   direct_sum(direct_sum(G2, wedge2(G1).twisted(-s)), G2.dual().twisted(b)),
                   direct_sum(wedge2(G2).twisted(-s), G1.dual().twisted(b)),
                   R.twisted(b)};
      break;
    case ConstructionKind::nb: {
      // Cone over 0 -> K_B(N-2s) -> N_B(-s) -> B -> A -> 0 with N_B resolved
      // by [G2*(x)G1 <- (G1*(x)G1 + G2*(x)G2)/R <- G1*(x)G2]; the middle term
      // drops exactly one untwisted rank-one summand.
      const FreeModule mid =
          direct_sum(tensor(G1.dual(), G1), tensor(G2.dual(), G2)).without_one(0);
      res.terms = {R,
                   direct_sum(G1, tensor(G2.dual(), G1).twisted(-s)),
                   direct_sum(direct_sum(G2, mid.twisted(-s)), G2.dual().twisted(-2 * s)),
                   direct_sum(tensor(G1.dual(), G2).twisted(-s), G1.dual().twisted(-2 * s)),
                   R.twisted(-2 * s)};
      break;
    }
    case ConstructionKind::h1_mu5:
      // Cone over 0 -> K_B(t-3s) -> H_2(-2s) -> H_1(-s) -> B -> A -> 0 with
      // H_2 resolved by [wedge^2 G2 <- wedge^3 G1 <- wedge^3 G2].
      res.terms = {
          R,
          direct_sum(G1, G2.twisted(-s)),
          direct_sum(direct_sum(G2, wedge2(G1).twisted(-s)), wedge2(G2).twisted(-2 * s)),
          direct_sum(direct_sum(wedge2(G2).twisted(-s), wedge3(G1).twisted(-2 * s)),
                     G2.dual().twisted(b)),
          direct_sum(wedge3(G2).twisted(-2 * s), G1.dual().twisted(b)),
          R.twisted(b)};
      break;
    case ConstructionKind::k_section:
      throw WrongMuError(
          "no mapping-cone template for k_section on a codimension-two base");
  }
  return res;
}

/// Gorenstein symmetry: twists(F_k) = { b - a : a in twists(F_{L-k}) } for
/// every k, as multisets.
inline bool check_self_dual(const ResolutionSpec& r)
{
  const std::size_t L = r.length();
  for (std::size_t k = 0; k <= L; ++k) {
    std::vector<long long> mirrored;
    for (long long a : r.terms[L - k].twists()) mirrored.push_back(r.duality_twist - a);
    std::sort(mirrored.begin(), mirrored.end());
    if (mirrored != r.terms[k].twists()) return false;
  }
  return true;
}

struct RankCorrection {
  std::size_t term = 0;
  long long twist = 0;
  std::size_t old_multiplicity = 0;
  std::size_t new_multiplicity = 0;

  friend bool operator==(const RankCorrection& a, const RankCorrection& b)
  {
    return a.term == b.term && a.twist == b.twist && a.old_multiplicity == b.old_multiplicity &&
           a.new_multiplicity == b.new_multiplicity;
  }
};

/// Forces the upper half of the resolution to mirror the lower half under the
/// duality twist, returning one entry per summand multiplicity that had to
/// change. The lower half (k <= L/2) is trusted as written. A resolution
/// produced by mapping_cone_resolution is already self-dual, so this audit
/// repairs only externally supplied twist tables with corrupted ranks.
inline std::vector<RankCorrection> reconcile_self_duality(ResolutionSpec& r)
{
  std::vector<RankCorrection> corrections;
  const std::size_t L = r.length();
  for (std::size_t k = L / 2 + 1; k <= L; ++k) {
    std::vector<long long> mirrored;
    for (long long a : r.terms[L - k].twists()) mirrored.push_back(r.duality_twist - a);
    FreeModule forced(r.terms[k].num_vars(), mirrored);
    if (forced == r.terms[k]) continue;
    auto old_m = r.terms[k].twist_multiplicities();
    auto new_m = forced.twist_multiplicities();
    std::set<long long> twists;
    for (const auto& [a, n] : old_m) twists.insert(a);
    for (const auto& [a, n] : new_m) twists.insert(a);
    for (long long a : twists) {
      const std::size_t before = old_m.count(a) ? old_m[a] : 0;
      const std::size_t after = new_m.count(a) ? new_m[a] : 0;
      if (before != after) corrections.push_back({k, a, before, after});
    }
    r.terms[k] = std::move(forced);
  }
  return corrections;
}

struct TwistCoincidence {
  std::size_t first_term = 0;  // shared between terms first_term and first_term + 1
  long long twist = 0;

  friend bool operator==(const TwistCoincidence& a, const TwistCoincidence& b)
  {
    return a.first_term == b.first_term && a.twist == b.twist;
  }
};

struct MinimalityFlag {
  bool minimal = true;
  std::vector<TwistCoincidence> coincidences;
};

/// A twist occurring in two consecutive terms is the only obstruction to
/// minimality visible from degree data; no maps are modeled, so "minimal"
/// means "no such coincidence".
inline MinimalityFlag minimality_flag(const ResolutionSpec& r)
{
  MinimalityFlag flag;
  for (std::size_t k = 0; k + 1 < r.terms.size(); ++k) {
    const std::set<long long> here(r.terms[k].twists().begin(), r.terms[k].twists().end());
    std::set<long long> shared;
    for (long long a : r.terms[k + 1].twists())
      if (here.count(a)) shared.insert(a);
    for (long long a : shared) flag.coincidences.push_back({k, a});
  }
  flag.minimal = flag.coincidences.empty();
  return flag;
}

/// Alternating sum of the terms: the Hilbert function of the resolved algebra.
inline DimExpr resolution_alternating_sum(const ResolutionSpec& r)
{
  std::vector<std::tuple<long long, long long, DimExpr>> terms;
  long long sign = 1;
  for (const FreeModule& f : r.terms) {
    terms.push_back({sign, 0, DimExpr::leaf(f)});
    sign = -sign;
  }
  return DimExpr::combination(std::move(terms));
}

struct ArtinianProfile {
  std::vector<Int> h_vector;
  long long socle_degree = 0;

  friend bool operator==(const ArtinianProfile& a, const ArtinianProfile& b)
  {
    return a.h_vector == b.h_vector && a.socle_degree == b.socle_degree;
  }
};

/// Defined exactly when the resolution length equals the number of variables
/// (codimension = ambient dimension). The socle degree -b - N must be the top
/// index of the h-vector; a mismatch means the input data does not come from
/// a regular section and is reported as an error.
inline std::optional<ArtinianProfile> artinian_profile(const ResolutionSpec& r)
{
  if (r.terms.empty()) return std::nullopt;
  const int N = r.terms.front().num_vars();
  if (static_cast<long long>(r.length()) != N) return std::nullopt;
  ArtinianProfile p;
  p.h_vector = h_vector(resolution_alternating_sum(r));
  p.socle_degree = -r.duality_twist - N;
  if (static_cast<long long>(p.h_vector.size()) - 1 != p.socle_degree)
    throw std::domain_error(
        "socle degree disagrees with the top of the h-vector; "
        "the data is not consistent with a regular section");
  return p;
}

struct SchemeProfile {
  long long scheme_dim = -1;  // degree of the Hilbert polynomial
  Polynomial hilbert_polynomial;
  std::optional<Int> degree;  // set when the polynomial is linear: p(v) = d v + 1 - g
  std::optional<Int> genus;

  friend bool operator==(const SchemeProfile& a, const SchemeProfile& b)
  {
    return a.scheme_dim == b.scheme_dim && a.hilbert_polynomial == b.hilbert_polynomial &&
           a.degree == b.degree && a.genus == b.genus;
  }
};

/// Hilbert polynomial of Proj(A) for a non-Artinian resolution; when Proj(A)
/// is a curve, its degree and arithmetic genus via p(v) = d v + 1 - g.
inline SchemeProfile scheme_profile(const ResolutionSpec& r)
{
  if (r.terms.empty()) throw std::invalid_argument("scheme_profile: empty resolution");
  const int N = r.terms.front().num_vars();
  if (static_cast<long long>(r.length()) >= N)
    throw std::invalid_argument("scheme_profile requires resolution length < number of variables");
  SchemeProfile p;
  HilbertPolynomial hp = hilbert_polynomial(resolution_alternating_sum(r));
  p.hilbert_polynomial = hp.poly;
  p.scheme_dim = hp.poly.degree();
  if (p.scheme_dim == 1) {
    const Rat lead = hp.poly.coefficient(1);
    const Rat constant = hp.poly.coefficient(0);
    // p(v) takes integer values at integers, so both coefficients are integers.
    if (boost::multiprecision::denominator(lead) == 1 &&
        boost::multiprecision::denominator(constant) == 1) {
      p.degree = boost::multiprecision::numerator(lead);
      p.genus = Int(1) - boost::multiprecision::numerator(constant);
    }
  }
  return p;
}

/// Hilbert function of A read off the defining four/five-term exact sequence,
/// independently of the mapping cone.
inline DimExpr sequence_hilbert_expr(const Codim2Modules& m, const ConstructionSpec& c)
{
  c.check_mu(m.data());
  const long long s = c.s;
  const long long t = c.section_twist(m.data());
  switch (c.kind) {
    case ConstructionKind::k_section:
      return DimExpr::combination({{1, 0, m.quotient()}, {-1, -s, m.canonical()}});
    case ConstructionKind::h1_mu4:
      return DimExpr::combination(
          {{1, 0, m.quotient()}, {-1, -s, m.koszul_h1()}, {1, t - 2 * s, m.canonical()}});
    case ConstructionKind::nb:
      return DimExpr::combination(
          {{1, 0, m.quotient()}, {-1, -s, m.normal()}, {1, t - 2 * s, m.canonical()}});
    case ConstructionKind::h1_mu5:
      return DimExpr::combination({{1, 0, m.quotient()},
                                   {-1, -s, m.koszul_h1()},
                                   {1, -2 * s, m.koszul_h2()},
                                   {-1, t - 3 * s, m.canonical()}});
  }
  throw std::invalid_argument("sequence_hilbert_expr: unknown construction");
}

/// True iff the mapping-cone resolution and the defining exact sequence give
/// the same Hilbert function on [0, v0 + 10].
inline bool hilbert_function_crosscheck(const Codim2Modules& m, const ConstructionSpec& c)
{
  const ResolutionSpec res = mapping_cone_resolution(m.data(), c);
  const DimExpr from_resolution = resolution_alternating_sum(res);
  const DimExpr from_sequence = sequence_hilbert_expr(m, c);
  const long long v0 = from_resolution.stability_bound().value_or(0);
  for (long long v = 0; v <= v0 + 10; ++v)
    if (from_resolution.eval(v) != from_sequence.eval(v)) return false;
  return true;
}

}  // namespace gorfam

#endif  // GORFAM_RESOLUTION_HPP
