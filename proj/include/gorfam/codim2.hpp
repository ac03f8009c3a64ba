#ifndef GORFAM_CODIM2_HPP
#define GORFAM_CODIM2_HPP

#include <gorfam/dim_expr.hpp>
#include <gorfam/errors.hpp>
#include <gorfam/free_module.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

namespace gorfam {

/// Betti degrees of a codimension-two Cohen-Macaulay quotient B = R/I with
/// minimal presentation 0 -> (+)R(-n2_j) -> (+)R(-n1_i) -> I -> 0:
/// mu generator degrees n1 and mu-1 relation degrees n2 over a polynomial
/// ring in num_vars variables.
struct Codim2Data {
  int num_vars = 0;
  std::vector<int> gen_degrees;  // n1
  std::vector<int> rel_degrees;  // n2

  int mu() const { return static_cast<int>(gen_degrees.size()); }
  long long sum_gen_degrees() const
  {
    return std::accumulate(gen_degrees.begin(), gen_degrees.end(), 0LL);
  }
  int min_gen() const { return *std::min_element(gen_degrees.begin(), gen_degrees.end()); }
  int max_gen() const { return *std::max_element(gen_degrees.begin(), gen_degrees.end()); }
  int min_rel() const { return *std::min_element(rel_degrees.begin(), rel_degrees.end()); }
  int max_rel() const { return *std::max_element(rel_degrees.begin(), rel_degrees.end()); }

  /// dim B - 2, the projective dimension of Proj(B).
  int base_dim() const { return num_vars - 2; }
  /// Twist t with wedge^(mu-2) H_1 = K_B(t): t = N - sum n1_i.
  long long twist_h1() const { return num_vars - sum_gen_degrees(); }
  /// Twist t with wedge^2 N_B = K_B(t): t = N.
  long long twist_nb() const { return num_vars; }
  /// Castelnuovo-Mumford regularity of I: max n2_j - 1 in codimension two.
  long long regularity() const { return max_rel() - 1; }

  void validate() const
  {
    if (num_vars < 1) throw InputError(InputErrorKind::schema, "num_vars must be >= 1");
    if (gen_degrees.size() < 3)
      throw InputError(InputErrorKind::schema, "need at least 3 generator degrees");
    if (rel_degrees.size() + 1 != gen_degrees.size())
      throw InputError(InputErrorKind::schema,
                       "need exactly one fewer relation degree than generator degrees");
    for (int d : gen_degrees)
      if (d < 1) throw InputError(InputErrorKind::schema, "generator degrees must be positive");
    for (int d : rel_degrees)
      if (d < 1) throw InputError(InputErrorKind::schema, "relation degrees must be positive");

    const long long sum_rel = std::accumulate(rel_degrees.begin(), rel_degrees.end(), 0LL);
    if (sum_rel != sum_gen_degrees()) {
      std::ostringstream msg;
      msg << "sum of relation degrees (" << sum_rel << ") != sum of generator degrees ("
          << sum_gen_degrees() << ")";
      throw InputError(InputErrorKind::hilbert_burch, msg.str());
    }
    for (int d : rel_degrees)
      if (d <= min_gen())
        throw InputError(InputErrorKind::minimality,
                         "every relation degree must exceed the least generator degree");
    for (int d : gen_degrees)
      if (d >= max_rel())
        throw InputError(InputErrorKind::minimality,
                         "the largest relation degree must exceed every generator degree");
  }

  friend bool operator==(const Codim2Data& a, const Codim2Data& b)
  {
    return a.num_vars == b.num_vars && a.gen_degrees == b.gen_degrees &&
           a.rel_degrees == b.rel_degrees;
  }
};

/// Graded dimension expressions for the modules derived from a codimension-two
/// CM quotient B. Every constructor is the Euler characteristic of a
/// four-term exact sequence (or a shorter presentation) built from the Betti
/// degrees, so each value is exact. All expressions share one DAG, so the
/// per-node memo caches serve every consumer of this object.
class Codim2Modules {
public:
  explicit Codim2Modules(Codim2Data data) : d_(std::move(data))
  {
    d_.validate();
    const int N = d_.num_vars;
    std::vector<long long> g1t, g2t;
    for (int a : d_.gen_degrees) g1t.push_back(-a);
    for (int b : d_.rel_degrees) g2t.push_back(-b);
    g1_ = FreeModule(N, g1t);
    g2_ = FreeModule(N, g2t);
    ring_ = DimExpr::leaf(FreeModule::ring(N));

    // 0 -> G2 -> G1 -> I -> 0 and B = R/I.
    ideal_ = DimExpr::leaf(*g1_) - DimExpr::leaf(*g2_);
    quotient_ = ring_ - ideal_;

    // R-dual of the resolution of B: 0 -> R -> G1* -> G2* -> K_B(N) -> 0.
    canonical_ =
        (DimExpr::leaf(g2_->dual()) - DimExpr::leaf(g1_->dual()) + ring_).shifted(-N);

    // 0 -> wedge^2 G2 -> G1 (x) G2 -> S2 G1 -> I^2 -> 0.
    ideal_square_ = DimExpr::leaf(sym2(*g1_)) - DimExpr::leaf(tensor(*g1_, *g2_)) +
                    DimExpr::leaf(wedge2(*g2_));
    conormal_ = ideal_ - ideal_square_;

    // 0 -> R -> (+)I(n1_i) -> (+)I(n2_j) -> N_B -> 0.
    {
      std::vector<std::tuple<long long, long long, DimExpr>> terms;
      for (int b : d_.rel_degrees) terms.push_back({1, b, ideal_});
      for (int a : d_.gen_degrees) terms.push_back({-1, a, ideal_});
      terms.push_back({1, 0, ring_});
      normal_ = DimExpr::combination(std::move(terms));
    }

    // 0 -> wedge^2 G2 -> wedge^2 G1 -> G2 -> H_1 -> 0.
    koszul_h1_ = DimExpr::leaf(*g2_) - DimExpr::leaf(wedge2(*g1_)) + DimExpr::leaf(wedge2(*g2_));

    // 0 -> N_B -> (+)B(n1_i) -> H_1* -> 0.
    {
      std::vector<std::tuple<long long, long long, DimExpr>> terms;
      for (int a : d_.gen_degrees) terms.push_back({1, a, quotient_});
      terms.push_back({-1, 0, normal_});
      h1_dual_ = DimExpr::combination(std::move(terms));
    }

    // 0 -> wedge^3 G2 -> wedge^3 G1 -> wedge^2 G2 -> H_2 -> 0.
    koszul_h2_ = DimExpr::leaf(wedge2(*g2_)) - DimExpr::leaf(wedge3(*g1_)) +
                 DimExpr::leaf(wedge3(*g2_));

    // 0 -> wedge^2 G1* -> G1* (x) G2* -> S2 G2* -> S2(K_B)(2N) -> 0.
    s2_canonical_ = (DimExpr::leaf(sym2(g2_->dual())) -
                     DimExpr::leaf(tensor(g1_->dual(), g2_->dual())) +
                     DimExpr::leaf(wedge2(g1_->dual())))
                        .shifted(-2 * N);

    // 0 -> Hom(S2 H_1, K_B) -> K_B (x) S2((+)B(n2_j)) -> (+)S2(K_B)(n2_j + N) -> 0,
    // with the right map surjective, twisted so that the target is K_B(t).
    {
      const long long t = d_.twist_h1();
      std::vector<std::tuple<long long, long long, DimExpr>> terms;
      const auto& rel = d_.rel_degrees;
      for (std::size_t j = 0; j < rel.size(); ++j)
        for (std::size_t jp = j; jp < rel.size(); ++jp)
          terms.push_back({1, t + rel[j] + rel[jp], canonical_});
      for (int b : rel) terms.push_back({-1, t + b + N, s2_canonical_});
      hom_s2h1_canonical_ = DimExpr::combination(std::move(terms));
    }

    // 0 -> Hom(I/I^2, I/I^2) -> (+)(I/I^2)(n1_i) -> (+)(I/I^2)(n2_j) -> N_B -> 0.
    {
      std::vector<std::tuple<long long, long long, DimExpr>> terms;
      for (int a : d_.gen_degrees) terms.push_back({1, a, conormal_});
      for (int b : d_.rel_degrees) terms.push_back({-1, b, conormal_});
      terms.push_back({1, 0, normal_});
      hom_conormal_conormal_ = DimExpr::combination(std::move(terms));
    }
  }

  const Codim2Data& data() const { return d_; }
  const FreeModule& g1() const { return *g1_; }
  const FreeModule& g2() const { return *g2_; }

  const DimExpr& ring() const { return ring_; }
  /// dim I_v.
  const DimExpr& ideal() const { return ideal_; }
  /// H_B(v) = dim B_v.
  const DimExpr& quotient() const { return quotient_; }
  /// dim (K_B)_v, canonical module.
  const DimExpr& canonical() const { return canonical_; }
  /// dim (I^2)_v.
  const DimExpr& ideal_square() const { return ideal_square_; }
  /// eta(v) = dim (I/I^2)_v.
  const DimExpr& conormal() const { return conormal_; }
  /// dim (N_B)_v, normal module.
  const DimExpr& normal() const { return normal_; }
  /// dim (H_1)_v, first Koszul homology of a minimal generating set of I.
  const DimExpr& koszul_h1() const { return koszul_h1_; }
  /// dim (H_1*)_v.
  const DimExpr& h1_dual() const { return h1_dual_; }
  /// dim (H_2)_v, second Koszul homology (zero when mu = 3).
  const DimExpr& koszul_h2() const { return koszul_h2_; }
  /// dim S2(K_B)_v.
  const DimExpr& s2_canonical() const { return s2_canonical_; }
  /// dim Hom(S2 H_1, K_B(t))_v with t = N - sum n1_i; the corresponding Ext^1
  /// vanishes, so this equals the gamma invariant of S2 H_1.
  const DimExpr& hom_s2h1_canonical() const { return hom_s2h1_canonical_; }
  /// dim Hom(I/I^2, I/I^2)_v.
  const DimExpr& hom_conormal_conormal() const { return hom_conormal_conormal_; }

  /// dim (K_B*)_v = sum_j H_B(v + N - n2_j) - sum_i H_B(v + N - n1_i) + eta(v + N).
  DimExpr canonical_dual() const
  {
    std::vector<std::tuple<long long, long long, DimExpr>> terms;
    const int N = d_.num_vars;
    for (int b : d_.rel_degrees) terms.push_back({1, N - b, quotient_});
    for (int a : d_.gen_degrees) terms.push_back({-1, N - a, quotient_});
    terms.push_back({1, N, conormal_});
    return DimExpr::combination(std::move(terms));
  }

  /// delta(H_1)_v = hom(I/I^2, H_1)_v - ext^1(I/I^2, H_1)_v, as the Euler
  /// characteristic of Hom(I/I^2, -) applied to 0 -> H_1 -> (+)B(-n1_i) -> I/I^2 -> 0.
  Int delta_h1(long long v) const
  {
    Int acc = 0;
    for (int a : d_.gen_degrees) acc += normal_.eval(v - a);
    return acc - hom_conormal_conormal_.eval(v);
  }

  /// delta(K_B(t'))_v, Euler characteristic of Hom(-, K_B(t')) applied to the
  /// same sequence; the Hom(H_1, K_B(t')) term is identified with a shift of
  /// B, H_1 or H_2 according to mu = 3, 4, 5 via duality of the Koszul
  /// homology modules.
  Int delta_canonical(long long t_prime, long long v) const
  {
    const DimExpr& partner = koszul_partner();
    Int acc = 0;
    for (int a : d_.gen_degrees) acc += canonical_.eval(v + t_prime + a);
    return acc - partner.eval(v + t_prime - d_.twist_h1());
  }

  /// delta(H_2)_v for mu = 5. Writing v = -2s, the value is certified to be 0
  /// exactly when 2s > max n2_j - 2 min n2_j (H_2 is generated in degrees
  /// >= 2 min n2_j and presented in degrees <= ...anchored at max n2_j);
  /// outside that range no value is certified.
  std::optional<Int> delta_h2(long long v) const
  {
    if (d_.mu() != 5) throw WrongMuError("delta_h2 is only available for mu = 5");
    if (-v > d_.max_rel() - 2LL * d_.min_rel()) return Int(0);
    return std::nullopt;
  }

  /// delta(N_B)_v for mu = 3, Euler characteristic of Hom(I/I^2, -) applied to
  /// 0 -> N_B -> (+)B(n1_i) -> H_1* -> 0 using Hom(I/I^2, K_B*) = (I/I^2)(N).
  Int delta_normal_mu3(long long v) const
  {
    if (d_.mu() != 3) throw WrongMuError("delta_normal is only available for mu = 3");
    Int acc = 0;
    for (int a : d_.gen_degrees) acc += normal_.eval(v + a);
    return acc - conormal_.eval(v + d_.num_vars);
  }

  /// hom(H_1, H_1)_0. Certified only when 2 min n1_i > max n2_j: then
  /// hom(I/I^2, H_1)_0 = 0 and ext^1(I/I^2, H_1)_0 = dim R_0 = 1, and the
  /// Euler characteristic of Hom(-, H_1) applied to the presentation of
  /// I/I^2 gives hom(H_1, H_1)_0 = sum_i dim(H_1)_{n1_i} + 1.
  std::optional<Int> hom_h1_h1_deg0() const
  {
    if (2LL * d_.min_gen() <= d_.max_rel()) return std::nullopt;
    Int acc = 1;
    for (int a : d_.gen_degrees) acc += koszul_h1_.eval(a);
    return acc;
  }

  /// ext^1(I/I^2, H_1)_{-s}: 0 when s > max n2_j - min n2_j; dim R_{-s} when
  /// max n2_j - 2 min n1_i < s <= max n2_j - min n2_j; otherwise uncertified.
  std::optional<Int> ext1_conormal_h1(long long s) const
  {
    if (s > d_.max_rel() - static_cast<long long>(d_.min_rel())) return Int(0);
    if (s > d_.max_rel() - 2LL * d_.min_gen()) return ring_.eval(-s);
    return std::nullopt;
  }

  /// The module Hom(H_1, K_B)(-t) appearing opposite H_1 in the structure
  /// sequence: B for mu = 3, H_1 for mu = 4, H_2 for mu = 5.
  const DimExpr& koszul_partner() const
  {
    switch (d_.mu()) {
      case 3: return quotient_;
      case 4: return koszul_h1_;
      case 5: return koszul_h2_;
      default: throw WrongMuError("no dual Koszul identification beyond mu = 5");
    }
  }

private:
  Codim2Data d_;
  std::optional<FreeModule> g1_, g2_;
  DimExpr ring_, ideal_, quotient_, canonical_, ideal_square_, conormal_, normal_, koszul_h1_,
      h1_dual_, koszul_h2_, s2_canonical_, hom_s2h1_canonical_, hom_conormal_conormal_;
};

}  // namespace gorfam

#endif  // GORFAM_CODIM2_HPP
