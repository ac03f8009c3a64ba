#include "test_support.hpp"

#include <gorfam/codim2.hpp>
#include <gorfam/dim_expr.hpp>
#include <gorfam/series.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <future>

using namespace gorfam;

namespace {
const Codim2Data kLinearMu4N4{4, {3, 3, 3, 3}, {4, 4, 4}};
const Codim2Data kLinearMu4N6{6, {3, 3, 3, 3}, {4, 4, 4}};
}  // namespace

TEST_CASE("dim_free counts monomials of twisted free modules")
{
  REQUIRE(dim_free(FreeModule::ring(4), 2) == 10);
  const FreeModule f(4, {-3, -3, -3, -3});
  REQUIRE(dim_free(f, 3) == 4);   // one constant per summand
  REQUIRE(dim_free(f, 4) == 16);  // 4 * C(4,3)
  REQUIRE(dim_free(f, 2) == 0);
}

TEST_CASE("dim_free is nonnegative and vanishes below the top twist")
{
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> twist(-9, 9), nvars(1, 6), rank(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long long> ts;
    for (int i = 0, r = rank(rng); i < r; ++i) ts.push_back(twist(rng));
    const FreeModule f(nvars(rng), ts);
    for (long long v = -15; v <= 15; ++v) {
      REQUIRE(f.dim(v) >= 0);
      if (!ts.empty() && v < -*std::max_element(ts.begin(), ts.end()))
        REQUIRE(f.dim(v) == 0);
    }
  }
}

TEST_CASE("eval of the zero expression and of basic module expressions")
{
  const DimExpr zero;
  for (long long v : {-5LL, 0LL, 17LL}) REQUIRE(eval(zero, v) == 0);

  Codim2Modules m(kLinearMu4N4);
  REQUIRE(eval(m.ideal(), 4) == 13);  // 4 dim R_1 - 3 dim R_0
  REQUIRE(eval(m.quotient(), 3) == 16);
}

TEST_CASE("shift semantics: e.shifted(c)(v) = e(v + c)")
{
  Codim2Modules m(kLinearMu4N4);
  const DimExpr shifted = m.quotient().shifted(-2);
  for (long long v = -3; v <= 12; ++v) REQUIRE(shifted.eval(v) == m.quotient().eval(v - 2));
}

TEST_CASE("hilbert_polynomial of codimension-two quotients")
{
  SECTION("curve in P^3: 6v - 2 with stability bound 4")
  {
    Codim2Modules m(kLinearMu4N4);
    HilbertPolynomial hp = hilbert_polynomial(m.quotient());
    REQUIRE(hp.stability_bound == 4);
    REQUIRE(hp.poly.coefficients() == std::vector<Rat>{Rat(-2), Rat(6)});
  }
  SECTION("threefold in P^5: v^3 + 2v^2 + 2v + 1")
  {
    Codim2Modules m(kLinearMu4N6);
    HilbertPolynomial hp = hilbert_polynomial(m.quotient());
    REQUIRE(hp.poly.coefficients() == std::vector<Rat>{Rat(1), Rat(2), Rat(2), Rat(1)});
  }
  SECTION("zero module")
  {
    HilbertPolynomial hp = hilbert_polynomial(DimExpr());
    REQUIRE(hp.poly.is_zero());
  }
}

TEST_CASE("hilbert_polynomial agrees with eval beyond the stability bound")
{
  testing::RandomData gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    Codim2Modules m(gen.next());
    for (const DimExpr* e : {&m.quotient(), &m.normal(), &m.conormal()}) {
      HilbertPolynomial hp = hilbert_polynomial(*e);
      for (long long v = hp.stability_bound; v <= hp.stability_bound + 10; ++v) {
        const Rat expected = hp.poly(v);
        REQUIRE(boost::multiprecision::denominator(expected) == 1);
        REQUIRE(boost::multiprecision::numerator(expected) == e->eval(v));
      }
    }
  }
}

TEST_CASE("h_vector requires an Artinian expression")
{
  Codim2Modules m(kLinearMu4N4);
  REQUIRE_THROWS_AS(h_vector(m.quotient()), NotArtinianError);
  REQUIRE(h_vector(DimExpr()).empty());
}

TEST_CASE("h_vector of a Gorenstein section algebra")
{
  // H_A(v) = H_B(v) - dim(H_1)_{v-s} + dim(K_B)_{v+t-2s} for the rank-two
  // first-Koszul-homology section, here with s = 1 and t = -8.
  Codim2Modules m(kLinearMu4N4);
  const long long s = 1, t = m.data().twist_h1();
  const DimExpr ha = DimExpr::combination(
      {{1, 0, m.quotient()}, {-1, -s, m.koszul_h1()}, {1, t - 2 * s, m.canonical()}});
  const std::vector<Int> expected{1, 4, 10, 16, 22, 25, 22, 16, 10, 4, 1};
  REQUIRE(h_vector(ha) == expected);

  // Total dimension equals the plain sum of values up to the socle.
  Int total = 0;
  for (long long v = 0; v <= 10; ++v) total += ha.eval(v);
  Int listed = 0;
  for (const Int& h : expected) listed += h;
  REQUIRE(total == listed);
}

TEST_CASE("series_oracle base cases")
{
  REQUIRE(series_oracle({{1, 0}}, 4, 2) == std::vector<Int>{1, 4, 10});
  // numerator 1 - t over one variable: constants only
  REQUIRE(series_oracle({{1, 0}, {-1, -1}}, 1, 4) == std::vector<Int>{1, 0, 0, 0, 0});
}

TEST_CASE("series_oracle matches eval for the linear mu=4 quotient data")
{
  Codim2Modules m(kLinearMu4N4);
  // numerator 1 - 4t^3 + 3t^4 over (1-t)^4
  const auto coeffs = series_oracle({{1, 0}, {-4, -3}, {3, -4}}, 4, 12);
  for (long long v = 0; v <= 12; ++v) REQUIRE(coeffs[static_cast<std::size_t>(v)] == m.quotient().eval(v));
}

TEST_CASE("series_oracle matches eval for every module constructor")
{
  testing::RandomData gen(23);
  for (int trial = 0; trial < 25; ++trial) {
    Codim2Modules m(gen.next());
    const DimExpr* exprs[] = {&m.ideal(),          &m.quotient(),  &m.canonical(),
                              &m.ideal_square(),   &m.conormal(),  &m.normal(),
                              &m.koszul_h1(),      &m.h1_dual(),   &m.koszul_h2(),
                              &m.s2_canonical(),   &m.hom_s2h1_canonical(),
                              &m.hom_conormal_conormal()};
    for (const DimExpr* e : exprs) {
      const auto window = testing::oracle_window(*e, -20, 40);
      for (long long v = -20; v <= 40; ++v)
        REQUIRE(window[static_cast<std::size_t>(v + 20)] == e->eval(v));
    }
    const DimExpr kdual = m.canonical_dual();
    const auto window = testing::oracle_window(kdual, -20, 40);
    for (long long v = -20; v <= 40; ++v)
      REQUIRE(window[static_cast<std::size_t>(v + 20)] == kdual.eval(v));
  }
}

TEST_CASE("concurrent evaluation of one shared expression is consistent")
{
  Codim2Modules m(kLinearMu4N6);
  const DimExpr& e = m.hom_conormal_conormal();
  std::vector<Int> sequential;
  for (long long v = -5; v <= 25; ++v) sequential.push_back(e.eval(v));

  Codim2Modules fresh(kLinearMu4N6);
  const DimExpr& f = fresh.hom_conormal_conormal();
  std::vector<std::future<std::vector<Int>>> futures;
  for (int worker = 0; worker < 4; ++worker)
    futures.push_back(std::async(std::launch::async, [&f] {
      std::vector<Int> out;
      for (long long v = -5; v <= 25; ++v) out.push_back(f.eval(v));
      return out;
    }));
  for (auto& fut : futures) REQUIRE(fut.get() == sequential);
}
