#ifndef GORFAM_TEST_SUPPORT_HPP
#define GORFAM_TEST_SUPPORT_HPP

#include <gorfam/codim2.hpp>
#include <gorfam/series.hpp>

#include <random>
#include <vector>

namespace gorfam::testing {

/// Values of the expression on [lo, hi] computed through the power-series
/// oracle (prefix sums only), independently of the binomial evaluation path.
inline std::vector<Int> oracle_window(const DimExpr& e, long long lo, long long hi)
{
  std::vector<std::pair<long long, long long>> numerator;
  for (const auto& [twist, coeff] : e.flatten()) numerator.push_back({coeff, twist + lo});
  return series_oracle(numerator, e.num_vars() == 0 ? 1 : e.num_vars(), hi - lo);
}

/// Uniformly sampled degree data that a genuine codimension-two CM quotient
/// realizes: ascending n1, relation degrees n2_j = n1_{j+1} + f_j with
/// positive excesses f summing to n1_1 (a monomial staircase in two
/// variables with these corner degrees always exists).
class RandomData {
public:
  explicit RandomData(unsigned seed) : rng_(seed) {}

  Codim2Data next()
  {
    for (;;) {
      const int mu = pick(3, 5);
      const int num_vars = pick(4, 6);
      std::vector<int> n1;
      n1.push_back(pick(mu - 1, 6));
      for (int i = 1; i < mu; ++i) n1.push_back(pick(n1.back(), 8));

      std::vector<int> parts(mu - 1, 1);
      for (int extra = n1.front() - (mu - 1); extra > 0; --extra) ++parts[pick(0, mu - 2)];
      std::vector<int> n2;
      for (int j = 0; j + 1 < mu; ++j) n2.push_back(n1[j + 1] + parts[j]);
      std::sort(n2.begin(), n2.end());
      if (n2.back() > 9) continue;

      Codim2Data d{num_vars, n1, n2};
      d.validate();
      return d;
    }
  }

private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937 rng_;
};

}  // namespace gorfam::testing

#endif  // GORFAM_TEST_SUPPORT_HPP
