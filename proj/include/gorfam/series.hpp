#ifndef GORFAM_SERIES_HPP
#define GORFAM_SERIES_HPP

#include <gorfam/numeric.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gorfam {

/// Coefficients 0..v_max of (sum_i c_i t^{-a_i}) / (1-t)^N computed by
/// truncated power-series arithmetic: the denominator is expanded by N
/// successive prefix sums, so no binomial is ever evaluated. This is the
/// independent oracle used by the test suites to cross-check every
/// binomial-based dimension formula.
///
/// numerator: list of (coefficient c, twist a); the summand R(a) of a free
/// module contributes t^{-a} to the numerator of its Hilbert series.
inline std::vector<Int> series_oracle(const std::vector<std::pair<long long, long long>>& numerator,
                                      int num_vars, long long v_max)
{
  if (num_vars < 1) throw std::invalid_argument("series_oracle: num_vars must be >= 1");
  if (v_max < 0) throw std::invalid_argument("series_oracle: v_max must be >= 0");

  // Positive twists put numerator monomials at negative exponents; work in a
  // window shifted by E so every exponent is a valid index.
  long long shift = 0;
  for (const auto& [c, a] : numerator) shift = std::max(shift, a);

  std::vector<Int> s(static_cast<std::size_t>(v_max + shift + 1), Int(0));
  for (const auto& [c, a] : numerator) {
    const long long idx = shift - a;  // exponent of t^{-a}, shifted
    if (idx >= 0 && idx < static_cast<long long>(s.size())) s[static_cast<std::size_t>(idx)] += c;
  }
  for (int round = 0; round < num_vars; ++round)
    for (std::size_t k = 1; k < s.size(); ++k) s[k] += s[k - 1];

  return std::vector<Int>(s.begin() + static_cast<std::ptrdiff_t>(shift), s.end());
}

}  // namespace gorfam

#endif  // GORFAM_SERIES_HPP
