#ifndef GORFAM_NUMERIC_HPP
#define GORFAM_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace gorfam {

// All graded dimensions are exact integers; all polynomial coefficients are
// exact rationals. No floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// C(n, k) for integer n and small k >= 0; zero when n < k or n < 0.
inline Int binomial(long long n, int k)
{
  if (k < 0 || n < 0 || n < k) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i)
  }
  return r;
}

/// Univariate polynomial over Q, dense coefficient vector, constant term first.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// C(v + offset, k) as a polynomial in v.
  static Polynomial binomial_in(long long offset, int k)
  {
    std::vector<Rat> p{Rat(1)};
    for (int j = 0; j < k; ++j) {
      // multiply by (v + offset - j)
      std::vector<Rat> q(p.size() + 1, Rat(0));
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i + 1] += p[i];
        q[i] += p[i] * Rat(offset - j);
      }
      p = std::move(q);
    }
    Rat fact = 1;
    for (int j = 2; j <= k; ++j) fact *= j;
    for (auto& c : p) c /= fact;
    Polynomial out;
    out.coeffs_ = std::move(p);
    out.trim();
    return out;
  }

  const std::vector<Rat>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

  Rat operator()(long long v) const
  {
    Rat acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
    return acc;
  }

  Rat coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

  Polynomial& add_scaled(const Polynomial& other, const Rat& scale)
  {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += scale * other.coeffs_[i];
    trim();
    return *this;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
  void trim()
  {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rat> coeffs_;
};

}  // namespace gorfam

#endif  // GORFAM_NUMERIC_HPP
