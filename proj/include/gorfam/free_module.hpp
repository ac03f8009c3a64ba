#ifndef GORFAM_FREE_MODULE_HPP
#define GORFAM_FREE_MODULE_HPP

#include <gorfam/numeric.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace gorfam {

/// Finite direct sum of twisted rank-one free modules R(a_1) + ... + R(a_r)
/// over a polynomial ring in `num_vars` variables. The empty sum is the zero
/// module. Only the twist multiset is stored; no maps, no elements.
class FreeModule {
public:
  FreeModule(int num_vars, std::vector<long long> twists)
      : num_vars_(num_vars), twists_(std::move(twists))
  {
    if (num_vars_ < 1) throw std::invalid_argument("FreeModule: num_vars must be >= 1");
    std::sort(twists_.begin(), twists_.end());
  }

  static FreeModule zero(int num_vars) { return FreeModule(num_vars, {}); }
  /// The ring itself, R = R(0).
  static FreeModule ring(int num_vars) { return FreeModule(num_vars, {0}); }

  int num_vars() const { return num_vars_; }
  const std::vector<long long>& twists() const { return twists_; }
  std::size_t rank() const { return twists_.size(); }
  bool is_zero() const { return twists_.empty(); }

  /// dim of the degree-v graded piece: sum of C(v + a + N - 1, N - 1),
  /// where a summand contributes 0 when v + a < 0.
  Int dim(long long v) const
  {
    Int total = 0;
    for (long long a : twists_)
      if (v + a >= 0) total += binomial(v + a + num_vars_ - 1, num_vars_ - 1);
    return total;
  }

  /// F(c): every summand R(a) becomes R(a + c), so F(c)_v = F_{v+c}.
  FreeModule twisted(long long c) const
  {
    std::vector<long long> t = twists_;
    for (auto& a : t) a += c;
    return FreeModule(num_vars_, std::move(t));
  }

  /// Hom(F, R): every R(a) becomes R(-a).
  FreeModule dual() const
  {
    std::vector<long long> t;
    t.reserve(twists_.size());
    for (long long a : twists_) t.push_back(-a);
    return FreeModule(num_vars_, std::move(t));
  }

  /// Removes a single summand R(a); throws if no summand has that twist.
  FreeModule without_one(long long a) const
  {
    std::vector<long long> t = twists_;
    auto it = std::find(t.begin(), t.end(), a);
    if (it == t.end()) throw std::invalid_argument("FreeModule::without_one: twist not present");
    t.erase(it);
    return FreeModule(num_vars_, std::move(t));
  }

  /// Twist -> multiplicity view, convenient for tables and duality checks.
  std::map<long long, std::size_t> twist_multiplicities() const
  {
    std::map<long long, std::size_t> m;
    for (long long a : twists_) ++m[a];
    return m;
  }

  friend bool operator==(const FreeModule& x, const FreeModule& y)
  {
    return x.num_vars_ == y.num_vars_ && x.twists_ == y.twists_;
  }

private:
  int num_vars_;
  std::vector<long long> twists_;  // sorted
};

inline Int dim_free(const FreeModule& f, long long v) { return f.dim(v); }

inline FreeModule direct_sum(const FreeModule& x, const FreeModule& y)
{
  if (x.num_vars() != y.num_vars())
    throw std::invalid_argument("direct_sum: ambient rings differ");
  std::vector<long long> t = x.twists();
  t.insert(t.end(), y.twists().begin(), y.twists().end());
  return FreeModule(x.num_vars(), std::move(t));
}

inline FreeModule tensor(const FreeModule& x, const FreeModule& y)
{
  if (x.num_vars() != y.num_vars())
    throw std::invalid_argument("tensor: ambient rings differ");
  std::vector<long long> t;
  t.reserve(x.rank() * y.rank());
  for (long long a : x.twists())
    for (long long b : y.twists()) t.push_back(a + b);
  return FreeModule(x.num_vars(), std::move(t));
}

/// Second exterior power: R(a_i + a_j) over index pairs i < j.
inline FreeModule wedge2(const FreeModule& f)
{
  const auto& t = f.twists();
  std::vector<long long> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) out.push_back(t[i] + t[j]);
  return FreeModule(f.num_vars(), std::move(out));
}

/// Third exterior power: index triples i < j < k.
inline FreeModule wedge3(const FreeModule& f)
{
  const auto& t = f.twists();
  std::vector<long long> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      for (std::size_t k = j + 1; k < t.size(); ++k) out.push_back(t[i] + t[j] + t[k]);
  return FreeModule(f.num_vars(), std::move(out));
}

/// Second symmetric power: index pairs i <= j.
inline FreeModule sym2(const FreeModule& f)
{
  const auto& t = f.twists();
  std::vector<long long> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i; j < t.size(); ++j) out.push_back(t[i] + t[j]);
  return FreeModule(f.num_vars(), std::move(out));
}

}  // namespace gorfam

#endif  // GORFAM_FREE_MODULE_HPP
