#ifndef GORFAM_DIM_EXPR_HPP
#define GORFAM_DIM_EXPR_HPP

#include <gorfam/errors.hpp>
#include <gorfam/free_module.hpp>
#include <gorfam/numeric.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace gorfam {

/// Formal signed combination of degree-shifted graded dimension functions.
/// Leaves are free modules; interior nodes are integer-weighted sums of
/// shifted subexpressions, so value(v) = sum coeff_i * child_i(v + shift_i).
/// Nodes are immutable and shared; evaluation is memoized per (node, degree)
/// behind a mutex, so concurrent evaluation from several threads is safe.
class DimExpr {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Child {
    long long coeff;
    long long shift;
    NodePtr node;
  };

  struct Node {
    std::optional<FreeModule> leaf;  // set iff this is a leaf
    std::vector<Child> children;     // used iff not a leaf

    mutable std::mutex memo_mutex;
    mutable std::unordered_map<long long, Int> memo;

    Int eval(long long v) const
    {
      {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
      }
      Int value = 0;
      if (leaf) {
        value = leaf->dim(v);
      } else {
        for (const Child& c : children)
          if (c.coeff != 0) value += Int(c.coeff) * c.node->eval(v + c.shift);
      }
      std::lock_guard<std::mutex> lock(memo_mutex);
      memo.emplace(v, value);
      return value;
    }

    int num_vars() const
    {
      if (leaf) return leaf->num_vars();
      for (const Child& c : children) {
        int n = c.node->num_vars();
        if (n != 0) return n;
      }
      return 0;
    }

    void flatten(long long coeff, long long shift, std::map<long long, long long>& out) const
    {
      if (leaf) {
        for (long long a : leaf->twists()) out[a + shift] += coeff;
        return;
      }
      for (const Child& c : children) c.node->flatten(coeff * c.coeff, shift + c.shift, out);
    }
  };

public:
  /// The zero expression.
  DimExpr() : node_(std::make_shared<Node>()) {}

  static DimExpr leaf(FreeModule f)
  {
    auto n = std::make_shared<Node>();
    n->leaf = std::move(f);
    return DimExpr(std::move(n));
  }

  /// Builds sum of coeff * expr(v + shift) terms in one node.
  static DimExpr combination(std::vector<std::tuple<long long, long long, DimExpr>> terms)
  {
    auto n = std::make_shared<Node>();
    int vars = 0;
    for (auto& [coeff, shift, expr] : terms) {
      int ev = expr.num_vars();
      if (vars == 0)
        vars = ev;
      else if (ev != 0 && ev != vars)
        throw std::invalid_argument("DimExpr: mixed ambient rings");
      n->children.push_back(Child{coeff, shift, expr.node_});
    }
    return DimExpr(std::move(n));
  }

  Int eval(long long v) const { return node_->eval(v); }
  Int operator()(long long v) const { return eval(v); }

  /// e.shifted(c)(v) = e(v + c); this is the degree shift of twisting by c.
  DimExpr shifted(long long c) const { return combination({{1, c, *this}}); }
  DimExpr scaled(long long c) const { return combination({{c, 0, *this}}); }

  friend DimExpr operator+(const DimExpr& a, const DimExpr& b)
  {
    return combination({{1, 0, a}, {1, 0, b}});
  }
  friend DimExpr operator-(const DimExpr& a, const DimExpr& b)
  {
    return combination({{1, 0, a}, {-1, 0, b}});
  }

  int num_vars() const { return node_->num_vars(); }

  /// Signed multiset of effective leaf twists: value(v) = sum over entries
  /// (a -> c) of c * dim R(a)_v. Zero coefficients are dropped.
  std::map<long long, long long> flatten() const
  {
    std::map<long long, long long> out;
    node_->flatten(1, 0, out);
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

  /// Least v0 such that every binomial argument is nonnegative for v >= v0;
  /// nullopt when there are no leaf summands at all.
  std::optional<long long> stability_bound() const
  {
    auto flat = flatten();
    if (flat.empty()) return std::nullopt;
    return -flat.begin()->first;  // max over twists a of (-a)
  }

private:
  explicit DimExpr(NodePtr n) : node_(std::move(n)) {}
  NodePtr node_;
};

inline Int eval(const DimExpr& e, long long v) { return e.eval(v); }

/// Exact polynomial representation of a dimension expression together with
/// the degree from which it is valid.
struct HilbertPolynomial {
  Polynomial poly;
  long long stability_bound = 0;
};

inline HilbertPolynomial hilbert_polynomial(const DimExpr& e)
{
  const int n = e.num_vars();
  HilbertPolynomial out;
  auto flat = e.flatten();
  if (flat.empty()) return out;
  for (const auto& [twist, coeff] : flat)
    out.poly.add_scaled(Polynomial::binomial_in(twist + n - 1, n - 1), Rat(coeff));
  out.stability_bound = -flat.begin()->first;
  return out;
}

/// Hilbert-function values (H(0), ..., H(soc)) of an Artinian expression,
/// where soc is the largest degree with a nonzero value. Empty when the
/// expression vanishes identically. Throws NotArtinianError when the Hilbert
/// polynomial is nonzero.
inline std::vector<Int> h_vector(const DimExpr& e)
{
  HilbertPolynomial hp = hilbert_polynomial(e);
  if (!hp.poly.is_zero()) throw NotArtinianError("nonzero Hilbert polynomial");
  std::vector<Int> values;
  const long long top = hp.stability_bound > 0 ? hp.stability_bound : 0;
  for (long long v = 0; v <= top; ++v) values.push_back(e.eval(v));
  while (!values.empty() && values.back() == 0) values.pop_back();
  return values;
}

}  // namespace gorfam

#endif  // GORFAM_DIM_EXPR_HPP
