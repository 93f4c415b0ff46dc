// Independent reference implementations used by the tests: a tree
// evaluator for random expressions and a minor-based rank certificate.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "ocsym/expr.hpp"
#include "ocsym/linalg.hpp"

namespace oracle {

using ocsym::Expr;
using ocsym::Rational;
using ocsym::Var;

struct Node {
  enum Kind { Leaf, Const, Add, Sub, Mul, Div, Pow } kind = Const;
  Var var;
  Rational value;
  int exponent = 0;
  std::shared_ptr<Node> a, b;
};
using Tree = std::shared_ptr<Node>;

inline Tree leaf(const Var& v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Leaf;
  n->var = v;
  return n;
}
inline Tree constant(const Rational& q) {
  auto n = std::make_shared<Node>();
  n->value = q;
  n->value.canonicalize();
  return n;
}
inline Tree binary(Node::Kind k, Tree a, Tree b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}
inline Tree power(Tree a, int e) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Pow;
  n->a = std::move(a);
  n->exponent = e;
  return n;
}

/// Builds the tree through the library's arithmetic.
inline Expr build(const Tree& t) {
  switch (t->kind) {
    case Node::Leaf: return Expr(t->var);
    case Node::Const: return Expr(t->value);
    case Node::Add: return build(t->a) + build(t->b);
    case Node::Sub: return build(t->a) - build(t->b);
    case Node::Mul: return build(t->a) * build(t->b);
    case Node::Div: return build(t->a) / build(t->b);
    case Node::Pow: return build(t->a).pow(t->exponent);
  }
  return Expr();
}

/// Direct evaluation with plain rationals; nullopt on division by zero.
inline std::optional<Rational> eval(const Tree& t, const std::map<Var, Rational>& point) {
  switch (t->kind) {
    case Node::Leaf: return point.at(t->var);
    case Node::Const: return t->value;
    case Node::Pow: {
      auto a = eval(t->a, point);
      if (!a) return std::nullopt;
      if (t->exponent < 0 && *a == 0) return std::nullopt;
      Rational r = 1;
      for (int i = 0; i < std::abs(t->exponent); ++i) r *= *a;
      if (t->exponent < 0) r = 1 / r;
      return r;
    }
    default: break;
  }
  auto a = eval(t->a, point);
  auto b = eval(t->b, point);
  if (!a || !b) return std::nullopt;
  switch (t->kind) {
    case Node::Add: return Rational(*a + *b);
    case Node::Sub: return Rational(*a - *b);
    case Node::Mul: return Rational(*a * *b);
    case Node::Div:
      if (*b == 0) return std::nullopt;
      return Rational(*a / *b);
    default: return std::nullopt;
  }
}

class RandomTrees {
 public:
  RandomTrees(std::vector<Var> vars, unsigned seed) : vars_(std::move(vars)), rng_(seed) {}

  Rational small_rational(int range = 5) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    return Rational(num(rng_), den(rng_));
  }

  Tree polynomial_leaf() {
    std::uniform_int_distribution<int> pick(0, 3);
    if (pick(rng_) == 0) return constant(small_rational());
    std::uniform_int_distribution<std::size_t> v(0, vars_.size() - 1);
    return leaf(vars_[v(rng_)]);
  }

  /// Random tree; `allow_div` enables quotients and negative powers.
  Tree tree(int depth, bool allow_div = true) {
    if (depth <= 0) return polynomial_leaf();
    std::uniform_int_distribution<int> op(0, allow_div ? 5 : 3);
    switch (op(rng_)) {
      case 0: return binary(Node::Add, tree(depth - 1, allow_div), tree(depth - 1, allow_div));
      case 1: return binary(Node::Sub, tree(depth - 1, allow_div), tree(depth - 1, allow_div));
      case 2: return binary(Node::Mul, tree(depth - 1, allow_div), tree(depth - 1, allow_div));
      case 3: return power(tree(depth - 1, allow_div), std::uniform_int_distribution<int>(0, 3)(rng_));
      case 4: return binary(Node::Div, tree(depth - 1, allow_div), tree(depth - 1, allow_div));
      default: return power(tree(depth - 1, allow_div), -std::uniform_int_distribution<int>(1, 2)(rng_));
    }
  }

  /// A tree that is algebraically equal to `t` but built differently.
  Tree rewrite(const Tree& t) {
    std::uniform_int_distribution<int> pick(0, 3);
    Tree r = tree(2, false);
    switch (pick(rng_)) {
      case 0: return binary(Node::Sub, binary(Node::Add, r, t), r);
      case 1: return binary(Node::Div, binary(Node::Mul, t, binary(Node::Add, r, constant(Rational(7, 3)))),
                            binary(Node::Add, r, constant(Rational(7, 3))));
      case 2: return commuted(t);
      default: return binary(Node::Mul, constant(Rational(1, 2)), binary(Node::Add, t, t));
    }
  }

  std::map<Var, Rational> point() {
    std::map<Var, Rational> out;
    std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
    for (const auto& v : vars_) {
      out[v] = Rational(num(rng_), den(rng_));
      out[v].canonicalize();
    }
    return out;
  }

  std::mt19937& rng() { return rng_; }

 private:
  Tree commuted(const Tree& t) {
    if (t->kind == Node::Add || t->kind == Node::Mul) return binary(t->kind, commuted(t->b), commuted(t->a));
    if (t->kind == Node::Sub || t->kind == Node::Div) return binary(t->kind, commuted(t->a), commuted(t->b));
    if (t->kind == Node::Pow) return power(commuted(t->a), t->exponent);
    return t;
  }

  std::vector<Var> vars_;
  std::mt19937 rng_;
};

/// Determinant of the k x k submatrix on `rows` x `cols` by Laplace
/// expansion along rows, memoized on the set of columns still available.
inline Rational minor_det(const std::vector<std::vector<Rational>>& a, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  std::vector<std::optional<Rational>> memo(std::size_t{1} << k);
  // det of rows[depth..] against the columns in `mask`
  std::function<Rational(std::size_t, unsigned)> rec = [&](std::size_t depth, unsigned mask) -> Rational {
    if (depth == k) return 1;
    if (memo[mask]) return *memo[mask];
    Rational sum = 0;
    int sign = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (!(mask & (1u << j))) continue;
      const Rational& e = a[rows[depth]][cols[j]];
      if (e != 0) {
        Rational sub = rec(depth + 1, mask & ~(1u << j));
        if (sign > 0) sum += e * sub;
        else sum -= e * sub;
      }
      sign = -sign;
    }
    memo[mask] = sum;
    return sum;
  };
  return rec(0, (1u << k) - 1);
}

/// True when some k-row subset of `a` (tried: `hint_rows` first, then every
/// combination) has a nonzero minor against `cols`.
inline bool has_nonzero_minor(const std::vector<std::vector<Rational>>& a, const std::vector<std::size_t>& cols,
                              const std::vector<std::size_t>& hint_rows = {}) {
  const std::size_t k = cols.size();
  if (k == 0) return true;
  if (hint_rows.size() == k && minor_det(a, hint_rows, cols) != 0) return true;
  std::vector<std::size_t> rows;
  std::function<bool(std::size_t)> pick = [&](std::size_t start) {
    if (rows.size() == k) return minor_det(a, rows, cols) != 0;
    for (std::size_t i = start; i + (k - rows.size()) <= a.size(); ++i) {
      rows.push_back(i);
      if (pick(i + 1)) return true;
      rows.pop_back();
    }
    return false;
  };
  return pick(0);
}

/// Rank certificate for `claimed`: a nonzero claimed x claimed minor on the
/// columns `pivot_cols` (rank >= claimed) and cols - claimed linearly
/// independent vectors v with A v = 0 (rank <= claimed).
inline bool certify_rank(const ocsym::RatMatrix& m, std::size_t claimed, const std::vector<std::size_t>& pivot_cols,
                         const std::vector<std::vector<Rational>>& null_basis) {
  if (pivot_cols.size() != claimed || null_basis.size() + claimed != m.cols()) return false;
  for (const auto& v : null_basis) {
    for (const auto& x : m.multiply(v))
      if (x != 0) return false;
  }
  if (!null_basis.empty()) {
    std::vector<std::vector<Rational>> nb(m.cols(), std::vector<Rational>(null_basis.size()));
    std::vector<std::size_t> cols(null_basis.size());
    for (std::size_t j = 0; j < null_basis.size(); ++j) {
      cols[j] = j;
      for (std::size_t i = 0; i < m.cols(); ++i) nb[i][j] = null_basis[j][i];
    }
    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0; i < m.cols(); ++i)
      if (std::find(pivot_cols.begin(), pivot_cols.end(), i) == pivot_cols.end()) free_rows.push_back(i);
    if (!has_nonzero_minor(nb, cols, free_rows)) return false;
  }
  return has_nonzero_minor(m.to_dense(), pivot_cols);
}

}  // namespace oracle
