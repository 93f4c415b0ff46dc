#pragma once

#include <map>
#include <set>
#include <string>

#include "ocsym/poly.hpp"

namespace ocsym {

/// Canonical rational expression num/den: gcd(num, den) = 1 and den monic
/// under the global monomial order. Two expressions are mathematically equal
/// iff their canonical forms are identical.
class Expr {
 public:
  Expr() : den_(1L) {}
  Expr(long value) : num_(value), den_(1L) {}  // NOLINT(google-explicit-constructor)
  Expr(const Rational& value) : num_(value), den_(1L) {}  // NOLINT(google-explicit-constructor)
  Expr(const Var& v) : num_(v), den_(1L) {}  // NOLINT(google-explicit-constructor)
  Expr(const Poly& p) : num_(p), den_(1L) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den is zero.
  static Expr fraction(const Poly& num, const Poly& den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rational constant_value() const { return num_.constant_value(); }
  std::set<Var> variables() const;
  bool mentions(const Var& v) const { return num_.mentions(v) || den_.mentions(v); }
  std::size_t term_count() const { return num_.size() + (den_.is_one() ? 0 : den_.size()); }

  Expr operator-() const;
  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator-=(const Expr& o) { return *this = *this - o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  Expr& operator/=(const Expr& o) { return *this = *this / o; }
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend bool operator==(const Expr&, const Expr&) = default;

  Expr pow(int k) const;

 private:
  Expr(Poly num, Poly den, int /*already canonical*/) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

using Bindings = std::map<Var, Expr>;
using Coefficients = std::map<Monomial, Expr, MonomialOrder>;

/// Partial derivative; throws OpaqueDifferentiation for opaque symbols.
Expr diff(const Expr& e, const Var& v);

/// Simultaneous substitution; throws DivisionByZero when a denominator vanishes.
Expr substitute(const Expr& e, const Bindings& bindings);

/// Coefficient of each monomial in `vars`; the empty monomial holds the
/// vars-free part. Throws NotPolynomialIn when the denominator mentions vars.
Coefficients collect(const Expr& e, const std::set<Var>& vars);

bool is_zero(const Expr& e);
bool equal(const Expr& a, const Expr& b);

/// Rational content of the numerator divided out and the numerator's leading
/// coefficient made positive.
Expr normalize_scale(const Expr& e);

}  // namespace ocsym
