#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ocsym/var.hpp"

namespace ocsym {

using Rational = mpq_class;

/// Power product of variables, factors sorted by the global variable order.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(const Var& v, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t degree_in(const Var& v) const;
  bool contains(const Var& v) const { return degree_in(v) != 0; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other) with `this` the divisor: returns other / this.
  Monomial quotient_of(const Monomial& other) const;
  /// Exponent-wise minimum.
  Monomial gcd(const Monomial& other) const;
  /// Removes `v` entirely.
  Monomial without(const Var& v) const;
  /// Splits into the part over `keep(var)` and the rest.
  std::pair<Monomial, Monomial> split(const std::function<bool(const Var&)>& keep) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lexicographic comparison: negative, zero or positive.
  static int compare(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
};

/// Leading monomials first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) > 0; }
};

/// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& value);  // NOLINT(google-explicit-constructor)
  explicit Poly(const Var& v);
  Poly(const Monomial& m, const Rational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Constant value; requires is_constant().
  Rational constant_value() const;
  std::size_t size() const { return terms_.size(); }

  const Monomial& lead_monomial() const { return terms_.begin()->first; }
  const Rational& lead_coeff() const { return terms_.begin()->second; }

  std::set<Var> variables() const;
  bool mentions(const Var& v) const;
  std::uint32_t degree_in(const Var& v) const;
  std::uint32_t total_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(std::uint32_t k) const;
  Poly diff(const Var& v) const;

  /// Adds `c * m` in place.
  void add_term(const Monomial& m, const Rational& c);

  /// Coefficients of p viewed as a univariate polynomial in v, by degree.
  std::vector<Poly> coefficients_in(const Var& v) const;
  static Poly from_coefficients(const std::vector<Poly>& coeffs, const Var& v);

  /// Positive rational g such that every coefficient divided by g is an
  /// integer and the integers are coprime.
  Rational content() const;
  /// Divides by the leading coefficient.
  Poly monic() const;

  /// Simultaneous substitution of polynomial values.
  Poly substitute(const std::map<Var, Poly>& bindings) const;

 private:
  Terms terms_;
};

/// Exact quotient a / b; throws std::logic_error when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

/// Monic greatest common divisor over Q; zero only when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace ocsym
