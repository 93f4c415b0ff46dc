#include "ocsym/expr.hpp"

#include "ocsym/errors.hpp"

namespace ocsym {

Expr Expr::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return Expr();
  if (den.is_constant()) return Expr(num * Rational(1 / den.constant_value()));
  Poly g = gcd(num, den);
  Poly n = g.is_one() ? num : divide_exact(num, g);
  Poly d = g.is_one() ? den : divide_exact(den, g);
  Rational lc = d.lead_coeff();
  if (lc != 1) {
    Rational inv = 1 / lc;
    n *= inv;
    d *= inv;
  }
  if (d.is_one()) return Expr(n);
  return Expr(std::move(n), std::move(d), 0);
}

std::set<Var> Expr::variables() const {
  std::set<Var> out = num_.variables();
  for (const auto& v : den_.variables()) out.insert(v);
  return out;
}

Expr Expr::operator-() const { return Expr(-num_, den_, 0); }

Expr operator+(const Expr& a, const Expr& b) {
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return Expr(a.num_ + b.num_);
    return Expr::fraction(a.num_ + b.num_, a.den_);
  }
  return Expr::fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_polynomial() && b.is_polynomial()) return Expr(a.num_ * b.num_);
  return Expr::fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw DivisionByZero();
  return Expr::fraction(a.num_ * b.den_, a.den_ * b.num_);
}

Expr Expr::pow(int k) const {
  if (k >= 0) {
    auto e = static_cast<std::uint32_t>(k);
    if (is_polynomial()) return Expr(num_.pow(e));
    return Expr(num_.pow(e), den_.pow(e), 0);
  }
  if (is_zero()) throw DivisionByZero();
  auto e = static_cast<std::uint32_t>(-k);
  return fraction(den_.pow(e), num_.pow(e));
}

Expr diff(const Expr& e, const Var& v) {
  if (v.kind == VarKind::Opaque) throw OpaqueDifferentiation(v.name);
  if (e.is_polynomial()) return Expr(e.numerator().diff(v));
  const Poly& n = e.numerator();
  const Poly& d = e.denominator();
  if (!d.mentions(v)) return Expr::fraction(n.diff(v), d);
  return Expr::fraction(n.diff(v) * d - n * d.diff(v), d * d);
}

namespace {

Expr evaluate(const Poly& p, const Bindings& bindings) {
  Expr out;
  for (const auto& [m, c] : p.terms()) {
    Expr term(c);
    Monomial kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        kept = kept * Monomial(v, e);
      } else {
        term *= it->second.pow(static_cast<int>(e));
      }
    }
    out += term * Expr(Poly(kept, 1));
  }
  return out;
}

}  // namespace

Expr substitute(const Expr& e, const Bindings& bindings) {
  if (bindings.empty()) return e;
  bool relevant = false;
  for (const auto& [v, value] : bindings) {
    if (e.mentions(v)) {
      relevant = true;
      break;
    }
  }
  if (!relevant) return e;

  bool all_polynomial = true;
  for (const auto& [v, value] : bindings) all_polynomial = all_polynomial && value.is_polynomial();
  if (all_polynomial) {
    std::map<Var, Poly> polys;
    for (const auto& [v, value] : bindings) polys.emplace(v, value.numerator());
    Poly num = e.numerator().substitute(polys);
    if (e.is_polynomial()) return Expr(num);
    return Expr::fraction(num, e.denominator().substitute(polys));
  }
  Expr num = evaluate(e.numerator(), bindings);
  Expr den = evaluate(e.denominator(), bindings);
  return num / den;
}

Coefficients collect(const Expr& e, const std::set<Var>& vars) {
  for (const auto& v : e.denominator().variables()) {
    if (vars.count(v)) throw NotPolynomialIn("denominator depends on a collected variable");
  }
  std::map<Monomial, Poly, MonomialOrder> grouped;
  for (const auto& [m, c] : e.numerator().terms()) {
    auto [key, rest] = m.split([&](const Var& v) { return vars.count(v) != 0; });
    grouped[key].add_term(rest, c);
  }
  Coefficients out;
  for (auto& [key, coeff] : grouped) {
    if (coeff.is_zero()) continue;
    out.emplace(key, Expr::fraction(coeff, e.denominator()));
  }
  return out;
}

bool is_zero(const Expr& e) { return e.is_zero(); }

bool equal(const Expr& a, const Expr& b) { return is_zero(a - b); }

Expr normalize_scale(const Expr& e) {
  if (e.is_zero()) return e;
  Rational c = e.numerator().content();
  if (e.numerator().lead_coeff() < 0) c = -c;
  return Expr::fraction(e.numerator() * Rational(1 / c), e.denominator());
}

}  // namespace ocsym
