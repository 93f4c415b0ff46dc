#include "ocsym/poly.hpp"

#include <stdexcept>

namespace ocsym {

Monomial::Monomial(const Var& v, std::uint32_t exponent) {
  if (exponent != 0) factors_.emplace_back(v, exponent);
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::degree_in(const Var& v) const {
  for (const auto& f : factors_) {
    if (f.first == v) return f.second;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first == b->first) {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    } else if (a->first < b->first) {
      out.factors_.push_back(*a++);
    } else {
      out.factors_.push_back(*b++);
    }
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.factors_.insert(out.factors_.end(), b, other.factors_.end());
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& f : factors_) {
    if (other.degree_in(f.first) < f.second) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  for (const auto& f : other.factors_) {
    std::uint32_t e = f.second - degree_in(f.first);
    if (e != 0) out.factors_.emplace_back(f.first, e);
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out;
  for (const auto& f : factors_) {
    std::uint32_t e = std::min(f.second, other.degree_in(f.first));
    if (e != 0) out.factors_.emplace_back(f.first, e);
  }
  return out;
}

Monomial Monomial::without(const Var& v) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (!(f.first == v)) out.factors_.push_back(f);
  }
  return out;
}

std::pair<Monomial, Monomial> Monomial::split(const std::function<bool(const Var&)>& keep) const {
  std::pair<Monomial, Monomial> out;
  for (const auto& f : factors_) {
    (keep(f.first) ? out.first : out.second).factors_.push_back(f);
  }
  return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  std::uint32_t da = a.degree();
  std::uint32_t db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second > j->second ? 1 : -1;
      ++i;
      ++j;
    } else {
      // The monomial carrying the earlier variable is the larger one.
      return i->first < j->first ? 1 : -1;
    }
  }
  if (i != a.factors_.end()) return 1;
  if (j != b.factors_.end()) return -1;
  return 0;
}

Poly::Poly(long value) {
  if (value != 0) terms_.emplace(Monomial{}, Rational(value));
}

Poly::Poly(const Rational& value) {
  if (value != 0) terms_.emplace(Monomial{}, value).first->second.canonicalize();
}

Poly::Poly(const Var& v) { terms_.emplace(Monomial(v), Rational(1)); }

Poly::Poly(const Monomial& m, const Rational& coeff) {
  if (coeff != 0) terms_.emplace(m, coeff).first->second.canonicalize();
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.begin()->second;
}

std::set<Var> Poly::variables() const {
  std::set<Var> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

bool Poly::mentions(const Var& v) const {
  for (const auto& [m, c] : terms_) {
    if (m.contains(v)) return true;
  }
  return false;
}

std::uint32_t Poly::degree_in(const Var& v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
  return d;
}

std::uint32_t Poly::total_degree() const { return terms_.empty() ? 0 : lead_monomial().degree(); }

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  if (b.is_constant()) return a * b.constant_value();
  if (a.is_constant()) return b * a.constant_value();
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Poly Poly::pow(std::uint32_t k) const {
  Poly result(1L);
  Poly base = *this;
  while (k != 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k != 0) base *= base;
  }
  return result;
}

Poly Poly::diff(const Var& v) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m.degree_in(v);
    if (e == 0) continue;
    out.add_term(m.without(v) * Monomial(v, e - 1), c * e);
  }
  return out;
}

std::vector<Poly> Poly::coefficients_in(const Var& v) const {
  std::vector<Poly> out(degree_in(v) + 1);
  for (const auto& [m, c] : terms_) out[m.degree_in(v)].add_term(m.without(v), c);
  return out;
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, const Var& v) {
  Poly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial power(v, static_cast<std::uint32_t>(k));
    for (const auto& [m, c] : coeffs[k].terms()) out.add_term(m * power, c);
  }
  return out;
}

Rational Poly::content() const {
  if (terms_.empty()) return 0;
  mpz_class num = 0;
  mpz_class den = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational g(num, den);
  g.canonicalize();
  return g;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  Rational lc = lead_coeff();
  if (lc == 1) return *this;
  return *this * Rational(1 / lc);
}

Poly Poly::substitute(const std::map<Var, Poly>& bindings) const {
  if (bindings.empty()) return *this;
  std::map<std::pair<Var, std::uint32_t>, Poly> powers;
  auto power = [&](const Var& v, std::uint32_t e) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, bindings.at(v).pow(e)).first;
    return it->second;
  };
  Poly out;
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    Poly factor(c);
    for (const auto& f : m.factors()) {
      if (bindings.count(f.first)) {
        factor *= power(f.first, f.second);
      } else {
        kept = kept * Monomial(f.first, f.second);
      }
    }
    if (factor.is_zero()) continue;
    if (kept.empty()) {
      out += factor;
    } else {
      for (const auto& [fm, fc] : factor.terms()) out.add_term(fm * kept, fc);
    }
  }
  return out;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::logic_error("polynomial division by zero");
  if (b.is_constant()) return a * Rational(1 / b.constant_value());
  Poly quotient;
  Poly rest = a;
  const Monomial& lb = b.lead_monomial();
  const Rational& cb = b.lead_coeff();
  while (!rest.is_zero()) {
    const Monomial& lr = rest.lead_monomial();
    if (!lb.divides(lr)) throw std::logic_error("inexact polynomial division");
    Poly step(lb.quotient_of(lr), rest.lead_coeff() / cb);
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

}  // namespace ocsym
