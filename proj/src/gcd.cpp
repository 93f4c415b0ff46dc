// Multivariate gcd over Q by recursion on the leading variable with a
// primitive pseudo-remainder sequence at each level.
#include <stdexcept>

#include "ocsym/poly.hpp"

namespace ocsym {
namespace {

Poly gcd_of_list(const std::vector<Poly>& items) {
  Poly g;
  for (const auto& p : items) {
    if (p.is_zero()) continue;
    g = gcd(g, p);
    if (g.is_one()) break;
  }
  return g;
}

Poly content_in(const Poly& p, const Var& v) { return gcd_of_list(p.coefficients_in(v)); }

Poly primitive_part_in(const Poly& p, const Var& v) {
  Poly c = content_in(p, v);
  return c.is_zero() ? p : divide_exact(p, c);
}

// lc(b)^(deg a - deg b + 1) * a mod b, in Q[rest][v].
Poly pseudo_remainder(const Poly& a, const Poly& b, const Var& v) {
  std::vector<Poly> r = a.coefficients_in(v);
  const std::vector<Poly> bc = b.coefficients_in(v);
  const std::size_t db = bc.size() - 1;
  const Poly& lc = bc[db];
  while (r.size() > db && r.size() >= 1) {
    std::size_t k = r.size() - 1;
    Poly lead = r[k];
    for (auto& c : r) c *= lc;
    std::size_t shift = k - db;
    for (std::size_t i = 0; i <= db; ++i) r[i + shift] -= lead * bc[i];
    // r[k] is now zero by construction.
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    if (r.empty()) break;
  }
  return Poly::from_coefficients(r, v);
}

Poly monomial_gcd(const Poly& single, const Poly& other) {
  Monomial g = single.lead_monomial();
  for (const auto& [m, c] : other.terms()) {
    g = g.gcd(m);
    if (g.empty()) break;
  }
  return Poly(g, 1);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1L);
  if (a.size() == 1) return monomial_gcd(a, b);
  if (b.size() == 1) return monomial_gcd(b, a);
  if (a == b) return a.monic();

  std::set<Var> vars = a.variables();
  for (const auto& v : b.variables()) vars.insert(v);
  // Prefer a variable both share; a variable in only one side reduces to a content gcd.
  const Var* main = nullptr;
  for (const auto& v : vars) {
    if (a.mentions(v) && b.mentions(v)) {
      main = &v;
      break;
    }
  }
  if (main == nullptr) {
    // No common variable: the gcd is free of every variable.
    return Poly(1L);
  }
  const Var v = *main;
  for (const auto& w : vars) {
    if (a.mentions(w) != b.mentions(w)) {
      // gcd divides the content with respect to w of whichever side mentions it.
      if (a.mentions(w)) return gcd(content_in(a, w), b);
      return gcd(a, content_in(b, w));
    }
  }

  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly content = gcd(ca, cb);
  Poly pa = divide_exact(a, ca);
  Poly pb = divide_exact(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

  Poly g;
  while (true) {
    Poly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = Poly(1L);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part_in(r, v);
  }
  return (content * g).monic();
}

}  // namespace ocsym
