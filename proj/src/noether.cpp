#include "ocsym/noether.hpp"

#include <stdexcept>

#include "ocsym/errors.hpp"
#include "ocsym/pmp.hpp"

namespace ocsym {

ConservationLaw conservation_law(const OCProblem& p, const Generators& gens, std::vector<Var> constants) {
  ConservationLaw law;
  law.constants = std::move(constants);
  law.time_generator = gens.T;
  law.momentum = gens.G;
  for (std::size_t i = 0; i < p.n(); ++i) {
    law.momentum += Expr(Var::costate(static_cast<std::uint32_t>(i + 1))) * gens.X[i];
  }
  law.algebraic = law.momentum - hamiltonian(p) * gens.T;
  if (p.has_force()) {
    Expr integrand;
    for (std::size_t i = 0; i < p.n(); ++i) integrand += (p.phi[i] * gens.T - gens.X[i]) * p.force[i];
    law.integrand = integrand;
  }
  return law;
}

ConservationLaw conservation_law(const OCProblem& p, const SymmetryFamily& fam) {
  return conservation_law(p, fam.generators, fam.constants);
}

ConservationLaw specialize(const ConservationLaw& law, const std::map<Var, Rational>& assignment) {
  Bindings b;
  for (const auto& c : law.constants) b.emplace(c, Expr(0L));
  for (const auto& [c, value] : assignment) {
    auto it = b.find(c);
    if (it == b.end()) throw std::invalid_argument("constant is not a parameter of this law");
    it->second = Expr(value);
  }
  ConservationLaw out;
  out.algebraic = substitute(law.algebraic, b);
  if (law.integrand) out.integrand = substitute(*law.integrand, b);
  out.momentum = substitute(law.momentum, b);
  out.time_generator = substitute(law.time_generator, b);
  return out;
}

ConservationLaw normalize(const ConservationLaw& law) {
  const Expr& reference = !law.algebraic.is_zero() ? law.algebraic : law.integrand.value_or(Expr());
  if (reference.is_zero()) return law;
  Expr scaled = normalize_scale(reference);
  // reference = factor * scaled with factor rational
  Rational factor = reference.numerator().lead_coeff() / scaled.numerator().lead_coeff();
  Expr inv(Rational(1 / factor));
  ConservationLaw out = law;
  out.algebraic *= inv;
  if (out.integrand) *out.integrand *= inv;
  out.momentum *= inv;
  out.time_generator *= inv;
  return out;
}

Expr verify_conservation(const OCProblem& p, const ConservationLaw& law, const Bindings& subst) {
  auto controls = solve_controls(p);
  for (const auto& v : law.algebraic.variables()) {
    if (v.kind == VarKind::Opaque) {
      throw std::invalid_argument("algebraic part of a law may not depend on opaque symbol '" + v.name + "'");
    }
  }
  Expr residual = derivative_along_extremals(p, controls, law.algebraic);
  if (law.integrand) residual += substitute(*law.integrand, Bindings(controls.begin(), controls.end()));
  return substitute(residual, subst);
}

Expr poisson_bracket(const OCProblem& p, const Expr& f, const Expr& g) {
  for (const Expr* e : {&f, &g}) {
    for (const auto& v : e->variables()) {
      if (v.kind == VarKind::Control) throw ControlDependent("Poisson bracket arguments must be free of controls");
    }
  }
  Expr out;
  for (std::uint32_t i = 1; i <= p.n(); ++i) {
    Var x = Var::state(i);
    Var psi = Var::costate(i);
    out += diff(f, x) * diff(g, psi) - diff(f, psi) * diff(g, x);
  }
  return out;
}

std::string render_law(const ConservationLaw& law, const SymbolTable& symbols, bool symbolic_h) {
  std::string out;
  if (symbolic_h) {
    bool has_momentum = !law.momentum.is_zero();
    if (has_momentum) out = render(law.momentum, symbols);
    if (!law.time_generator.is_zero()) {
      out += has_momentum ? " - H*(" : "-H*(";
      out += render(law.time_generator, symbols) + ")";
    }
    if (out.empty()) out = "0";
  } else {
    out = render(law.algebraic, symbols);
  }
  if (law.integrand) out += " + int(" + render(*law.integrand, symbols) + ")";
  return out + " = const";
}

}  // namespace ocsym
