#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ocsym/expr.hpp"
#include "ocsym/problem.hpp"
#include "ocsym/symbols.hpp"
#include "ocsym/symmetry.hpp"

namespace ocsym {

/// First integral  psi.X + G - H T + integral((phi T - X) . F dt) = const.
/// The integral is never evaluated; its integrand is carried as is.
struct ConservationLaw {
  Expr algebraic;                 // psi.X + G - H T, H expanded
  std::optional<Expr> integrand;  // present iff the problem has a force
  std::vector<Var> constants;
  Expr momentum;  // psi.X + G
  Expr time_generator;  // T, the coefficient of -H
};

ConservationLaw conservation_law(const OCProblem& p, const Generators& gens, std::vector<Var> constants = {});
ConservationLaw conservation_law(const OCProblem& p, const SymmetryFamily& fam);

/// Substitutes the assigned constants; unassigned ones become 0. Throws
/// std::invalid_argument for a key outside law.constants.
ConservationLaw specialize(const ConservationLaw& law, const std::map<Var, Rational>& assignment);

/// Law divided by the rational content of its algebraic part (or of the
/// integrand when the algebraic part vanishes), sign fixed so the leading
/// term under the global monomial order is positive.
ConservationLaw normalize(const ConservationLaw& law);

/// d/dt of the algebraic part along extremals (controls eliminated) plus the
/// integrand, with `subst` applied last. Zero for a valid law.
Expr verify_conservation(const OCProblem& p, const ConservationLaw& law, const Bindings& subst = {});

/// Canonical bracket sum_i (df/dx_i dg/dpsi_i - df/dpsi_i dg/dx_i). Throws
/// ControlDependent when f or g mentions a control.
Expr poisson_bracket(const OCProblem& p, const Expr& f, const Expr& g);

/// "<psi.X + G> - H*(<T>) + int(<integrand>) = const" when `symbolic_h`,
/// otherwise the expanded algebraic part.
std::string render_law(const ConservationLaw& law, const SymbolTable& symbols, bool symbolic_h);

}  // namespace ocsym
