#pragma once

#include <map>
#include <vector>

#include "ocsym/expr.hpp"
#include "ocsym/problem.hpp"

namespace ocsym {

/// Right-hand sides of the nonconservative Hamiltonian system together with
/// the stationary condition dH/du = 0.
struct HamiltonianSystem {
  Expr H;
  std::vector<Expr> state_rhs;    // x_i' = dH/dpsi_i
  std::vector<Expr> adjoint_rhs;  // psi_i' = -dH/dx_i + F_i
  std::vector<Expr> stationary;   // dH/du_j, each must vanish
};

/// psi0 multiplier fixed by the problem mode: -1 (normal) or 0 (abnormal).
long multiplier(Mode mode);

/// H = psi0 L + psi . phi
Expr hamiltonian(const OCProblem& p);

HamiltonianSystem hamiltonian_system(const OCProblem& p);

/// Solves the stationary condition for the controls. Throws
/// NonlinearControls when some dH/du_j is not affine in u, SingularControls
/// when the linear system has no unique solution.
std::map<Var, Expr> solve_controls(const OCProblem& p);

/// dH/dt - dH/dt(partial) - x'.F along the Hamiltonian system with the
/// controls eliminated; identically zero for a consistent problem.
Expr dHdt_residual(const OCProblem& p);

/// Time derivative along extremals of an expression in (t, x, psi): chain
/// rule with x' = phi and psi' = -dH/dx + F, controls replaced by
/// `controls`. The expression must be free of u and of opaque symbols.
Expr derivative_along_extremals(const OCProblem& p, const std::map<Var, Expr>& controls, const Expr& e);

}  // namespace ocsym
