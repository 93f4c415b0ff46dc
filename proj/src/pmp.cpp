#include "ocsym/pmp.hpp"

#include "ocsym/errors.hpp"

namespace ocsym {

namespace {

Bindings as_bindings(const std::map<Var, Expr>& m) { return Bindings(m.begin(), m.end()); }

Expr force_at(const OCProblem& p, std::size_t i) { return p.has_force() ? p.force[i] : Expr(); }

}  // namespace

long multiplier(Mode mode) { return mode == Mode::Normal ? -1 : 0; }

Expr hamiltonian(const OCProblem& p) {
  Expr h = Expr(multiplier(p.mode)) * p.lagrangian;
  for (std::size_t i = 0; i < p.n(); ++i) {
    h += Expr(Var::costate(static_cast<std::uint32_t>(i + 1))) * p.phi[i];
  }
  return h;
}

HamiltonianSystem hamiltonian_system(const OCProblem& p) {
  HamiltonianSystem sys;
  sys.H = hamiltonian(p);
  for (std::size_t i = 0; i < p.n(); ++i) {
    auto k = static_cast<std::uint32_t>(i + 1);
    sys.state_rhs.push_back(diff(sys.H, Var::costate(k)));
    sys.adjoint_rhs.push_back(-diff(sys.H, Var::state(k)) + force_at(p, i));
  }
  for (std::size_t j = 0; j < p.m(); ++j) {
    sys.stationary.push_back(diff(sys.H, Var::control(static_cast<std::uint32_t>(j + 1))));
  }
  return sys;
}

std::map<Var, Expr> solve_controls(const OCProblem& p) {
  const std::size_t m = p.m();
  std::set<Var> controls;
  for (std::size_t j = 1; j <= m; ++j) controls.insert(Var::control(static_cast<std::uint32_t>(j)));

  HamiltonianSystem sys = hamiltonian_system(p);
  // Augmented system M u = b.
  std::vector<std::vector<Expr>> rows(m, std::vector<Expr>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    Coefficients parts;
    try {
      parts = collect(sys.stationary[r], controls);
    } catch (const NotPolynomialIn&) {
      throw NonlinearControls("stationary condition " + std::to_string(r + 1) + " is not affine in the controls");
    }
    for (const auto& [mono, coeff] : parts) {
      if (mono.empty()) {
        rows[r][m] = -coeff;
        continue;
      }
      if (mono.degree() != 1) {
        throw NonlinearControls("stationary condition " + std::to_string(r + 1) + " is not affine in the controls");
      }
      rows[r][mono.factors().front().first.index - 1] = coeff;
    }
  }

  for (std::size_t c = 0; c < m; ++c) {
    std::size_t pivot = m;
    for (std::size_t r = c; r < m; ++r) {
      if (!rows[r][c].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == m) throw SingularControls("stationary condition does not determine the controls uniquely");
    std::swap(rows[c], rows[pivot]);
    Expr inv = Expr(1L) / rows[c][c];
    for (auto& v : rows[c]) v *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || rows[r][c].is_zero()) continue;
      Expr factor = rows[r][c];
      for (std::size_t k = c; k <= m; ++k) rows[r][k] -= factor * rows[c][k];
    }
  }

  std::map<Var, Expr> out;
  for (std::size_t j = 0; j < m; ++j) out.emplace(Var::control(static_cast<std::uint32_t>(j + 1)), rows[j][m]);
  return out;
}

Expr derivative_along_extremals(const OCProblem& p, const std::map<Var, Expr>& controls, const Expr& e) {
  for (const auto& v : e.variables())
    if (v.kind == VarKind::Opaque) throw OpaqueDifferentiation(v.name);
  const Bindings u = as_bindings(controls);
  HamiltonianSystem sys = hamiltonian_system(p);
  Expr e_star = substitute(e, u);
  Expr total = diff(e_star, Var::time());
  for (std::size_t i = 0; i < p.n(); ++i) {
    auto k = static_cast<std::uint32_t>(i + 1);
    Expr de_dx = diff(e_star, Var::state(k));
    if (!de_dx.is_zero()) total += de_dx * substitute(sys.state_rhs[i], u);
    Expr de_dpsi = diff(e_star, Var::costate(k));
    if (!de_dpsi.is_zero()) total += de_dpsi * substitute(sys.adjoint_rhs[i], u);
  }
  return total;
}

Expr dHdt_residual(const OCProblem& p) {
  auto controls = solve_controls(p);
  const Bindings u = as_bindings(controls);
  Expr h = hamiltonian(p);
  Expr residual = derivative_along_extremals(p, controls, h) - substitute(diff(h, Var::time()), u);
  for (std::size_t i = 0; i < p.n(); ++i) {
    if (p.has_force()) residual -= substitute(p.phi[i] * p.force[i], u);
  }
  return residual;
}

}  // namespace ocsym
