#include "corpus.hpp"
#include "doctest.h"
#include "printing.hpp"
#include "ocsym/errors.hpp"
#include "ocsym/parser.hpp"
#include "ocsym/pmp.hpp"

using namespace ocsym;

TEST_CASE("Hamiltonian of the scalar problem") {
  OCProblem p = load_problem("ex1.ocp");
  CHECK(hamiltonian(p) == parse_expression("-u^2 + u*psi1", p.symbols()));
  p.mode = Mode::Abnormal;
  CHECK(hamiltonian(p) == parse_expression("u*psi1", p.symbols()));
  CHECK(multiplier(Mode::Normal) == -1);
}

TEST_CASE("Hamiltonian system with a force") {
  OCProblem p = load_problem("djukic.ocp");
  auto s = p.symbols();
  auto sys = hamiltonian_system(p);
  CHECK(sys.state_rhs[0] == parse_expression("v", s));
  CHECK(sys.state_rhs[1] == parse_expression("u", s));
  CHECK(sys.adjoint_rhs[0] == parse_expression("mu*v + mu^2*u/a^2 - 2*mu*z/a + b*q", s));
  CHECK(sys.adjoint_rhs[1] == parse_expression("a*v - psi1", s));
  REQUIRE(sys.stationary.size() == 1);
  CHECK(sys.stationary[0] == parse_expression("-u + psi2", s));
}

TEST_CASE("solve_controls") {
  OCProblem p = load_problem("sr23.ocp");
  auto c = solve_controls(p);
  CHECK(c.at(Var::control(1)) == parse_expression("psi1", p.symbols()));
  CHECK(c.at(Var::control(2)) == parse_expression("psi2 + x1*psi3", p.symbols()));

  OCProblem nonlinear = parse_problem("states: x\ncontrols: u\nlagrangian: u^4\nphi: u\n");
  CHECK_THROWS_AS(solve_controls(nonlinear), NonlinearControls);
  OCProblem abnormal = load_problem("ex1.ocp");
  abnormal.mode = Mode::Abnormal;
  CHECK_THROWS_AS(solve_controls(abnormal), SingularControls);
  OCProblem coupled = parse_problem("states: x y\ncontrols: u w\nlagrangian: (u + w)^2\nphi: u\nphi: w\n");
  CHECK_THROWS_AS(solve_controls(coupled), SingularControls);
}

TEST_CASE("H is constant along extremals of autonomous problems") {
  for (const char* f : {"ex1.ocp", "djukic.ocp", "sr23.ocp", "sr235.ocp", "sr2358.ocp"}) {
    CAPTURE(f);
    CHECK(dHdt_residual(load_problem(f)).is_zero());
  }
  OCProblem p = parse_problem("states: x\ncontrols: u\nlagrangian: u^2 + t*x^2\nphi: u + t\n");
  CHECK(dHdt_residual(p).is_zero());
  auto c = solve_controls(p);
  Expr h = hamiltonian(p);
  CHECK_FALSE(derivative_along_extremals(p, c, substitute(h, c)).is_zero());
}

TEST_CASE("opaque symbols have no time derivative") {
  OCProblem p = load_problem("djukic.ocp");
  auto c = solve_controls(p);
  CHECK_THROWS_AS(derivative_along_extremals(p, c, parse_expression("z*q", p.symbols())), OpaqueDifferentiation);
}
