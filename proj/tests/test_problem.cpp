#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ocsym/errors.hpp"
#include "ocsym/parser.hpp"
#include "ocsym/problem.hpp"

using namespace ocsym;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(OCSYM_PROBLEM_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has(const std::vector<Diagnostic>& ds, const std::string& code, const std::string& subject) {
  for (const auto& d : ds)
    if (d.code == code && d.subject == subject) return true;
  return false;
}

}  // namespace

TEST_CASE("corpus parses") {
  for (const char* f : {"ex1.ocp", "djukic.ocp", "sr23.ocp", "sr235.ocp", "sr2358.ocp"}) {
    CAPTURE(f);
    OCProblem p = parse_problem(slurp(f));
    CHECK(validate(p).empty());
    CHECK(p.phi.size() == p.n());
  }
  OCProblem d = parse_problem(slurp("djukic.ocp"));
  CHECK(d.n() == 2);
  CHECK(d.m() == 1);
  CHECK(d.has_force());
  CHECK(d.force[1].is_zero());
  CHECK(d.force[0] == parse_expression("mu*v + mu^2/a^2*u - 2*mu/a*z", d.symbols()));
  OCProblem s = parse_problem(slurp("sr2358.ocp"));
  CHECK(s.n() == 8);
  CHECK(s.mode == Mode::Normal);
  CHECK(s.lagrangian == parse_expression("u1^2/2 + u2^2/2", s.symbols()));
}

TEST_CASE("syntax errors carry file positions") {
  try {
    parse_problem(slurp("bad.ocp"));
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 18);
  }
  CHECK_THROWS_AS(parse_problem("states: x\ncontrols: u\nlagrangian: u^2\nphi: u\nwhatever: 1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_problem("states: x\nstates: y\ncontrols: u\nlagrangian: u^2\nphi: u\n"), SyntaxError);
  CHECK_THROWS_AS(parse_problem("states: psi1\ncontrols: u\nlagrangian: u^2\nphi: u\n"), SyntaxError);
  CHECK_THROWS_AS(parse_problem("states: x\ncontrols: u\nlagrangian: u^2\nphi: u\nmode: weird\n"), SyntaxError);
  CHECK_THROWS_AS(parse_problem("controls: u\nlagrangian: u^2\n"), SyntaxError);
}

TEST_CASE("dimension and identifier checks") {
  CHECK_THROWS_AS(parse_problem("states: x y\ncontrols: u\nlagrangian: u^2\nphi: u\n"), DimensionMismatch);
  CHECK_THROWS_AS(parse_problem("states: x y\ncontrols: u\nlagrangian: u^2\nphi: u\nphi: x\nforce: 1\n"),
                  DimensionMismatch);
  CHECK_THROWS_AS(parse_problem("states: x\ncontrols: u\nlagrangian: u^2 + w\nphi: u\n"), UnknownIdentifier);
  // opaque symbols are only allowed inside the force
  CHECK_THROWS(parse_problem("states: x\ncontrols: u\nopaque: z\nlagrangian: u^2*z\nphi: u\n"));
  CHECK_NOTHROW(parse_problem("states: x\ncontrols: u\nopaque: z\nlagrangian: u^2\nphi: u\nforce: z\n"));
}

TEST_CASE("validate reports every problem") {
  OCProblem p = OCProblem::with_dimensions(2, 1);
  p.lagrangian = Expr(Var::control(1)).pow(2);
  p.phi = {Expr(Var::control(1)), Expr(Var::costate(1)) + Expr(Var::state(3))};
  p.force = {Expr(1L)};
  auto ds = validate(p);
  CHECK(has(ds, "DimensionMismatch", "force"));
  CHECK(has(ds, "ForbiddenSymbol", "psi1"));
  CHECK(has(ds, "UnknownIdentifier", "x3"));
  CHECK(ds.size() == 3);
  CHECK(validate(OCProblem::with_dimensions(0, 1)).size() >= 1);
}

TEST_CASE("with_dimensions uses default names") {
  OCProblem p = OCProblem::with_dimensions(3, 2);
  CHECK(p.state_names == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(p.control_names == std::vector<std::string>{"u1", "u2"});
  CHECK(to_string(Mode::Abnormal) == "abnormal");
}
