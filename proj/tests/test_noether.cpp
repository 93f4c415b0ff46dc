#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "printing.hpp"
#include "oracles.hpp"
#include "ocsym/errors.hpp"
#include "ocsym/noether.hpp"
#include "ocsym/parser.hpp"
#include "ocsym/pmp.hpp"

using namespace ocsym;

TEST_CASE("time translation gives -H") {
  OCProblem p = load_problem("ex1.ocp");
  auto law = conservation_law(p, Generators::time_translation(1, 1));
  CHECK(law.algebraic == -hamiltonian(p));
  CHECK_FALSE(law.integrand.has_value());
  CHECK(verify_conservation(p, law).is_zero());
  CHECK(render_law(law, p.symbols(), true) == "-H*(1) = const");
  CHECK(render_law(law, p.symbols(), false) == "u^2 - u*psi1 = const");
}

TEST_CASE("family laws verify and specialize") {
  OCProblem p = load_problem("ex1.ocp");
  auto fam = find_symmetries(p, {}, true);
  auto law = conservation_law(p, fam);
  CHECK(law.constants == fam.constants);
  CHECK(verify_conservation(p, law).is_zero());
  for (const auto& c : fam.constants) {
    auto one = specialize(law, {{c, Rational(1)}});
    CHECK(one.constants.empty());
    CHECK(verify_conservation(p, one).is_zero());
  }
  CHECK_THROWS_AS(specialize(law, {{Var::constant(99), Rational(1)}}), std::invalid_argument);
  CHECK(specialize(law, {}).algebraic.is_zero());
}

TEST_CASE("a non-symmetry fails verification") {
  OCProblem p = load_problem("ex1.ocp");
  Generators g = Generators::zero(1, 1);
  g.X[0] = Expr(Var::time());
  CHECK_FALSE(verify_conservation(p, conservation_law(p, g)).is_zero());
}

TEST_CASE("nonconservative law") {
  OCProblem p = load_problem("djukic.ocp");
  auto s = p.symbols();
  auto law = conservation_law(p, find_symmetries(p, {}, false));
  CHECK(law.algebraic == parse_expression("-(-u^2/2 - a*v^2/2 - b*q^2/2 + psi1*v + psi2*u)*C1", s));
  REQUIRE(law.integrand.has_value());
  CHECK(*law.integrand == parse_expression("C1*v*(mu*v + mu^2/a^2*u - 2*mu/a*z)", s));
  CHECK(verify_conservation(p, law).is_zero());
  // substituting the opaque symbol afterwards keeps the residual zero
  CHECK(verify_conservation(p, law, {{Var::opaque("z"), parse_expression("q + v", s)}}).is_zero());
}

TEST_CASE("normalize") {
  OCProblem p = load_problem("sr23.ocp");
  auto law = conservation_law(p, Generators::time_translation(3, 2));
  auto n = normalize(law);
  CHECK(n.algebraic == normalize_scale(law.algebraic));
  CHECK(normalize(n).algebraic == n.algebraic);
}

TEST_CASE("Poisson bracket") {
  OCProblem p = load_problem("sr2358.ocp");
  auto s = p.symbols();
  auto f = parse_expression("psi3", s);
  auto g = parse_expression("psi2 + x3*psi5 + x4*psi7 + x5*psi8", s);
  CHECK(poisson_bracket(p, f, g) == parse_expression("-psi5", s));
  CHECK(poisson_bracket(p, parse_expression("x1", s), parse_expression("psi1", s)) == Expr(1L));
  CHECK_THROWS_AS(poisson_bracket(p, parse_expression("u1", s), f), ControlDependent);

  std::vector<Var> vars;
  for (std::uint32_t i = 1; i <= 3; ++i) {
    vars.push_back(Var::state(i));
    vars.push_back(Var::costate(i));
  }
  oracle::RandomTrees gen(vars, 17);
  for (int i = 0; i < 30; ++i) {
    Expr a = oracle::build(gen.tree(3, false)), b = oracle::build(gen.tree(3, false)),
         c = oracle::build(gen.tree(3, false));
    CHECK(poisson_bracket(p, a, b) == -poisson_bracket(p, b, a));
    CHECK(poisson_bracket(p, a, b * c) == poisson_bracket(p, a, b) * c + b * poisson_bracket(p, a, c));
  }
}
