#include "doctest.h"
#include "printing.hpp"
#include "oracles.hpp"
#include "ocsym/errors.hpp"
#include "ocsym/expr.hpp"
#include "ocsym/parser.hpp"
#include "ocsym/symbols.hpp"

using namespace ocsym;

namespace {

SymbolTable table() { return SymbolTable({}, {}, {"a", "b"}, {"z"}); }
Expr P(const char* s) { return parse_expression(s, table()); }

const Var x1 = Var::state(1), x2 = Var::state(2), u1 = Var::control(1), p1 = Var::costate(1);
const Var t = Var::time();

}  // namespace

TEST_CASE("canonical form cancels common factors") {
  CHECK(P("(x1^2 - 1)/(x1 - 1)") == P("x1 + 1"));
  CHECK(P("(x1 + x2)^2 - x1^2 - 2*x1*x2") == P("x2^2"));
  CHECK(P("x1/x1") == Expr(1L));
  CHECK(P("1/(2*x1)").denominator() == Poly(x1));
  CHECK(P("1/(2*x1)").numerator() == Poly(Rational(1, 2)));
  CHECK(P("(2*x1 + 2)/(4*x1^2 - 4)") == P("1/(2*x1 - 2)"));
  CHECK(P("a/b*b") == P("a"));
  CHECK(P("x1 - x1").is_zero());
}

TEST_CASE("gcd") {
  Poly f = (Poly(x1) + Poly(x2)).pow(2) * (Poly(x1) - Poly(1L));
  Poly g = (Poly(x1) + Poly(x2)) * (Poly(x1) + Poly(2L));
  CHECK(gcd(f, g) == Poly(x1) + Poly(x2));
  CHECK(gcd(Poly(), g) == g.monic());
  CHECK(gcd(Poly(Rational(3)), g).is_one());
  Poly h = Poly(x1) * Poly(x2) * Poly(p1);
  CHECK(gcd(h, Poly(x2).pow(3) * Poly(p1)) == Poly(x2) * Poly(p1));
}

TEST_CASE("monomial order") {
  // degree first, then the earlier variable wins
  CHECK(Monomial::compare(Monomial(x1, 2), Monomial(x1) * Monomial(x2)) > 0);
  CHECK(Monomial::compare(Monomial(t), Monomial(x1)) > 0);
  CHECK(Monomial::compare(Monomial(x1) * Monomial(u1), Monomial(x1)) > 0);
  CHECK(render(P("psi1*u1 - u1^2")) == "-u1^2 + u1*psi1");
}

TEST_CASE("parser precedence and errors") {
  CHECK(P("2 + 3*4") == Expr(14L));
  CHECK(P("-2^2") == Expr(-4L));
  CHECK(P("2^-1") == Expr(Rational(1, 2)));
  CHECK(P("x1^(-2)") == Expr(1L) / Expr(x1).pow(2));
  CHECK(P("8/4/2") == Expr(1L));
  CHECK(P("t*psi0 + psi2_dot") == Expr(t) * Expr(Var::costate_zero()) + Expr(Var::dot_costate(2)));
  CHECK(P("C3 + a7") == Expr(Var::constant(3)) + Expr(Var::ansatz(7)));

  try {
    P("x1 +");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(P("1.5*x1"), SyntaxError);
  CHECK_THROWS_AS(P("x1/0"), SyntaxError);
  CHECK_THROWS_AS(P("(x1"), SyntaxError);
  CHECK_THROWS_AS(P("x1^y"), SyntaxError);
  try {
    P("x1 + foo");
    FAIL("expected UnknownIdentifier");
  } catch (const UnknownIdentifier& e) {
    CHECK(e.name() == "foo");
  }
}

TEST_CASE("declared names shadow defaults") {
  SymbolTable s({"q", "v"}, {"u"});
  CHECK(parse_expression("q*v + u", s) == Expr(Var::state(1)) * Expr(Var::state(2)) + Expr(Var::control(1)));
  CHECK_THROWS_AS(parse_expression("x1", s), UnknownIdentifier);
  CHECK(s.name(Var::dot_state(2)) == "v_dot");
  CHECK(SymbolTable::is_reserved("psi3"));
  CHECK(SymbolTable::is_reserved("C12"));
  CHECK_FALSE(SymbolTable::is_reserved("q"));
}

TEST_CASE("render round trip") {
  oracle::RandomTrees gen({x1, x2, p1, t, Var::param("a"), Var::constant(2)}, 11);
  for (int i = 0; i < 200; ++i) {
    Expr e;
    try {
      e = oracle::build(gen.tree(3));
    } catch (const DivisionByZero&) {
      continue;
    }
    CHECK(parse_expression(render(e, table()), table()) == e);
  }
}

TEST_CASE("derivatives") {
  CHECK(diff(P("x1^3*x2 + t"), x1) == P("3*x1^2*x2"));
  CHECK(diff(P("1/x1"), x1) == P("-1/x1^2"));
  CHECK(diff(P("x2/(x1 + x2)"), x2) == P("x1/(x1 + x2)^2"));
  CHECK(diff(P("a*x1"), x2).is_zero());
  CHECK_THROWS_AS(diff(P("z*x1"), Var::opaque("z")), OpaqueDifferentiation);

  SUBCASE("Clairaut") {
    oracle::RandomTrees gen({x1, x2, p1}, 5);
    for (int i = 0; i < 100; ++i) {
      Expr e;
      try {
        e = oracle::build(gen.tree(3));
      } catch (const DivisionByZero&) {
        continue;
      }
      CHECK(diff(diff(e, x1), p1) == diff(diff(e, p1), x1));
    }
  }
}

TEST_CASE("substitution") {
  CHECK(substitute(P("x1^2 + x2"), {{x1, P("t + 1")}}) == P("t^2 + 2*t + 1 + x2"));
  CHECK(substitute(P("x1*x2"), {{x1, Expr(x2)}, {x2, Expr(x1)}}) == P("x1*x2"));  // simultaneous
  CHECK(substitute(P("1/(x1 + 1)"), {{x1, P("1/x2")}}) == P("x2/(x2 + 1)"));
  CHECK_THROWS_AS(substitute(P("1/(x1 - 2)"), {{x1, Expr(2L)}}), DivisionByZero);

  SUBCASE("inverse substitution restores") {
    oracle::RandomTrees gen({x1, x2}, 7);
    for (int i = 0; i < 100; ++i) {
      Expr e;
      try {
        e = oracle::build(gen.tree(3));
        Expr shifted = substitute(e, {{x1, P("x1 + 3*x2 - 1")}});
        CHECK(substitute(shifted, {{x1, P("x1 - 3*x2 + 1")}}) == e);
      } catch (const DivisionByZero&) {
      }
    }
  }
}

TEST_CASE("collect reconstructs") {
  Expr e = P("a*x1^2*u1 + 3*x1*u1 - psi1*u1 + a + x2/b");
  auto c = collect(e, {u1, x1});
  CHECK(c.size() == 4);
  CHECK(c.at(Monomial(x1) * Monomial(u1)) == Expr(3L));
  CHECK(c.at(Monomial(x1, 2) * Monomial(u1)) == P("a"));
  CHECK(c.at(Monomial(u1)) == P("-psi1"));
  CHECK(c.at(Monomial()) == P("a + x2/b"));
  CHECK_THROWS_AS(collect(P("1/(x1 + 1)"), {x1}), NotPolynomialIn);

  oracle::RandomTrees gen({x1, x2, u1, p1}, 9);
  for (int i = 0; i < 100; ++i) {
    Expr f = oracle::build(gen.tree(4, false));
    Expr back;
    for (const auto& [m, coeff] : collect(f, {x1, u1})) back += coeff * Expr(Poly(m, Rational(1)));
    CHECK(back == f);
  }
}

TEST_CASE("normalize_scale") {
  CHECK(normalize_scale(P("-2*x1 + 4")) == P("x1 - 2"));
  CHECK(normalize_scale(P("-1/6*x1^3 + 1/2*x2")) == P("x1^3 - 3*x2"));
  CHECK(normalize_scale(Expr()).is_zero());
}

TEST_CASE("canonical equality matches evaluation") {
  oracle::RandomTrees gen({x1, x2, p1}, 3);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    auto a = gen.tree(3);
    auto b = i % 2 ? gen.rewrite(a) : gen.tree(3);
    Expr ea, eb;
    try {
      ea = oracle::build(a);
      eb = oracle::build(b);
    } catch (const DivisionByZero&) {
      continue;
    }
    bool agree = true;
    for (int k = 0; k < 4; ++k) {
      auto pt = gen.point();
      auto va = oracle::eval(a, pt), vb = oracle::eval(b, pt);
      if (va && vb && *va != *vb) agree = false;
    }
    CHECK((ea == eb) == agree);
    ++checked;
  }
  CHECK(checked > 150);
}
