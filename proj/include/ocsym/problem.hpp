#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ocsym/expr.hpp"
#include "ocsym/symbols.hpp"

namespace ocsym {

enum class Mode { Normal, Abnormal };

/// Optimal-control problem: minimize the integral of L subject to x' = phi,
/// with an optional nonconservative force acting on the adjoint system.
struct OCProblem {
  std::vector<std::string> state_names;
  std::vector<std::string> control_names;
  std::vector<std::string> param_names;
  std::vector<std::string> opaque_names;
  Expr lagrangian;
  std::vector<Expr> phi;
  std::vector<Expr> force;  // empty or one entry per state
  Mode mode = Mode::Normal;

  /// Problem with default names x1..xn, u1..um.
  static OCProblem with_dimensions(std::size_t n, std::size_t m);

  std::size_t n() const { return state_names.size(); }
  std::size_t m() const { return control_names.size(); }
  bool has_force() const { return !force.empty(); }
  SymbolTable symbols() const { return {state_names, control_names, param_names, opaque_names}; }
};

struct Diagnostic {
  std::string code;     // e.g. "UnknownIdentifier", "DimensionMismatch"
  std::string subject;  // offending identifier or field
  std::string message;

  friend bool operator==(const Diagnostic& a, const Diagnostic& b) {
    return a.code == b.code && a.subject == b.subject;
  }
};

/// Parses one problem file. Throws SyntaxError (with line and column),
/// UnknownIdentifier or DimensionMismatch.
OCProblem parse_problem(std::string_view text);

/// Empty iff every problem invariant holds.
std::vector<Diagnostic> validate(const OCProblem& p);

std::string to_string(Mode mode);

}  // namespace ocsym
