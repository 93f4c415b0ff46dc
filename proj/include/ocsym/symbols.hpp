#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocsym/expr.hpp"

namespace ocsym {

/// Maps variables to printable identifiers and back. States and controls use
/// their declared names (default x<i>, u<j>); costates are psi<i>, dotted
/// symbols append `_dot`, free constants are C<k>, ansatz coefficients a<k>.
class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(std::vector<std::string> states, std::vector<std::string> controls,
              std::vector<std::string> params = {}, std::vector<std::string> opaque = {});

  std::string name(const Var& v) const;
  std::optional<Var> lookup(std::string_view identifier) const;

  /// True when `identifier` collides with a generated name (t, psi<k>, C<k>, a<k>, *_dot).
  static bool is_reserved(std::string_view identifier);

 private:
  std::vector<std::string> states_;
  std::vector<std::string> controls_;
  std::vector<std::string> params_;
  std::vector<std::string> opaque_;
};

/// Text in the expression grammar; parse_expression(render(e)) == e.
std::string render(const Expr& e, const SymbolTable& symbols = {});
std::string render(const Poly& p, const SymbolTable& symbols = {});
std::string render(const Rational& q);

}  // namespace ocsym
