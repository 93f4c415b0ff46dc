#pragma once

#include "doctest.h"
#include "ocsym/symbols.hpp"

namespace doctest {
template <>
struct StringMaker<ocsym::Expr> {
  static String convert(const ocsym::Expr& e) {
    std::string s = ocsym::render(e, ocsym::SymbolTable({}, {}, {"a", "b", "mu"}, {"z"}));
    if (!e.is_polynomial())
      s += "   [num " + ocsym::render(e.numerator()) + " | den " + ocsym::render(e.denominator()) + "]";
    return s.c_str();
  }
};
}  // namespace doctest
