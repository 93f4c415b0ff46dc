#include "ocsym/parser.hpp"

#include <cctype>
#include <string>

#include "ocsym/errors.hpp"

namespace ocsym {
namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    int column = static_cast<int>(pos_) + 1;
    if (pos_ >= text_.size()) return {Tok::End, "", column};
    char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') {
        throw SyntaxError("decimal literals are not supported; use a fraction", 0, static_cast<int>(pos_) + 1);
      }
      return {Tok::Number, std::string(text_.substr(start, pos_ - start)), column};
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return {Tok::Ident, std::string(text_.substr(start, pos_ - start)), column};
    }
    ++pos_;
    switch (ch) {
      case '+': return {Tok::Plus, "+", column};
      case '-': return {Tok::Minus, "-", column};
      case '*': return {Tok::Star, "*", column};
      case '/': return {Tok::Slash, "/", column};
      case '^': return {Tok::Caret, "^", column};
      case '(': return {Tok::LParen, "(", column};
      case ')': return {Tok::RParen, ")", column};
      default: throw SyntaxError(std::string("unexpected character '") + ch + "'", 0, column);
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& symbols) : lexer_(text), symbols_(symbols) { advance(); }

  Expr parse() {
    Expr e = expr();
    if (cur_.kind != Tok::End) fail("unexpected " + describe(cur_));
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, 0, cur_.column); }

  Expr expr() {
    Expr e = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool plus = cur_.kind == Tok::Plus;
      advance();
      Expr rhs = term();
      e = plus ? e + rhs : e - rhs;
    }
    return e;
  }

  Expr term() {
    Expr e = unary();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      bool times = cur_.kind == Tok::Star;
      int column = cur_.column;
      advance();
      Expr rhs = unary();
      if (times) {
        e = e * rhs;
      } else {
        if (rhs.is_zero()) throw SyntaxError("division by zero", 0, column);
        e = e / rhs;
      }
    }
    return e;
  }

  Expr unary() {
    if (cur_.kind == Tok::Minus) {
      advance();
      return -unary();
    }
    if (cur_.kind == Tok::Plus) {
      advance();
      return unary();
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (cur_.kind != Tok::Caret) return base;
    advance();
    int column = cur_.column;
    long exponent = integer_exponent();
    if (exponent < 0 && base.is_zero()) throw SyntaxError("zero raised to a negative power", 0, column);
    if (exponent > 10000 || exponent < -10000) throw SyntaxError("exponent out of range", 0, column);
    return base.pow(static_cast<int>(exponent));
  }

  long integer_exponent() {
    bool paren = cur_.kind == Tok::LParen;
    if (paren) advance();
    bool negative = cur_.kind == Tok::Minus;
    if (negative) advance();
    if (cur_.kind != Tok::Number) fail("integer exponent expected, found " + describe(cur_));
    if (cur_.text.size() > 6) fail("exponent out of range");
    long value = std::stol(cur_.text);
    advance();
    if (paren) {
      if (cur_.kind != Tok::RParen) fail("')' expected, found " + describe(cur_));
      advance();
    }
    return negative ? -value : value;
  }

  Expr primary() {
    switch (cur_.kind) {
      case Tok::Number: {
        Rational value(mpz_class(cur_.text));
        advance();
        return Expr(value);
      }
      case Tok::Ident: {
        auto var = symbols_.lookup(cur_.text);
        if (!var) throw UnknownIdentifier(cur_.text, cur_.column);
        advance();
        return Expr(*var);
      }
      case Tok::LParen: {
        advance();
        Expr e = expr();
        if (cur_.kind != Tok::RParen) fail("')' expected, found " + describe(cur_));
        advance();
        return e;
      }
      default: fail("operand expected, found " + describe(cur_));
    }
  }

  Lexer lexer_;
  const SymbolTable& symbols_;
  Token cur_{Tok::End, "", 0};
};

}  // namespace

Expr parse_expression(std::string_view text, const SymbolTable& symbols) { return Parser(text, symbols).parse(); }

}  // namespace ocsym
