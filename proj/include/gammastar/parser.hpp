#pragma once

#include <gammastar/error.hpp>
#include <gammastar/polynomial.hpp>

#include <cctype>
#include <string>
#include <string_view>

namespace gammastar {

namespace detail {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := base ('^' natural)?
// base   := rational | ident | '(' expr ')' | '-' factor
// rational := integer ('/' positive-integer)?
class ExprParser {
 public:
  ExprParser(std::string_view text, VarSetPtr vars) : text_(text), vars_(std::move(vars)) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    advance();
    return true;
  }

  Integer integer_literal(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    if (start == pos_) fail(std::string("expected ") + what);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("exponent must be a non-negative integer literal");
      Integer e = integer_literal("exponent");
      if (!e.fits_uint_p() || e > 65535) fail("exponent too large");
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      advance();
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      advance();
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer_literal("integer");
      Integer den = 1;
      if (accept('/')) {
        den = integer_literal("denominator");
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(vars_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      int line = line_, col = col_;
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        advance();
      std::string name(text_.substr(start, pos_ - start));
      auto i = vars_->find(name);
      if (!i) throw ParseError("unknown identifier '" + name + "'", line, col);
      return Polynomial::variable(vars_, *i);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  VarSetPtr vars_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace detail

/// Parses an expression of the documented grammar into an exact polynomial.
inline Polynomial parse_polynomial(std::string_view text, const VarSetPtr& vars) {
  return detail::ExprParser(text, vars).parse();
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace gammastar
