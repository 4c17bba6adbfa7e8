#include "birat/parse.hpp"

#include <cctype>

namespace birat {

namespace {

struct Parser {
  const std::string& text;
  const CtxPtr& ctx;
  const MonomialOrder& order;
  size_t pos = 0;

  [[noreturn]] void syntax(const std::string& msg) const {
    fail(ErrKind::SyntaxError, msg + " at position " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  mpz_class parse_nat() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start) syntax("expected a number");
    return mpz_class(text.substr(start, pos - start));
  }

  uint32_t parse_exponent() {
    mpz_class n = parse_nat();
    if (n > 1000000) syntax("exponent too large");
    return (uint32_t)n.get_ui();
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos >= text.size()) syntax("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Polynomial p = parse_expr();
      if (!accept(')')) syntax("expected ')'");
      return p;
    }
    if (std::isdigit((unsigned char)c)) {
      mpz_class num = parse_nat();
      mpz_class den = 1;
      // '/' binds only to a numeric literal: rational coefficient a/b
      size_t save = pos;
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        if (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
          den = parse_nat();
          if (den == 0) syntax("zero denominator");
        } else {
          pos = save; // not a fraction
        }
      } else {
        pos = save;
      }
      return Polynomial::constant(ctx, order, Scalar::of_fraction(ctx->field, num, den));
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      auto idx = ctx->var_index(name);
      if (!idx) fail(ErrKind::UnknownVariable, "unknown variable '" + name + "'");
      return Polynomial::variable(ctx, order, *idx);
    }
    syntax(std::string("unexpected character '") + c + "'");
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    if (accept('^')) {
      uint32_t e = parse_exponent();
      return base.pow(e);
    }
    return base;
  }

  Polynomial parse_term() {
    Polynomial p = parse_factor();
    while (accept('*')) p = p * parse_factor();
    return p;
  }

  Polynomial parse_expr() {
    bool neg = false;
    skip_ws();
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    Polynomial acc = parse_term();
    if (neg) acc = acc.neg();
    while (true) {
      skip_ws();
      if (accept('+')) {
        acc = acc + parse_term();
      } else if (accept('-')) {
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial run() {
    Polynomial p = parse_expr();
    skip_ws();
    if (pos != text.size()) syntax("trailing input");
    return p;
  }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const CtxPtr& ctx,
                            const MonomialOrder& order) {
  Parser p{text, ctx, order};
  return p.run();
}

} // namespace birat
