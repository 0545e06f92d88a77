#include "courant/expression.hpp"

#include <cctype>

namespace courant {

LocatedError::LocatedError(SourceLocation loc, const std::string& kind, const std::string& message)
    : Error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + kind + ": " + message),
      location(loc),
      kind(kind),
      detail(message) {}

SyntaxError::SyntaxError(SourceLocation loc, const std::string& message)
    : LocatedError(loc, "syntax error", message) {}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const ChartContext& chart, SourceLocation origin)
      : text_(text), chart_(chart), origin_(origin) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected `") + peek() + "`");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    SourceLocation loc = origin_;
    loc.column += pos_;
    throw SyntaxError(loc, message);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::size_t nvars() const { return chart_.dimension(); }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial rhs = term();
      if (c == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
  }

  bool starts_primary(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_space();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division is only defined by a nonzero constant");
        }
        acc *= d.constant_term().inverse();
      } else if (starts_primary(c)) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    skip_space();
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a nonnegative integer");
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 6) {
      pos_ = start;
      fail("exponent too large");
    }
    return base.pow(static_cast<unsigned>(std::stoul(std::string(digits))));
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (peek() != ')') fail("expected `)`");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      mpz_class value(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(nvars(), Scalar(mpq_class(value)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "i") {
        if (!chart_.gaussian()) {
          pos_ = start;
          fail("imaginary unit `i` requires a gaussian-rational chart");
        }
        return Polynomial::constant(nvars(), Scalar::imaginary_unit());
      }
      int idx = chart_.index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown coordinate `" + name + "`");
      }
      return Polynomial::variable(nvars(), static_cast<std::size_t>(idx));
    }
    fail(std::string("unexpected `") + c + "`");
  }

  std::string_view text_;
  const ChartContext& chart_;
  SourceLocation origin_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ChartContext& chart, SourceLocation origin) {
  return ExpressionParser(text, chart, origin).parse();
}

Scalar parse_scalar(std::string_view text, Field field, SourceLocation origin) {
  ChartContext point({}, field);
  return parse_polynomial(text, point, origin).constant_term();
}

}  // namespace courant
