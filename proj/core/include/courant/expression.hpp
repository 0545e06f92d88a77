#pragma once

#include <string>
#include <string_view>

#include "courant/error.hpp"
#include "courant/polynomial.hpp"

namespace courant {

/// Source position, 1-based.
struct SourceLocation {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// An input error tied to a position in the source text.
class LocatedError : public Error {
 public:
  LocatedError(SourceLocation location, const std::string& kind, const std::string& message);
  SourceLocation location;
  std::string kind;
  std::string detail;
};

/// Malformed input text. `location` points at the offending character.
class SyntaxError : public LocatedError {
 public:
  SyntaxError(SourceLocation location, const std::string& message);
};

/// Parses a polynomial expression over the chart's coordinates.
///
/// Grammar (whitespace insignificant):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary | primary)*
///     unary   := ('+' | '-') unary | power
///     power   := primary ('^' integer)?
///     primary := integer | identifier | 'i' | '(' expr ')'
///
/// Juxtaposition is multiplication (`2x`). Division is only allowed by a
/// nonzero constant, which is how `p/q` literals arise. The imaginary unit
/// `i` is rejected on rational charts. `origin` is the location of the first
/// character of `text` and is used to report absolute positions.
Polynomial parse_polynomial(std::string_view text, const ChartContext& chart,
                            SourceLocation origin = {});

/// Parses a constant scalar expression (no coordinates allowed).
Scalar parse_scalar(std::string_view text, Field field, SourceLocation origin = {});

}  // namespace courant
