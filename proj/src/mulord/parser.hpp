#pragma once

#include <stdexcept>
#include <string>

#include "mulord/formula.hpp"

namespace mulord::formula {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Parses the concrete syntax:
///   variables  [a-z][a-z0-9_]*     literals  12, -3, 4/9
///   terms      products with '*', exponents '^' with signed integers,
///              inv(t) for t^-1
///   atoms      t = u, t < u, t <= u (sugar for < or =), R[n](t) with n >= 2
///   formulas   !, &, |, -> (loosest), exists x. ..., forall x. ...,
///              true, false, parentheses
/// Bound variables are renamed apart from each other and from free variables.
Formula parse(const std::string& text);

/// Parses a single term into monomial normal form (test and tooling aid).
Monomial parse_term(const std::string& text);

}  // namespace mulord::formula
