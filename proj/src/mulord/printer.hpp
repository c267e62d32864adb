#pragma once

#include <string>

#include "mulord/formula.hpp"

namespace mulord::formula {

std::string print(const Rational& r);
std::string print(const Monomial& m);
std::string print(const Atom& a);

/// Concrete syntax; parse(print(f)) is structurally equal to f.
std::string print(const Formula& f);

}  // namespace mulord::formula
