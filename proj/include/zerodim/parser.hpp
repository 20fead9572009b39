#pragma once

#include <string>

#include "zerodim/polynomial.hpp"

namespace zerodim {

/// Parses integers, names of `ring`, + - * / ^ and parentheses. Division
/// is only allowed by nonzero constants. Positions in errors are reported
/// relative to (line, column) of the first character.
Polynomial<Rational> parse_polynomial(const std::string& text, const RingPtr& ring, int line = 1, int column = 1);

/// An integer or a fraction p/q, optionally signed.
Rational parse_rational(const std::string& text, int line = 1, int column = 1);

}  // namespace zerodim
