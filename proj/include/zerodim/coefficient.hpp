#pragma once

#include <gmpxx.h>

#include <concepts>
#include <span>
#include <string>

namespace zerodim {

/// Exact rationals backed by GMP.
using Rational = mpq_class;

/// How a coefficient prints in front of a monomial.
struct CoefficientText {
    bool negative = false;    // sign pulled out in front of the term
    std::string magnitude;    // absolute value, parenthesized when compound
    bool unit = false;        // magnitude is 1 and can be omitted
};

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }
Rational inverse(const Rational& a);
CoefficientText format_coefficient(const Rational& a);
std::string to_string(const Rational& a);

/// Factor that turns the coefficient list into coprime integers with a
/// positive first entry.
Rational display_scale(std::span<const Rational> coefficients);

/// Exact field operations required by every polynomial algorithm.
template <class K>
concept CoefficientField = std::copyable<K> && requires(const K& a, const K& b) {
    K(0);
    K(1);
    { K(a + b) };
    { K(a - b) };
    { K(a * b) };
    { K(a / b) };
    { K(-a) };
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { inverse(a) } -> std::convertible_to<K>;
    { format_coefficient(a) } -> std::same_as<CoefficientText>;
};

}  // namespace zerodim
