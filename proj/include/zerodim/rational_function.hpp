#pragma once

#include <string>

#include "zerodim/gcd.hpp"

namespace zerodim {

/// Element of the fraction field Q(u). The numerator and denominator are
/// coprime and the denominator is monic, so equal values compare equal.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(anonymous_ring(), Rational(1)) {}
    RationalFunction(int c) : num_(anonymous_ring(), Rational(c)), den_(anonymous_ring(), Rational(1)) {}
    RationalFunction(const Rational& c) : num_(anonymous_ring(), c), den_(anonymous_ring(), Rational(1)) {}
    explicit RationalFunction(QPolynomial p) : num_(std::move(p)), den_(num_.ring(), Rational(1)) {}
    RationalFunction(QPolynomial num, QPolynomial den);

    const QPolynomial& numerator() const { return num_; }
    const QPolynomial& denominator() const { return den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    friend RationalFunction inverse(const RationalFunction& a);

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    struct Reduced {};
    RationalFunction(QPolynomial num, QPolynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    QPolynomial num_;
    QPolynomial den_;
};

inline bool is_zero(const RationalFunction& a) { return a.numerator().is_zero(); }
inline bool is_one(const RationalFunction& a) { return a.denominator().is_constant() && a.numerator() == a.denominator(); }
RationalFunction inverse(const RationalFunction& a);
CoefficientText format_coefficient(const RationalFunction& a);

/// Clears denominators, removes the polynomial content and scales to
/// coprime integers with a positive leading entry.
Polynomial<RationalFunction> display_normalized(const Polynomial<RationalFunction>& f);

}  // namespace zerodim
