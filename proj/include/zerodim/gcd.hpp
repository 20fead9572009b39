#pragma once

#include "zerodim/poly_ops.hpp"

namespace zerodim {

using QPolynomial = Polynomial<Rational>;

/// a / b when b divides a exactly; throws PreconditionError otherwise.
QPolynomial divide_exact(const QPolynomial& a, const QPolynomial& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
QPolynomial gcd(const QPolynomial& a, const QPolynomial& b);

/// Monic least common multiple.
QPolynomial lcm(const QPolynomial& a, const QPolynomial& b);

/// p divided by its repeated factors.
QPolynomial squarefree_part(const QPolynomial& p);

/// e with every irreducible factor it shares with n removed.
QPolynomial strip_common_factors(const QPolynomial& e, const QPolynomial& n);

}  // namespace zerodim
