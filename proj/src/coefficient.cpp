#include "zerodim/coefficient.hpp"

#include "zerodim/errors.hpp"

namespace zerodim {

Rational inverse(const Rational& a) {
    if (is_zero(a)) throw PreconditionError("division by zero");
    Rational r = 1 / a;
    return r;
}

std::string to_string(const Rational& a) { return a.get_str(); }

CoefficientText format_coefficient(const Rational& a) {
    CoefficientText t;
    t.negative = sgn(a) < 0;
    Rational m = abs(a);
    t.unit = (m == 1);
    t.magnitude = m.get_str();
    return t;
}

Rational display_scale(std::span<const Rational> coefficients) {
    if (coefficients.empty()) return Rational(1);
    mpz_class den_lcm = 1;
    for (const auto& c : coefficients) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        den_lcm = l;
    }
    mpz_class content = 0;
    for (const auto& c : coefficients) {
        mpz_class v = c.get_num() * (den_lcm / c.get_den());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        content = g;
    }
    Rational s(den_lcm, content);
    s.canonicalize();
    if (sgn(coefficients.front()) < 0) s = -s;
    return s;
}

}  // namespace zerodim
