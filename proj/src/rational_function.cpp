#include "zerodim/rational_function.hpp"

#include <vector>

namespace zerodim {

RationalFunction::RationalFunction(QPolynomial num, QPolynomial den) {
    if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = QPolynomial(den.ring());
        den_ = QPolynomial::constant(den.ring(), 1);
        return;
    }
    if (!den.is_constant()) {
        QPolynomial g = gcd(num, den);
        if (!g.is_constant()) {
            num = divide_exact(num, g);
            den = divide_exact(den, g);
        }
    }
    Rational s = inverse(den.head_coefficient());
    num_ = num.scaled(s);
    den_ = den.scaled(s);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    if (a.den_.is_constant() && b.den_.is_constant())
        return RationalFunction(a.num_ + b.num_, QPolynomial::constant(a.num_.ring(), 1), RationalFunction::Reduced{});
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (is_zero(a) || is_zero(b)) return RationalFunction();
    if (a.den_.is_constant() && b.den_.is_constant())
        return RationalFunction(a.num_ * b.num_, QPolynomial::constant(a.num_.ring(), 1), RationalFunction::Reduced{});
    // cross-cancel so the product stays reduced
    QPolynomial g1 = gcd(a.num_, b.den_);
    QPolynomial g2 = gcd(b.num_, a.den_);
    QPolynomial an = g1.is_constant() ? a.num_ : divide_exact(a.num_, g1);
    QPolynomial bd = g1.is_constant() ? b.den_ : divide_exact(b.den_, g1);
    QPolynomial bn = g2.is_constant() ? b.num_ : divide_exact(b.num_, g2);
    QPolynomial ad = g2.is_constant() ? a.den_ : divide_exact(a.den_, g2);
    QPolynomial num = an * bn;
    QPolynomial den = ad * bd;
    Rational s = inverse(den.head_coefficient());
    return RationalFunction(num.scaled(s), den.scaled(s), RationalFunction::Reduced{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * inverse(b); }

RationalFunction inverse(const RationalFunction& a) {
    if (is_zero(a)) throw PreconditionError("division by zero");
    Rational s = inverse(a.num_.head_coefficient());
    return RationalFunction(a.den_.scaled(s), a.num_.scaled(s), RationalFunction::Reduced{});
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

CoefficientText format_coefficient(const RationalFunction& a) {
    CoefficientText t;
    const QPolynomial& n = a.numerator();
    if (a.denominator().is_constant() && n.size() == 1) {
        CoefficientText c = format_coefficient(n.head_coefficient());
        t.negative = c.negative;
        std::string mono = n.monomial_string(n.head_term());
        if (mono.empty()) return c;
        t.magnitude = c.unit ? mono : c.magnitude + "*" + mono;
        return t;
    }
    if (a.denominator().is_constant())
        t.magnitude = "(" + n.to_string() + ")";
    else
        t.magnitude = "(" + a.to_string() + ")";
    return t;
}

Polynomial<RationalFunction> display_normalized(const Polynomial<RationalFunction>& f) {
    if (f.is_zero()) return f;
    QPolynomial den_lcm = f.terms().front().coefficient.denominator();
    for (const auto& t : f.terms()) den_lcm = lcm(den_lcm, t.coefficient.denominator());
    std::vector<QPolynomial> nums;
    nums.reserve(f.size());
    for (const auto& t : f.terms())
        nums.push_back(t.coefficient.numerator() * divide_exact(den_lcm, t.coefficient.denominator()));
    QPolynomial content(nums.front().ring());
    for (const auto& n : nums) content = gcd(content, n);
    std::vector<Rational> flat;
    for (auto& n : nums) {
        if (!content.is_constant()) n = divide_exact(n, content);
        for (const auto& t : n.terms()) flat.push_back(t.coefficient);
    }
    Rational s = display_scale(flat);
    std::vector<Term<RationalFunction>> out;
    out.reserve(f.size());
    for (std::size_t i = 0; i < nums.size(); ++i)
        out.push_back({f.terms()[i].monomial, RationalFunction(nums[i].scaled(s))});
    return Polynomial<RationalFunction>::from_sorted_terms(f.ring(), std::move(out));
}

}  // namespace zerodim
