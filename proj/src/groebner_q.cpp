#include "zerodim/groebner.hpp"

namespace zerodim::detail {
namespace {

bool is_integral(const Polynomial<Rational>& f) {
    for (const auto& t : f.terms())
        if (t.coefficient.get_den() != 1) return false;
    return true;
}

mpz_class content(const Polynomial<Rational>& p) {
    mpz_class g = 0;
    for (const auto& t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_num_mpz_t());
        if (g == 1) break;
    }
    return g;
}

}  // namespace

Polynomial<Rational> primitive_integral(const Polynomial<Rational>& f) {
    if (f.is_zero()) return f;
    mpz_class den = 1, num = 0;
    for (const auto& t : f.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coefficient.get_num_mpz_t());
    }
    Rational s(den, num);
    s.canonicalize();
    if (sgn(f.head_coefficient()) < 0) s = -s;
    return f.scaled(s);
}

Polynomial<Rational> normal_form_q(const Polynomial<Rational>& f, const Basis<Rational>& G) {
    if (f.is_zero()) return f;
    std::vector<Polynomial<Rational>> local;
    std::vector<const Polynomial<Rational>*> reducers;
    local.reserve(G.size());
    for (const auto& g : G) {
        if (g.is_zero()) continue;
        if (is_integral(g)) {
            reducers.push_back(&g);
        } else {
            local.push_back(primitive_integral(g));
            reducers.push_back(&local.back());
        }
    }
    // invariant: f = p / M + R modulo <G>
    Polynomial<Rational> p = primitive_integral(f);
    Rational M = p.head_coefficient() / f.head_coefficient();
    std::vector<Term<Rational>> rest;
    unsigned steps = 0;
    mpz_class a, b, d;
    while (!p.is_zero()) {
        if ((++steps & 31u) == 0) check_deadline();
        const Monomial h = p.head_term();
        const Polynomial<Rational>* g = nullptr;
        for (const auto* r : reducers)
            if (r->head_term().divides(h)) {
                g = r;
                break;
            }
        if (!g) {
            Term<Rational> t = p.pop_head();
            rest.push_back({t.monomial, t.coefficient / M});
            continue;
        }
        a = g->head_coefficient().get_num();
        b = p.head_coefficient().get_num();
        mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        a /= d;
        b /= d;
        if (a != 1) {
            p.scale_in_place(Rational(a));
            M *= Rational(a);
        }
        p.add_scaled_shift(Rational(-b), h / g->head_term(), *g);
        if ((steps & 7u) == 0 && !p.is_zero()) {
            mpz_class c = content(p);
            if (c != 1) {
                p.scale_in_place(Rational(1, 1) / Rational(c));
                M /= Rational(c);
            }
        }
    }
    return Polynomial<Rational>::from_sorted_terms(f.ring(), std::move(rest));
}

}  // namespace zerodim::detail
