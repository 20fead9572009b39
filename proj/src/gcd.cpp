#include "zerodim/gcd.hpp"

#include <map>
#include <optional>

#include "zerodim/deadline.hpp"

namespace zerodim {
namespace {

// Coefficients of a as a polynomial in variable v, keyed by degree.
std::map<unsigned, QPolynomial, std::greater<>> coefficients_in(const QPolynomial& a, std::size_t v) {
    std::map<unsigned, std::vector<Term<Rational>>, std::greater<>> buckets;
    for (const auto& t : a.terms()) {
        Monomial m = t.monomial;
        unsigned e = m[v];
        m.set(v, 0);
        buckets[e].push_back({m, t.coefficient});
    }
    std::map<unsigned, QPolynomial, std::greater<>> out;
    for (auto& [e, terms] : buckets) out.emplace(e, QPolynomial::from_terms(a.ring(), std::move(terms)));
    return out;
}

int main_variable(const QPolynomial& a) {
    int v = -1;
    for (const auto& t : a.terms())
        for (int i = kMaxVariables - 1; i > v; --i)
            if (t.monomial[i]) {
                v = i;
                break;
            }
    return v;
}

unsigned degree_in(const QPolynomial& a, std::size_t v) {
    unsigned d = 0;
    for (const auto& t : a.terms()) d = std::max<unsigned>(d, t.monomial[v]);
    return d;
}

QPolynomial leading_in(const QPolynomial& a, std::size_t v) { return coefficients_in(a, v).begin()->second; }

QPolynomial content_in(const QPolynomial& a, std::size_t v) {
    QPolynomial g(a.ring());
    for (auto& [e, c] : coefficients_in(a, v)) {
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

QPolynomial primitive_in(const QPolynomial& a, std::size_t v) {
    if (a.is_zero()) return a;
    QPolynomial c = content_in(a, v);
    if (c.is_constant()) return a.monic();
    return divide_exact(a, c).monic();
}

// Sparse pseudo-remainder of a by b in variable v; correct up to a factor
// free of v, which the caller strips with primitive_in.
QPolynomial pseudo_remainder(QPolynomial a, const QPolynomial& b, std::size_t v) {
    unsigned db = degree_in(b, v);
    QPolynomial lb = leading_in(b, v);
    const bool field_lead = lb.is_constant();
    const Rational inv = field_lead ? inverse(lb.head_coefficient()) : Rational(0);
    while (!a.is_zero()) {
        check_deadline();
        unsigned da = degree_in(a, v);
        if (da < db) break;
        QPolynomial la = leading_in(a, v);
        if (field_lead) {
            // constant leading coefficient: plain division, no growth
            a.add_scaled_shift(Rational(-inv), Monomial::variable(v, da - db), b * la);
            continue;
        }
        QPolynomial shifted = b * la;
        a = a * lb;
        a.add_scaled_shift(Rational(-1), Monomial::variable(v, da - db), shifted);
    }
    return a;
}

// Heuristic gcd over Z: evaluate the main variable at a large integer,
// take the gcd of the images and read the result back xi-adically. Inputs
// are primitive with integer coefficients. Returns nothing when the images
// do not lead to a divisor of both inputs.

mpz_class integer_content(const QPolynomial& a) {
    mpz_class g = 0;
    for (const auto& t : a.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_num_mpz_t());
    return g;
}

mpz_class max_norm(const QPolynomial& a) {
    mpz_class m = 0;
    for (const auto& t : a.terms())
        if (mpz_cmpabs(t.coefficient.get_num_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coefficient.get_num());
    return m;
}

QPolynomial evaluate_at(const QPolynomial& a, std::size_t v, const mpz_class& xi) {
    std::vector<mpz_class> powers{1};
    std::vector<Term<Rational>> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
        unsigned e = t.monomial[v];
        while (powers.size() <= e) powers.push_back(powers.back() * xi);
        Monomial m = t.monomial;
        m.set(v, 0);
        out.push_back({m, t.coefficient * Rational(powers[e])});
    }
    return QPolynomial::from_terms(a.ring(), std::move(out));
}

// Symmetric residue of c modulo xi.
mpz_class symmetric_mod(const mpz_class& c, const mpz_class& xi) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
    if (2 * r > xi) r -= xi;
    return r;
}

QPolynomial interpolate(QPolynomial h, std::size_t v, const mpz_class& xi) {
    std::vector<Term<Rational>> out;
    for (unsigned i = 0; !h.is_zero(); ++i) {
        check_deadline();
        std::vector<Term<Rational>> digit, rest;
        for (const auto& t : h.terms()) {
            mpz_class c = symmetric_mod(t.coefficient.get_num(), xi);
            if (c != 0) {
                Monomial m = t.monomial;
                m.set(v, i);
                out.push_back({m, Rational(c)});
            }
            mpz_class q = (t.coefficient.get_num() - c) / xi;
            if (q != 0) rest.push_back({t.monomial, Rational(q)});
        }
        h = QPolynomial::from_sorted_terms(h.ring(), std::move(rest));
    }
    return QPolynomial::from_terms(h.ring(), std::move(out));
}

std::optional<QPolynomial> try_divide(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial q(a.ring());
    QPolynomial r = a;
    const Monomial& hb = b.head_term();
    Rational inv = inverse(b.head_coefficient());
    unsigned steps = 0;
    while (!r.is_zero()) {
        if ((++steps & 63u) == 0) check_deadline();
        if (!hb.divides(r.head_term())) return std::nullopt;
        Monomial m = r.head_term() / hb;
        Rational c = r.head_coefficient() * inv;
        q.add_scaled_shift(c, m, QPolynomial::constant(a.ring(), Rational(1)));
        r.add_scaled_shift(Rational(-c), m, b);
    }
    return q;
}

std::optional<QPolynomial> heuristic_gcd(QPolynomial a, QPolynomial b) {
    const RingPtr& ring = a.ring();
    mpz_class ca = integer_content(a), cb = integer_content(b), g;
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.is_constant() || b.is_constant()) return QPolynomial::constant(ring, Rational(g));
    a = a.scaled(Rational(1) / Rational(ca));
    b = b.scaled(Rational(1) / Rational(cb));
    std::size_t v = static_cast<std::size_t>(std::max(main_variable(a), main_variable(b)));
    if (degree_in(a, v) == 0 || degree_in(b, v) == 0) return std::nullopt;
    mpz_class na = max_norm(a), nb = max_norm(b);
    mpz_class xi = 2 * (na < nb ? na : nb) + 29;
    const unsigned deg = std::max(degree_in(a, v), degree_in(b, v));
    for (int attempt = 0; attempt < 6; ++attempt) {
        check_deadline();
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * deg > 400000) return std::nullopt;
        QPolynomial ea = evaluate_at(a, v, xi), eb = evaluate_at(b, v, xi);
        if (!ea.is_zero() && !eb.is_zero()) {
            auto h = heuristic_gcd(ea, eb);
            if (!h) return std::nullopt;
            QPolynomial G = interpolate(*h, v, xi);
            if (!G.is_zero()) {
                G = G.scaled(Rational(1) / Rational(integer_content(G)));
                if (try_divide(a, G) && try_divide(b, G)) return G.scaled(Rational(g));
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

QPolynomial integral_primitive(const QPolynomial& a) {
    mpz_class den = 1;
    for (const auto& t : a.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
    return a.scaled(Rational(den));
}

}  // namespace

QPolynomial divide_exact(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    RingPtr ring = a.is_constant() ? b.ring() : a.ring();
    QPolynomial q(ring);
    QPolynomial r = a;
    const Monomial& hb = b.head_term();
    Rational inv = inverse(b.head_coefficient());
    unsigned steps = 0;
    while (!r.is_zero()) {
        if ((++steps & 63u) == 0) check_deadline();
        if (!hb.divides(r.head_term())) throw PreconditionError("polynomial division is not exact");
        Monomial m = r.head_term() / hb;
        Rational c = r.head_coefficient() * inv;
        q.add_scaled_shift(c, m, QPolynomial::constant(ring, Rational(1)));
        r.add_scaled_shift(Rational(-c), m, b);
    }
    return q;
}

QPolynomial gcd(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return QPolynomial::constant(a.is_constant() ? b.ring() : a.ring(), 1);
    if (a.monic() == b.monic()) return a.monic();
    if (auto h = heuristic_gcd(integral_primitive(a), integral_primitive(b))) return h->monic();
    int va = main_variable(a), vb = main_variable(b);
    std::size_t v = static_cast<std::size_t>(std::max(va, vb));
    if (degree_in(a, v) == 0) return gcd(a, content_in(b, v));
    if (degree_in(b, v) == 0) return gcd(content_in(a, v), b);
    QPolynomial ca = content_in(a, v), cb = content_in(b, v);
    QPolynomial c = gcd(ca, cb);
    QPolynomial pa = ca.is_constant() ? a : divide_exact(a, ca);
    QPolynomial pb = cb.is_constant() ? b : divide_exact(b, cb);
    if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        if (degree_in(pb, v) == 0) return c.monic();
        QPolynomial r = pseudo_remainder(pa, pb, v);
        pa = std::move(pb);
        pb = primitive_in(r, v);
    }
    return (c * primitive_in(pa, v)).monic();
}

QPolynomial lcm(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return QPolynomial(a.ring());
    QPolynomial g = gcd(a, b);
    return (divide_exact(a, g) * b).monic();
}

}  // namespace zerodim

namespace zerodim {

QPolynomial squarefree_part(const QPolynomial& p) {
    if (p.is_constant()) return p;
    QPolynomial g = p;
    for (std::size_t v = 0; v < p.ring()->size() && !g.is_constant(); ++v) {
        QPolynomial d = derivative(p, v);
        if (!d.is_zero()) g = gcd(g, d);
    }
    return g.is_constant() ? p : divide_exact(p, g);
}

QPolynomial strip_common_factors(const QPolynomial& e, const QPolynomial& n) {
    QPolynomial r = e;
    while (!r.is_constant()) {
        QPolynomial g = gcd(r, n);
        if (g.is_constant()) break;
        r = divide_exact(r, g);
    }
    return r;
}

}  // namespace zerodim
