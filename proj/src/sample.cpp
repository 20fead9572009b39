#include "zerodim/cgs.hpp"
#include "zerodim/gcd.hpp"

#include <cstdlib>
#include <map>
#include <numeric>

namespace zerodim {
namespace {

using Point = std::vector<std::optional<Rational>>;

QPolynomial plug(const QPolynomial& f, const Point& values) {
    std::vector<Term<Rational>> out;
    for (const auto& t : f.terms()) {
        Monomial m = t.monomial;
        Rational c = t.coefficient;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!values[i] || m[i] == 0) continue;
            for (unsigned e = 0; e < m[i]; ++e) c *= *values[i];
            m.set(i, 0);
        }
        if (!is_zero(c)) out.push_back({m, c});
    }
    return QPolynomial::from_terms(f.ring(), std::move(out));
}

bool uses_below(const QPolynomial& f, std::size_t v) {
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < v; ++i)
            if (t.monomial[i]) return true;
    return false;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    if (n == 0) return out;
    const unsigned long limit = 20000;
    for (unsigned long d = 1; d <= limit && mpz_class(d) * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        out.push_back(n / d);
    }
    if (out.empty()) out.push_back(n);
    return out;
}

/// Rational roots of a univariate polynomial in variable v.
std::vector<Rational> rational_roots(const QPolynomial& u, std::size_t v) {
    std::map<unsigned, Rational> coeff;
    for (const auto& t : u.terms()) coeff[t.monomial[v]] += t.coefficient;
    std::vector<Rational> out;
    unsigned low = coeff.begin()->first;
    if (low > 0) out.push_back(0);
    mpz_class den = 1;
    for (const auto& [e, c] : coeff) den = lcm(den, mpz_class(c.get_den()));
    mpz_class a_low = mpz_class(coeff.begin()->second * den);
    mpz_class a_high = mpz_class(coeff.rbegin()->second * den);
    if (coeff.size() == 1) return out;
    for (const auto& p : divisors(a_low))
        for (const auto& q : divisors(a_high))
            for (int sign : {1, -1}) {
                Rational r(p * sign, q);
                r.canonicalize();
                if (std::find(out.begin(), out.end(), r) != out.end()) continue;
                Rational acc = 0, pw = 1;
                unsigned last = 0;
                for (const auto& [e, c] : coeff) {
                    for (; last < e; ++last) pw *= r;
                    acc += c * pw;
                }
                if (is_zero(acc)) out.push_back(r);
            }
    return out;
}

/// 0, 1, -1, 2, -2, 1/2, -1/2, 3, ... by increasing height.
std::vector<Rational> small_rationals(std::size_t count) {
    std::vector<Rational> out{0};
    auto add = [&](long num, long den) {
        if (std::gcd(num, den) != 1) return;
        Rational r(num, den);
        if (std::find(out.begin(), out.end(), r) != out.end()) return;
        out.push_back(r);
        out.push_back(-r);
    };
    for (long h = 1; out.size() < count; ++h)
        for (long q = 1; q <= h; ++q) {
            add(h, q);
            add(q, h);
        }
    out.resize(count);
    return out;
}

}  // namespace

std::vector<std::vector<Rational>> sample_points(const Stratum<Rational>& s, std::size_t count, std::size_t budget) {
    std::vector<std::vector<Rational>> out;
    auto canon = canonicalize(s);
    if (!canon || count == 0) return out;
    const std::size_t m = s.ring->size();
    if (m == 0) {
        out.push_back({});
        return out;
    }
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    RingPtr lex = make_ring(s.ring->names, TermOrder::lex(idx));
    Basis<Rational> E;
    for (const auto& e : canon->equations) E.push_back(e.in_ring(lex));
    Basis<Rational> G = buchberger(E);
    const std::vector<Rational> free_values = small_rationals(count + 8 + budget / 4);
    std::size_t visits = 0;
    const std::size_t limit = budget * count * m;

    Point point(m);
    auto dfs = [&](auto&& self, std::size_t level) -> void {
        if (out.size() >= count || visits >= limit) return;
        ++visits;
        if (level == 0) {
            std::vector<Rational> p;
            for (const auto& v : point) p.push_back(*v);
            if (contains(*canon, p)) out.push_back(std::move(p));
            return;
        }
        const std::size_t v = level - 1;
        QPolynomial u(lex);
        bool constrained = false;
        for (const auto& g : G) {
            if (uses_below(g, v)) continue;
            QPolynomial r = plug(g, point);
            if (r.is_zero()) continue;
            if (r.is_constant()) return;
            u = constrained ? gcd(u, r) : r;
            constrained = true;
            if (u.is_constant()) return;
        }
        const std::vector<Rational> candidates = constrained ? rational_roots(u, v) : free_values;
        for (const auto& c : candidates) {
            point[v] = c;
            self(self, level - 1);
            if (out.size() >= count || visits >= limit) break;
        }
        point[v].reset();
    };
    dfs(dfs, m);
    return out;
}

}  // namespace zerodim
