#pragma once

#include <algorithm>
#include <cstddef>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

#include "zerodim/deadline.hpp"
#include "zerodim/poly_ops.hpp"
#include "zerodim/polynomial.hpp"

namespace zerodim {

/// Order in which critical pairs are processed.
enum class Selection {
    normal,  // smallest lcm under the term order
    sugar,   // smallest sugar degree, then normal
    fifo,    // creation order
    lifo,    // reverse creation order
    race,    // normal and sugar in parallel, first result wins
};

struct GroebnerOptions {
    Selection selection = Selection::race;
    /// Interreduce the result into the reduced basis.
    bool reduce = true;
    /// Pairs whose lcm has degree >= 2 in these variables are dropped. Used
    /// for module elements encoded with tag variables.
    std::vector<std::size_t> tag_variables;
};

template <class K>
using Basis = std::vector<Polynomial<K>>;

/// Sorts by descending head term.
template <class K>
void sort_by_head(Basis<K>& G) {
    std::sort(G.begin(), G.end(), [](const Polynomial<K>& a, const Polynomial<K>& b) {
        if (a.is_zero() || b.is_zero()) return !a.is_zero() && b.is_zero();
        return a.order().compare(a.head_term(), b.head_term()) > 0;
    });
}

template <class K>
const Polynomial<K>* find_reducer(const Monomial& m, const Basis<K>& G) {
    for (const auto& g : G)
        if (!g.is_zero() && g.head_term().divides(m)) return &g;
    return nullptr;
}

namespace detail {
// Fraction-free reduction over Q; same result as the field version.
Polynomial<Rational> normal_form_q(const Polynomial<Rational>& f, const Basis<Rational>& G);
// Integer coefficients with gcd 1 and positive head.
Polynomial<Rational> primitive_integral(const Polynomial<Rational>& f);
}  // namespace detail

/// Full normal form of f with respect to G: no term of the result is
/// divisible by a head term of G.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const Basis<K>& G) {
    if constexpr (std::is_same_v<K, Rational>) return detail::normal_form_q(f, G);
    Polynomial<K> p = f;
    std::vector<Term<K>> rest;
    unsigned steps = 0;
    while (!p.is_zero()) {
        if ((++steps & 31u) == 0) check_deadline();
        const Monomial& h = p.head_term();
        if (const Polynomial<K>* g = find_reducer(h, G)) {
            K c = p.head_coefficient() / g->head_coefficient();
            p.add_scaled_shift(K(-c), h / g->head_term(), *g);
        } else {
            rest.push_back(p.pop_head());
        }
    }
    return Polynomial<K>::from_sorted_terms(f.ring(), std::move(rest));
}

/// S-polynomial up to a nonzero scalar factor.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
    Monomial L = lcm(f.head_term(), g.head_term());
    Polynomial<K> s = f.times_term(g.head_coefficient(), L / f.head_term());
    s.add_scaled_shift(K(-f.head_coefficient()), L / g.head_term(), g);
    return s;
}

namespace detail {
/// Scalar normalization for basis elements kept during the computation.
template <class K>
Polynomial<K> basis_form(const Polynomial<K>& h) {
    if constexpr (std::is_same_v<K, Rational>)
        return primitive_integral(h);
    else
        return h.monic();
}
}  // namespace detail

namespace detail {

inline unsigned tag_degree(const Monomial& m, const std::vector<std::size_t>& tags) {
    unsigned d = 0;
    for (std::size_t v : tags) d += m[v];
    return d;
}

/// Minimal basis made monic, tails reduced, sorted by descending head.
/// G must already be a Groebner basis.
template <class K>
Basis<K> interreduce(Basis<K> G) {
    G.erase(std::remove_if(G.begin(), G.end(), [](const Polynomial<K>& g) { return g.is_zero(); }), G.end());
    for (const auto& g : G)
        if (g.is_constant()) return {Polynomial<K>::constant(g.ring(), K(1))};
    sort_by_head(G);
    Basis<K> minimal;
    // ascending heads so that a divisor is seen before its multiples
    for (auto it = G.rbegin(); it != G.rend(); ++it) {
        bool redundant = false;
        for (const auto& m : minimal)
            if (m.head_term().divides(it->head_term())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(it->monic());
    }
    Basis<K> out;
    out.reserve(minimal.size());
    for (const auto& g : minimal) {
        Polynomial<K> tail = g;
        Term<K> head = tail.pop_head();
        Polynomial<K> r = normal_form(tail, minimal);
        r.add_scaled_shift(head.coefficient, head.monomial, Polynomial<K>::constant(g.ring(), K(1)));
        out.push_back(std::move(r));
    }
    sort_by_head(out);
    return out;
}

/// Runs fa here and fb on a second thread; the first to finish stops the
/// other. Both must compute the same value.
template <class FA, class FB>
auto race(FA fa, FB fb) -> decltype(fa()) {
    using T = decltype(fa());
    std::atomic<bool> stop_a{false}, stop_b{false};
    const ExecutionContext context = current_context();
    std::optional<T> ra, rb;
    std::exception_ptr ea, eb;
    std::thread worker([&] {
        ScopedContext scope(context, &stop_b);
        try {
            rb = fb();
        } catch (const Cancelled&) {
            return;
        } catch (...) {
            eb = std::current_exception();
        }
        stop_a = true;
    });
    {
        ScopedContext scope(context, &stop_a);
        try {
            ra = fa();
        } catch (const Cancelled&) {
        } catch (...) {
            ea = std::current_exception();
        }
        if (ra || ea) stop_b = true;
    }
    worker.join();
    if (ra) return std::move(*ra);
    if (rb) return std::move(*rb);
    if (ea) std::rethrow_exception(ea);
    if (eb) std::rethrow_exception(eb);
    throw Cancelled();
}

struct CriticalPair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
    std::size_t serial;
};

}  // namespace detail

/// Buchberger's algorithm with the Gebauer-Moeller criteria. The result is
/// the reduced basis unless options.reduce is false. An empty or all-zero
/// input yields an empty basis (the zero ideal).
template <class K>
Basis<K> buchberger(const Basis<K>& F, const GroebnerOptions& options = {}) {
    if (options.selection == Selection::race) {
        GroebnerOptions a = options, b = options;
        a.selection = Selection::normal;
        b.selection = Selection::sugar;
        return detail::race([&] { return buchberger(F, a); }, [&] { return buchberger(F, b); });
    }
    using detail::CriticalPair;
    Basis<K> polys;
    std::vector<unsigned> sugar;
    std::vector<bool> active;
    std::vector<CriticalPair> pairs;
    std::size_t serial = 0;
    const auto& tags = options.tag_variables;

    Basis<K> input;
    for (const auto& f : F)
        if (!f.is_zero()) input.push_back(f);
    if (input.empty()) return {};
    for (const auto& f : input)
        if (f.is_constant()) return {Polynomial<K>::constant(f.ring(), K(1))};
    const TermOrder& ord = input.front().order();
    sort_by_head(input);
    std::reverse(input.begin(), input.end());

    auto insert = [&](Polynomial<K> h, unsigned s) {
        const std::size_t k = polys.size();
        const Monomial hk = h.head_term();
        polys.push_back(std::move(h));
        sugar.push_back(s);
        active.push_back(true);

        std::vector<CriticalPair> fresh;
        for (std::size_t i = 0; i < k; ++i) {
            if (!active[i]) continue;
            const Monomial& hi = polys[i].head_term();
            Monomial L = lcm(hi, hk);
            unsigned si = sugar[i] + (L.degree() - hi.degree());
            unsigned sk = s + (L.degree() - hk.degree());
            fresh.push_back({i, k, L, std::max(si, sk), 0});
        }
        // criterion M: drop pairs whose lcm is a proper multiple of another new lcm
        std::vector<bool> keep(fresh.size(), true);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b)
                if (a != b && fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
                    keep[a] = false;
                    break;
                }
        // criterion F and the product criterion, one survivor per lcm
        std::vector<CriticalPair> kept;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a]) continue;
            bool seen = false, coprime = false;
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (!keep[b] || !(fresh[b].lcm == fresh[a].lcm)) continue;
                if (b < a) seen = true;
                if (polys[fresh[b].i].head_term().coprime(hk)) coprime = true;
            }
            if (seen || coprime) continue;
            kept.push_back(fresh[a]);
        }
        // criterion B on the old pairs
        std::vector<CriticalPair> survivors;
        survivors.reserve(pairs.size() + kept.size());
        for (auto& p : pairs) {
            if (hk.divides(p.lcm)) {
                Monomial li = lcm(polys[p.i].head_term(), hk);
                Monomial lj = lcm(polys[p.j].head_term(), hk);
                if (!(li == p.lcm) && !(lj == p.lcm)) continue;
            }
            survivors.push_back(std::move(p));
        }
        for (auto& p : kept) {
            if (!tags.empty() && detail::tag_degree(p.lcm, tags) >= 2) continue;
            p.serial = serial++;
            survivors.push_back(std::move(p));
        }
        pairs = std::move(survivors);
        for (std::size_t i = 0; i < k; ++i)
            if (active[i] && hk.divides(polys[i].head_term())) active[i] = false;
    };

    auto reducers = [&]() {
        Basis<K> G;
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (active[i]) G.push_back(polys[i]);
        return G;
    };

    Basis<K> current;
    for (auto& f : input) {
        check_deadline();
        Polynomial<K> h = normal_form(f, current);
        if (h.is_zero()) continue;
        if (h.is_constant()) return {Polynomial<K>::constant(h.ring(), K(1))};
        insert(detail::basis_form(h), h.total_degree());
        current = reducers();
    }

    auto better = [&](const CriticalPair& a, const CriticalPair& b) {
        switch (options.selection) {
            case Selection::fifo: return a.serial < b.serial;
            case Selection::lifo: return a.serial > b.serial;
            case Selection::sugar:
                if (a.sugar != b.sugar) return a.sugar < b.sugar;
                [[fallthrough]];
            case Selection::normal:
            case Selection::race: {
                int c = ord.compare(a.lcm, b.lcm);
                if (c != 0) return c < 0;
                return a.serial < b.serial;
            }
        }
        return false;
    };

    while (!pairs.empty()) {
        check_deadline();
        std::size_t best = 0;
        for (std::size_t a = 1; a < pairs.size(); ++a)
            if (better(pairs[a], pairs[best])) best = a;
        CriticalPair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        Polynomial<K> h = normal_form(s_polynomial(polys[p.i], polys[p.j]), current);
        if (h.is_zero()) continue;
        if (h.is_constant()) return {Polynomial<K>::constant(h.ring(), K(1))};
        insert(detail::basis_form(h), p.sugar);
        current = reducers();
    }

    Basis<K> G = reducers();
    if (options.reduce) return detail::interreduce(std::move(G));
    sort_by_head(G);
    return G;
}

/// True when every S-polynomial of G reduces to zero.
template <class K>
bool is_groebner(const Basis<K>& G) {
    Basis<K> nz;
    for (const auto& g : G)
        if (!g.is_zero()) nz.push_back(g);
    for (std::size_t i = 0; i < nz.size(); ++i)
        for (std::size_t j = i + 1; j < nz.size(); ++j)
            if (!normal_form(s_polynomial(nz[i], nz[j]), nz).is_zero()) return false;
    return true;
}

/// The unique reduced basis of the ideal generated by a Groebner basis G.
template <class K>
Basis<K> reduce_basis(const Basis<K>& G) {
    if (!is_groebner(G)) throw PreconditionError("reduce_basis: input is not a Groebner basis");
    return detail::interreduce(G);
}

template <class K>
bool ideal_membership(const Polynomial<K>& f, const Basis<K>& G) {
    return normal_form(f, buchberger(G)).is_zero();
}

template <class K>
bool is_unit_ideal(const Basis<K>& G) {
    return G.size() == 1 && G.front().is_constant() && !G.front().is_zero();
}

/// f vanishes on V(G): 1 lies in <G, 1 - z f> for a fresh variable z.
template <class K>
bool radical_membership(const Polynomial<K>& f, const Basis<K>& G) {
    if (f.is_zero()) return true;
    RingPtr ring = f.is_constant() && !G.empty() ? G.front().ring() : f.ring();
    RingPtr ext = append_variables(ring, {internal_name("z")}, BaseOrder::grevlex);
    std::vector<int> to = shift_map(ring->size(), 0);
    Basis<K> H;
    for (const auto& g : G) H.push_back(map_variables(g, ext, to));
    Polynomial<K> z = Polynomial<K>::variable(ext, ring->size());
    H.push_back(Polynomial<K>::constant(ext, K(1)) - z * map_variables(f, ext, to));
    return is_unit_ideal(buchberger(H));
}

/// Same ideal: every generator of each reduces to zero modulo the other.
template <class K>
bool same_ideal(const Basis<K>& A, const Basis<K>& B) {
    Basis<K> ga = buchberger(A), gb = buchberger(B);
    for (const auto& a : A)
        if (!normal_form(a, gb).is_zero()) return false;
    for (const auto& b : B)
        if (!normal_form(b, ga).is_zero()) return false;
    return true;
}

}  // namespace zerodim
