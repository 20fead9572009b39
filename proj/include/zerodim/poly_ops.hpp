#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zerodim/polynomial.hpp"

namespace zerodim {

/// Moves every variable i of p to slot to[i] of `target`; to[i] < 0 marks a
/// variable that must not occur in p.
template <class K>
Polynomial<K> map_variables(const Polynomial<K>& p, const RingPtr& target, std::span<const int> to) {
    std::vector<Term<K>> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            if (t.monomial[i] == 0) continue;
            if (i >= to.size() || to[i] < 0) throw RingMismatch("variable cannot be mapped into the target ring");
            m.set(static_cast<std::size_t>(to[i]), m[static_cast<std::size_t>(to[i])] + t.monomial[i]);
        }
        out.push_back({m, t.coefficient});
    }
    return Polynomial<K>::from_terms(target, std::move(out));
}

/// Substitutes values[i] for each variable i that has one and maps the rest
/// through `to` as in map_variables.
template <class K>
Polynomial<K> substitute(const Polynomial<K>& p, const RingPtr& target, std::span<const int> to,
                         const std::vector<std::optional<K>>& values) {
    std::vector<Term<K>> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m;
        K c = t.coefficient;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            unsigned e = t.monomial[i];
            if (e == 0) continue;
            if (i < values.size() && values[i]) {
                for (unsigned k = 0; k < e; ++k) c = c * *values[i];
                continue;
            }
            if (i >= to.size() || to[i] < 0) throw RingMismatch("variable cannot be mapped into the target ring");
            m.set(static_cast<std::size_t>(to[i]), m[static_cast<std::size_t>(to[i])] + e);
        }
        out.push_back({m, c});
    }
    return Polynomial<K>::from_terms(target, std::move(out));
}

/// Index map that shifts every variable by `offset`.
inline std::vector<int> shift_map(std::size_t count, int offset) {
    std::vector<int> to(count);
    for (std::size_t i = 0; i < count; ++i) to[i] = static_cast<int>(i) + offset;
    return to;
}

/// Total degree counted over the variables with mask[i] set.
inline unsigned partial_degree(const Monomial& m, const std::vector<bool>& mask) {
    unsigned d = 0;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) d += m[i];
    return d;
}

/// Homogenizes f in the masked variables with a fresh variable placed at
/// index 0 of `hom_ring`; old variable i becomes i + 1. The other
/// variables (parameters) are left alone.
template <class K>
Polynomial<K> homogenize(const Polynomial<K>& f, const RingPtr& hom_ring, const std::vector<bool>& mask) {
    if (f.is_zero()) throw PreconditionError("cannot homogenize the zero polynomial");
    unsigned d = 0;
    for (const auto& t : f.terms()) d = std::max(d, partial_degree(t.monomial, mask));
    std::vector<Term<K>> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m = Monomial::variable(0, d - partial_degree(t.monomial, mask));
        for (std::size_t i = 0; i + 1 < kMaxVariables; ++i)
            if (t.monomial[i]) m.set(i + 1, t.monomial[i]);
        out.push_back({m, t.coefficient});
    }
    return Polynomial<K>::from_terms(hom_ring, std::move(out));
}

/// Ring with a homogenizing variable in front, as a dominating block.
inline RingPtr homogenizing_ring(const RingPtr& ring) {
    return prepend_variables(ring, {internal_name("x0")}, BaseOrder::lex);
}

/// Homogenizes in every variable.
template <class K>
Polynomial<K> homogenize(const Polynomial<K>& f) {
    return homogenize(f, homogenizing_ring(f.ring()), std::vector<bool>(f.ring()->size(), true));
}

/// Sets the variable at index 0 to 1 and shifts the rest down into `ring`.
template <class K>
Polynomial<K> dehomogenize(const Polynomial<K>& g, const RingPtr& ring) {
    std::vector<int> to(g.ring()->size(), -1);
    for (std::size_t i = 1; i < to.size(); ++i) to[i] = static_cast<int>(i) - 1;
    std::vector<std::optional<K>> values(g.ring()->size());
    values[0] = K(1);
    return substitute(g, ring, std::span<const int>(to), values);
}

template <class K>
Polynomial<K> derivative(const Polynomial<K>& f, std::size_t var) {
    std::vector<Term<K>> out;
    for (const auto& t : f.terms()) {
        unsigned e = t.monomial[var];
        if (e == 0) continue;
        Monomial m = t.monomial;
        m.set(var, e - 1);
        out.push_back({m, K(t.coefficient * K(static_cast<int>(e)))});
    }
    return Polynomial<K>::from_sorted_terms(f.ring(), std::move(out));
}

/// Largest exponent of variable i over all terms of all members.
template <class K>
unsigned mdeg(std::span<const Polynomial<K>> F, std::size_t i) {
    if (F.empty()) throw PreconditionError("mdeg of an empty set");
    unsigned d = 0;
    for (const auto& f : F)
        for (const auto& t : f.terms()) d = std::max<unsigned>(d, t.monomial[i]);
    return d;
}

template <class K>
unsigned mdeg(const std::vector<Polynomial<K>>& F, std::size_t i) {
    return mdeg(std::span<const Polynomial<K>>(F), i);
}

/// f(x + p), one coordinate of p per ring variable (missing ones are 0).
template <class K>
Polynomial<K> translate(const Polynomial<K>& f, const std::vector<K>& p) {
    const RingPtr& ring = f.ring();
    bool trivial = std::all_of(p.begin(), p.end(), [](const K& c) { return is_zero(c); });
    if (trivial) return f;
    std::map<std::pair<std::size_t, unsigned>, Polynomial<K>> powers;
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial<K>& {
        auto key = std::make_pair(i, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        Polynomial<K> base = Polynomial<K>::variable(ring, i) + Polynomial<K>::constant(ring, p[i]);
        Polynomial<K> r = Polynomial<K>::constant(ring, K(1));
        for (unsigned k = 0; k < e; ++k) r = r * base;
        return powers.emplace(key, std::move(r)).first->second;
    };
    Polynomial<K> out(ring);
    for (const auto& t : f.terms()) {
        Monomial rest;
        Polynomial<K> prod = Polynomial<K>::constant(ring, t.coefficient);
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            unsigned e = t.monomial[i];
            if (e == 0) continue;
            if (i < p.size() && !is_zero(p[i]))
                prod = prod * power(i, e);
            else
                rest.set(i, e);
        }
        out.add_scaled_shift(K(1), rest, prod);
    }
    return out;
}

/// Moves the point p to the origin: each f becomes f(x + p).
template <class K>
std::vector<Polynomial<K>> shift_to_origin(const std::vector<Polynomial<K>>& F, const std::vector<K>& p) {
    std::vector<Polynomial<K>> out;
    out.reserve(F.size());
    for (const auto& f : F) out.push_back(translate(f, p));
    return out;
}

/// f = sum of the returned forms; entry j collects the terms of degree j in
/// the coordinates x - p, expanded back into x.
template <class K>
std::vector<Polynomial<K>> degree_forms(const Polynomial<K>& f, const std::vector<K>& p) {
    if (f.is_zero()) throw PreconditionError("degree forms of the zero polynomial");
    Polynomial<K> g = translate(f, p);
    std::vector<K> back(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) back[i] = K(-p[i]);
    std::vector<std::vector<Term<K>>> buckets(g.total_degree() + 1);
    for (const auto& t : g.terms()) buckets[t.monomial.degree()].push_back(t);
    std::vector<Polynomial<K>> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(translate(Polynomial<K>::from_terms(f.ring(), std::move(b)), back));
    return out;
}

/// Lowest-degree nonzero form at p.
template <class K>
Polynomial<K> min_form(const Polynomial<K>& f, const std::vector<K>& p) {
    for (auto& form : degree_forms(f, p))
        if (!form.is_zero()) return form;
    return Polynomial<K>(f.ring());
}

/// Scaled copy used for printing and golden comparison.
inline Polynomial<Rational> display_normalized(const Polynomial<Rational>& f) {
    if (f.is_zero()) return f;
    std::vector<Rational> cs;
    cs.reserve(f.size());
    for (const auto& t : f.terms()) cs.push_back(t.coefficient);
    return f.scaled(display_scale(cs));
}

/// Canonical text form.
template <class K>
std::string canonical_string(const Polynomial<K>& f) {
    return display_normalized(f).to_string();
}

template <class K>
std::vector<std::string> canonical_strings(const std::vector<Polynomial<K>>& F) {
    std::vector<std::string> out;
    out.reserve(F.size());
    for (const auto& f : F) out.push_back(canonical_string(f));
    return out;
}

/// Converts coefficients with `fn`, keeping monomials and ring.
template <class K2, class K, class Fn>
Polynomial<K2> convert_coefficients(const Polynomial<K>& p, const RingPtr& ring, Fn fn) {
    std::vector<Term<K2>> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) out.push_back({t.monomial, K2(fn(t.coefficient))});
    return Polynomial<K2>::from_terms(ring, std::move(out));
}

}  // namespace zerodim
