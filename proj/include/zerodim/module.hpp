#pragma once

#include <string>
#include <vector>

#include "zerodim/groebner.hpp"

namespace zerodim {

/// c1*e1 + c2*e2 in the free module of rank 2.
template <class K>
struct ModuleElement {
    Polynomial<K> c1;
    Polynomial<K> c2;

    bool is_zero() const { return c1.is_zero() && c2.is_zero(); }

    std::string to_string() const { return "[" + c1.to_string() + ", " + c2.to_string() + "]"; }
};

/// Rank-2 module elements are stored as polynomials e1*c1 + e2*c2 in a ring
/// with two tag variables prepended as a lex block. Comparing the tag block
/// first gives the position-over-term order with e1 > e2, and dropping pairs
/// whose lcm has tag degree 2 keeps the computation inside the module.
struct ModuleEncoding {
    RingPtr base;
    RingPtr encoded;

    explicit ModuleEncoding(const RingPtr& ring)
        : base(ring), encoded(prepend_variables(ring, {internal_name("e1"), internal_name("e2")}, BaseOrder::lex)) {}

    std::size_t e1() const { return 0; }
    std::size_t e2() const { return 1; }
    std::vector<std::size_t> tags() const { return {0, 1}; }

    template <class K>
    Polynomial<K> lift(const Polynomial<K>& p) const {
        std::vector<int> to = shift_map(base->size(), 2);
        return map_variables(p, encoded, to);
    }

    template <class K>
    Polynomial<K> encode(const ModuleElement<K>& v) const {
        Polynomial<K> out = lift(v.c1) * Polynomial<K>::variable(encoded, e1());
        out += lift(v.c2) * Polynomial<K>::variable(encoded, e2());
        return out;
    }

    /// Inverse of encode for polynomials of tag degree 1.
    template <class K>
    ModuleElement<K> decode(const Polynomial<K>& p) const {
        std::vector<Term<K>> a, b;
        for (const auto& t : p.terms()) {
            Monomial m = t.monomial;
            unsigned u = m[e1()], v = m[e2()];
            if (u + v != 1) throw InvariantError("encoded module element has tag degree " + std::to_string(u + v));
            m.set(e1(), 0);
            m.set(e2(), 0);
            (u ? a : b).push_back({m, t.coefficient});
        }
        std::vector<int> to(encoded->size(), -1);
        for (std::size_t i = 2; i < to.size(); ++i) to[i] = static_cast<int>(i) - 2;
        return {map_variables(Polynomial<K>::from_terms(encoded, std::move(a)), base, to),
                map_variables(Polynomial<K>::from_terms(encoded, std::move(b)), base, to)};
    }
};

/// Groebner basis of the submodule generated by F under the position over
/// term order with e1 > e2 and the ring's order on terms.
template <class K>
std::vector<ModuleElement<K>> module_buchberger(const std::vector<ModuleElement<K>>& F, const RingPtr& ring,
                                                GroebnerOptions options = {}) {
    ModuleEncoding enc(ring);
    Basis<K> encoded;
    for (const auto& v : F)
        if (!v.is_zero()) encoded.push_back(enc.encode(v));
    options.tag_variables = enc.tags();
    std::vector<ModuleElement<K>> out;
    for (const auto& g : buchberger(encoded, options)) out.push_back(enc.decode(g));
    return out;
}

}  // namespace zerodim
