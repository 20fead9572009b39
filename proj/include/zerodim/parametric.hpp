#pragma once

#include <vector>

#include "zerodim/poly_ops.hpp"

namespace zerodim {

/// Splits the variables of a ring into main variables and parameters. The
/// parameters are the trailing `param_count` variables and occupy the last
/// blocks of the term order, so the order eliminates the main variables.
struct ParamSplit {
    RingPtr ring;
    std::size_t param_count = 0;
    RingPtr param_ring;  // parameters only, restricted order
    RingPtr main_ring;   // main variables only, restricted order

    std::size_t main_count() const { return ring->size() - param_count; }
    bool is_param(std::size_t i) const { return i >= main_count() && i < ring->size(); }
    std::vector<int> to_param() const;
    std::vector<int> from_param() const;
    std::vector<int> to_main() const;
};

ParamSplit make_split(const RingPtr& ring, std::size_t param_count);

/// Ring with main variables first and parameters last, the parameters in a
/// trailing grevlex block.
RingPtr parametric_ring(const std::vector<std::string>& main, const TermOrder& main_order,
                        const std::vector<std::string>& params);

/// Main-variable part of a monomial.
inline Monomial main_part(const Monomial& m, const ParamSplit& s) {
    Monomial r = m;
    for (std::size_t i = s.main_count(); i < s.ring->size(); ++i) r.set(i, 0);
    return r;
}

inline bool has_main_variables(const Monomial& m, const ParamSplit& s) {
    for (std::size_t i = 0; i < s.main_count(); ++i)
        if (m[i]) return true;
    return false;
}

template <class K>
bool is_param_only(const Polynomial<K>& f, const ParamSplit& s) {
    for (const auto& t : f.terms())
        if (has_main_variables(t.monomial, s)) return false;
    return true;
}

/// Head term in the main variables.
template <class K>
Monomial main_head(const Polynomial<K>& f, const ParamSplit& s) {
    return main_part(f.head_term(), s);
}

/// Coefficient in K[t] of the monomial x^m, as a polynomial of the full ring.
template <class K>
Polynomial<K> param_coefficient(const Polynomial<K>& f, const Monomial& m, const ParamSplit& s) {
    std::vector<Term<K>> out;
    for (const auto& t : f.terms()) {
        if (!(main_part(t.monomial, s) == m)) continue;
        out.push_back({t.monomial / m, t.coefficient});
    }
    return Polynomial<K>::from_sorted_terms(f.ring(), std::move(out));
}

/// Head coefficient of f viewed in K[t][x].
template <class K>
Polynomial<K> param_head_coefficient(const Polynomial<K>& f, const ParamSplit& s) {
    return param_coefficient(f, main_head(f, s), s);
}

/// Part of f free of main variables: its value at x = O.
template <class K>
Polynomial<K> param_constant_part(const Polynomial<K>& f, const ParamSplit& s) {
    return param_coefficient(f, Monomial{}, s);
}

template <class K>
Polynomial<K> to_param_ring(const Polynomial<K>& f, const ParamSplit& s) {
    return map_variables(f, s.param_ring, s.to_param());
}

template <class K>
Polynomial<K> from_param_ring(const Polynomial<K>& f, const ParamSplit& s) {
    return map_variables(f, s.ring, s.from_param());
}

/// sigma_tbar: substitutes the parameter values and lands in the main ring.
template <class K>
Polynomial<K> specialize(const Polynomial<K>& f, const ParamSplit& s, const std::vector<K>& tbar) {
    if (tbar.size() != s.param_count) throw PreconditionError("specialization point has the wrong dimension");
    std::vector<std::optional<K>> values(s.ring->size());
    for (std::size_t k = 0; k < s.param_count; ++k) values[s.main_count() + k] = tbar[k];
    return substitute(f, s.main_ring, s.to_main(), values);
}

/// Evaluates a polynomial of the parameter ring at a point.
template <class K>
K evaluate(const Polynomial<K>& f, const std::vector<K>& point) {
    K acc(0);
    for (const auto& t : f.terms()) {
        K c = t.coefficient;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (unsigned e = 0; e < t.monomial[i]; ++e) c = c * point[i];
        acc = acc + c;
    }
    return acc;
}

}  // namespace zerodim
