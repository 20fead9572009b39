#pragma once

#include <string>
#include <vector>

#include "zerodim/cgs.hpp"
#include "zerodim/module.hpp"

namespace zerodim {

/// Generators x_1, ..., x_n of the maximal ideal at the origin.
template <class K>
Basis<K> maximal_ideal(const RingPtr& ring, std::size_t count) {
    Basis<K> m;
    for (std::size_t i = 0; i < count; ++i) m.push_back(Polynomial<K>::variable(ring, i));
    return m;
}

template <class K>
Basis<K> maximal_ideal(const RingPtr& ring) {
    return maximal_ideal<K>(ring, ring->size());
}

template <class K>
Basis<K> nonzero(const Basis<K>& F) {
    Basis<K> out;
    for (const auto& f : F)
        if (!f.is_zero()) out.push_back(f);
    return out;
}

template <class K>
RingPtr ring_of(const Basis<K>& F, const char* what) {
    for (const auto& f : F)
        if (!f.is_constant()) return f.ring();
    if (F.empty()) throw PreconditionError(std::string(what) + ": empty generator list");
    return F.front().ring();
}

/// <F> : q from the syzygy module of (q, f_1, ..., f_s): elements of a
/// position over term basis of <e1 f_i, e1 q - e2> free of e1 carry the
/// quotient.
template <class K>
Basis<K> quotient_by_poly(const Basis<K>& F, const Polynomial<K>& q, GroebnerOptions options = {}) {
    if (q.is_zero()) throw PreconditionError("quotient by the zero polynomial");
    ModuleEncoding enc(q.is_constant() && !F.empty() ? ring_of(F, "quotient") : q.ring());
    Basis<K> encoded;
    for (const auto& f : nonzero(F)) encoded.push_back(enc.encode(ModuleElement<K>{f, Polynomial<K>(enc.base)}));
    encoded.push_back(enc.encode(ModuleElement<K>{q, -Polynomial<K>::constant(enc.base, K(1))}));
    options.tag_variables = enc.tags();
    Basis<K> H;
    for (const auto& g : buchberger(encoded, options)) {
        if (g.head_term()[enc.e1()] != 0) continue;
        H.push_back(enc.decode(g).c2);
    }
    return buchberger(H);
}

/// <F> : <Q>. For several generators q = q_1 + y_2 q_2 + ... + y_r q_r with
/// fresh variables y ranked above the ring; the y-free part of <F> : q is
/// the answer.
template <class K>
Basis<K> quotient_by_ideal(const Basis<K>& F, const Basis<K>& Q, const GroebnerOptions& options = {}) {
    Basis<K> qs = nonzero(Q);
    if (qs.empty()) throw PreconditionError("quotient by the zero ideal");
    if (qs.size() == 1) return quotient_by_poly(F, qs.front(), options);
    RingPtr ring = ring_of(qs, "quotient");
    std::vector<std::string> ys;
    for (std::size_t i = 2; i <= qs.size(); ++i) ys.push_back(internal_name("y" + std::to_string(i)));
    RingPtr ext = prepend_variables(ring, ys, BaseOrder::grevlex);
    const int r = static_cast<int>(ys.size());
    std::vector<int> up = shift_map(ring->size(), r);
    Basis<K> lifted;
    for (const auto& f : nonzero(F)) lifted.push_back(map_variables(f, ext, up));
    Polynomial<K> q = map_variables(qs.front(), ext, up);
    for (std::size_t i = 1; i < qs.size(); ++i)
        q += Polynomial<K>::variable(ext, i - 1) * map_variables(qs[i], ext, up);
    std::vector<int> down(ext->size(), -1);
    for (std::size_t i = ys.size(); i < ext->size(); ++i) down[i] = static_cast<int>(i) - r;
    Basis<K> out;
    for (const auto& h : quotient_by_poly(lifted, q, options)) {
        bool y_free = true;
        for (const auto& t : h.terms())
            for (std::size_t i = 0; i < ys.size(); ++i)
                if (t.monomial[i]) y_free = false;
        if (y_free) out.push_back(map_variables(h, ring, down));
    }
    return buchberger(out);
}

/// <F> : <Q>^infinity by iterated quotients until the reduced basis is stable.
template <class K>
Basis<K> saturate(const Basis<K>& F, const Basis<K>& Q, const GroebnerOptions& options = {}) {
    Basis<K> I = buchberger(F, options);
    while (true) {
        check_deadline();
        Basis<K> J = quotient_by_ideal(I, Q, options);
        if (J == I) return J;
        I = std::move(J);
    }
}

/// Largest exponent of any variable among the generators.
template <class K>
unsigned fast_saturation_exponent(const Basis<K>& F) {
    Basis<K> fs = nonzero(F);
    if (fs.empty()) return 0;
    RingPtr ring = ring_of(fs, "saturate");
    unsigned alpha = 0;
    for (std::size_t i = 0; i < ring->size(); ++i) alpha = std::max(alpha, mdeg(fs, i));
    return alpha;
}

/// <F> : m^infinity where m is generated by the first `count` variables:
/// one quotient by {x_i^alpha}, then the usual iteration.
template <class K>
Basis<K> saturate_fast(const Basis<K>& F, std::size_t count, const GroebnerOptions& options = {}) {
    Basis<K> fs = nonzero(F);
    if (fs.empty()) return {};
    RingPtr ring = ring_of(fs, "saturate");
    unsigned alpha = 0;
    for (std::size_t i = 0; i < count; ++i) alpha = std::max(alpha, mdeg(fs, i));
    Basis<K> m = maximal_ideal<K>(ring, count);
    if (alpha == 0) return saturate(fs, m, options);
    Basis<K> powers;
    for (std::size_t i = 0; i < count; ++i) powers.push_back(Polynomial<K>::variable(ring, i, alpha));
    return saturate(quotient_by_ideal(fs, powers, options), m, options);
}

template <class K>
Basis<K> saturate_fast(const Basis<K>& F, const GroebnerOptions& options = {}) {
    Basis<K> fs = nonzero(F);
    if (fs.empty()) return {};
    return saturate_fast(fs, ring_of(fs, "saturate")->size(), options);
}

/// <A> intersected with <B> by eliminating w from <w A, (1 - w) B>.
template <class K>
Basis<K> intersect(const Basis<K>& A, const Basis<K>& B) {
    Basis<K> as = nonzero(A), bs = nonzero(B);
    if (as.empty() || bs.empty()) return {};
    RingPtr ring = ring_of(as, "intersect");
    RingPtr ext = prepend_variables(ring, {internal_name("w")}, BaseOrder::lex);
    std::vector<int> up = shift_map(ring->size(), 1);
    Polynomial<K> w = Polynomial<K>::variable(ext, 0);
    Polynomial<K> one = Polynomial<K>::constant(ext, K(1));
    Basis<K> H;
    for (const auto& a : as) H.push_back(w * map_variables(a.in_ring(ring), ext, up));
    for (const auto& b : bs) H.push_back((one - w) * map_variables(b.in_ring(ring), ext, up));
    std::vector<int> down(ext->size(), -1);
    for (std::size_t i = 1; i < ext->size(); ++i) down[i] = static_cast<int>(i) - 1;
    Basis<K> out;
    for (const auto& g : buchberger(H))
        if (g.head_term()[0] == 0) out.push_back(map_variables(g, ring, down));
    return buchberger(out);
}

/// True when some generator does not vanish at the origin.
template <class K>
bool avoids_origin(const Basis<K>& S) {
    for (const auto& s : S)
        if (!is_zero(s.constant_term())) return true;
    return false;
}

/// Primary component of <F> at the origin: Q0 = <F> : S with
/// S = <F> : m^infinity. Requires the origin to be an isolated zero.
template <class K>
Basis<K> primary_component_at_origin(const Basis<K>& F, const GroebnerOptions& options = {}) {
    Basis<K> fs = nonzero(F);
    if (fs.empty()) throw PreconditionError("primary component of the zero ideal");
    if (avoids_origin(fs)) throw PreconditionError("the origin is not a zero of the system");
    Basis<K> S = saturate_fast(fs, options);
    if (!avoids_origin(S)) throw PreconditionError("the origin is not an isolated zero of the system");
    return quotient_by_ideal(fs, S, options);
}

// Parametric versions. Every function works on the points of `region`
// and returns branches (stratum, basis) whose specializations are Groebner
// bases of the specialized result.

template <class K>
struct ParametricResult {
    ParamSplit split;
    std::vector<CGSBranch<K>> branches;

    ConstructibleSet<K> strata() const {
        ConstructibleSet<K> out;
        for (const auto& b : branches) out.push_back(b.stratum);
        return out;
    }
};

/// Points of `region` where every coefficient of every generator vanishes.
template <class K>
std::optional<Stratum<K>> vanishing_locus(const Basis<K>& F, const ParamSplit& split, const Stratum<K>& region) {
    Stratum<K> out = region;
    Basis<K>& eq = out.equations;
    for (const auto& f : F) {
        std::vector<Monomial> seen;
        for (const auto& t : f.terms()) {
            Monomial m = main_part(t.monomial, split);
            if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
            seen.push_back(m);
            eq.push_back(to_param_ring(param_coefficient(f, m, split), split));
        }
    }
    return canonicalize(out);
}

template <class K>
void sort_branches(std::vector<CGSBranch<K>>& bs) {
    std::stable_sort(bs.begin(), bs.end(), [](const CGSBranch<K>& a, const CGSBranch<K>& b) {
        return to_string(a.stratum) < to_string(b.stratum);
    });
}

/// <F> : <Q> over the points of `region`. F must not vanish identically at
/// any point of the region.
template <class K>
ParametricResult<K> parametric_quotient(const Basis<K>& F, const Basis<K>& Q, const ParamSplit& split,
                                        const Stratum<K>& region, GroebnerOptions options = {}) {
    Basis<K> fs = nonzero(F), qs = nonzero(Q);
    if (qs.empty()) throw PreconditionError("quotient by the zero ideal");
    if (auto bad = vanishing_locus(fs, split, region))
        throw PreconditionError("every generator vanishes on " + to_string(*bad));
    const std::size_t r = qs.size() - 1;
    std::vector<std::string> front{internal_name("e1"), internal_name("e2")};
    RingPtr ext = split.ring;
    if (r > 0) {
        std::vector<std::string> ys;
        for (std::size_t i = 2; i <= qs.size(); ++i) ys.push_back(internal_name("y" + std::to_string(i)));
        ext = prepend_variables(ext, ys, BaseOrder::grevlex);
    }
    ext = prepend_variables(ext, front, BaseOrder::lex);
    ParamSplit esplit = make_split(ext, split.param_count);
    const int shift = static_cast<int>(r + 2);
    std::vector<int> up = shift_map(split.ring->size(), shift);
    Polynomial<K> e1 = Polynomial<K>::variable(ext, 0), e2 = Polynomial<K>::variable(ext, 1);
    Polynomial<K> q = map_variables(qs.front(), ext, up);
    for (std::size_t i = 1; i < qs.size(); ++i)
        q += Polynomial<K>::variable(ext, i + 1) * map_variables(qs[i], ext, up);
    Basis<K> encoded;
    for (const auto& f : fs) encoded.push_back(e1 * map_variables(f, ext, up));
    encoded.push_back(e1 * q - e2);
    options.tag_variables = {0, 1};
    CGSystem<K> sys = cgs_compute(encoded, esplit, region, options);

    std::vector<int> down(ext->size(), -1);
    for (std::size_t i = r + 2; i < ext->size(); ++i) down[i] = static_cast<int>(i) - shift;
    ParametricResult<K> out{split, {}};
    for (const auto& b : sys.branches) {
        Basis<K> H;
        for (const auto& g : b.basis) {
            if (g.is_constant()) throw InvariantError("unit ideal in the quotient module");
            if (g.head_term()[0] != 0) continue;
            bool y_free = true;
            for (const auto& t : g.terms()) {
                for (std::size_t i = 2; i < r + 2; ++i)
                    if (t.monomial[i]) y_free = false;
                if (t.monomial[0] != 0 || t.monomial[1] != 1)
                    throw InvariantError("quotient element outside the e2 component");
            }
            if (!y_free) continue;
            std::vector<Term<K>> terms;
            for (const auto& t : g.terms()) {
                Monomial m = t.monomial;
                m.set(1, 0);
                terms.push_back({m, t.coefficient});
            }
            H.push_back(map_variables(Polynomial<K>::from_sorted_terms(ext, std::move(terms)), split.ring, down));
        }
        // a parameter-only element is a unit on this stratum
        if (std::any_of(H.begin(), H.end(), [&](const Polynomial<K>& h) { return is_param_only(h, split); }))
            H = {Polynomial<K>::constant(split.ring, K(1))};
        sort_by_head(H);
        out.branches.push_back({b.stratum, std::move(H)});
    }
    sort_branches(out.branches);
    return out;
}

/// Sorted main head terms.
template <class K>
std::vector<Monomial> main_heads(const Basis<K>& G, const ParamSplit& split) {
    std::vector<Monomial> hs;
    for (const auto& g : G) hs.push_back(main_head(g, split));
    const TermOrder& ord = split.ring->order;
    std::sort(hs.begin(), hs.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    return hs;
}

/// <F> : <Q>^infinity over the points of `region`. A branch is final when
/// one more quotient leaves its set of main head terms unchanged; since the
/// ideals only grow, equal head sets of minimal bases mean equal ideals.
template <class K>
ParametricResult<K> parametric_saturate(const Basis<K>& F, const Basis<K>& Q, const ParamSplit& split,
                                        const Stratum<K>& region, const GroebnerOptions& options = {}) {
    ParametricResult<K> out{split, {}};
    std::deque<CGSBranch<K>> work;
    for (auto& b : parametric_quotient(F, Q, split, region, options).branches) work.push_back(std::move(b));
    while (!work.empty()) {
        check_deadline();
        CGSBranch<K> cur = std::move(work.front());
        work.pop_front();
        const auto heads = main_heads(cur.basis, split);
        for (auto& b : parametric_quotient(cur.basis, Q, split, cur.stratum, options).branches) {
            if (main_heads(b.basis, split) == heads)
                out.branches.push_back(std::move(b));
            else
                work.push_back(std::move(b));
        }
    }
    sort_branches(out.branches);
    return out;
}

template <class K>
Basis<K> parametric_maximal_ideal(const ParamSplit& split) {
    return maximal_ideal<K>(split.ring, split.main_count());
}

/// Pieces of the stratum where some element of G has a nonzero constant
/// part, i.e. where the specialized ideal contains a unit at the origin.
template <class K>
std::optional<Stratum<K>> nonvanishing_constant_piece(const Stratum<K>& s, const Basis<K>& G,
                                                      const ParamSplit& split) {
    Basis<K> C;
    for (const auto& g : G) {
        Polynomial<K> c = param_constant_part(g, split);
        if (!c.is_zero()) C.push_back(to_param_ring(c, split));
    }
    if (C.empty()) return std::nullopt;
    return canonicalize(exclude_common_zeros(s, C));
}

/// Primary component at the origin over each point of `region` where the
/// origin is an isolated zero. Branches where it is not isolated are
/// dropped; if none remain the call fails.
template <class K>
ParametricResult<K> parametric_primary_component(const Basis<K>& F, const ParamSplit& split,
                                                 const Stratum<K>& region, const GroebnerOptions& options = {}) {
    Basis<K> m = parametric_maximal_ideal<K>(split);
    ParametricResult<K> sat = parametric_saturate(F, m, split, region, options);
    ParametricResult<K> out{split, {}};
    for (const auto& b : sat.branches) {
        auto piece = nonvanishing_constant_piece(b.stratum, b.basis, split);
        if (!piece) continue;
        for (auto& q : parametric_quotient(F, b.basis, split, *piece, options).branches)
            out.branches.push_back(std::move(q));
    }
    if (out.branches.empty()) throw PreconditionError("the origin is not an isolated zero at any parameter value");
    sort_branches(out.branches);
    return out;
}

}  // namespace zerodim
