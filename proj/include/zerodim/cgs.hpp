#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "zerodim/gcd.hpp"
#include "zerodim/groebner.hpp"
#include "zerodim/parametric.hpp"

namespace zerodim {

/// Locally closed set V(E) \ V(N) of parameter space. N means "not all
/// vanish"; N = {1} puts no condition and E = {} is the whole space.
/// `factors`, when it has one entry per inequation, lists known factors of
/// each n; it only speeds up simplification.
template <class K>
struct Stratum {
    RingPtr ring;  // parameter ring
    Basis<K> equations;
    Basis<K> inequations;
    std::vector<Basis<K>> factors = {};

    Basis<K> factors_of(std::size_t i) const {
        if (factors.size() == inequations.size()) return factors[i];
        return {inequations[i]};
    }
};

template <class K>
using ConstructibleSet = std::vector<Stratum<K>>;

template <class K>
Stratum<K> whole_space(const RingPtr& param_ring) {
    return {param_ring, {}, {Polynomial<K>::constant(param_ring, K(1))}};
}

template <class K>
std::string to_string(const Stratum<K>& s) {
    auto list = [](const Basis<K>& B) {
        std::string out;
        for (const auto& b : B) out += (out.empty() ? "" : ", ") + canonical_string(b);
        return out;
    };
    return "V(" + list(s.equations) + ") \\ V(" + list(s.inequations) + ")";
}

template <class K>
std::string to_string(const ConstructibleSet<K>& a) {
    std::string out;
    for (const auto& s : a) out += (out.empty() ? "" : " u ") + to_string(s);
    return out.empty() ? "{}" : out;
}

// Factor-level simplifications are only available over Q.
template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& p) {
    return p;
}

template <class K>
Polynomial<K> strip_common_factors(const Polynomial<K>& e, const Polynomial<K>&) {
    return e;
}

/// A polynomial vanishing exactly where n or h does.
template <class K>
Polynomial<K> vanishing_product(const Polynomial<K>& n, const Polynomial<K>& h) {
    return n * h;
}

inline QPolynomial vanishing_product(const QPolynomial& n, const QPolynomial& h) {
    if (n.is_constant() || h.is_constant()) return n * h;
    return lcm(n, h);
}

/// Points of s where no member of H vanishes.
template <class K>
Stratum<K> exclude_zeros(const Stratum<K>& s, const Basis<K>& H) {
    Stratum<K> out{s.ring, s.equations, {}, {}};
    for (std::size_t i = 0; i < s.inequations.size(); ++i) {
        Polynomial<K> n = s.inequations[i];
        Basis<K> fs = s.factors_of(i);
        for (const auto& h : H) {
            if (h.is_constant()) continue;
            n = vanishing_product(n, h);
            fs.push_back(h);
        }
        out.inequations.push_back(std::move(n));
        out.factors.push_back(std::move(fs));
    }
    return out;
}

/// Points of s where some member of C does not vanish.
template <class K>
Stratum<K> exclude_common_zeros(const Stratum<K>& s, const Basis<K>& C) {
    Stratum<K> out{s.ring, s.equations, {}, {}};
    for (std::size_t i = 0; i < s.inequations.size(); ++i)
        for (const auto& c : C) {
            Basis<K> fs = s.factors_of(i);
            fs.push_back(c);
            out.inequations.push_back(vanishing_product(s.inequations[i], c));
            out.factors.push_back(std::move(fs));
        }
    return out;
}

/// s with the equations E added.
template <class K>
Stratum<K> with_equations(const Stratum<K>& s, const Basis<K>& E) {
    Stratum<K> out = s;
    out.equations.insert(out.equations.end(), E.begin(), E.end());
    return out;
}

/// Reduced form of a stratum: E replaced by its reduced basis, each n by its
/// normal form, conditions that vanish on V(E) dropped and N collapsed to
/// {1} when some n has no zero on V(E). Returns nothing for the empty set;
/// the test is exact because V(E) \ V(N) is empty iff every n lies in the
/// radical of <E>. Known factors are treated one at a time: a factor with no
/// zero on V(E) is dropped and one vanishing on V(E) kills its product.
template <class K>
std::optional<Stratum<K>> canonicalize(const Stratum<K>& s) {
    Stratum<K> out{s.ring, {}, {}, {}};
    if (!s.equations.empty()) {
        Basis<K> eq;
        for (const auto& e : s.equations) eq.push_back(e.is_zero() ? e : squarefree_part(e));
        out.equations = buchberger(eq);
        if (is_unit_ideal(out.equations)) return std::nullopt;
    }
    const Basis<K>& E = out.equations;
    bool unconditioned = false;
    std::vector<std::pair<std::string, Basis<K>>> kept;
    for (std::size_t i = 0; i < s.inequations.size() && !unconditioned; ++i) {
        bool vanishes = false;
        Basis<K> fs;
        std::vector<std::string> keys;
        for (const auto& f : s.factors_of(i)) {
            check_deadline();
            if (f.is_zero()) {
                vanishes = true;
                break;
            }
            if (f.is_constant()) continue;
            Polynomial<K> r = squarefree_part(f);
            if (!E.empty()) r = normal_form(r, E);
            if (r.is_zero()) {
                vanishes = true;
                break;
            }
            if (r.is_constant()) continue;
            r = squarefree_part(r);
            if (!E.empty()) {
                if (radical_membership(r, E)) {
                    vanishes = true;
                    break;
                }
                Basis<K> H = E;
                H.push_back(r);
                if (is_unit_ideal(buchberger(H))) continue;
            }
            Polynomial<K> d = display_normalized(r);
            std::string key = d.to_string();
            if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
            keys.push_back(std::move(key));
            fs.push_back(std::move(d));
        }
        if (vanishes) continue;
        if (fs.empty()) {
            unconditioned = true;
            break;
        }
        Polynomial<K> n = fs.front();
        for (std::size_t k = 1; k < fs.size(); ++k) n = vanishing_product(n, fs[k]);
        if (fs.size() > 1) {
            // a reducible V(E) can kill a product of factors that each survive
            if (!E.empty()) {
                n = normal_form(n, E);
                if (n.is_zero() || radical_membership(n, E)) continue;
            }
            n = display_normalized(n);
        }
        std::string key = n.to_string();
        bool dup = false;
        for (const auto& kv : kept) dup = dup || kv.first == key;
        if (dup) continue;
        Basis<K> entry{n};
        entry.insert(entry.end(), fs.begin(), fs.end());
        kept.emplace_back(std::move(key), std::move(entry));
    }
    if (unconditioned) {
        out.inequations = {Polynomial<K>::constant(s.ring, K(1))};
        out.factors = {{}};
        return out;
    }
    if (kept.empty()) return std::nullopt;
    // V(e) \ V(n) does not change when e loses the factors it shares with n
    if (E.size() == 1 && kept.size() == 1) {
        Polynomial<K> e = strip_common_factors(E.front(), kept.front().second.front());
        if (!(e == E.front())) {
            Stratum<K> again{s.ring, {e}, {kept.front().second.front()}, {}};
            again.factors.push_back(Basis<K>(kept.front().second.begin() + 1, kept.front().second.end()));
            return canonicalize(again);
        }
    }
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& kv : kept) {
        out.inequations.push_back(kv.second.front());
        out.factors.emplace_back(kv.second.begin() + 1, kv.second.end());
    }
    return out;
}

template <class K>
bool stratum_is_empty(const Stratum<K>& s) {
    return !canonicalize(s).has_value();
}

/// Disjoint nonempty pieces covering b \ a.
template <class K>
ConstructibleSet<K> stratum_difference(const Stratum<K>& b, const Stratum<K>& a) {
    ConstructibleSet<K> out;
    auto keep = [&](const Stratum<K>& s) {
        if (auto c = canonicalize(s)) out.push_back(std::move(*c));
    };
    // points of b where e_k is the first equation of a that does not vanish
    Stratum<K> rest = b;
    for (const auto& e : a.equations) {
        keep(exclude_zeros(rest, Basis<K>{e}));
        rest.equations.push_back(e);
    }
    // points of b inside V(E_a) where all of N_a vanish; a single product
    // is split by its first vanishing factor
    if (a.inequations.size() == 1) {
        Basis<K> fs = a.factors_of(0);
        for (std::size_t j = 0; j < fs.size(); ++j) {
            Basis<K> before(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(j));
            if (fs[j].is_zero()) {
                keep(exclude_zeros(rest, before));
                break;
            }
            if (!fs[j].is_constant()) keep(exclude_zeros(with_equations(rest, Basis<K>{fs[j]}), before));
        }
        return out;
    }
    keep(with_equations(rest, a.inequations));
    return out;
}

template <class K>
std::optional<Stratum<K>> intersect(const Stratum<K>& a, const Stratum<K>& b) {
    Stratum<K> s{a.ring, a.equations, {}, {}};
    s.equations.insert(s.equations.end(), b.equations.begin(), b.equations.end());
    for (std::size_t i = 0; i < a.inequations.size(); ++i)
        for (std::size_t j = 0; j < b.inequations.size(); ++j) {
            Basis<K> fs = a.factors_of(i), gs = b.factors_of(j);
            fs.insert(fs.end(), gs.begin(), gs.end());
            s.inequations.push_back(vanishing_product(a.inequations[i], b.inequations[j]));
            s.factors.push_back(std::move(fs));
        }
    return canonicalize(s);
}

/// a \ b as disjoint strata.
template <class K>
ConstructibleSet<K> cs_difference(const ConstructibleSet<K>& a, const ConstructibleSet<K>& b) {
    ConstructibleSet<K> pieces;
    for (const auto& s : a)
        if (auto c = canonicalize(s)) pieces.push_back(std::move(*c));
    for (const auto& r : b) {
        ConstructibleSet<K> next;
        for (const auto& p : pieces)
            for (auto& q : stratum_difference(p, r)) next.push_back(std::move(q));
        pieces = std::move(next);
        if (pieces.empty()) break;
    }
    return pieces;
}

template <class K>
ConstructibleSet<K> cs_intersect(const ConstructibleSet<K>& a, const ConstructibleSet<K>& b) {
    ConstructibleSet<K> out;
    for (const auto& s : a)
        for (const auto& r : b)
            if (auto c = intersect(s, r)) out.push_back(std::move(*c));
    return out;
}

/// a contains b.
template <class K>
bool cs_includes(const ConstructibleSet<K>& a, const ConstructibleSet<K>& b) {
    return cs_difference(b, a).empty();
}

template <class K>
bool cs_equal(const ConstructibleSet<K>& a, const ConstructibleSet<K>& b) {
    return cs_includes(a, b) && cs_includes(b, a);
}

template <class K>
void sort_strata(ConstructibleSet<K>& a) {
    std::stable_sort(a.begin(), a.end(),
                     [](const Stratum<K>& x, const Stratum<K>& y) { return to_string(x) < to_string(y); });
}

/// Same set as a union of pairwise disjoint canonical strata in a fixed
/// order.
template <class K>
ConstructibleSet<K> normalize_union(const ConstructibleSet<K>& a) {
    ConstructibleSet<K> input;
    for (const auto& s : a)
        if (auto c = canonicalize(s)) input.push_back(std::move(*c));
    sort_strata(input);
    ConstructibleSet<K> out;
    for (const auto& s : input) {
        ConstructibleSet<K> pieces = cs_difference(ConstructibleSet<K>{s}, out);
        out.insert(out.end(), pieces.begin(), pieces.end());
    }
    sort_strata(out);
    return out;
}

template <class K>
struct CGSBranch {
    Stratum<K> stratum;
    Basis<K> basis;
};

template <class K>
struct CGSystem {
    ParamSplit split;
    std::vector<CGSBranch<K>> branches;

    ConstructibleSet<K> strata() const {
        ConstructibleSet<K> out;
        for (const auto& b : branches) out.push_back(b.stratum);
        return out;
    }
};

template <class K>
Basis<K> lift_to_ring(const Basis<K>& B, const ParamSplit& split) {
    Basis<K> out;
    out.reserve(B.size());
    for (const auto& b : B) out.push_back(from_param_ring(b, split));
    return out;
}

/// Elements of G whose main head is minimal under divisibility; among equal
/// main heads the one with the smallest full head term is kept.
template <class K>
Basis<K> minimal_main_basis(const Basis<K>& G, const ParamSplit& split) {
    Basis<K> sorted = G;
    sort_by_head(sorted);
    std::reverse(sorted.begin(), sorted.end());
    Basis<K> out;
    std::vector<Monomial> heads;
    for (const auto& g : sorted) {
        Monomial h = main_head(g, split);
        bool covered = false;
        for (const auto& m : heads)
            if (m.divides(h)) {
                covered = true;
                break;
            }
        if (covered) continue;
        heads.push_back(h);
        out.push_back(g);
    }
    sort_by_head(out);
    return out;
}

/// Comprehensive Groebner system of <F> on `region`, by branching on the
/// head coefficients of a Groebner basis computed with the parameters as
/// variables of lowest rank.
template <class K>
CGSystem<K> cgs_compute(const Basis<K>& F, const ParamSplit& split, const Stratum<K>& region,
                        const GroebnerOptions& options = {}) {
    struct Item {
        Stratum<K> stratum;
        Basis<K> generators;
    };
    CGSystem<K> out{split, {}};
    const Polynomial<K> one = Polynomial<K>::constant(split.ring, K(1));
    std::deque<Item> work;
    work.push_back({region, F});
    while (!work.empty()) {
        check_deadline();
        Item item = std::move(work.front());
        work.pop_front();
        auto cs = canonicalize(item.stratum);
        if (!cs) continue;
        Basis<K> input = item.generators;
        for (const auto& e : cs->equations) input.push_back(from_param_ring(e, split));
        Basis<K> G = buchberger(input, options);
        if (G.empty()) throw PreconditionError("comprehensive Groebner system of the zero ideal");
        if (is_unit_ideal(G)) {
            out.branches.push_back({*cs, {one}});
            continue;
        }
        Basis<K> Gr, Gm;
        for (auto& g : G) (is_param_only(g, split) ? Gr : Gm).push_back(g);
        Basis<K> Gr_t;
        for (const auto& g : Gr) Gr_t.push_back(to_param_ring(g, split));
        Stratum<K> cur = *cs;
        if (canonical_strings(Gr_t) != canonical_strings(cs->equations)) {
            // outside V(Gr) the specialized ideal is the unit ideal
            if (auto u = canonicalize(exclude_common_zeros(*cs, Gr_t)))
                out.branches.push_back({*u, {one}});
            Stratum<K> on_gr = *cs;
            on_gr.equations = Gr_t;
            auto next = canonicalize(on_gr);
            if (!next) continue;
            cur = *next;
        }
        Basis<K> md = minimal_main_basis(Gm, split);
        Basis<K> hs;
        for (const auto& g : md) {
            Polynomial<K> h = to_param_ring(param_head_coefficient(g, split), split);
            if (!h.is_constant()) hs.push_back(h);
        }
        if (auto main = canonicalize(exclude_zeros(cur, hs))) out.branches.push_back({*main, md});
        for (std::size_t k = 0; k < hs.size(); ++k)
            work.push_back({exclude_zeros(with_equations(cur, Basis<K>{hs[k]}), Basis<K>(hs.begin(), hs.begin() + static_cast<std::ptrdiff_t>(k))), G});
    }
    std::stable_sort(out.branches.begin(), out.branches.end(), [](const CGSBranch<K>& a, const CGSBranch<K>& b) {
        return to_string(a.stratum) < to_string(b.stratum);
    });
    return out;
}

/// Rational points of a stratum found by bounded search (none is not a
/// proof of emptiness).
std::vector<std::vector<Rational>> sample_points(const Stratum<Rational>& s, std::size_t count,
                                                 std::size_t budget = 200);

inline std::optional<std::vector<Rational>> sample_point(const Stratum<Rational>& s, std::size_t budget = 200) {
    auto pts = sample_points(s, 1, budget);
    if (pts.empty()) return std::nullopt;
    return pts.front();
}

/// Membership of a rational point.
inline bool contains(const Stratum<Rational>& s, const std::vector<Rational>& p) {
    for (const auto& e : s.equations)
        if (!is_zero(evaluate(e, p))) return false;
    for (const auto& n : s.inequations)
        if (!is_zero(evaluate(n, p))) return true;
    return false;
}

}  // namespace zerodim
