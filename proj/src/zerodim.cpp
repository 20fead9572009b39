#include "zerodim/zerodim.hpp"

#include <algorithm>
#include <cstdint>

namespace zerodim {
namespace {

void hitting_set(const std::vector<std::uint32_t>& supports, std::uint32_t chosen, unsigned count, unsigned& best) {
    if (count >= best) return;
    for (std::uint32_t s : supports) {
        if (s & chosen) continue;
        if (count + 1 >= best) return;
        for (unsigned v = 0; v < 32; ++v)
            if (s & (1u << v)) hitting_set(supports, chosen | (1u << v), count + 1, best);
        return;
    }
    best = count;
}

Monomial drop_first(const Monomial& m, std::size_t count) {
    Monomial r;
    for (std::size_t i = 1; i <= count; ++i) r.set(i - 1, m[i]);
    return r;
}

}  // namespace

int monomial_dim(const std::vector<Monomial>& M, std::size_t n) {
    std::vector<std::uint32_t> supports;
    for (const auto& m : M) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (m[i]) {
                if (i >= n) throw PreconditionError("monomial uses a variable beyond the count");
                s |= 1u << i;
            }
        if (s == 0) return -1;
        supports.push_back(s);
    }
    unsigned best = static_cast<unsigned>(n);
    hitting_set(supports, 0, 0, best);
    return static_cast<int>(n) - static_cast<int>(best);
}

ConstructibleSet<Rational> DimStratification::locus(unsigned d) const {
    ConstructibleSet<Rational> out;
    for (const auto& e : entries)
        if (e.local_dim == d) out.push_back(e.stratum);
    return normalize_union(out);
}

ConstructibleSet<Rational> DimStratification::zero_locus() const { return locus(0); }

std::vector<Monomial> tangent_cone_at_origin(const Basis<Rational>& F) {
    Basis<Rational> fs = nonzero(F);
    if (fs.empty()) throw PreconditionError("tangent cone of the zero ideal");
    if (avoids_origin(fs)) throw PreconditionError("the origin is not a zero of the system");
    RingPtr ring = ring_of(fs, "tangent cone");
    RingPtr hom = homogenizing_ring(ring);
    std::vector<bool> mask(ring->size(), true);
    Basis<Rational> H;
    for (const auto& f : fs) H.push_back(homogenize(f.in_ring(ring), hom, mask));
    std::vector<Monomial> out;
    for (const auto& g : buchberger(H)) out.push_back(drop_first(g.head_term(), ring->size()));
    return out;
}

DimStratification algorithm1(const Basis<Rational>& F, const ParamSplit& split, const Stratum<Rational>& region,
                             const GroebnerOptions& options) {
    Basis<Rational> fs = nonzero(F);
    if (fs.empty()) throw PreconditionError("empty system");
    require_origin(fs, split, region);
    RingPtr hom = homogenizing_ring(split.ring);
    ParamSplit hsplit = make_split(hom, split.param_count);
    std::vector<bool> mask(split.ring->size(), false);
    for (std::size_t i = 0; i < split.main_count(); ++i) mask[i] = true;
    Basis<Rational> H;
    for (const auto& f : fs) H.push_back(homogenize(f, hom, mask));
    DimStratification out{region, {}};
    for (const auto& b : cgs_compute(H, hsplit, region, options).branches) {
        std::vector<Monomial> heads;
        for (const auto& g : b.basis) heads.push_back(drop_first(main_head(g, hsplit), split.main_count()));
        int d = monomial_dim(heads, split.main_count());
        if (d < 0) throw InvariantError("homogenized system became the unit ideal");
        out.entries.push_back({b.stratum, static_cast<unsigned>(d)});
    }
    return out;
}

Polynomial<RationalFunction> to_rational_function(const Polynomial<Rational>& p) {
    return convert_coefficients<RationalFunction>(p, p.ring(), [](const Rational& c) { return RationalFunction(c); });
}

Basis<RationalFunction> to_rational_function(const Basis<Rational>& F) {
    Basis<RationalFunction> out;
    for (const auto& f : F) out.push_back(to_rational_function(f));
    return out;
}

Polynomial<Rational> to_rational(const Polynomial<RationalFunction>& p) {
    std::vector<Term<Rational>> out;
    for (const auto& t : p.terms()) {
        if (!t.coefficient.is_constant())
            throw InvariantError("condition depends on the generic coefficients: " + p.to_string());
        out.push_back({t.monomial, t.coefficient.numerator().constant_term() / t.coefficient.denominator().constant_term()});
    }
    return Polynomial<Rational>::from_sorted_terms(p.ring(), std::move(out));
}

Stratum<Rational> to_rational(const Stratum<RationalFunction>& s) {
    Stratum<Rational> out{s.ring, {}, {}};
    for (const auto& e : s.equations) out.equations.push_back(to_rational(display_normalized(e)));
    for (const auto& n : s.inequations) out.inequations.push_back(to_rational(display_normalized(n)));
    return out;
}

Stratum<RationalFunction> to_rational_function(const Stratum<Rational>& s) {
    return {s.ring, to_rational_function(s.equations), to_rational_function(s.inequations)};
}

Basis<RationalFunction> generic_linear_forms(const RingPtr& ring, std::size_t n, std::size_t l) {
    if (l > n || n > ring->size()) throw PreconditionError("bad generic form count");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= l; ++i)
        for (std::size_t j = 1; j <= n - l; ++j) names.push_back("u" + std::to_string(i) + std::to_string(j));
    RingPtr uring = make_ring(names, BaseOrder::grevlex);
    Basis<RationalFunction> out;
    for (std::size_t i = 0; i < l; ++i) {
        Polynomial<RationalFunction> e = Polynomial<RationalFunction>::variable(ring, i);
        for (std::size_t j = 0; j < n - l; ++j) {
            RationalFunction u(QPolynomial::variable(uring, i * (n - l) + j));
            e += Polynomial<RationalFunction>::variable(ring, l + j) * Polynomial<RationalFunction>::constant(ring, u);
        }
        out.push_back(std::move(e));
    }
    return out;
}

LocalDimResult localdim(const Basis<Rational>& F, const GroebnerOptions& options) {
    Basis<Rational> fs = nonzero(F);
    if (fs.empty()) throw PreconditionError("empty system");
    if (avoids_origin(fs)) throw PreconditionError("the origin is not a zero of the system");
    RingPtr ring = ring_of(fs, "localdim");
    const std::size_t n = ring->size();
    LocalDimResult out;
    for (std::size_t l = 0; l <= n; ++l) {
        Basis<RationalFunction> G = to_rational_function(fs);
        for (auto& e : generic_linear_forms(ring, n, l)) G.push_back(std::move(e));
        Basis<RationalFunction> S = saturate_fast(G, options);
        bool pass = avoids_origin(S);
        out.bases.push_back(std::move(S));
        if (pass) {
            out.dim = static_cast<unsigned>(l);
            return out;
        }
    }
    throw InvariantError("no generic section isolates the origin");
}

DimStratification localdim_parametric(const Basis<Rational>& F, const ParamSplit& split,
                                      const Stratum<Rational>& region, const GroebnerOptions& options) {
    Basis<Rational> fs = nonzero(F);
    if (fs.empty()) throw PreconditionError("empty system");
    require_origin(fs, split, region);
    const std::size_t n = split.main_count();
    DimStratification out{region, {}};
    ConstructibleSet<Rational> remaining;
    if (auto c = canonicalize(region)) remaining.push_back(*c);
    for (std::size_t l = 0; l < n && !remaining.empty(); ++l) {
        Basis<RationalFunction> G = to_rational_function(fs);
        for (auto& e : generic_linear_forms(split.ring, n, l)) G.push_back(std::move(e));
        ConstructibleSet<Rational> passed;
        for (const auto& s : remaining) {
            for (const auto& piece : algorithm2_2(G, split, to_rational_function(s), options)) {
                auto q = canonicalize(to_rational(piece));
                if (!q) continue;
                passed.push_back(*q);
                out.entries.push_back({*q, static_cast<unsigned>(l)});
            }
        }
        remaining = cs_difference(remaining, passed);
    }
    for (const auto& s : remaining) out.entries.push_back({s, static_cast<unsigned>(n)});
    std::stable_sort(out.entries.begin(), out.entries.end(), [](const DimEntry& a, const DimEntry& b) {
        if (a.local_dim != b.local_dim) return a.local_dim < b.local_dim;
        return to_string(a.stratum) < to_string(b.stratum);
    });
    return out;
}

}  // namespace zerodim
