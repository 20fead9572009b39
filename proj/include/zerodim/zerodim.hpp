#pragma once

#include <string>
#include <vector>

#include "zerodim/ideal_ops.hpp"
#include "zerodim/rational_function.hpp"

namespace zerodim {

/// Dimension of V(<M>) in n-space: n minus the size of the smallest set of
/// variables meeting the support of every monomial. -1 when 1 is in M.
int monomial_dim(const std::vector<Monomial>& M, std::size_t n);

/// Local dimension at the origin attached to each stratum.
struct DimEntry {
    Stratum<Rational> stratum;
    unsigned local_dim = 0;
};

struct DimStratification {
    Stratum<Rational> region;
    std::vector<DimEntry> entries;

    ConstructibleSet<Rational> zero_locus() const;
    /// Union of the strata carrying dimension d.
    ConstructibleSet<Rational> locus(unsigned d) const;
};

/// Points of `region` where some generator has a nonzero constant term.
template <class K>
std::optional<Stratum<K>> origin_violation(const Basis<K>& F, const ParamSplit& split, const Stratum<K>& region) {
    Basis<K> C;
    for (const auto& f : F) {
        Polynomial<K> c = param_constant_part(f, split);
        if (!c.is_zero()) C.push_back(to_param_ring(c, split));
    }
    if (C.empty()) return std::nullopt;
    return canonicalize(exclude_common_zeros(region, C));
}

template <class K>
void require_origin(const Basis<K>& F, const ParamSplit& split, const Stratum<K>& region) {
    if (auto bad = origin_violation(F, split, region))
        throw PreconditionError("the origin is not a zero of the system on " + to_string(*bad));
}

/// {f, df/dx_1, ..., df/dx_n} or only the partials, over the main variables.
template <class K>
Basis<K> jacobian_system(const Polynomial<K>& f, const ParamSplit& split, bool include_f) {
    if (!param_constant_part(f, split).is_zero())
        throw PreconditionError("f does not vanish at the origin for every parameter value");
    Basis<K> F;
    if (include_f) F.push_back(f);
    for (std::size_t i = 0; i < split.main_count(); ++i) F.push_back(derivative(f, i));
    return F;
}

/// Head terms of a local standard basis of <F> at the origin, from a
/// Groebner basis of the homogenized generators under x0 >> x.
std::vector<Monomial> tangent_cone_at_origin(const Basis<Rational>& F);

/// Local dimension at the origin on every point of `region`, from a
/// comprehensive Groebner system of the homogenized generators.
DimStratification algorithm1(const Basis<Rational>& F, const ParamSplit& split, const Stratum<Rational>& region,
                             const GroebnerOptions& options = {});

/// Pieces of each branch where the saturation contains a unit at the origin.
template <class K>
ConstructibleSet<K> zero_test(const std::vector<CGSBranch<K>>& branches, const ParamSplit& split) {
    ConstructibleSet<K> out;
    for (const auto& b : branches)
        if (auto piece = nonvanishing_constant_piece(b.stratum, b.basis, split)) out.push_back(std::move(*piece));
    return out;
}

/// Locus where the origin is an isolated zero, by saturating with m.
template <class K>
ConstructibleSet<K> algorithm2_1(const Basis<K>& F, const ParamSplit& split, const Stratum<K>& region,
                                 const GroebnerOptions& options = {}) {
    require_origin(F, split, region);
    auto sat = parametric_saturate(F, parametric_maximal_ideal<K>(split), split, region, options);
    return normalize_union(zero_test(sat.branches, split));
}

/// Same locus as algorithm2_1, saturating in two stages: one quotient by
/// {x_i^alpha} and then by m on each branch.
template <class K>
ConstructibleSet<K> algorithm2_2(const Basis<K>& F, const ParamSplit& split, const Stratum<K>& region,
                                 const GroebnerOptions& options = {}) {
    require_origin(F, split, region);
    Basis<K> fs = nonzero(F);
    unsigned alpha = 0;
    for (std::size_t i = 0; i < split.main_count(); ++i) alpha = std::max(alpha, mdeg(fs, i));
    Basis<K> m = parametric_maximal_ideal<K>(split);
    Basis<K> powers;
    for (std::size_t i = 0; i < split.main_count(); ++i)
        powers.push_back(Polynomial<K>::variable(split.ring, i, std::max(alpha, 1u)));
    ConstructibleSet<K> out;
    for (const auto& b : parametric_quotient(fs, powers, split, region, options).branches) {
        auto sat = parametric_saturate(b.basis, m, split, b.stratum, options);
        for (auto& piece : zero_test(sat.branches, split)) out.push_back(std::move(piece));
    }
    return normalize_union(out);
}

/// Generic linear forms x_i + sum_j u_ij x_{l+j}, i = 1..l.
Basis<RationalFunction> generic_linear_forms(const RingPtr& ring, std::size_t n, std::size_t l);

struct LocalDimResult {
    unsigned dim = 0;
    /// Saturation basis for l = 0, 1, ..., dim.
    std::vector<Basis<RationalFunction>> bases;
};

/// Local dimension at the origin of V(F) for parameter-free F: the least l
/// for which F plus l generic linear forms has an isolated zero there.
LocalDimResult localdim(const Basis<Rational>& F, const GroebnerOptions& options = {});

/// Local dimension over `region`, with the generic forms' coefficients
/// living in the coefficient field.
DimStratification localdim_parametric(const Basis<Rational>& F, const ParamSplit& split,
                                      const Stratum<Rational>& region, const GroebnerOptions& options = {});

/// Q(u) coefficients for a polynomial over Q.
Polynomial<RationalFunction> to_rational_function(const Polynomial<Rational>& p);
Basis<RationalFunction> to_rational_function(const Basis<Rational>& F);

/// Back to Q; throws InvariantError if a coefficient is not a constant.
Polynomial<Rational> to_rational(const Polynomial<RationalFunction>& p);
Stratum<Rational> to_rational(const Stratum<RationalFunction>& s);
Stratum<RationalFunction> to_rational_function(const Stratum<Rational>& s);

}  // namespace zerodim
