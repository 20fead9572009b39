#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zerodim/coefficient.hpp"
#include "zerodim/errors.hpp"
#include "zerodim/monomial.hpp"
#include "zerodim/ring.hpp"

namespace zerodim {

namespace detail {
// unqualified so that coefficient types declared later are found by ADL
template <class K>
bool coefficient_is_zero(const K& c) {
    return is_zero(c);
}
}  // namespace detail

template <class K>
struct Term {
    Monomial monomial;
    K coefficient;

    friend bool operator==(const Term& a, const Term& b) {
        return a.monomial == b.monomial && a.coefficient == b.coefficient;
    }
};

/// Sparse multivariate polynomial over the field K.
///
/// Terms are kept sorted in strictly descending order under the ring's term
/// order and never hold a zero coefficient, so the head term is terms()[0].
/// Constants may live in any ring; binary operations adopt the ring of the
/// non-constant operand.
template <class K>
class Polynomial {
public:
    using Coefficient = K;

    Polynomial() : ring_(anonymous_ring()) {}
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    Polynomial(RingPtr ring, const K& c) : ring_(std::move(ring)) {
        if (!detail::coefficient_is_zero(c)) terms_.push_back({Monomial{}, c});
    }

    static Polynomial constant(RingPtr ring, const K& c) { return Polynomial(std::move(ring), c); }

    static Polynomial variable(RingPtr ring, std::size_t index, unsigned power = 1) {
        if (index >= ring->size()) throw PreconditionError("variable index outside the ring");
        Polynomial p(std::move(ring));
        p.terms_.push_back({Monomial::variable(index, power), K(1)});
        return p;
    }

    static Polynomial monomial(RingPtr ring, const Monomial& m, const K& c = K(1)) {
        Polynomial p(std::move(ring));
        if (!detail::coefficient_is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }

    /// Any term list: sorted, merged and purged of zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term<K>> terms) {
        Polynomial p(std::move(ring));
        const TermOrder& ord = p.ring_->order;
        std::sort(terms.begin(), terms.end(),
                  [&](const Term<K>& a, const Term<K>& b) { return ord.compare(a.monomial, b.monomial) > 0; });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
                p.terms_.back().coefficient = p.terms_.back().coefficient + t.coefficient;
                if (detail::coefficient_is_zero(p.terms_.back().coefficient)) p.terms_.pop_back();
            } else if (!detail::coefficient_is_zero(t.coefficient)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    /// Terms already strictly descending with nonzero coefficients.
    static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term<K>> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermOrder& order() const { return ring_->order; }
    const std::vector<Term<K>>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

    const Monomial& head_term() const {
        require_nonzero();
        return terms_.front().monomial;
    }
    const K& head_coefficient() const {
        require_nonzero();
        return terms_.front().coefficient;
    }

    K constant_term() const {
        if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
        return K(0);
    }

    K coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.monomial == m) return t.coefficient;
        return K(0);
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
        return d;
    }

    /// Same polynomial re-sorted in another ring with at least as many variables.
    Polynomial in_ring(RingPtr target) const {
        for (const auto& t : terms_)
            for (std::size_t i = target->size(); i < kMaxVariables; ++i)
                if (t.monomial[i] != 0) throw RingMismatch("polynomial uses a variable missing from the target ring");
        return from_terms(std::move(target), terms_);
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.monomial, K(-t.coefficient)});
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        RingPtr ring = common_ring(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(ring);
        const Polynomial& small = a.size() <= b.size() ? a : b;
        const Polynomial& large = a.size() <= b.size() ? b : a;
        Polynomial acc(ring);
        Polynomial lg = large;
        lg.ring_ = ring;
        for (const auto& t : small.terms_) acc.add_scaled_shift(t.coefficient, t.monomial, lg);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    Polynomial scaled(const K& c) const {
        Polynomial r(ring_);
        if (detail::coefficient_is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.monomial, K(t.coefficient * c)});
        return r;
    }

    void scale_in_place(const K& c) {
        if (detail::coefficient_is_zero(c)) {
            terms_.clear();
            return;
        }
        for (auto& t : terms_) t.coefficient = K(t.coefficient * c);
    }

    /// c * m * this; the order is multiplicative so no re-sort is needed.
    Polynomial times_term(const K& c, const Monomial& m) const {
        Polynomial r(ring_);
        if (detail::coefficient_is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, K(t.coefficient * c)});
        return r;
    }

    /// Scales so the head coefficient is 1.
    Polynomial monic() const {
        if (is_zero()) return *this;
        if (is_one(head_coefficient())) return *this;
        return scaled(inverse(head_coefficient()));
    }

    /// this += c * m * g, merging in one pass.
    void add_scaled_shift(const K& c, const Monomial& m, const Polynomial& g) {
        if (detail::coefficient_is_zero(c) || g.is_zero()) return;
        ring_ = unify(ring_, is_constant(), g.ring_, g.is_constant());
        if (terms_.empty()) {
            terms_ = g.times_term(c, m).terms_;
            return;
        }
        const TermOrder& ord = ring_->order;
        std::vector<Term<K>> out;
        out.reserve(terms_.size() + g.terms_.size());
        auto it = terms_.begin();
        auto jt = g.terms_.begin();
        while (it != terms_.end() && jt != g.terms_.end()) {
            Monomial mj = jt->monomial * m;
            int cmp = ord.compare(it->monomial, mj);
            if (cmp > 0) {
                out.push_back(std::move(*it));
                ++it;
            } else if (cmp < 0) {
                out.push_back({mj, K(jt->coefficient * c)});
                ++jt;
            } else {
                K s = it->coefficient + jt->coefficient * c;
                if (!detail::coefficient_is_zero(s)) out.push_back({mj, std::move(s)});
                ++it;
                ++jt;
            }
        }
        for (; it != terms_.end(); ++it) out.push_back(std::move(*it));
        for (; jt != g.terms_.end(); ++jt) out.push_back({jt->monomial * m, K(jt->coefficient * c)});
        terms_ = std::move(out);
    }

    /// Removes and returns the head term.
    Term<K> pop_head() {
        require_nonzero();
        Term<K> t = std::move(terms_.front());
        terms_.erase(terms_.begin());
        return t;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_ != b.terms_) return false;
        if (a.is_constant()) return true;
        return same_ring(a.ring_, b.ring_);
    }

    /// Raw text (no normalization), terms in descending order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            CoefficientText c = format_coefficient(t.coefficient);
            if (first) {
                if (c.negative) os << "-";
            } else {
                os << (c.negative ? " - " : " + ");
            }
            first = false;
            std::string mono = monomial_string(t.monomial);
            if (mono.empty())
                os << c.magnitude;
            else if (c.unit)
                os << mono;
            else
                os << c.magnitude << "*" << mono;
        }
        return os.str();
    }

    std::string monomial_string(const Monomial& m) const {
        std::string s;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            if (m[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += ring_->name(i);
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
        return s;
    }

private:
    static bool is_anonymous_ring(const RingPtr& r) { return r == anonymous_ring(); }

    static RingPtr unify(const RingPtr& a, bool a_constant, const RingPtr& b, bool b_constant) {
        if (a == b) return a;
        if (b_constant && !is_anonymous_ring(a)) return a;
        if (a_constant) return b;
        if (b_constant) return a;
        if (same_ring(a, b)) return a;
        throw RingMismatch("operands belong to different rings");
    }

    static RingPtr common_ring(const Polynomial& a, const Polynomial& b) {
        return unify(a.ring_, a.is_constant(), b.ring_, b.is_constant());
    }

    static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
        RingPtr ring = common_ring(a, b);
        Polynomial r = a;
        r.ring_ = ring;
        Polynomial bb = b;
        bb.ring_ = ring;
        if (r.terms_.empty()) return subtract ? -bb : bb;
        r.add_scaled_shift(subtract ? K(-1) : K(1), Monomial{}, bb);
        return r;
    }

    void require_nonzero() const {
        if (terms_.empty()) throw PreconditionError("head of the zero polynomial");
    }

    RingPtr ring_;
    std::vector<Term<K>> terms_;
};

}  // namespace zerodim
