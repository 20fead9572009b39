#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>

#include "zerodim/errors.hpp"

namespace zerodim {

/// Upper bound on the number of variables of any ring. Auxiliary
/// variables (homogenizing, elimination, module tags) count too.
inline constexpr std::size_t kMaxVariables = 16;

/// Power product x^a stored densely. Slots beyond the ring size stay zero,
/// so monomials from rings of different sizes combine without conversion.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;

    Monomial(std::initializer_list<unsigned> powers) {
        if (powers.size() > kMaxVariables) throw PreconditionError("too many variables in monomial");
        std::size_t i = 0;
        for (unsigned p : powers) set(i++, p);
    }

    static Monomial variable(std::size_t index, unsigned power = 1) {
        Monomial m;
        m.set(index, power);
        return m;
    }

    Exponent operator[](std::size_t i) const { return exp_[i]; }

    void set(std::size_t i, unsigned power) {
        if (i >= kMaxVariables) throw PreconditionError("variable index out of range");
        if (power > 0xFFFFu) throw PreconditionError("exponent overflow");
        degree_ = degree_ - exp_[i] + power;
        exp_[i] = static_cast<Exponent>(power);
    }

    unsigned degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    bool divides(const Monomial& other) const {
        if (degree_ > other.degree_) return false;
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (exp_[i] > other.exp_[i]) return false;
        return true;
    }

    /// True when no variable occurs in both.
    bool coprime(const Monomial& other) const {
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (exp_[i] != 0 && other.exp_[i] != 0) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            unsigned s = unsigned(a.exp_[i]) + b.exp_[i];
            if (s > 0xFFFFu) throw PreconditionError("exponent overflow");
            r.exp_[i] = static_cast<Exponent>(s);
        }
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    /// Exact quotient; b must divide a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            if (b.exp_[i] > a.exp_[i]) throw PreconditionError("monomial division is not exact");
            r.exp_[i] = static_cast<Exponent>(a.exp_[i] - b.exp_[i]);
        }
        r.degree_ = a.degree_ - b.degree_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        unsigned d = 0;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
            d += r.exp_[i];
        }
        r.degree_ = d;
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r;
        unsigned d = 0;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            r.exp_[i] = a.exp_[i] < b.exp_[i] ? a.exp_[i] : b.exp_[i];
            d += r.exp_[i];
        }
        r.degree_ = d;
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.exp_ == b.exp_;
    }

    std::size_t hash() const {
        std::size_t h = degree_;
        for (Exponent e : exp_) h = h * 1000003u ^ e;
        return h;
    }

    const std::array<Exponent, kMaxVariables>& exponents() const { return exp_; }

private:
    std::array<Exponent, kMaxVariables> exp_{};
    unsigned degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace zerodim
