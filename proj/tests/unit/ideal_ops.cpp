#include "unit_support.hpp"

#include "zerodim/ideal_ops.hpp"

using namespace zerodim;
using namespace zerodim::testing;

namespace {

QPoly without_constant(const QPoly& f) { return f - QPoly::constant(f.ring(), f.constant_term()); }

Basis<Rational> jacobian(const QPoly& f, std::size_t n) {
    Basis<Rational> J;
    for (std::size_t i = 0; i < n; ++i) J.push_back(derivative(f, i));
    return J;
}

bool contains_all(const Basis<Rational>& big, const Basis<Rational>& small) {
    auto G = buchberger(big);
    for (const auto& f : small)
        if (!normal_form(f, G).is_zero()) return false;
    return true;
}

struct Example7 {
    RingPtr ring = parametric_ring({"x1", "x2"}, TermOrder::grlex({0, 1}), {"t1"});
    ParamSplit split = make_split(ring, 1);
    Basis<Rational> F;
    Basis<Rational> Q1, Q2;

    Example7() {
        auto f = P(ring, "x1^3*x2 + x1^2*x2^4 + x2^10 + t1*x2^11");
        F = jacobian(f, 2);
        Q1 = Ps(split.main_ring, {"3*x1^2*x2 + 2*x1*x2^4", "x1^4*x2", "x1^5", "2*x1^4 + 53*x1^3*x2^3",
                                  "x1^3 + 4*x1^2*x2^3 + 10*x2^9"});
        Q2 = Ps(ring, {"3*x1^2*x2 + 2*x1*x2^4", "x1^4*x2", "x1^5", "2*x1^4 + 53*x1^3*x2^3",
                       "-1331*t1^3*x1^4 + (-32065*t1^2*x2^2 + 29150*t1*x2 + 5300)*x1^3 + 21200*x1^2*x2^3 + "
                       "53000*x2^9"});
    }
};

}  // namespace

TEST_SUITE("ideal_ops") {

TEST_CASE("quotient by a polynomial") {
    auto R = ring_of({"x", "y"});
    CHECK(same_ideal(quotient_by_poly(Ps(R, {"x^2"}), P(R, "x")), Ps(R, {"x"})));
    CHECK(same_ideal(quotient_by_poly(Ps(R, {"x^2", "x*y"}), P(R, "x")), Ps(R, {"x", "y"})));
    CHECK(is_unit_ideal(quotient_by_poly(Ps(R, {"x^2", "y"}), P(R, "x^2"))));
    CHECK(same_ideal(quotient_by_poly(Ps(R, {"x*y"}), P(R, "3")), Ps(R, {"x*y"})));
    CHECK_THROWS_AS(quotient_by_poly(Ps(R, {"x"}), QPoly(R)), PreconditionError);
}

TEST_CASE("quotient by an ideal") {
    auto R = ring_of({"x", "y"});
    CHECK(same_ideal(quotient_by_ideal(Ps(R, {"x^2", "x*y"}), Ps(R, {"x", "y"})), Ps(R, {"x"})));
    CHECK(same_ideal(quotient_by_ideal(Ps(R, {"x^2", "y^2"}), Ps(R, {"x", "y"})), Ps(R, {"x^2", "y^2", "x*y"})));
    CHECK_THROWS_AS(quotient_by_ideal(Ps(R, {"x"}), Ps(R, {"0"})), PreconditionError);

    // definition check: h in F:Q iff h*q in F for every q
    PolyGen gen(55);
    for (int trial = 0; trial < 20; ++trial) {
        Basis<Rational> F{without_constant(gen.nonzero_poly(R, 3, 3)), without_constant(gen.nonzero_poly(R, 3, 3))};
        Basis<Rational> Q{without_constant(gen.nonzero_poly(R, 2, 2)), without_constant(gen.nonzero_poly(R, 2, 2))};
        if (nonzero(F).empty() || nonzero(Q).empty()) continue;
        auto H = quotient_by_ideal(F, Q);
        auto GF = buchberger(F);
        for (const auto& h : H)
            for (const auto& q : nonzero(Q)) REQUIRE(normal_form(h * q, GF).is_zero());
        REQUIRE(contains_all(H, F));
    }
}

TEST_CASE("saturation examples") {
    auto R = ring_of({"x1", "x2", "x3"}, BaseOrder::grlex);
    auto m3 = maximal_ideal<Rational>(R);
    auto f1 = P(R, "x1^2*x3 + x2*x3^2 + x2^5 + x2^3*x3");
    auto f2 = P(R, "x1^2*x3 + x2*x3^2 + x2^5 + 2*x2^3*x3");
    CHECK(strings_of(saturate(jacobian(f1, 3), m3)) == std::vector<std::string>{"1"});
    CHECK(strings_of(saturate(jacobian(f2, 3), m3)) == std::vector<std::string>{"x2^2 + x3", "x1"});
    CHECK(strings_of(saturate_fast(jacobian(f1, 3))) == std::vector<std::string>{"1"});
    CHECK(strings_of(saturate_fast(jacobian(f2, 3))) == std::vector<std::string>{"x2^2 + x3", "x1"});

    auto S = ring_of({"x1", "x2"});
    auto f8 = P(S, "x1^4 + x2^6 + 2*x1^2*x2^3");
    CHECK(strings_of(saturate(jacobian(f8, 2), maximal_ideal<Rational>(S))) == std::vector<std::string>{"x2^3 + x1^2"});

    auto T = ring_of({"x", "y"});
    CHECK(same_ideal(saturate(Ps(T, {"x^2", "x*y"}), Ps(T, {"x", "y"})), Ps(T, {"x"})));
}

TEST_CASE("fast saturation exponent") {
    auto R = ring_of({"x", "y", "a", "b"});
    auto f = P(R, "x^3*y + a*y^15 + b*x*y^11 + x*y^12");
    Basis<Rational> F{f, derivative(f, 0), derivative(f, 1)};
    unsigned alpha = 0;
    for (std::size_t i = 0; i < 2; ++i) alpha = std::max(alpha, mdeg(F, i));
    CHECK(alpha == 15);
    CHECK(fast_saturation_exponent(Ps(R, {"x^2*y", "y^4 + x"})) == 4);
}

TEST_CASE("intersection") {
    auto R = ring_of({"x", "y"});
    CHECK(same_ideal(intersect(Ps(R, {"x"}), Ps(R, {"y"})), Ps(R, {"x*y"})));
    auto I = Ps(R, {"x^2 - y", "x*y^2"});
    CHECK(same_ideal(intersect(I, I), I));
    CHECK(same_ideal(intersect(Ps(R, {"x^2"}), Ps(R, {"x*y", "y^2"})), Ps(R, {"x^2*y"})));
}

TEST_CASE("primary component at the origin") {
    auto R = ring_of({"x", "y"});
    // V(F) = {O} u {(1, 0)}
    auto F = Ps(R, {"y", "x^3 - x^2"});
    auto Q0 = primary_component_at_origin(F);
    CHECK(same_ideal(Q0, Ps(R, {"y", "x^2"})));
    CHECK(same_ideal(intersect(Q0, saturate_fast(F)), F));
    // S = <1>
    CHECK(same_ideal(primary_component_at_origin(Ps(R, {"x^2", "y"})), Ps(R, {"x^2", "y"})));
    CHECK_THROWS_AS(primary_component_at_origin(Ps(R, {"x*y"})), PreconditionError);
    CHECK_THROWS_AS(primary_component_at_origin(Ps(R, {"x - 1"})), PreconditionError);
}

TEST_CASE("saturation chain and fixpoint laws") {
    PolyGen gen(606);
    auto R = ring_of({"x", "y", "z"});
    for (int trial = 0; trial < 20; ++trial) {
        Basis<Rational> I, J;
        for (int k = 0; k < 2; ++k) I.push_back(without_constant(gen.nonzero_poly(R, 3, 3)));
        for (int k = 0; k < 2; ++k) J.push_back(without_constant(gen.nonzero_poly(R, 2, 2)));
        if (nonzero(I).empty() || nonzero(J).empty()) continue;
        auto step = quotient_by_ideal(I, J);
        auto sat = saturate(I, J);
        REQUIRE(contains_all(step, I));
        REQUIRE(contains_all(sat, step));
        REQUIRE(strings_of(quotient_by_ideal(sat, J)) == strings_of(sat));
    }
}

TEST_CASE("staged saturation equals plain saturation") {
    PolyGen gen(707);
    int done = 0;
    for (int trial = 0; done < 50; ++trial) {
        std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        std::vector<std::string> names{"x", "y", "z"};
        names.resize(n);
        auto R = ring_of(names, trial % 2 ? BaseOrder::grevlex : BaseOrder::grlex);
        Basis<Rational> F;
        int count = gen.integer(1, 3);
        for (int k = 0; k < count; ++k) F.push_back(without_constant(gen.poly(R, 3, 4)));
        if (nonzero(F).empty()) continue;
        auto m = maximal_ideal<Rational>(R);
        Basis<Rational> powers;
        for (std::size_t i = 0; i < n; ++i) powers.push_back(QPoly::variable(R, i, static_cast<unsigned>(gen.integer(1, 4))));
        auto plain = strings_of(saturate(F, m));
        REQUIRE(strings_of(saturate(quotient_by_ideal(F, powers), m)) == plain);
        REQUIRE(strings_of(saturate_fast(F)) == plain);
        ++done;
    }
}

TEST_CASE("parametric saturation of example 4") {
    auto R = parametric_ring({"x1", "x2", "x3"}, TermOrder::grevlex({0, 1, 2}), {"t1"});
    auto split = make_split(R, 1);
    auto f = P(R, "x1^3 + x1*x3^2 + t1*x1*x2^3 + x2^3*x3");
    Basis<Rational> F{f, derivative(f, 0), derivative(f, 1), derivative(f, 2)};
    auto T = split.param_ring;
    auto res = parametric_saturate(F, parametric_maximal_ideal<Rational>(split), split, whole_space<Rational>(T));
    CHECK(is_partition(res.strata(), whole_space<Rational>(T)));
    Stratum<Rational> generic{T, {}, Ps(T, {"t1^2 + 1"})}, special{T, Ps(T, {"t1^2 + 1"}), Ps(T, {"1"})};
    ConstructibleSet<Rational> unit, rest;
    for (const auto& b : res.branches) {
        if (is_unit_ideal(b.basis)) {
            unit.push_back(b.stratum);
            continue;
        }
        rest.push_back(b.stratum);
        // modulo t1^2 + 1 the branch generates <x1 - t1 x3, x2^3 + 2 t1 x3^2>
        Basis<Rational> mine = b.basis, paper = Ps(R, {"x1 - t1*x3", "x2^3 + 2*t1*x3^2"});
        mine.push_back(P(R, "t1^2 + 1"));
        paper.push_back(P(R, "t1^2 + 1"));
        CHECK(strings_of(buchberger(mine)) == strings_of(buchberger(paper)));
    }
    CHECK(cs_equal<Rational>(unit, {generic}));
    CHECK(cs_equal<Rational>(rest, {special}));
}

TEST_CASE("example 7 saturation and primary components") {
    Example7 e;
    auto T = e.split.param_ring;
    auto all = whole_space<Rational>(T);
    auto m = parametric_maximal_ideal<Rational>(e.split);
    auto sat = parametric_saturate(e.F, m, e.split, all);
    CHECK(is_partition(sat.strata(), all));
    Basis<Rational> S_paper = Ps(e.ring, {"2910897*t1^3*x1 + 16385050*t1*x2 + 14895500",
                                          "-9801*t1^2*x1 + 52855*t1*x2^2 + 48050*x2"});
    for (const auto& b : sat.branches) {
        if (contains(b.stratum, {rat(0)})) {
            CHECK(strings_of(b.basis) == std::vector<std::string>{"1"});
        } else {
            CHECK(check_branch(b, e.split, 3, [&](const auto& pt) { return specialized(S_paper, e.split, pt); }) >= 3);
        }
    }

    auto Q = parametric_primary_component(e.F, e.split, all);
    CHECK(is_partition(Q.strata(), all));
    for (const auto& b : Q.branches) {
        if (contains(b.stratum, {rat(0)})) {
            REQUIRE(check_branch(b, e.split, 1, [&](const auto&) { return e.Q1; }) == 1);
            continue;
        }
        int n = check_branch(b, e.split, 3, [&](const auto& pt) { return specialized(e.Q2, e.split, pt); });
        CHECK(n >= 3);
        for (const auto& pt : sample_points(b.stratum, 3)) {
            auto Fp = specialized(e.F, e.split, pt);
            auto Sp = specialized(S_paper, e.split, pt);
            auto Qp = specialized(b.basis, e.split, pt);
            CHECK(same_ideal(intersect(Qp, Sp), Fp));
            CHECK(same_ideal(quotient_by_ideal(Fp, Sp), Qp));
        }
    }
}

TEST_CASE("parametric quotient without parameters") {
    auto R = ring_of({"x", "y"});
    auto split = make_split(R, 0);
    auto F = Ps(R, {"x^2", "x*y"});
    auto res = parametric_quotient(F, Ps(R, {"x", "y"}), split, whole_space<Rational>(split.param_ring));
    REQUIRE(res.branches.size() == 1);
    CHECK(strings_of(res.branches[0].basis) == strings_of(quotient_by_ideal(F, Ps(R, {"x", "y"}))));
    auto sres = parametric_saturate(F, Ps(R, {"x", "y"}), split, whole_space<Rational>(split.param_ring));
    REQUIRE(sres.branches.size() == 1);
    CHECK(strings_of(sres.branches[0].basis) == strings_of(saturate(F, Ps(R, {"x", "y"}))));
}

TEST_CASE("parametric quotient and saturation agree with the specialized problem") {
    PolyGen gen(808);
    auto R = parametric_ring({"x", "y"}, TermOrder::grevlex({0, 1}), {"t1"});
    auto split = make_split(R, 1);
    auto all = whole_space<Rational>(split.param_ring);
    auto m = parametric_maximal_ideal<Rational>(split);
    for (int trial = 0; trial < 12; ++trial) {
        // a pure x^2 and y^3 term keep every specialization nonzero
        Basis<Rational> F{without_constant(gen.nonzero_poly(R, 3, 3)) + P(R, "x^2"),
                          without_constant(gen.nonzero_poly(R, 3, 3)) + P(R, "y^3")};
        Basis<Rational> Q{without_constant(gen.nonzero_poly(R, 2, 2)) + P(R, "x")};
        if (nonzero(F).empty() || nonzero(Q).empty()) continue;
        auto quo = parametric_quotient(F, Q, split, all);
        REQUIRE(is_partition(quo.strata(), all));
        for (const auto& b : quo.branches) {
            int n = check_branch(b, split, 3, [&](const auto& pt) {
                auto Qp = nonzero(specialized(Q, split, pt));
                auto Fp = nonzero(specialized(F, split, pt));
                if (Qp.empty()) return Basis<Rational>{QPoly::constant(split.main_ring, 1)};
                if (Fp.empty()) return Basis<Rational>{};
                return quotient_by_ideal(Fp, Qp);
            });
            REQUIRE(n >= 0);
        }
        auto sat = parametric_saturate(F, m, split, all);
        REQUIRE(is_partition(sat.strata(), all));
        for (const auto& b : sat.branches) {
            int n = check_branch(b, split, 3, [&](const auto& pt) {
                auto Fp = nonzero(specialized(F, split, pt));
                if (Fp.empty()) return Basis<Rational>{};
                return saturate(Fp, maximal_ideal<Rational>(split.main_ring));
            });
            REQUIRE(n >= 0);
        }
    }
}

}
