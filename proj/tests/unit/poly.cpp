#include "unit_support.hpp"

#include "zerodim/parametric.hpp"

using namespace zerodim;
using namespace zerodim::testing;

TEST_SUITE("poly") {

TEST_CASE("arith examples") {
    auto R = ring_of({"x1", "x2"});
    CHECK(P(R, "x1+1") + P(R, "x1-1") == P(R, "2*x1"));
    auto f = P(R, "3*x1^2*x2 - x2 + 7");
    CHECK(f * P(R, "1") == f);
    CHECK(P(R, "x1+x2") * P(R, "x1-x2") == P(R, "x1^2-x2^2"));
    CHECK(P(R, "x1") - P(R, "x1") == QPoly(R));
}

TEST_CASE("arith against a brute-force term product") {
    auto R = ring_of({"x", "y", "z"});
    PolyGen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        QPoly a = gen.poly(R, 5, 4), b = gen.poly(R, 5, 4);
        std::map<std::array<Monomial::Exponent, kMaxVariables>, Rational> acc;
        for (const auto& s : a.terms())
            for (const auto& t : b.terms()) acc[(s.monomial * t.monomial).exponents()] += s.coefficient * t.coefficient;
        std::vector<Term<Rational>> terms;
        for (const auto& [e, c] : acc) {
            Monomial m;
            for (std::size_t i = 0; i < 3; ++i) m.set(i, e[i]);
            terms.push_back({m, c});
        }
        CHECK(a * b == QPoly::from_terms(R, terms));
    }
}

TEST_CASE("ring laws on random inputs") {
    for (auto kind : {BaseOrder::lex, BaseOrder::grlex, BaseOrder::grevlex}) {
        auto R = ring_of({"x", "y", "z"}, kind);
        PolyGen gen(7 + static_cast<unsigned>(kind));
        for (int trial = 0; trial < 1000; ++trial) {
            QPoly a = gen.poly(R, 4, 3), b = gen.poly(R, 4, 3), c = gen.poly(R, 4, 3);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE(a + b == b + a);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a - a == QPoly(R));
        }
    }
}

TEST_CASE("polynomials from different rings do not mix") {
    auto R = ring_of({"x"}), S = ring_of({"y"});
    CHECK_THROWS_AS(P(R, "x") + P(S, "y"), RingMismatch);
}

TEST_CASE("head terms") {
    auto H = make_ring({"x0", "x1", "x2", "t1"},
                       TermOrder::block(TermOrder::lex({0}), TermOrder::grevlex({1, 2, 3})));
    auto f = P(H, "3*x0^3*x1^2 + 2*t1*x1*x2^4");
    CHECK(f.head_term() == Monomial{3, 2, 0, 0});
    CHECK(f.head_coefficient() == 3);

    auto R = ring_of({"x1", "x2"});
    CHECK(P(R, "5").head_term().is_one());
    CHECK(P(R, "5").head_coefficient() == 5);
    CHECK(P(R, "x1*x2 + x2^2").head_term() == Monomial{1, 1});
    CHECK_THROWS(QPoly(R).head_term());
}

TEST_CASE("term order laws") {
    PolyGen gen(3);
    for (auto kind : {BaseOrder::lex, BaseOrder::grlex, BaseOrder::grevlex}) {
        TermOrder ord = TermOrder::make(kind, {0, 1, 2, 3});
        for (int trial = 0; trial < 2000; ++trial) {
            Monomial u = gen.monomial(4, 6), v = gen.monomial(4, 6), w = gen.monomial(4, 6);
            int uv = ord.compare(u, v);
            REQUIRE((uv == 0) == (u == v));
            REQUIRE(uv == -ord.compare(v, u));
            if (uv > 0 && ord.compare(v, w) > 0) REQUIRE(ord.compare(u, w) > 0);
            if (uv > 0) REQUIRE(ord.compare(u * w, v * w) > 0);
            if (!u.is_one()) REQUIRE(ord.compare(u, Monomial{}) > 0);
        }
    }
}

TEST_CASE("grevlex and grlex tie-breaking") {
    TermOrder gr = TermOrder::grevlex({0, 1, 2}), gl = TermOrder::grlex({0, 1, 2});
    // x*z^2 vs y^3 in degree 3
    CHECK(gr.compare(Monomial{0, 3, 0}, Monomial{1, 0, 2}) > 0);
    CHECK(gl.compare(Monomial{1, 0, 2}, Monomial{0, 3, 0}) > 0);
    CHECK(TermOrder::lex({0, 1}).compare(Monomial{1, 0}, Monomial{0, 9}) > 0);
}

TEST_CASE("homogenize and dehomogenize") {
    auto R = ring_of({"x1", "x2", "t1"});
    auto H = make_ring({"x0", "x1", "x2", "t1"}, BaseOrder::grevlex);
    auto f = P(R, "x1^3 + t1*x1^2*x2^4 + x2^12");
    auto g = homogenize(f, H, {true, true, false});
    CHECK(g == P(H, "x1^3*x0^9 + t1*x1^2*x2^4*x0^6 + x2^12"));
    CHECK(dehomogenize(g, R) == f);
    CHECK(dehomogenize(P(H, "x1^3*x0^9 + x2^12"), R) == P(R, "x1^3 + x2^12"));
    CHECK(dehomogenize(P(H, "x0^4"), R) == P(R, "1"));

    auto h = P(R, "x1^2 + 3*x1*x2");
    CHECK(homogenize(h, H, {true, true, true}) == P(H, "x1^2 + 3*x1*x2"));
}

TEST_CASE("homogenize round trip on random polynomials") {
    auto R = ring_of({"x", "y", "z"});
    PolyGen gen(5);
    for (int trial = 0; trial < 300; ++trial) {
        QPoly f = gen.nonzero_poly(R, 6, 5);
        QPoly g = homogenize(f);
        unsigned d = g.terms().front().monomial.degree();
        for (const auto& t : g.terms()) REQUIRE(t.monomial.degree() == d);
        REQUIRE(d == f.total_degree());
        REQUIRE(dehomogenize(g, R) == f);
    }
}

TEST_CASE("degree forms") {
    auto R = ring_of({"x1", "x2"});
    auto f = P(R, "x1^4 + x2^6 + 2*x1^2*x2^3");
    auto forms = degree_forms(f, std::vector<Rational>{0, 0});
    REQUIRE(forms.size() == 7);
    for (int j = 0; j < 4; ++j) CHECK(forms[j].is_zero());
    CHECK(forms[4] == P(R, "x1^4"));
    CHECK(forms[5] == P(R, "2*x1^2*x2^3"));
    CHECK(forms[6] == P(R, "x2^6"));
    CHECK(min_form(f, std::vector<Rational>{0, 0}) == P(R, "x1^4"));

    auto c = degree_forms(P(R, "7"), std::vector<Rational>{0, 0});
    REQUIRE(c.size() == 1);
    CHECK(c[0] == P(R, "7"));
    CHECK(min_form(P(R, "x1^2 + x1^3"), std::vector<Rational>{0, 0}) == P(R, "x1^2"));
}

TEST_CASE("degree forms reassemble f") {
    auto R = ring_of({"x", "y"});
    PolyGen gen(9);
    for (int trial = 0; trial < 200; ++trial) {
        QPoly f = gen.nonzero_poly(R, 5, 4);
        std::vector<Rational> p{rat(gen.integer(-3, 3), gen.integer(1, 3)), rat(gen.integer(-3, 3))};
        QPoly sum(R);
        for (const auto& form : degree_forms(f, p)) sum += form;
        REQUIRE(sum == f);
    }
}

TEST_CASE("shift to origin") {
    auto R = ring_of({"x"});
    CHECK(shift_to_origin(Ps(R, {"x-1"}), std::vector<Rational>{1}) == Ps(R, {"x"}));
    CHECK(shift_to_origin(Ps(R, {"x^2"}), std::vector<Rational>{0}) == Ps(R, {"x^2"}));

    auto S = ring_of({"x", "y"});
    PolyGen gen(13);
    for (int trial = 0; trial < 100; ++trial) {
        QPoly f = gen.poly(S, 5, 4);
        std::vector<Rational> p{rat(gen.integer(-4, 4)), rat(gen.integer(-4, 4), 3)};
        std::vector<Rational> back{-p[0], -p[1]};
        REQUIRE(translate(translate(f, p), back) == f);
    }
}

TEST_CASE("mdeg") {
    auto R = ring_of({"x", "y"});
    CHECK(mdeg(Ps(R, {"3", "-1"}), 0) == 0);
    CHECK(mdeg(Ps(R, {"3", "-1"}), 1) == 0);
    CHECK_THROWS_AS(mdeg(std::vector<QPoly>{}, 0), PreconditionError);
    PolyGen gen(17);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<QPoly> F{gen.poly(R, 4, 6), gen.poly(R, 4, 6)};
        for (std::size_t i = 0; i < 2; ++i) {
            unsigned brute = 0;
            for (const auto& f : F)
                for (const auto& t : f.terms())
                    if (t.monomial[i] > brute) brute = t.monomial[i];
            REQUIRE(mdeg(F, i) == brute);
        }
    }
}

TEST_CASE("specialize") {
    auto R = parametric_ring({"x1", "x2"}, TermOrder::lex({0, 1}), {"t1"});
    auto split = make_split(R, 1);
    auto f = P(R, "t1*x1*x2 + x2 + 1");
    CHECK(specialize(f, split, {Rational(0)}) == P(split.main_ring, "x2 + 1"));
    CHECK(specialize(f, split, {Rational(2)}) == P(split.main_ring, "2*x1*x2 + x2 + 1"));

    auto plain = ring_of({"x"});
    auto none = make_split(plain, 0);
    CHECK(specialize(P(plain, "x^2+3"), none, {}).to_string() == "x^2 + 3");
}

TEST_CASE("specialize is a ring homomorphism") {
    auto R = parametric_ring({"x", "y"}, TermOrder::grevlex({0, 1}), {"a", "b"});
    auto split = make_split(R, 2);
    PolyGen gen(19);
    for (int trial = 0; trial < 300; ++trial) {
        QPoly f = gen.poly(R, 5, 4), g = gen.poly(R, 5, 4);
        std::vector<Rational> t{rat(gen.integer(-3, 3)), rat(gen.integer(-5, 5), gen.integer(1, 4))};
        REQUIRE(specialize(f * g, split, t) == specialize(f, split, t) * specialize(g, split, t));
        REQUIRE(specialize(f + g, split, t) == specialize(f, split, t) + specialize(g, split, t));
    }
}

TEST_CASE("derivative product rule") {
    auto R = ring_of({"x", "y"});
    PolyGen gen(23);
    for (int trial = 0; trial < 200; ++trial) {
        QPoly f = gen.poly(R, 4, 4), g = gen.poly(R, 4, 4);
        for (std::size_t i = 0; i < 2; ++i)
            REQUIRE(derivative(f * g, i) == derivative(f, i) * g + f * derivative(g, i));
    }
}

TEST_CASE("canonical text form") {
    auto R = ring_of({"x0", "x1", "x2", "t1"}, BaseOrder::grevlex);
    CHECK(canonical_string(P(R, "3/2*x0^3*x1^2 + t1*x1*x2^4")) == "2*x1*x2^4*t1 + 3*x0^3*x1^2");
    CHECK(canonical_string(P(R, "-x1 + 2")) == "x1 - 2");
}

TEST_CASE("parser errors carry positions") {
    auto R = ring_of({"x", "y"});
    try {
        parse_polynomial("x + q", R, 3, 10);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() >= 10);
    }
    CHECK_THROWS_AS(parse_polynomial("x +", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^", R), ParseError);
    CHECK(parse_polynomial("(x+y)^2 - 2*x*y", R) == P(R, "x^2 + y^2"));
    CHECK(parse_polynomial("-(x - 1/2)", R) == P(R, "1/2 - x"));
}

}
