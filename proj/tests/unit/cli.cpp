#include "unit_support.hpp"

#include "zerodim/cli.hpp"

using namespace zerodim;
using namespace zerodim::cli;
using namespace zerodim::testing;

namespace {

const char* kExample1 =
    "# two equations, one parameter\n"
    "vars x1, x2;\n"
    "params t1;\n"
    "order lex;\n"
    "poly t1*x1*x2 + x2 + 1;\n"
    "poly x1^2*x2 + t1*x1 + 3;\n";

const char* kExample5 = "vars x1, x2; params t1, t2; poly x1^3*x2 + t1*x1^2*x2^4 + x2^10 + t2*x2^11;";

ConstructibleSet<Rational> strata_of(const Json& result, const RingPtr& T) {
    ConstructibleSet<Rational> out;
    for (const auto& s : result) {
        Stratum<Rational> st{T, {}, {}};
        for (const auto& e : s["equations"]) st.equations.push_back(P(T, e.get<std::string>()));
        for (const auto& n : s["inequations"]) st.inequations.push_back(P(T, n.get<std::string>()));
        out.push_back(st);
    }
    return out;
}

// the zero locus inside a dimension stratification
Json dim_zero(const Json& result) {
    Json out = Json::array();
    for (const auto& e : result["entries"])
        if (e["local_dim"] == 0) out.push_back(e["stratum"]);
    return out;
}

Flags jacobian(Jacobian j, Method m = Method::sat_fast) {
    Flags f;
    f.jacobian = j;
    f.method = m;
    return f;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse a problem file") {
    ProblemFile f = parse_problem(kExample1);
    CHECK(f.variables == std::vector<std::string>{"x1", "x2"});
    CHECK(f.parameters == std::vector<std::string>{"t1"});
    CHECK(f.order == BaseOrder::lex);
    CHECK(f.polynomials.size() == 2);
    CHECK(f.point.empty());
    CHECK(f.divisors.empty());

    ProblemFile g = parse_problem("vars x, y; poly x*y; point 1/2, -3; divisor x;");
    CHECK(g.parameters.empty());
    CHECK(g.order == BaseOrder::grevlex);
    CHECK(g.point == std::vector<Rational>{rat(1, 2), rat(-3)});
    CHECK(g.divisors.size() == 1);
}

TEST_CASE("printed problems parse back to the same value") {
    for (const char* text : {kExample1, kExample5, "vars x; poly x^2; divisor x; point 2/3;"}) {
        ProblemFile f = parse_problem(text);
        CHECK(parse_problem(print_problem(f)) == f);
        CHECK(print_problem(parse_problem(print_problem(f))) == print_problem(f));
    }
}

TEST_CASE("parse errors carry a position") {
    try {
        parse_problem("vars x;\npoly x^2 +;\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() >= 10);
    }
    CHECK_THROWS_AS(parse_problem("vars x; poly y;"), ParseError);
    CHECK_THROWS_AS(parse_problem("vars x, x; poly x;"), ParseError);
    CHECK_THROWS_AS(parse_problem("vars x; order banana; poly x;"), ParseError);
    CHECK_THROWS_AS(parse_problem("vars x; poly x"), ParseError);
}

TEST_CASE("gb command") {
    RunReport r = run("gb", parse_problem("vars x; poly x;"), Flags{});
    REQUIRE(r.status == Status::ok);
    CHECK(r.exit_code == 0);
    CHECK(*r.payload == Json::array({"x"}));

    RunReport p = run("gb", parse_problem(kExample1), Flags{});
    CHECK(p.status == Status::error);
    CHECK(p.exit_code == 3);
    CHECK(p.error_kind == "precondition");
}

TEST_CASE("zerodim on example 5 with and without f") {
    ProblemFile f = parse_problem(kExample5);
    Problem p = build_problem(f);
    ConstructibleSet<Rational> W{{p.split.param_ring, {}, Ps(p.split.param_ring, {"4*t1^3 + 27", "t2"})}};
    for (auto j : {Jacobian::with_f, Jacobian::without_f}) {
        RunReport r = run("zerodim", f, jacobian(j));
        REQUIRE(r.status == Status::ok);
        CHECK(cs_equal(strata_of(*r.payload, p.split.param_ring), W));
    }
    RunReport bad = run("zerodim", parse_problem("vars x; params t; poly x; poly x + t;"), jacobian(Jacobian::with_f));
    CHECK(bad.exit_code == 3);
}

TEST_CASE("methods agree through the command line") {
    ProblemFile f = parse_problem(
        "vars x1, x2, x3; params t1; poly x1^3 + x1*x3^2 + t1*x1*x2^3 + x2^3*x3;");
    Problem p = build_problem(f);
    RunReport tc = run("zerodim", f, jacobian(Jacobian::with_f, Method::tc));
    RunReport fast = run("zerodim", f, jacobian(Jacobian::with_f, Method::sat_fast));
    REQUIRE(tc.status == Status::ok);
    REQUIRE(fast.status == Status::ok);
    const RingPtr& T = p.split.param_ring;
    CHECK(cs_equal(strata_of(dim_zero(*tc.payload), T), strata_of(*fast.payload, T)));
    CHECK(cs_equal<Rational>(strata_of(*fast.payload, T), {{T, {}, Ps(T, {"t1^2 + 1"})}}));
}

TEST_CASE("json output is deterministic") {
    ProblemFile f = parse_problem(kExample1);
    std::string a = run("cgs", f, Flags{}).to_json(false).dump(2);
    std::string b = run("cgs", parse_problem(print_problem(f)), Flags{}).to_json(false).dump(2);
    CHECK(a == b);
    CHECK(run("cgs", f, Flags{}).to_json(false)["digest"] == digest(f));
    CHECK(digest(f).size() == 16);
    CHECK(digest(f) != digest(parse_problem(kExample5)));
}

TEST_CASE("timeouts and budgets") {
    Flags zero;
    zero.timeout = 0;
    RunReport r = run("cgs", parse_problem(kExample1), zero);
    CHECK(r.status == Status::timeout);
    CHECK(r.exit_code == 4);
    CHECK_FALSE(r.payload.has_value());
    CHECK(r.to_json(false)["status"] == "timeout");

    BenchReport b = bench_table1(0, {1, 2});
    CHECK(b.rows.size() == 6);
    for (const auto& row : b.rows) CHECK(row.status == Status::timeout);
    CHECK(b.disagreements.empty());
}

TEST_CASE("benchmark problem 2 completes under the fast saturation") {
    ProblemFile f = table1_problem(2);
    CHECK(parse_problem(print_problem(f)) == f);
    BenchReport b = bench_table1(60, {2}, {Method::sat_fast});
    REQUIRE(b.rows.size() == 1);
    CHECK(b.rows[0].status == Status::ok);
    CHECK(b.rows[0].locus.has_value());
    CHECK_THROWS_AS(table1_problem(0), PreconditionError);
    CHECK_THROWS_AS(table1_problem(12), PreconditionError);
}

TEST_CASE("point shift") {
    // x^2 + y^2 at (1, 0) is x^2 + 2x + 1 + y^2 after moving the point: not a zero
    RunReport r = run("zerodim", parse_problem("vars x, y; point 1, 0; poly x^2 + y^2;"), jacobian(Jacobian::with_f));
    CHECK(r.exit_code == 3);
    RunReport ok = run("localdim", parse_problem("vars x, y; point 1, 1; poly (x - 1)*(y - 1);"), Flags{});
    REQUIRE(ok.status == Status::ok);
}

TEST_CASE("unknown command") {
    RunReport r = run("frobnicate", parse_problem("vars x; poly x;"), Flags{});
    CHECK(r.exit_code == 3);
    CHECK(r.status == Status::error);
}

}
