#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zerodim/zerodim.hpp"

namespace zerodim::cli {

using Json = nlohmann::ordered_json;

/// Parsed problem text. Expressions are kept as written; they are checked
/// against the declared names when the file is parsed.
struct ProblemFile {
    std::vector<std::string> variables;
    std::vector<std::string> parameters;
    BaseOrder order = BaseOrder::grevlex;
    std::vector<Rational> point;  // empty: the origin
    std::vector<std::string> polynomials;
    std::vector<std::string> divisors;

    bool operator==(const ProblemFile&) const = default;
};

/// Statements end with ';'. `#` starts a comment.
///   vars x1, x2;  params t1;  order grevlex;  point 1/2, 0;
///   poly <expr>;  divisor <expr>;
ProblemFile parse_problem(const std::string& text);
std::string print_problem(const ProblemFile& file);

/// The problem over its ring: main variables first, parameters last.
struct Problem {
    ProblemFile file;
    ParamSplit split;
    Basis<Rational> polynomials;
    Basis<Rational> divisors;

    Stratum<Rational> region() const { return whole_space<Rational>(split.param_ring); }
};

Problem build_problem(const ProblemFile& file);

/// Moves `point` to the origin in every polynomial and divisor.
Problem shifted_to_origin(const Problem& problem);

enum class Method { tc, sat, sat_fast };
enum class Jacobian { none, with_f, without_f };

std::string to_string(Method m);
Method parse_method(const std::string& name);

struct Flags {
    Method method = Method::sat_fast;
    Jacobian jacobian = Jacobian::none;
    double timeout = 900;
    bool json = false;
    bool timing = false;
};

/// ZERODIM_TIMEOUT when set and valid, else 900 seconds.
double default_timeout();

enum class Status { ok, timeout, error };
std::string to_string(Status s);

struct RunReport {
    std::string command;
    std::string digest;
    double elapsed = 0;
    Status status = Status::ok;
    std::optional<Json> payload;  // present iff status == ok
    std::string text;             // human-readable payload
    std::string error_kind;
    std::string message;
    int exit_code = 0;

    Json to_json(bool timing) const;
};

/// 64-bit FNV-1a of the printed problem, as 16 hex digits.
std::string digest(const ProblemFile& file);

const std::vector<std::string>& commands();

/// Runs one command. Never throws for problem-level failures: they are
/// reported through status, error_kind and exit_code.
RunReport run(const std::string& command, const ProblemFile& file, const Flags& flags);

Json to_json(const Stratum<Rational>& s);
Json to_json(const ConstructibleSet<Rational>& a);
Json to_json(const std::vector<CGSBranch<Rational>>& branches);
Json to_json(const DimStratification& d);

/// Zero locus of the isolated-origin condition by one of the three methods.
ConstructibleSet<Rational> zero_locus(const Problem& problem, Method method, const GroebnerOptions& options = {});

// Benchmark suite: the 11 systems of the comparison table.

constexpr int kTable1Problems = 11;

/// Problem k, 1 <= k <= 11, with the partial derivatives expanded.
ProblemFile table1_problem(int k);

struct BenchRow {
    int problem = 0;
    Method method = Method::sat_fast;
    Status status = Status::ok;
    double elapsed = 0;
    std::optional<ConstructibleSet<Rational>> locus;
    std::string message;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    /// "problem k: m1 vs m2" for every pair of completed runs whose loci differ.
    std::vector<std::string> disagreements;

    Json to_json() const;
    std::string to_markdown() const;
};

/// Runs every listed problem under every listed method, each with its own
/// budget. A budget of 0 records immediate timeouts.
BenchReport bench_table1(double timeout, std::vector<int> problems = {}, std::vector<Method> methods = {});

}  // namespace zerodim::cli
