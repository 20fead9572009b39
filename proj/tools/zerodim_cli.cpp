#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "zerodim/cli.hpp"

using namespace zerodim;
using namespace zerodim::cli;

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const char* describe(const std::string& command) {
    if (command == "gb") return "reduced Groebner basis (no parameters)";
    if (command == "cgs") return "comprehensive Groebner system";
    if (command == "quotient") return "ideal quotient by the divisors";
    if (command == "saturate") return "saturation by the divisors, or by the maximal ideal at the origin";
    if (command == "zerodim") return "locus where the origin is an isolated zero";
    if (command == "localdim") return "local dimension at the origin";
    if (command == "primary-origin") return "primary component at the origin";
    if (command == "bench") return "run the benchmark table";
    return "";
}

int report_failure(const RunReport& r, bool json) {
    if (json) std::cout << r.to_json(false).dump(2) << "\n";
    std::cerr << "zerodim " << r.command << ": " << r.message << "\n";
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local dimension and isolated-zero tests for parametric polynomial systems"};
    app.require_subcommand(1);

    Flags flags;
    flags.timeout = default_timeout();
    std::string input;
    std::string method = "sat-fast";
    std::string jacobian;
    std::vector<int> problems;
    std::vector<std::string> bench_methods;

    for (const auto& name : commands()) {
        CLI::App* sub = app.add_subcommand(name, describe(name));
        sub->add_option("--timeout", flags.timeout, "seconds (default: ZERODIM_TIMEOUT or 900)")->check(CLI::NonNegativeNumber);
        sub->add_flag("--json", flags.json, "machine-readable output");
        sub->add_flag("--timing", flags.timing, "include elapsed seconds");
        if (name == "bench") {
            sub->add_option("--problem", problems, "problem numbers (default: all)")->check(CLI::Range(1, kTable1Problems));
            sub->add_option("--method", bench_methods, "methods to run (default: all)")
                ->check(CLI::IsMember({"tc", "sat", "sat-fast"}));
            continue;
        }
        sub->add_option("input", input, "problem file (default: standard input)");
        if (name == "zerodim" || name == "saturate")
            sub->add_option("--method", method, "tc, sat or sat-fast")->check(CLI::IsMember({"tc", "sat", "sat-fast"}));
        sub->add_option("--jacobian", jacobian, "build {f,} df/dx from a single poly")
            ->check(CLI::IsMember({"with-f", "without-f"}))
            ->expected(0, 1)
            ->default_str("with-f");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    if (command == "bench") {
        std::vector<Method> ms;
        for (const auto& m : bench_methods) ms.push_back(parse_method(m));
        BenchReport report = bench_table1(flags.timeout, problems, ms);
        if (flags.json)
            std::cout << report.to_json().dump(2) << "\n";
        else
            std::cout << report.to_markdown();
        for (const auto& d : report.disagreements) std::cerr << "zerodim bench: disagreement on " << d << "\n";
        return report.disagreements.empty() ? 0 : 5;
    }

    flags.method = parse_method(method);
    if (app.get_subcommands().front()->count("--jacobian"))
        flags.jacobian = jacobian == "without-f" ? Jacobian::without_f : Jacobian::with_f;

    ProblemFile file;
    RunReport r;
    r.command = command;
    try {
        file = parse_problem(read_input(input));
    } catch (const ParseError& e) {
        r.status = Status::error;
        r.error_kind = "parse";
        r.message = e.what();
        r.exit_code = 2;
        return report_failure(r, flags.json);
    } catch (const Error& e) {
        r.status = Status::error;
        r.error_kind = "precondition";
        r.message = e.what();
        r.exit_code = 3;
        return report_failure(r, flags.json);
    }

    r = run(command, file, flags);
    if (r.status != Status::ok) {
        if (flags.json) {
            std::cout << r.to_json(flags.timing).dump(2) << "\n";
            std::cerr << "zerodim " << r.command << ": " << r.message << "\n";
            return r.exit_code;
        }
        return report_failure(r, false);
    }
    if (flags.json)
        std::cout << r.to_json(flags.timing).dump(2) << "\n";
    else
        std::cout << r.text;
    if (flags.timing && !flags.json) std::cerr << "elapsed " << r.elapsed << " s\n";
    return 0;
}
