#include "zerodim/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <set>
#include <sstream>

#include "zerodim/parser.hpp"

namespace zerodim::cli {
namespace {

struct Statement {
    std::string text;
    int line = 1;
    int column = 1;
};

bool is_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Splits on ';' and records where each statement's first non-blank
// character sits. Comments run from '#' to the end of the line.
std::vector<Statement> statements(const std::string& text) {
    std::vector<Statement> out;
    Statement cur;
    bool started = false;
    int line = 1, column = 1;
    bool comment = false;
    for (char c : text) {
        if (comment) {
            if (c == '\n') comment = false;
        } else if (c == '#') {
            comment = true;
        } else if (c == ';') {
            if (!started) throw ParseError("empty statement", line, column);
            out.push_back(cur);
            cur = Statement{};
            started = false;
        } else if (started) {
            cur.text += c;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            started = true;
            cur.text += c;
            cur.line = line;
            cur.column = column;
        }
        if (c == '\n') {
            ++line;
            column = 1;
            if (started && cur.text.back() == '\n') cur.text.back() = ' ';
        } else {
            ++column;
        }
    }
    if (started) throw ParseError("missing ';' after statement", cur.line, cur.column);
    return out;
}

// Comma-separated items with the column of each.
std::vector<std::pair<std::string, int>> items(const std::string& body, int column) {
    std::vector<std::pair<std::string, int>> out;
    if (trim(body).empty()) return out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = body.find(',', start);
        std::string piece = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t lead = 0;
        while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
        out.emplace_back(trim(piece), column + static_cast<int>(start + lead));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::string> names(const std::string& body, int line, int column) {
    std::vector<std::string> out;
    for (auto& [name, col] : items(body, column)) {
        if (!is_name(name)) throw ParseError("'" + name + "' is not a valid name", line, col);
        if (std::find(out.begin(), out.end(), name) != out.end())
            throw ParseError("'" + name + "' is declared twice", line, col);
        out.push_back(name);
    }
    return out;
}

struct Located {
    std::string text;
    int line;
    int column;
};

RingPtr problem_ring(const ProblemFile& f) {
    std::vector<std::size_t> idx(f.variables.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return parametric_ring(f.variables, TermOrder::make(f.order, idx), f.parameters);
}

void check_declarations(const ProblemFile& f, int line, int column) {
    if (f.variables.empty()) throw ParseError("no variables declared", line, column);
    for (const auto& p : f.parameters)
        if (std::find(f.variables.begin(), f.variables.end(), p) != f.variables.end())
            throw ParseError("'" + p + "' is both a variable and a parameter", line, column);
    if (f.variables.size() + f.parameters.size() > kMaxVariables - 4)
        throw ParseError("too many variables and parameters (at most " + std::to_string(kMaxVariables - 4) + ")", line,
                         column);
    if (!f.point.empty() && f.point.size() != f.variables.size())
        throw ParseError("point has " + std::to_string(f.point.size()) + " coordinates for " +
                             std::to_string(f.variables.size()) + " variables",
                         line, column);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

Json strings(const std::vector<std::string>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(s);
    return out;
}

template <class K>
Json basis_json(const Basis<K>& B) {
    return strings(canonical_strings(B));
}

std::string basis_text(const std::vector<std::string>& B) {
    std::string out = "{";
    for (std::size_t i = 0; i < B.size(); ++i) out += (i ? ", " : "") + B[i];
    return out + "}";
}

std::string branches_text(const std::vector<CGSBranch<Rational>>& bs) {
    std::string out;
    for (const auto& b : bs) out += to_string(b.stratum) + " : " + basis_text(canonical_strings(b.basis)) + "\n";
    return out;
}

std::string dims_text(const DimStratification& d) {
    std::string out;
    for (const auto& e : d.entries) out += to_string(e.stratum) + " : dim " + std::to_string(e.local_dim) + "\n";
    out += "zero locus: " + to_string(d.zero_locus()) + "\n";
    return out;
}

Basis<Rational> default_divisors(const Problem& p) {
    return p.divisors.empty() ? parametric_maximal_ideal<Rational>(p.split) : p.divisors;
}

bool is_maximal_ideal(const Problem& p) {
    return p.divisors.empty() || canonical_strings(buchberger(p.divisors)) ==
                                     canonical_strings(buchberger(parametric_maximal_ideal<Rational>(p.split)));
}

// Two-stage saturation by m over the parameter space.
ParametricResult<Rational> parametric_saturate_fast(const Problem& p) {
    Basis<Rational> fs = nonzero(p.polynomials);
    unsigned alpha = 1;
    for (std::size_t i = 0; i < p.split.main_count(); ++i) alpha = std::max(alpha, mdeg(fs, i));
    Basis<Rational> powers;
    for (std::size_t i = 0; i < p.split.main_count(); ++i) powers.push_back(QPolynomial::variable(p.split.ring, i, alpha));
    Basis<Rational> m = parametric_maximal_ideal<Rational>(p.split);
    ParametricResult<Rational> out{p.split, {}};
    for (const auto& b : parametric_quotient(fs, powers, p.split, p.region()).branches)
        for (auto& c : parametric_saturate(b.basis, m, p.split, b.stratum).branches) out.branches.push_back(std::move(c));
    sort_branches(out.branches);
    return out;
}

void set_payload(RunReport& r, Json payload, std::string text) {
    r.payload = std::move(payload);
    r.text = std::move(text);
}

void run_command(RunReport& r, const std::string& command, const Problem& p, const Flags& flags) {
    const bool parametric = p.split.param_count > 0;
    if (command == "gb") {
        if (parametric) throw PreconditionError("gb takes a parameter-free problem; use cgs for parametric systems");
        Basis<Rational> G = buchberger(nonzero(p.polynomials));
        auto s = canonical_strings(G);
        set_payload(r, strings(s), basis_text(s) + "\n");
    } else if (command == "cgs") {
        auto sys = cgs_compute(p.polynomials, p.split, p.region());
        set_payload(r, to_json(sys.branches), branches_text(sys.branches));
    } else if (command == "quotient") {
        Basis<Rational> Q = default_divisors(p);
        if (parametric) {
            auto res = parametric_quotient(nonzero(p.polynomials), Q, p.split, p.region());
            set_payload(r, to_json(res.branches), branches_text(res.branches));
        } else {
            auto s = canonical_strings(quotient_by_ideal(nonzero(p.polynomials), Q));
            set_payload(r, strings(s), basis_text(s) + "\n");
        }
    } else if (command == "saturate") {
        if (flags.method == Method::tc) throw PreconditionError("saturate takes --method sat or sat-fast");
        bool fast = flags.method == Method::sat_fast;
        if (fast && !is_maximal_ideal(p))
            throw PreconditionError("--method sat-fast saturates by the maximal ideal at the origin only");
        Basis<Rational> Q = default_divisors(p);
        if (parametric) {
            auto res = fast ? parametric_saturate_fast(p) : parametric_saturate(nonzero(p.polynomials), Q, p.split, p.region());
            set_payload(r, to_json(res.branches), branches_text(res.branches));
        } else {
            auto G = fast ? saturate_fast(nonzero(p.polynomials)) : saturate(nonzero(p.polynomials), Q);
            auto s = canonical_strings(G);
            set_payload(r, strings(s), basis_text(s) + "\n");
        }
    } else if (command == "zerodim") {
        if (flags.method == Method::tc) {
            DimStratification d = algorithm1(p.polynomials, p.split, p.region());
            set_payload(r, to_json(d), dims_text(d));
        } else {
            auto w = zero_locus(p, flags.method);
            set_payload(r, to_json(w), to_string(w) + "\n");
        }
    } else if (command == "localdim") {
        if (parametric) {
            DimStratification d = localdim_parametric(p.polynomials, p.split, p.region());
            set_payload(r, to_json(d), dims_text(d));
        } else {
            LocalDimResult res = localdim(p.polynomials);
            Json bases = Json::array();
            std::string text = "local dimension " + std::to_string(res.dim) + "\n";
            for (std::size_t l = 0; l < res.bases.size(); ++l) {
                auto s = canonical_strings(res.bases[l]);
                bases.push_back(strings(s));
                text += "l = " + std::to_string(l) + ": " + basis_text(s) + "\n";
            }
            Json payload;
            payload["local_dim"] = res.dim;
            payload["bases"] = std::move(bases);
            set_payload(r, std::move(payload), text);
        }
    } else if (command == "primary-origin") {
        if (parametric) {
            auto res = parametric_primary_component(p.polynomials, p.split, p.region());
            set_payload(r, to_json(res.branches), branches_text(res.branches));
        } else {
            Basis<Rational> fs = nonzero(p.polynomials);
            Basis<Rational> Q0 = primary_component_at_origin(fs);
            Basis<Rational> S = saturate_fast(fs);
            auto q = canonical_strings(Q0), s = canonical_strings(S);
            Json payload;
            payload["Q0"] = strings(q);
            payload["S"] = strings(s);
            set_payload(r, std::move(payload), "Q0: " + basis_text(q) + "\nS: " + basis_text(s) + "\n");
        }
    } else {
        throw PreconditionError("unknown command '" + command + "'");
    }
}

void fail(RunReport& r, Status status, const std::string& kind, const std::string& message, int code) {
    r.status = status;
    r.payload.reset();
    r.text.clear();
    r.error_kind = kind;
    r.message = message;
    r.exit_code = code;
}

const char* method_label(Method m) {
    switch (m) {
        case Method::tc: return "Algorithm 1";
        case Method::sat: return "Algorithm 2-1";
        case Method::sat_fast: return "Algorithm 2-2";
    }
    return "";
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    ProblemFile f;
    std::vector<Located> polys, divisors;
    std::set<std::string> seen;
    int last_line = 1, last_column = 1;
    for (const auto& st : statements(text)) {
        std::size_t k = 0;
        while (k < st.text.size() && std::isalpha(static_cast<unsigned char>(st.text[k]))) ++k;
        std::string keyword = st.text.substr(0, k);
        std::string body = st.text.substr(k);
        int body_col = st.column + static_cast<int>(k);
        last_line = st.line;
        last_column = st.column;
        bool once = keyword == "vars" || keyword == "params" || keyword == "order" || keyword == "point";
        if (once && !seen.insert(keyword).second)
            throw ParseError("'" + keyword + "' given twice", st.line, st.column);
        if (keyword == "vars") {
            f.variables = names(body, st.line, body_col);
        } else if (keyword == "params") {
            f.parameters = names(body, st.line, body_col);
        } else if (keyword == "order") {
            std::string name = trim(body);
            if (name != "lex" && name != "grlex" && name != "grevlex")
                throw ParseError("unknown term order '" + name + "'", st.line, body_col);
            f.order = parse_base_order(name);
        } else if (keyword == "point") {
            for (auto& [c, col] : items(body, body_col)) f.point.push_back(parse_rational(c, st.line, col));
        } else if (keyword == "poly" || keyword == "divisor") {
            std::string e = trim(body);
            if (e.empty()) throw ParseError("missing expression", st.line, body_col);
            std::size_t lead = body.find_first_not_of(" \t\r");
            Located loc{e, st.line, body_col + static_cast<int>(lead)};
            (keyword == "poly" ? polys : divisors).push_back(loc);
        } else {
            throw ParseError("unknown statement '" + (keyword.empty() ? st.text.substr(0, 1) : keyword) + "'", st.line,
                             st.column);
        }
    }
    check_declarations(f, last_line, last_column);
    RingPtr ring = problem_ring(f);
    for (const auto& e : polys) {
        parse_polynomial(e.text, ring, e.line, e.column);
        f.polynomials.push_back(e.text);
    }
    for (const auto& e : divisors) {
        parse_polynomial(e.text, ring, e.line, e.column);
        f.divisors.push_back(e.text);
    }
    return f;
}

std::string print_problem(const ProblemFile& f) {
    auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
        return out;
    };
    std::string out = "vars " + join(f.variables) + ";\n";
    out += "params " + join(f.parameters) + ";\n";
    out += "order " + to_string(f.order) + ";\n";
    if (!f.point.empty()) {
        std::vector<std::string> cs;
        for (const auto& c : f.point) cs.push_back(c.get_str());
        out += "point " + join(cs) + ";\n";
    }
    for (const auto& p : f.polynomials) out += "poly " + p + ";\n";
    for (const auto& d : f.divisors) out += "divisor " + d + ";\n";
    return out;
}

Problem build_problem(const ProblemFile& file) {
    check_declarations(file, 1, 1);
    Problem p;
    p.file = file;
    p.split = make_split(problem_ring(file), file.parameters.size());
    for (const auto& e : file.polynomials) p.polynomials.push_back(parse_polynomial(e, p.split.ring));
    for (const auto& e : file.divisors) p.divisors.push_back(parse_polynomial(e, p.split.ring));
    return p;
}

Problem shifted_to_origin(const Problem& problem) {
    const auto& pt = problem.file.point;
    if (std::all_of(pt.begin(), pt.end(), [](const Rational& c) { return c == 0; })) return problem;
    Problem p = problem;
    p.polynomials = shift_to_origin(problem.polynomials, pt);
    p.divisors = shift_to_origin(problem.divisors, pt);
    return p;
}

std::string to_string(Method m) {
    switch (m) {
        case Method::tc: return "tc";
        case Method::sat: return "sat";
        case Method::sat_fast: return "sat-fast";
    }
    return "";
}

Method parse_method(const std::string& name) {
    if (name == "tc") return Method::tc;
    if (name == "sat") return Method::sat;
    if (name == "sat-fast") return Method::sat_fast;
    throw PreconditionError("unknown method '" + name + "' (expected tc, sat or sat-fast)");
}

double default_timeout() {
    if (const char* v = std::getenv("ZERODIM_TIMEOUT")) {
        char* end = nullptr;
        double d = std::strtod(v, &end);
        if (end != v && *end == '\0' && d >= 0) return d;
    }
    return 900;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::timeout: return "timeout";
        case Status::error: return "error";
    }
    return "";
}

Json RunReport::to_json(bool timing) const {
    Json j;
    j["command"] = command;
    j["digest"] = digest;
    j["status"] = to_string(status);
    if (timing) j["elapsed"] = elapsed;
    if (payload) j["result"] = *payload;
    if (status != Status::ok) j["error"] = Json{{"kind", error_kind}, {"message", message}};
    return j;
}

std::string digest(const ProblemFile& file) {
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << fnv1a(print_problem(file));
    return s.str();
}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> list = {"gb",       "cgs",     "quotient",       "saturate",
                                                  "zerodim",  "localdim", "primary-origin", "bench"};
    return list;
}

RunReport run(const std::string& command, const ProblemFile& file, const Flags& flags) {
    RunReport r;
    r.command = command;
    r.digest = digest(file);
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (std::find(commands().begin(), commands().end(), command) == commands().end())
            throw PreconditionError("unknown command '" + command + "'");
        if (command == "bench") throw PreconditionError("bench takes no problem; call bench_table1");
        Problem p = build_problem(file);
        if (flags.jacobian != Jacobian::none) {
            if (p.polynomials.size() != 1)
                throw PreconditionError("--jacobian needs exactly one poly, got " + std::to_string(p.polynomials.size()));
            p.polynomials = jacobian_system(p.polynomials[0], p.split, flags.jacobian == Jacobian::with_f);
        }
        if (command != "gb" && command != "cgs") p = shifted_to_origin(p);
        if (flags.timeout <= 0) throw TimeoutError("time budget of 0 s");
        ScopedDeadline deadline{std::chrono::duration<double>(flags.timeout)};
        run_command(r, command, p, flags);
        r.status = Status::ok;
        r.exit_code = 0;
    } catch (const ParseError& e) {
        fail(r, Status::error, "parse", e.what(), 2);
    } catch (const TimeoutError& e) {
        std::ostringstream m;
        m << command << " exceeded the time budget of " << flags.timeout << " s";
        fail(r, Status::timeout, "timeout", m.str(), 4);
    } catch (const InvariantError& e) {
        fail(r, Status::error, "invariant", e.what(), 5);
    } catch (const RingMismatch& e) {
        fail(r, Status::error, "precondition", e.what(), 3);
    } catch (const PreconditionError& e) {
        fail(r, Status::error, "precondition", e.what(), 3);
    } catch (const Error& e) {
        fail(r, Status::error, "internal", e.what(), 5);
    }
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Json to_json(const Stratum<Rational>& s) {
    Json j;
    j["equations"] = basis_json(s.equations);
    j["inequations"] = basis_json(s.inequations);
    return j;
}

Json to_json(const ConstructibleSet<Rational>& a) {
    Json j = Json::array();
    for (const auto& s : a) j.push_back(to_json(s));
    return j;
}

Json to_json(const std::vector<CGSBranch<Rational>>& branches) {
    Json j = Json::array();
    for (const auto& b : branches) {
        Json e;
        e["stratum"] = to_json(b.stratum);
        e["basis"] = basis_json(b.basis);
        j.push_back(std::move(e));
    }
    return j;
}

Json to_json(const DimStratification& d) {
    Json j;
    j["region"] = to_json(d.region);
    Json entries = Json::array();
    for (const auto& e : d.entries) {
        Json x;
        x["stratum"] = to_json(e.stratum);
        x["local_dim"] = e.local_dim;
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    j["zero_locus"] = to_json(d.zero_locus());
    return j;
}

ConstructibleSet<Rational> zero_locus(const Problem& problem, Method method, const GroebnerOptions& options) {
    switch (method) {
        case Method::tc: return normalize_union(algorithm1(problem.polynomials, problem.split, problem.region(), options).zero_locus());
        case Method::sat: return algorithm2_1(problem.polynomials, problem.split, problem.region(), options);
        case Method::sat_fast: return algorithm2_2(problem.polynomials, problem.split, problem.region(), options);
    }
    return {};
}

ProblemFile table1_problem(int k) {
    struct Row {
        const char* f;
        bool with_f;
        std::size_t partials;
    };
    static const char* fs[] = {
        "x^3 + x*z^2 + a*x*y^3 + y^3*z + x*y^4",
        "x^3*y + a*y^15 + b*x*y^11 + x*y^12",
        "x^4*y + y^8 + a*x*y^8 + b*x^2*y^4",
        "x^3*y + a*y^4 + y^3 + y^8*x + b*y^6",
        "x^4 + y*z^5 + y^4 + a*x^4*z + y^2*z^7 + z^4",
        "x^5*y^3 + z^8 + a*x*z^8 + y^6*z + b*y*z^5",
        "(x^2*y + z^4 + y^5)^2 + a*y^6*z^4 + y^4*z^6",
        "x^10 + x^5*y^3 + a*y^6 + 3*y^14 + b*x^10*y^5 + x*y^14",
        "x^5 + y*z^4 + y^3 + a*x^5*y + b*x^2*y^7 + z^4",
        "x^6 + y*z^7 + a*x^3*y^4 + y^10 + x^2*y^5*z^4",
    };
    // f index, f itself included, number of partials taken (x, y[, z])
    static const Row rows[kTable1Problems] = {
        {fs[0], true, 3}, {fs[1], true, 2},  {fs[2], true, 2}, {fs[3], false, 2}, {fs[4], true, 2}, {fs[5], false, 3},
        {fs[6], false, 3}, {fs[6], true, 3}, {fs[7], false, 2}, {fs[8], true, 3},  {fs[9], true, 3},
    };
    if (k < 1 || k > kTable1Problems) throw PreconditionError("benchmark problems are numbered 1 to 11");
    const Row& row = rows[k - 1];
    std::string text = row.f;
    ProblemFile file;
    file.variables = text.find('z') == std::string::npos ? std::vector<std::string>{"x", "y"}
                                                        : std::vector<std::string>{"x", "y", "z"};
    for (const char* t : {"a", "b"})
        if (text.find(t) != std::string::npos) file.parameters.push_back(t);
    file.order = BaseOrder::grevlex;
    RingPtr ring = problem_ring(file);
    QPolynomial f = parse_polynomial(text, ring);
    if (row.with_f) file.polynomials.push_back(f.to_string());
    for (std::size_t i = 0; i < row.partials; ++i) file.polynomials.push_back(derivative(f, i).to_string());
    return file;
}

Json BenchReport::to_json() const {
    Json rs = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["problem"] = r.problem;
        j["method"] = cli::to_string(r.method);
        j["status"] = cli::to_string(r.status);
        j["elapsed"] = r.elapsed;
        if (r.locus) j["zero_locus"] = cli::to_json(*r.locus);
        if (!r.message.empty()) j["message"] = r.message;
        rs.push_back(std::move(j));
    }
    Json out;
    out["runs"] = std::move(rs);
    out["disagreements"] = strings(disagreements);
    return out;
}

std::string BenchReport::to_markdown() const {
    std::vector<int> problems;
    std::vector<Method> methods;
    for (const auto& r : rows) {
        if (std::find(problems.begin(), problems.end(), r.problem) == problems.end()) problems.push_back(r.problem);
        if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);
    }
    std::ostringstream s;
    s << "| Problem |";
    for (Method m : methods) s << " " << method_label(m) << " |";
    s << "\n|---|";
    for (std::size_t i = 0; i < methods.size(); ++i) s << "---|";
    s << "\n";
    for (int k : problems) {
        s << "| " << k << " |";
        for (Method m : methods) {
            auto it = std::find_if(rows.begin(), rows.end(), [&](const BenchRow& r) { return r.problem == k && r.method == m; });
            if (it == rows.end()) {
                s << " |";
            } else if (it->status == Status::ok) {
                s << " " << std::fixed << std::setprecision(3) << it->elapsed << " |";
            } else {
                s << " " << cli::to_string(it->status) << " |";
            }
        }
        s << "\n";
    }
    for (const auto& d : disagreements) s << "\nDISAGREEMENT " << d;
    if (!disagreements.empty()) s << "\n";
    return s.str();
}

BenchReport bench_table1(double timeout, std::vector<int> problems, std::vector<Method> methods) {
    if (problems.empty())
        for (int k = 1; k <= kTable1Problems; ++k) problems.push_back(k);
    if (methods.empty()) methods = {Method::tc, Method::sat, Method::sat_fast};
    BenchReport report;
    for (int k : problems) {
        Problem p = build_problem(table1_problem(k));
        std::size_t first = report.rows.size();
        for (Method m : methods) {
            BenchRow row;
            row.problem = k;
            row.method = m;
            auto t0 = std::chrono::steady_clock::now();
            try {
                if (timeout <= 0) throw TimeoutError("time budget of 0 s");
                ScopedDeadline deadline{std::chrono::duration<double>(timeout)};
                row.locus = zero_locus(p, m);
                row.status = Status::ok;
            } catch (const TimeoutError&) {
                row.status = Status::timeout;
            } catch (const Error& e) {
                row.status = Status::error;
                row.message = e.what();
            }
            row.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            report.rows.push_back(std::move(row));
        }
        for (std::size_t i = first; i < report.rows.size(); ++i)
            for (std::size_t j = i + 1; j < report.rows.size(); ++j) {
                const auto& a = report.rows[i];
                const auto& b = report.rows[j];
                if (a.locus && b.locus && !cs_equal(*a.locus, *b.locus))
                    report.disagreements.push_back("problem " + std::to_string(k) + ": " + to_string(a.method) + " vs " +
                                                   to_string(b.method));
            }
    }
    return report;
}

}  // namespace zerodim::cli
