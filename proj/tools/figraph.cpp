// figraph: command-line front end for expanding classification graphs,
// computing independence numbers, fitting the resulting sequences and
// running the acceptance suites.
//
// Exit status: 0 success, 1 domain error (JSON description on stderr),
// 2 search budget exhausted (partial results are still written).

#include "figraph/analysis.hpp"
#include "figraph/expand.hpp"
#include "figraph/ideals.hpp"
#include "figraph/model.hpp"
#include "figraph/solver.hpp"
#include "figraph/util.hpp"
#include "figraph/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace figraph;
using Json = nlohmann::ordered_json;

constexpr const char* tool_version = "0.1.0";

enum Exit { ok = 0, domain_error = 1, budget_exhausted = 2 };

/// Everything a command needs; filled by CLI11.
struct Options {
    std::string input;
    int n = -1;
    int n_min = 2;
    int n_max = 12;
    int max_period = 4;
    int max_degree = 3;
    std::uint64_t seed = 0;
    int count = 10;
    std::uint64_t budget_nodes = 10'000'000;
    double budget_secs = 60;
    std::string format;
    std::string out;
};

/// Domain error carrying the input file it concerns.
struct FileError {
    std::string file;
    std::string what;
};

Budget budget_of(const Options& o) {
    return {o.budget_nodes,
            std::chrono::milliseconds(static_cast<std::int64_t>(o.budget_secs * 1000.0))};
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FileError{path, "cannot open file"};
    buf << in.rdbuf();
    return buf.str();
}

// ---------------------------------------------------------------------------
// Run manifest

class Manifest {
public:
    Manifest(std::string command, const Options& o) : command_(std::move(command)) {
        params_["n"] = o.n;
        params_["n_min"] = o.n_min;
        params_["n_max"] = o.n_max;
        params_["max_period"] = o.max_period;
        params_["max_degree"] = o.max_degree;
        params_["count"] = o.count;
        params_["budget_nodes"] = o.budget_nodes;
        params_["budget_secs"] = o.budget_secs;
        params_["format"] = o.format;
        seeds_["master"] = o.seed;
    }

    void input(const std::string& path, const std::string& contents) {
        inputs_.push_back({{"path", path}, {"digest", digest_of(contents)}});
    }
    void param(const std::string& key, Json value) { params_[key] = std::move(value); }
    void seed(const std::string& key, std::uint64_t value) { seeds_[key] = value; }
    void timing(const std::string& key, Json value) { timings_[key] = std::move(value); }

    Json json() const {
        const std::time_t now = std::time(nullptr);
        std::ostringstream stamp;
        stamp << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
        return {{"tool", "figraph"},         {"version", tool_version},
                {"command", command_},       {"parameters", params_},
                {"seeds", seeds_},           {"inputs", inputs_},
                {"timings_ms", timings_},    {"timestamp", stamp.str()}};
    }

private:
    std::string command_;
    Json params_ = Json::object();
    Json seeds_ = Json::object();
    Json inputs_ = Json::array();
    Json timings_ = Json::object();
};

/// Writes the result to --out (plus a manifest sidecar) or to stdout.
void emit(const Options& o, const std::string& text, const Manifest& manifest) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file)
        throw FileError{o.out, "cannot write output file"};
    file << text;
    std::ofstream side(o.out + ".manifest.json", std::ios::binary);
    if (!side)
        throw FileError{o.out + ".manifest.json", "cannot write manifest"};
    side << manifest.json().dump(2) << "\n";
}

std::string require_format(const Options& o, std::initializer_list<const char*> allowed,
                           const char* fallback) {
    const std::string f = o.format.empty() ? fallback : o.format;
    for (const char* a : allowed)
        if (f == a)
            return f;
    throw std::invalid_argument("--format " + f + " is not available for this command");
}

void require_n(const Options& o) {
    if (o.n < 0)
        throw std::invalid_argument("--n is required and must be >= 0");
}

/// A classification graph document (has "orbits") or, failing that, nothing.
std::optional<ClassificationGraph> classification_or_graph(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{')
        return std::nullopt;
    const auto doc = nlohmann::json::parse(text, nullptr, false);
    if (!doc.is_discarded() && doc.is_object() && !doc.contains("orbits"))
        return std::nullopt;
    return parse(text);
}

// ---------------------------------------------------------------------------
// Commands

int cmd_validate(const Options& o) {
    const std::string text = read_input(o.input);
    Manifest m("validate", o);
    m.input(o.input, text);
    const auto c = parse(text);
    const auto fmt = require_format(o, {"text", "json"}, "text");
    std::ostringstream out;
    if (fmt == "json") {
        out << Json{{"valid", true},
                    {"digest", digest(c)},
                    {"pair_orbits", c.count(OrbitKind::pair)},
                    {"linear_orbits", c.count(OrbitKind::linear)},
                    {"singleton_orbits", c.count(OrbitKind::singleton)},
                    {"vertex_count", vertex_count_poly(c).to_string()}}
                   .dump(2)
            << "\n";
    } else {
        out << "valid: " << c.count(OrbitKind::pair) << " pair, " << c.count(OrbitKind::linear)
            << " linear, " << c.count(OrbitKind::singleton) << " singleton orbits; |V| = "
            << vertex_count_poly(c).to_string() << "; digest " << digest(c) << "\n";
    }
    emit(o, out.str(), m);
    return ok;
}

int cmd_expand(const Options& o) {
    require_n(o);
    const std::string text = read_input(o.input);
    Manifest m("expand", o);
    m.input(o.input, text);
    const auto g = expand(parse(text), o.n);
    const auto fmt = require_format(o, {"dimacs", "json", "text"}, "dimacs");
    std::ostringstream out;
    if (fmt == "dimacs") {
        out << to_dimacs(g);
    } else if (fmt == "json") {
        out << to_json(g).dump(2) << "\n";
    } else {
        out << "n = " << g.n() << ": " << g.size() << " vertices, " << g.edge_count() << " edges\n";
        for (std::size_t v = 0; v < g.size(); ++v) {
            out << vertex_text(g, v) << " :";
            for (auto u : g.neighbors(v))
                out << " " << vertex_text(g, u);
            out << "\n";
        }
    }
    emit(o, out.str(), m);
    return ok;
}

/// Loads either a classification graph expanded at --n, or a concrete graph.
ConcreteGraph load_graph(const Options& o, Manifest& m) {
    const std::string text = read_input(o.input);
    m.input(o.input, text);
    if (auto c = classification_or_graph(text)) {
        require_n(o);
        return expand(*c, o.n);
    }
    return parse_graph(text);
}

int cmd_alpha(const Options& o) {
    Manifest m("alpha", o);
    const auto g = load_graph(o, m);
    const auto fmt = require_format(o, {"text", "json", "csv"}, "text");
    Json result{{"n", g.n()}, {"vertices", g.size()}, {"edges", g.edge_count()}};
    int status = ok;
    std::vector<std::size_t> witness;
    try {
        const auto r = max_independent_set(g, budget_of(o));
        result["alpha"] = r.alpha;
        result["status"] = "optimal";
        result["nodes_explored"] = r.nodes_explored;
        m.timing("search", std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count());
        witness = r.witness;
    } catch (const BudgetExceeded& e) {
        result["alpha_lower_bound"] = e.lower_bound();
        result["alpha_upper_bound"] = e.upper_bound();
        result["status"] = "budget_exceeded";
        result["nodes_explored"] = e.nodes_explored();
        witness = e.best_witness();
        status = budget_exhausted;
    }
    Json labels = Json::array();
    for (auto v : witness)
        labels.push_back(vertex_text(g, v));
    result["witness"] = labels;

    std::ostringstream out;
    if (fmt == "json") {
        out << result.dump(2) << "\n";
    } else if (fmt == "csv") {
        out << "n,alpha,vertices,edges,nodes_explored,status\n"
            << g.n() << ","
            << (status == ok ? result["alpha"] : result["alpha_lower_bound"]).get<int>() << ","
            << g.size() << "," << g.edge_count() << "," << result["nodes_explored"].get<std::uint64_t>()
            << "," << result["status"].get<std::string>() << "\n";
    } else {
        if (status == ok)
            out << "alpha = " << result["alpha"].get<int>();
        else
            out << "alpha in [" << result["alpha_lower_bound"].get<int>() << ", "
                << result["alpha_upper_bound"].get<int>() << "] (budget exceeded)";
        out << " on " << g.size() << " vertices, " << g.edge_count() << " edges\nwitness:";
        for (const auto& l : labels)
            out << " " << l.get<std::string>();
        out << "\n";
    }
    emit(o, out.str(), m);
    return status;
}

std::string render_sequence(const AlphaSequence& seq, const std::string& fmt) {
    if (fmt == "json")
        return to_json(seq).dump(2) + "\n";
    if (fmt == "csv")
        return to_csv(seq);
    std::ostringstream out;
    out << std::setw(4) << "n" << std::setw(8) << "alpha" << std::setw(10) << "vertices"
        << std::setw(10) << "edges" << "  status\n";
    for (const auto& r : seq.rows)
        out << std::setw(4) << r.n << std::setw(8) << r.alpha << std::setw(10) << r.vertices
            << std::setw(10) << r.edges << "  " << to_string(r.status) << "\n";
    return out.str();
}

int cmd_scan(const Options& o) {
    const std::string text = read_input(o.input);
    Manifest m("scan", o);
    m.input(o.input, text);
    const auto c = parse(text);
    const auto fmt = require_format(o, {"csv", "json", "text"}, "csv");
    ScanOptions opts;
    opts.budget = budget_of(o);
    opts.keep_witness = fmt == "json";
    const auto seq = scan_alpha(c, o.n_min, o.n_max, opts);
    Json per_row = Json::object();
    for (const auto& r : seq.rows)
        per_row[std::to_string(r.n)] = r.millis;
    m.timing("rows", per_row);
    emit(o, render_sequence(seq, fmt), m);
    return seq.complete() ? ok : budget_exhausted;
}

int cmd_fit(const Options& o) {
    const std::string text = read_input(o.input);
    Manifest m("fit", o);
    m.input(o.input, text);
    const auto seq = parse_sequence(text);
    const auto fmt = require_format(o, {"text", "json"}, "text");
    const auto fit = fit_quasi_polynomial(seq, o.max_period, o.max_degree);
    std::optional<RecurrenceGuess> rec;
    try {
        rec = detect_recurrence(seq);
    } catch (const InsufficientData&) {
    }
    std::ostringstream out;
    if (fmt == "json") {
        Json doc;
        doc["fit"] = fit ? to_json(*fit) : Json(nullptr);
        doc["recurrence"] = rec ? to_json(*rec) : Json(nullptr);
        out << doc.dump(2) << "\n";
    } else {
        out << (fit ? to_text(*fit) : "no quasi-polynomial fit\n");
        out << (rec ? to_text(*rec) : "no linear recurrence\n");
    }
    emit(o, out.str(), m);
    if (!fit) {
        std::cerr << Json{{"error", "NoFit"},
                          {"message", "no quasi-polynomial with period <= " +
                                          std::to_string(o.max_period) + " and degree <= " +
                                          std::to_string(o.max_degree) + " confirms"},
                          {"file", o.input}}
                         .dump()
                  << "\n";
        return domain_error;
    }
    return ok;
}

int cmd_random_sweep(const Options& o) {
    Manifest m("random-sweep", o);
    RandomGenParams params;
    if (!o.input.empty()) {
        const std::string text = read_input(o.input);
        m.input(o.input, text);
        const auto doc = nlohmann::json::parse(text, nullptr, false);
        if (doc.is_discarded())
            throw ParseError("sweep parameters must be a JSON object");
        params = random_params_from_json(doc);
    }
    check_params(params);
    if (o.count < 0)
        throw std::invalid_argument("--count must be >= 0");
    m.param("generator", to_json(params));
    const auto fmt = require_format(o, {"text", "csv", "json"}, "text");
    ScanOptions opts;
    opts.budget = budget_of(o);
    const auto sweep =
        random_sweep(params, o.seed, o.count, o.n_min, o.n_max, opts, o.max_period, o.max_degree);

    bool complete = true;
    Json rows = Json::array();
    for (const auto& e : sweep) {
        complete = complete && e.seq.complete();
        Json alphas = Json::array();
        for (const auto& r : e.seq.rows)
            alphas.push_back(r.alpha);
        Json row{{"index", e.index},
                 {"seed", splitmix64(o.seed + static_cast<std::uint64_t>(e.index))},
                 {"digest", digest(e.c)},
                 {"orbits", std::to_string(e.c.count(OrbitKind::pair)) + "P" +
                                std::to_string(e.c.count(OrbitKind::linear)) + "L" +
                                std::to_string(e.c.count(OrbitKind::singleton)) + "S"},
                 {"alpha", alphas}};
        if (e.fit) {
            row["period"] = e.fit->period;
            row["degree"] = e.fit->degree;
            row["stable_degree"] = e.fit->stable_degree;
        }
        if (e.trends) {
            row["trend1"] = verdict_text(e.trends->bounded);
            row["trend2"] = e.trends->polynomial.applicable ? verdict_text(e.trends->polynomial) : "n/a";
            row["trend2_isolated"] = e.trends->polynomial_strict.applicable
                                         ? verdict_text(e.trends->polynomial_strict)
                                         : "n/a";
            row["trend3"] = verdict_text(e.trends->quadratic);
        }
        if (!e.error.empty())
            row["error"] = e.error;
        if (fmt == "json")
            row["classification_graph"] = to_json(e.c);
        rows.push_back(std::move(row));
    }

    std::ostringstream out;
    auto field = [](const Json& row, const char* key) {
        if (!row.contains(key))
            return std::string("-");
        const auto& v = row.at(key);
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    if (fmt == "json") {
        out << Json{{"generator", to_json(params)}, {"master_seed", o.seed}, {"instances", rows}}.dump(2)
            << "\n";
    } else if (fmt == "csv") {
        out << "index,digest,orbits,period,degree,stable_degree,trend1,trend2,trend2_isolated,trend3,error\n";
        for (const auto& r : rows) {
            out << r["index"].get<int>() << ',' << field(r, "digest") << ',' << field(r, "orbits");
            for (const char* k : {"period", "degree", "stable_degree", "trend1", "trend2",
                                  "trend2_isolated", "trend3", "error"})
                out << ',' << field(r, k);
            out << '\n';
        }
    } else {
        out << std::left << std::setw(5) << "#" << std::setw(8) << "orbits" << std::setw(4) << "T"
            << std::setw(4) << "deg" << std::setw(8) << "stable" << std::setw(10) << "trend1"
            << std::setw(10) << "trend2" << std::setw(10) << "trend3" << "alpha\n";
        for (const auto& r : rows) {
            std::string alphas;
            for (const auto& a : r["alpha"])
                alphas += (alphas.empty() ? "" : ",") + a.dump();
            out << std::setw(5) << r["index"].get<int>() << std::setw(8) << field(r, "orbits")
                << std::setw(4) << field(r, "period") << std::setw(4) << field(r, "degree")
                << std::setw(8) << field(r, "stable_degree") << std::setw(10) << field(r, "trend1")
                << std::setw(10) << field(r, "trend2") << std::setw(10) << field(r, "trend3")
                << alphas << (r.contains("error") ? "  (" + field(r, "error") + ")" : "") << "\n";
        }
    }
    emit(o, out.str(), m);
    return complete ? ok : budget_exhausted;
}

int cmd_verify(const Options& o) {
    Manifest m("verify", o);
    m.param("suite", o.input);
    std::vector<Criterion> criteria;
    if (o.input == "all") {
        criteria = all_criteria();
    } else if (auto s = suite_from_string(o.input)) {
        criteria = suite_criteria(*s);
    } else {
        throw std::invalid_argument("unknown suite \"" + o.input +
                                    "\" (known-families, trends, lemmas, oracle, all)");
    }
    const auto fmt = require_format(o, {"text", "json"}, "text");
    bool passed = true;
    Json results = Json::array();
    std::ostringstream out;
    for (const auto& c : criteria) {
        const auto r = run_criterion(c);
        passed = passed && r.passed;
        results.push_back(to_json(r));
        if (fmt == "text") {
            out << result_line(r) << "\n";
            for (const auto& f : r.findings)
                out << "    finding: " << f << "\n";
        }
    }
    if (fmt == "json")
        out << Json{{"suite", o.input}, {"passed", passed}, {"criteria", results}}.dump(2) << "\n";
    emit(o, out.str(), m);
    return passed ? ok : domain_error;
}

int cmd_ideal(const Options& o) {
    Manifest m("ideal", o);
    const auto g = load_graph(o, m);
    const auto fmt = require_format(o, {"text", "json"}, "text");
    const auto p = edge_ideal(g, budget_of(o));
    emit(o, fmt == "json" ? to_json(p).dump(2) + "\n" : to_text(p), m);
    return ok;
}

// ---------------------------------------------------------------------------
// Error reporting

int report(const Json& err) {
    std::cerr << err.dump() << "\n";
    return domain_error;
}

int run_guarded(const std::function<int()>& command, const std::string& input) {
    try {
        return command();
    } catch (const ValidationError& e) {
        return report({{"error", "ValidationError"},
                       {"code", to_string(e.code())},
                       {"rule", e.rule()},
                       {"subject", e.subject()},
                       {"message", e.what()},
                       {"file", input}});
    } catch (const ParseError& e) {
        return report({{"error", "ParseError"},
                       {"message", e.what()},
                       {"line", e.line()},
                       {"column", e.column()},
                       {"file", input}});
    } catch (const BudgetExceeded& e) {
        std::cerr << Json{{"error", "BudgetExceeded"},
                          {"message", e.what()},
                          {"lower_bound", e.lower_bound()},
                          {"upper_bound", e.upper_bound()}}
                         .dump()
                  << "\n";
        return budget_exhausted;
    } catch (const FileError& e) {
        return report({{"error", "FileError"}, {"message", e.what}, {"file", e.file}});
    } catch (const Error& e) {
        return report({{"error", "DomainError"}, {"message", e.what()}, {"file", input}});
    } catch (const std::invalid_argument& e) {
        return report({{"error", "InvalidArgument"}, {"message", e.what()}});
    } catch (const nlohmann::json::exception& e) {
        return report({{"error", "ParseError"}, {"message", e.what()}, {"file", input}});
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expand classification graphs, compute independence numbers and fit the sequences"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);
    Options o;

    auto n_flag = [&](CLI::App* c) { c->add_option("--n", o.n, "Ground-set size n")->check(CLI::NonNegativeNumber); };
    auto range_flags = [&](CLI::App* c) {
        c->add_option("--n-min", o.n_min, "First n of the scan")->capture_default_str()->check(CLI::NonNegativeNumber);
        c->add_option("--n-max", o.n_max, "Last n of the scan")->capture_default_str()->check(CLI::NonNegativeNumber);
    };
    auto budget_flags = [&](CLI::App* c) {
        c->add_option("--budget-nodes", o.budget_nodes, "Branch-and-bound node limit per instance (0: none)")
            ->capture_default_str();
        c->add_option("--budget-secs", o.budget_secs, "Time limit per instance in seconds (0: none)")
            ->capture_default_str()
            ->check(CLI::NonNegativeNumber);
    };
    auto fit_flags = [&](CLI::App* c) {
        c->add_option("--max-period", o.max_period, "Largest period tried")->capture_default_str()->check(CLI::Range(1, 64));
        c->add_option("--max-degree", o.max_degree, "Largest piece degree tried")->capture_default_str()->check(CLI::Range(0, 16));
    };
    auto common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"csv", "json", "dimacs", "text"}));
        c->add_option("--out", o.out, "Write to this file (and a .manifest.json sidecar)");
    };
    auto file_arg = [&](CLI::App* c, const char* what) {
        c->add_option("file", o.input, what)->required();
    };

    std::function<int()> command;
    auto bind = [&](CLI::App* c, int (*fn)(const Options&)) {
        c->callback([&, fn] { command = [&, fn] { return fn(o); }; });
    };

    auto* validate = app.add_subcommand("validate", "Check a classification graph document");
    file_arg(validate, "Classification graph JSON ('-' for stdin)");
    common(validate);
    bind(validate, cmd_validate);

    auto* expand_cmd = app.add_subcommand("expand", "Expand a classification graph at n");
    file_arg(expand_cmd, "Classification graph JSON");
    n_flag(expand_cmd);
    common(expand_cmd);
    bind(expand_cmd, cmd_expand);

    auto* alpha = app.add_subcommand("alpha", "Exact independence number");
    file_arg(alpha, "Classification graph JSON (with --n), graph JSON or DIMACS file");
    n_flag(alpha);
    budget_flags(alpha);
    common(alpha);
    bind(alpha, cmd_alpha);

    auto* scan = app.add_subcommand("scan", "Independence numbers over a range of n");
    file_arg(scan, "Classification graph JSON");
    range_flags(scan);
    budget_flags(scan);
    common(scan);
    bind(scan, cmd_scan);

    auto* fit = app.add_subcommand("fit", "Fit a quasi-polynomial and a linear recurrence to a scan");
    file_arg(fit, "Scan output (CSV or JSON)");
    fit_flags(fit);
    common(fit);
    bind(fit, cmd_fit);

    auto* sweep = app.add_subcommand("random-sweep", "Scan, fit and check trends on random classification graphs");
    sweep->add_option("params", o.input, "Generator parameters JSON (optional)");
    sweep->add_option("--seed", o.seed, "Master seed")->capture_default_str();
    sweep->add_option("--count", o.count, "Number of instances")->capture_default_str()->check(CLI::NonNegativeNumber);
    range_flags(sweep);
    fit_flags(sweep);
    budget_flags(sweep);
    common(sweep);
    bind(sweep, cmd_random_sweep);

    auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
    verify->add_option("suite", o.input, "known-families, trends, lemmas, oracle or all")->required();
    common(verify);
    bind(verify, cmd_verify);

    auto* ideal = app.add_subcommand("ideal", "Edge ideal presentation and Krull dimension");
    file_arg(ideal, "Classification graph JSON (with --n), graph JSON or DIMACS file");
    n_flag(ideal);
    budget_flags(ideal);
    common(ideal);
    bind(ideal, cmd_ideal);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        return report({{"error", "UsageError"}, {"message", e.what()}});
    }
    if (o.n_min > o.n_max)
        return report({{"error", "UsageError"}, {"message", "--n-min must not exceed --n-max"}});
    return run_guarded(command, o.input);
}
