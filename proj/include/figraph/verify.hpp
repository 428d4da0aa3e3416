#pragma once

// The acceptance criteria as runnable checks, grouped into the suites the CLI
// exposes (known-families, trends, lemmas, oracle). Every check uses pinned
// seeds and parameters, so a run is reproducible bit for bit.

#include "figraph/analysis.hpp"
#include "figraph/expand.hpp"
#include "figraph/ideals.hpp"
#include "figraph/model.hpp"
#include "figraph/solver.hpp"
#include "figraph/util.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace figraph {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    std::vector<std::string> findings; ///< reported observations that do not fail the check
    std::chrono::milliseconds elapsed{0};
    std::chrono::milliseconds time_limit{0};
};

enum class Suite { known_families, trends, lemmas, oracle };

inline const char* to_string(Suite s) {
    switch (s) {
    case Suite::known_families: return "known-families";
    case Suite::trends: return "trends";
    case Suite::lemmas: return "lemmas";
    case Suite::oracle: return "oracle";
    }
    return "?";
}

inline std::optional<Suite> suite_from_string(std::string_view s) {
    for (Suite x : {Suite::known_families, Suite::trends, Suite::lemmas, Suite::oracle})
        if (s == to_string(x))
            return x;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Structural checks shared with the unit tests

/// Every edge {u, v} of g maps to an edge {sigma u, sigma v}, and the vertex
/// map is a bijection.
inline bool is_equivariant(const ConcreteGraph& g, std::span<const int> sigma) {
    const auto image = apply_permutation(g, sigma);
    std::vector<bool> hit(g.size(), false);
    for (auto v : image) {
        if (hit[v])
            return false;
        hit[v] = true;
    }
    for (auto [u, v] : g.edges())
        if (!g.adjacent(image[u], image[v]))
            return false;
    return true;
}

/// expand(c, n) is the subgraph of expand(c, n+1) induced on the image of the
/// inclusion map, with matching labels.
inline bool is_induced_inclusion(const ClassificationGraph& c, int n) {
    const ConcreteGraph small = expand(c, n);
    const ConcreteGraph large = expand(c, n + 1);
    const auto map = inclusion_map(c, n);
    if (map.size() != small.size())
        return false;
    const ConcreteGraph restricted = induced_subgraph(large, map);
    return restricted.vertices() == small.vertices() && restricted.edges() == small.edges();
}

// ---------------------------------------------------------------------------
// Criteria

namespace detail {

class Timer {
public:
    std::chrono::milliseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_);
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string values_text(const AlphaSequence& seq) {
    std::string out;
    for (const auto& r : seq.rows)
        out += (out.empty() ? "" : ",") + std::to_string(r.alpha);
    return out;
}

/// Compares a scan against expected(n); returns an empty string on success.
inline std::string match_scan(const AlphaSequence& seq,
                              const std::function<std::int64_t(int)>& expected) {
    for (const auto& r : seq.rows) {
        if (!r.complete())
            return "n=" + std::to_string(r.n) + ": search budget exceeded";
        if (r.alpha != expected(r.n))
            return "n=" + std::to_string(r.n) + ": alpha " + std::to_string(r.alpha) +
                   ", expected " + std::to_string(expected(r.n));
    }
    return {};
}

inline CriterionResult finish(CriterionResult r, const Timer& t) {
    r.elapsed = t.elapsed();
    if (r.passed && r.elapsed > r.time_limit) {
        r.passed = false;
        r.detail += "; exceeded time limit of " + std::to_string(r.time_limit.count() / 1000) + " s";
    }
    return r;
}

inline ScanOptions exact_scan() {
    ScanOptions o;
    o.budget = Budget::standard();
    return o;
}

/// Random graph drawn for instance i of a seeded batch: size in [1, max_size],
/// density in [0.1, 0.9].
inline ConcreteGraph batch_graph(std::uint64_t master, int i, std::size_t max_size) {
    PortableRng rng(splitmix64(master + static_cast<std::uint64_t>(i)));
    const auto size = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_size)));
    const double density = 0.1 + 0.8 * rng.unit();
    return random_graph(size, density, rng);
}

} // namespace detail

inline CriterionResult criterion_kneser2() {
    detail::Timer t;
    CriterionResult r{.id = 1, .name = "Kneser2 scan n=4..12 gives alpha = n-1",
                      .time_limit = std::chrono::minutes(2)};
    const auto seq = scan_alpha(family(FamilyName::kneser2), 4, 12, detail::exact_scan());
    const auto err = detail::match_scan(seq, [](int n) { return n - 1; });
    r.passed = err.empty();
    r.detail = r.passed ? "alpha = " + detail::values_text(seq) : err;
    return detail::finish(std::move(r), t);
}

inline CriterionResult criterion_johnson2() {
    detail::Timer t;
    CriterionResult r{.id = 2,
                      .name = "Johnson2 scan n=2..13: floor(n/2), period-2 fit, order-3 recurrence",
                      .time_limit = std::chrono::minutes(2)};
    const auto seq = scan_alpha(family(FamilyName::johnson2), 2, 13, detail::exact_scan());
    if (auto err = detail::match_scan(seq, [](int n) { return n / 2; }); !err.empty()) {
        r.detail = err;
        return detail::finish(std::move(r), t);
    }
    const auto fit = fit_quasi_polynomial(seq);
    const auto rec = detect_recurrence(seq);
    const Polynomial want{Rational(1), Rational(-1), Rational(-1), Rational(1)};
    std::ostringstream d;
    d << "fit: " << (fit ? "period " + std::to_string(fit->period) + ", degree " +
                               std::to_string(fit->degree)
                         : std::string("none"))
      << "; recurrence: "
      << (rec ? "order " + std::to_string(rec->order) + ", denominator " +
                    rec->denominator().to_string("t")
              : std::string("none"));
    r.detail = d.str();
    r.passed = fit && fit->period == 2 && fit->degree == 1 && rec && rec->order == 3 &&
               rec->denominator() == want;
    return detail::finish(std::move(r), t);
}

inline CriterionResult criterion_edge_ideal() {
    detail::Timer t;
    CriterionResult r{.id = 3, .name = "Krull dimension of R/I_G equals alpha (102 graphs)",
                      .time_limit = std::chrono::minutes(3)};
    std::vector<std::pair<std::string, ConcreteGraph>> graphs;
    std::vector<std::pair<std::size_t, std::size_t>> k5;
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b)
            k5.emplace_back(a, b);
    graphs.emplace_back("K5", make_graph(5, k5));
    graphs.emplace_back("Kneser2 n=4", expand(family(FamilyName::kneser2), 4));
    for (int i = 0; i < 100; ++i)
        graphs.emplace_back("random #" + std::to_string(i), detail::batch_graph(3, i, 20));

    int mismatches = 0;
    std::string first;
    for (const auto& [name, g] : graphs) {
        const auto dim = krull_dimension(g);
        const int alpha = max_independent_set(g, Budget::standard()).alpha;
        if (dim.source != KrullSource::cover_search || dim.value != alpha) {
            if (mismatches++ == 0)
                first = name + ": dim " + std::to_string(dim.value) + ", alpha " +
                        std::to_string(alpha);
        }
    }
    const int k5_dim = krull_dimension(graphs[0].second).value;
    const int kg_dim = krull_dimension(graphs[1].second).value;
    r.passed = mismatches == 0 && k5_dim == 1 && kg_dim == 3;
    r.detail = std::to_string(mismatches) + " mismatches; K5 -> " + std::to_string(k5_dim) +
               ", KG(4,2) -> " + std::to_string(kg_dim) + (first.empty() ? "" : "; first: " + first);
    return detail::finish(std::move(r), t);
}

inline CriterionResult criterion_solver_oracle() {
    detail::Timer t;
    CriterionResult r{.id = 4, .name = "branch-and-bound alpha equals brute force (200 graphs)",
                      .time_limit = std::chrono::minutes(5)};
    int mismatches = 0;
    std::string first;
    for (int i = 0; i < 200; ++i) {
        const auto g = detail::batch_graph(4, i, 22);
        const auto mis = max_independent_set(g, Budget::standard());
        const int brute = alpha_bruteforce(g);
        const bool ok = mis.alpha == brute && is_independent(g, mis.witness) &&
                        static_cast<int>(mis.witness.size()) == mis.alpha;
        if (!ok && mismatches++ == 0)
            first = "graph #" + std::to_string(i) + ": solver " + std::to_string(mis.alpha) +
                    ", brute force " + std::to_string(brute);
    }
    r.passed = mismatches == 0;
    r.detail = std::to_string(mismatches) + " mismatches" + (first.empty() ? "" : "; first: " + first);
    return detail::finish(std::move(r), t);
}

inline CriterionResult criterion_kneser_union() {
    detail::Timer t;
    CriterionResult r{.id = 5, .name = "Kneser unions k in {2,3}, r = 3, n in {6,7}: alpha = C(n-1,2)",
                      .time_limit = std::chrono::minutes(10)};
    r.passed = true;
    std::ostringstream d;
    for (int k : {2, 3})
        for (int n : {6, 7}) {
            const auto g = build_kneser_union(k, 3, n);
            const std::int64_t want = binomial64(n - 1, 2);
            d << (d.tellp() > 0 ? "; " : "") << "k=" << k << " n=" << n << " (" << g.size()
              << " vertices): ";
            try {
                const int alpha = max_independent_set(g, Budget::standard()).alpha;
                d << alpha;
                if (alpha != want || kneser_union_alpha_formula(k, 3, n) != want) {
                    r.passed = false;
                    d << " expected " << want;
                }
            } catch (const BudgetExceeded& e) {
                r.passed = false;
                d << "budget exceeded";
            }
        }
    r.detail = d.str();
    return detail::finish(std::move(r), t);
}

inline CriterionResult criterion_stable_degree_examples() {
    detail::Timer t;
    CriterionResult r{.id = 6, .name = "stable-degree examples: singletons, copies of K_n, copies of Kneser2",
                      .time_limit = std::chrono::minutes(5)};
    struct Case {
        const char* name;
        ClassificationGraph c;
        int n_min, n_max;
        std::function<std::int64_t(int)> expected;
    };
    const std::vector<Case> cases = {
        {"SingletonsVsOrbit(5)", family(FamilyName::singletons_vs_orbit, {.k = 5}), 2, 9,
         [](int n) { return std::max(5, n); }},
        {"CopiesOfComplete(4)", family(FamilyName::copies_of_complete, {.k = 4}), 2, 9,
         [](int n) { return std::min(n, 4); }},
        {"CopiesOfKneser2(2)", family(FamilyName::copies_of_kneser2, {.k = 2}), 2, 10,
         [](int n) { return (n <= 6 && n % 3 == 0) ? n : n - 1; }},
    };
    r.passed = true;
    for (const auto& c : cases) {
        const auto seq = scan_alpha(c.c, c.n_min, c.n_max, detail::exact_scan());
        const auto err = detail::match_scan(seq, c.expected);
        r.detail += (r.detail.empty() ? "" : "; ") + std::string(c.name) + ": " +
                    (err.empty() ? detail::values_text(seq) : err);
        r.passed = r.passed && err.empty();
    }
    return detail::finish(std::move(r), t);
}

/// Sweep parameters of the vertex-linear trend check.
inline RandomGenParams vertex_linear_sweep_params() {
    RandomGenParams p;
    p.pair = {0, 0};
    p.linear = {1, 3};
    p.singleton = {0, 2};
    p.p = 0.5;
    return p;
}

/// Sweep parameters of the unordered-pair trend check.
inline RandomGenParams pair_sweep_params() {
    RandomGenParams p;
    p.pair = {1, 2};
    p.linear = {0, 1};
    p.singleton = {0, 1};
    p.p = 0.5;
    return p;
}

struct SweepEntry {
    int index = 0;
    ClassificationGraph c;
    AlphaSequence seq;
    std::optional<QuasiPolynomialFit> fit;
    std::optional<TrendReport> trends;
    std::string error; ///< fit or scan failure, empty when the fit succeeded
};

/// Instance i uses seed splitmix64(master + i). Fit failures are recorded in
/// the entry, not thrown.
inline std::vector<SweepEntry> random_sweep(RandomGenParams params, std::uint64_t master,
                                            int count, int n_min, int n_max,
                                            const ScanOptions& options = {}, int max_period = 4,
                                            int max_degree = 3) {
    std::vector<SweepEntry> out;
    for (int i = 0; i < count; ++i) {
        SweepEntry e;
        e.index = i;
        params.seed = splitmix64(master + static_cast<std::uint64_t>(i));
        e.c = random_classification(params);
        e.seq = scan_alpha(e.c, n_min, n_max, options);
        try {
            e.fit = fit_quasi_polynomial(e.seq, max_period, max_degree);
            if (e.fit)
                e.trends = check_trends(e.c, *e.fit);
            else
                e.error = "no quasi-polynomial fit";
        } catch (const Error& ex) {
            e.error = ex.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

inline CriterionResult criterion_vertex_linear() {
    detail::Timer t;
    CriterionResult r{.id = 7, .name = "30 random vertex-linear graphs: period 1, degree <= 1, stable degree <= 10",
                      .time_limit = std::chrono::minutes(10)};
    const auto sweep = random_sweep(vertex_linear_sweep_params(), 7, 30, 2, 14, detail::exact_scan());
    int bad = 0;
    std::int64_t worst = 0;
    std::string first;
    for (const auto& e : sweep) {
        const bool ok = e.fit && e.fit->period == 1 && e.fit->degree <= 1 && e.fit->stable_degree <= 10;
        if (e.fit)
            worst = std::max(worst, e.fit->stable_degree);
        if (!ok && bad++ == 0)
            first = "instance " + std::to_string(e.index) + " [" + detail::values_text(e.seq) + "]: " +
                    (e.fit ? "period " + std::to_string(e.fit->period) + ", degree " +
                                 std::to_string(e.fit->degree) + ", stable degree " +
                                 std::to_string(e.fit->stable_degree)
                           : e.error);
    }
    r.passed = bad == 0;
    r.detail = std::to_string(bad) + " failures; largest stable degree " + std::to_string(worst) +
               (first.empty() ? "" : "; first: " + first);
    return detail::finish(std::move(r), t);
}

inline CriterionResult criterion_pair_trends() {
    detail::Timer t;
    CriterionResult r{.id = 8, .name = "50 random unordered-pair graphs: trend reproduction",
                      .time_limit = std::chrono::minutes(30)};
    const auto sweep = random_sweep(pair_sweep_params(), 8, 50, 2, 11, detail::exact_scan());
    int fit_errors = 0, v1 = 0, v2 = 0, v2_strict = 0, v3 = 0;
    for (const auto& e : sweep) {
        const std::string tag = "instance " + std::to_string(e.index) + " [" +
                                detail::values_text(e.seq) + "]: ";
        if (!e.trends) {
            ++fit_errors;
            r.findings.push_back(tag + "fit error: " + e.error);
            continue;
        }
        const auto& tr = *e.trends;
        auto note = [&](const TrendVerdict& v, const char* which, int& counter) {
            if (v.holds)
                return;
            ++counter;
            r.findings.push_back(tag + which + " VIOLATED (" + v.detail + ")");
        };
        note(tr.bounded, "trend 1", v1);
        note(tr.polynomial, "trend 2", v2);
        note(tr.polynomial_strict, "trend 2 (isolated reading)", v2_strict);
        note(tr.quadratic, "trend 3", v3);
    }
    r.passed = fit_errors == 0;
    r.detail = std::to_string(fit_errors) + " fit errors; violations: trend1 " + std::to_string(v1) +
               ", trend2 " + std::to_string(v2) + " (isolated reading " + std::to_string(v2_strict) +
               "), trend3 " + std::to_string(v3);
    return detail::finish(std::move(r), t);
}

inline CriterionResult criterion_lemmas() {
    detail::Timer t;
    CriterionResult r{.id = 9, .name = "binomial inequalities (r <= 10, bound 60) and partition bound (r <= 3, m <= 8)",
                      .time_limit = std::chrono::minutes(1)};
    const auto rep = verify_binomial_lemmas(10, 60);
    int mismatches = 0;
    std::string first;
    for (int rr = 1; rr <= 3; ++rr)
        for (int m = 0; m <= 8; ++m) {
            // A single Kneser orbit on an m-set is build_kneser_union(1, r, m).
            const auto g = build_kneser_union(1, rr, m);
            const int alpha = g.size() <= exhaustive_limit
                                  ? alpha_bruteforce(g)
                                  : max_independent_set(g, Budget::standard()).alpha;
            if (alpha != partition_alpha_bound(rr, m) && mismatches++ == 0)
                first = "r=" + std::to_string(rr) + " m=" + std::to_string(m);
        }
    r.passed = rep.ok() && mismatches == 0;
    r.detail = std::to_string(rep.violations.size()) + " inequality violations in " +
               std::to_string(rep.checks_small_plus_large + rep.checks_doubling +
                              rep.checks_large_pair) +
               " checks; " + std::to_string(mismatches) + " partition-bound mismatches" +
               (first.empty() ? "" : " (first " + first + ")") +
               (rep.ok() ? "" : "; first violation: " + rep.violations.front());
    return detail::finish(std::move(r), t);
}

inline CriterionResult criterion_structure() {
    detail::Timer t;
    CriterionResult r{.id = 10, .name = "expansion equivariance, induced inclusions and vertex counts (50 triples)",
                      .time_limit = std::chrono::minutes(1)};
    int failures = 0;
    std::string first;
    for (int i = 0; i < 50; ++i) {
        PortableRng rng(splitmix64(10 + static_cast<std::uint64_t>(i)));
        RandomGenParams params;
        params.seed = rng.next();
        const auto c = random_classification(params);
        const int n = static_cast<int>(rng.uniform(0, 8));
        const auto sigma = random_permutation(n, rng);
        const auto g = expand(c, n);
        std::string why;
        if (!is_equivariant(g, sigma))
            why = "equivariance";
        else if (!is_induced_inclusion(c, n))
            why = "induced inclusion";
        const auto poly = vertex_count_poly(c);
        for (int m = 0; m <= 12 && why.empty(); ++m)
            if (poly(m) != Rational(static_cast<std::int64_t>(expand(c, m).size())))
                why = "vertex count at n=" + std::to_string(m);
        if (!why.empty() && failures++ == 0)
            first = "triple #" + std::to_string(i) + " (n=" + std::to_string(n) + "): " + why;
    }
    r.passed = failures == 0;
    r.detail = std::to_string(failures) + " failing triples" + (first.empty() ? "" : "; first: " + first);
    return detail::finish(std::move(r), t);
}

struct Criterion {
    int id;
    std::function<CriterionResult()> run;
};

/// All criteria in numeric order.
inline std::vector<Criterion> all_criteria() {
    return {{1, criterion_kneser2},        {2, criterion_johnson2},
            {3, criterion_edge_ideal},     {4, criterion_solver_oracle},
            {5, criterion_kneser_union},   {6, criterion_stable_degree_examples},
            {7, criterion_vertex_linear},  {8, criterion_pair_trends},
            {9, criterion_lemmas},         {10, criterion_structure}};
}

inline std::vector<int> suite_ids(Suite s) {
    switch (s) {
    case Suite::known_families: return {1, 2, 5, 6};
    case Suite::trends: return {7, 8};
    case Suite::lemmas: return {9};
    case Suite::oracle: return {3, 4, 10};
    }
    return {};
}

inline std::vector<Criterion> suite_criteria(Suite s) {
    std::vector<Criterion> out;
    for (int id : suite_ids(s))
        out.push_back(all_criteria().at(static_cast<std::size_t>(id - 1)));
    return out;
}

/// Runs a criterion, turning an unexpected exception into a failure.
inline CriterionResult run_criterion(const Criterion& c) {
    try {
        return c.run();
    } catch (const std::exception& e) {
        CriterionResult r;
        r.id = c.id;
        r.name = "criterion raised an exception";
        r.detail = e.what();
        return r;
    }
}

/// One line per criterion: "PASS [1] name (12 ms): detail".
inline std::string result_line(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " ("
        << r.elapsed.count() << " ms): " << r.detail;
    return out.str();
}

inline nlohmann::ordered_json to_json(const CriterionResult& r) {
    return {{"criterion", r.id},
            {"name", r.name},
            {"passed", r.passed},
            {"detail", r.detail},
            {"findings", r.findings},
            {"elapsed_ms", r.elapsed.count()}};
}

} // namespace figraph
