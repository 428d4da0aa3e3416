#pragma once

// Exact maximum independent sets, minimum vertex covers and alpha scans.

#include "figraph/error.hpp"
#include "figraph/expand.hpp"
#include "figraph/model.hpp"
#include "figraph/util.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace figraph {

/// Search limits. Zero means unlimited.
struct Budget {
    std::uint64_t max_nodes = 0;
    std::chrono::milliseconds max_time{0};

    static Budget unlimited() { return {}; }
    /// CLI default: 10^7 branch-and-bound nodes or 60 s per instance.
    static Budget standard() { return {10'000'000, std::chrono::seconds(60)}; }
};

struct MisResult {
    int alpha = 0;
    std::vector<std::size_t> witness; ///< ascending vertex indices
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct VertexCover {
    int size = 0;
    std::vector<std::size_t> witness; ///< ascending vertex indices
};

inline bool is_independent(const ConcreteGraph& g, const std::vector<std::size_t>& set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] >= g.size())
            return false;
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j] || g.adjacent(set[i], set[j]))
                return false;
    }
    return true;
}

inline bool is_vertex_cover(const ConcreteGraph& g, const std::vector<std::size_t>& set) {
    std::vector<bool> in(g.size(), false);
    for (auto v : set) {
        if (v >= g.size())
            return false;
        in[v] = true;
    }
    for (auto [a, b] : g.edges())
        if (!in[a] && !in[b])
            return false;
    return true;
}

namespace detail {

/// Branch and bound over bitset vertex sets. At every node: take isolated
/// vertices and leaves, bound by a greedy clique cover of what remains, then
/// branch on a vertex of maximum remaining degree (lowest index on ties),
/// first taking it, then discarding it.
class MisSearch {
public:
    MisSearch(const ConcreteGraph& g, const Budget& budget)
        : size_(g.size()), words_((g.size() + 63) / 64), rows_(size_ * words_, 0),
          budget_(budget), start_(std::chrono::steady_clock::now()) {
        for (std::size_t v = 0; v < size_; ++v)
            for (auto u : g.neighbors(v))
                rows_[v * words_ + u / 64] |= bit(u);
    }

    MisResult run() {
        Set all(words_, 0);
        for (std::size_t v = 0; v < size_; ++v)
            all[v / 64] |= bit(v);

        greedy_lower_bound(all);
        {
            // Root bound, reported if the budget runs out.
            Set p = all;
            std::vector<std::size_t> taken;
            reduce(p, taken);
            root_upper_ = static_cast<int>(taken.size()) + clique_cover_size(p);
        }
        try {
            search(all);
        } catch (const Abort&) {
            throw BudgetExceeded(static_cast<int>(best_.size()), root_upper_, sorted(best_),
                                 nodes_, elapsed());
        }
        return MisResult{static_cast<int>(best_.size()), sorted(best_), nodes_, elapsed()};
    }

private:
    using Set = std::vector<std::uint64_t>;
    struct Abort {};

    static std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << (v % 64); }
    bool has(const Set& s, std::size_t v) const { return (s[v / 64] >> (v % 64)) & 1U; }
    const std::uint64_t* row(std::size_t v) const { return rows_.data() + v * words_; }

    int degree_in(std::size_t v, const Set& p) const {
        const auto* r = row(v);
        int d = 0;
        for (std::size_t w = 0; w < words_; ++w)
            d += std::popcount(r[w] & p[w]);
        return d;
    }

    static bool empty(const Set& s) {
        return std::all_of(s.begin(), s.end(), [](std::uint64_t w) { return w == 0; });
    }

    template <typename F>
    void for_each(const Set& s, F&& f) const {
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = s[w];
            while (bits) {
                const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                f(v);
            }
        }
    }

    std::chrono::nanoseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - start_);
    }

    void tick() {
        ++nodes_;
        if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes)
            throw Abort{};
        if (budget_.max_time.count() != 0 && (nodes_ & 1023U) == 0 &&
            elapsed() > budget_.max_time)
            throw Abort{};
    }

    static std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
        std::sort(v.begin(), v.end());
        return v;
    }

    /// Takes degree-0 and degree-1 vertices until none remain. Both are
    /// contained in some maximum independent set of the remaining graph.
    void reduce(Set& p, std::vector<std::size_t>& taken) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t w = 0; w < words_; ++w) {
                std::uint64_t bits = p[w];
                while (bits) {
                    const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                    if (!has(p, v))
                        continue;
                    const int d = degree_in(v, p);
                    if (d > 1)
                        continue;
                    taken.push_back(v);
                    p[v / 64] &= ~bit(v);
                    if (d == 1) {
                        const auto* r = row(v);
                        for (std::size_t x = 0; x < words_; ++x)
                            p[x] &= ~r[x];
                    }
                    changed = true;
                }
            }
        }
    }

    /// Greedy partition of p into cliques; its size bounds alpha(G[p]).
    int clique_cover_size(const Set& p) const {
        // cliques_[i] holds the vertices of p adjacent to every member of clique i.
        std::vector<Set>& commons = scratch_cover_;
        std::size_t count = 0;
        for_each(p, [&](std::size_t v) {
            for (std::size_t i = 0; i < count; ++i) {
                if (has(commons[i], v)) {
                    const auto* r = row(v);
                    for (std::size_t w = 0; w < words_; ++w)
                        commons[i][w] &= r[w];
                    return;
                }
            }
            if (commons.size() <= count)
                commons.emplace_back(words_, 0);
            const auto* r = row(v);
            for (std::size_t w = 0; w < words_; ++w)
                commons[count][w] = r[w] & p[w];
            ++count;
        });
        return static_cast<int>(count);
    }

    void greedy_lower_bound(Set p) {
        std::vector<std::size_t> chosen;
        while (!empty(p)) {
            std::size_t pick = size_;
            int pick_degree = 0;
            for_each(p, [&](std::size_t v) {
                const int d = degree_in(v, p);
                if (pick == size_ || d < pick_degree) {
                    pick = v;
                    pick_degree = d;
                }
            });
            chosen.push_back(pick);
            p[pick / 64] &= ~bit(pick);
            const auto* r = row(pick);
            for (std::size_t w = 0; w < words_; ++w)
                p[w] &= ~r[w];
        }
        if (chosen.size() > best_.size())
            best_ = chosen;
    }

    void search(Set p) {
        tick();
        const std::size_t mark = current_.size();
        reduce(p, current_);

        if (empty(p)) {
            if (current_.size() > best_.size())
                best_ = current_;
            current_.resize(mark);
            return;
        }
        if (static_cast<int>(current_.size()) + clique_cover_size(p) <=
            static_cast<int>(best_.size())) {
            current_.resize(mark);
            return;
        }

        std::size_t branch = size_;
        int branch_degree = -1;
        for_each(p, [&](std::size_t v) {
            const int d = degree_in(v, p);
            if (d > branch_degree) {
                branch = v;
                branch_degree = d;
            }
        });

        Set with = p;
        with[branch / 64] &= ~bit(branch);
        const auto* r = row(branch);
        for (std::size_t w = 0; w < words_; ++w)
            with[w] &= ~r[w];
        current_.push_back(branch);
        search(std::move(with));
        current_.pop_back();

        p[branch / 64] &= ~bit(branch);
        search(std::move(p));

        current_.resize(mark);
    }

    std::size_t size_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    int root_upper_ = 0;
    std::vector<std::size_t> best_;
    std::vector<std::size_t> current_;
    mutable std::vector<Set> scratch_cover_;
};

} // namespace detail

namespace detail {

/// Connected components, each an ascending vertex list, ordered by their
/// smallest vertex.
inline std::vector<std::vector<std::size_t>> components(const ConcreteGraph& g) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(g.size(), false);
    for (std::size_t root = 0; root < g.size(); ++root) {
        if (seen[root])
            continue;
        std::vector<std::size_t> comp{root};
        seen[root] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (auto u : g.neighbors(comp[i]))
                if (!seen[u]) {
                    seen[u] = true;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace detail

/// Exact independence number with a witness. Connected components are solved
/// one after another under a shared budget. Deterministic: identical input
/// gives identical witness and node count. Throws BudgetExceeded.
inline MisResult max_independent_set(const ConcreteGraph& g, const Budget& budget = {}) {
    const auto comps = detail::components(g);
    if (comps.size() <= 1)
        return detail::MisSearch(g, budget).run();

    const auto start = std::chrono::steady_clock::now();
    MisResult total;
    int upper_rest = 0; // trivial bound for components not yet solved
    for (const auto& comp : comps)
        upper_rest += static_cast<int>(comp.size());
    for (const auto& comp : comps) {
        upper_rest -= static_cast<int>(comp.size());
        Budget left = budget;
        if (budget.max_nodes != 0)
            left.max_nodes = budget.max_nodes > total.nodes_explored
                                 ? budget.max_nodes - total.nodes_explored
                                 : 1;
        if (budget.max_time.count() != 0) {
            const auto used = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start);
            left.max_time = std::max(std::chrono::milliseconds(1), budget.max_time - used);
        }
        try {
            const auto r = detail::MisSearch(induced_subgraph(g, comp), left).run();
            total.alpha += r.alpha;
            total.nodes_explored += r.nodes_explored;
            for (auto v : r.witness)
                total.witness.push_back(comp[v]);
        } catch (const BudgetExceeded& e) {
            std::vector<std::size_t> witness = total.witness;
            for (auto v : e.best_witness())
                witness.push_back(comp[v]);
            std::sort(witness.begin(), witness.end());
            throw BudgetExceeded(total.alpha + e.lower_bound(),
                                 total.alpha + e.upper_bound() + upper_rest, std::move(witness),
                                 total.nodes_explored + e.nodes_explored(),
                                 std::chrono::steady_clock::now() - start);
        }
    }
    std::sort(total.witness.begin(), total.witness.end());
    total.elapsed = std::chrono::steady_clock::now() - start;
    return total;
}

inline constexpr std::size_t exhaustive_limit = 25;

/// Independence number by plain exhaustive recursion over vertices in index
/// order (take or skip), without bounds. Throws TooLarge above 25 vertices.
inline int alpha_bruteforce(const ConcreteGraph& g) {
    if (g.size() > exhaustive_limit)
        throw TooLarge("alpha_bruteforce accepts at most 25 vertices, got " +
                       std::to_string(g.size()));
    const std::size_t size = g.size();
    std::vector<std::uint32_t> closed(size);
    for (std::size_t v = 0; v < size; ++v) {
        closed[v] = std::uint32_t{1} << v;
        for (auto u : g.neighbors(v))
            closed[v] |= std::uint32_t{1} << u;
    }
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t allowed) -> int {
        if (i == size)
            return 0;
        if (!((allowed >> i) & 1U))
            return self(self, i + 1, allowed);
        const int skip = self(self, i + 1, allowed & ~(std::uint32_t{1} << i));
        const int take = 1 + self(self, i + 1, allowed & ~closed[i]);
        return std::max(skip, take);
    };
    return rec(rec, 0, (std::uint32_t{1} << size) - 1);
}

/// Minimum vertex cover. Up to 25 vertices it runs its own search (branch on
/// the first uncovered edge: one endpoint or the other), so it can check the
/// MIS solver; above that it complements a maximum independent set.
inline VertexCover min_vertex_cover(const ConcreteGraph& g, const Budget& budget = {}) {
    const std::size_t size = g.size();
    if (size > exhaustive_limit) {
        auto mis = max_independent_set(g, budget);
        VertexCover cover;
        std::vector<bool> in_mis(size, false);
        for (auto v : mis.witness)
            in_mis[v] = true;
        for (std::size_t v = 0; v < size; ++v)
            if (!in_mis[v])
                cover.witness.push_back(v);
        cover.size = static_cast<int>(cover.witness.size());
        return cover;
    }

    const auto edges = g.edges();
    std::uint32_t best = size == 0 ? 0 : (size == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << size) - 1);
    int best_size = static_cast<int>(size);
    std::function<void(std::uint32_t, int)> rec = [&](std::uint32_t cover, int count) {
        if (count >= best_size)
            return;
        for (auto [a, b] : edges) {
            if (((cover >> a) & 1U) || ((cover >> b) & 1U))
                continue;
            rec(cover | (std::uint32_t{1} << a), count + 1);
            rec(cover | (std::uint32_t{1} << b), count + 1);
            return;
        }
        best = cover;
        best_size = count;
    };
    rec(0, 0);

    VertexCover out;
    out.size = best_size;
    for (std::size_t v = 0; v < size; ++v)
        if ((best >> v) & 1U)
            out.witness.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// Alpha scans

enum class RowStatus { optimal, budget_exceeded };

inline const char* to_string(RowStatus s) {
    return s == RowStatus::optimal ? "optimal" : "budget_exceeded";
}

struct AlphaRow {
    int n = 0;
    int alpha = 0;       ///< exact value, or the best lower bound when incomplete
    int upper_bound = 0; ///< equals alpha when optimal
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::uint64_t nodes_explored = 0;
    std::int64_t millis = 0;
    RowStatus status = RowStatus::optimal;
    std::string witness_digest;
    std::vector<std::string> witness; ///< vertex labels, filled when requested

    bool complete() const { return status == RowStatus::optimal; }
};

struct AlphaSequence {
    std::string digest; ///< digest of the generating classification graph
    std::vector<AlphaRow> rows;

    bool complete() const {
        return std::all_of(rows.begin(), rows.end(), [](const AlphaRow& r) { return r.complete(); });
    }
};

/// "P:1,2" style text for a vertex.
inline std::string vertex_text(const ConcreteGraph& g, std::size_t v) {
    return g.label(v).orbit + ":" + payload_text(g.label(v).payload);
}

inline std::string witness_digest(const std::vector<std::size_t>& witness) {
    Digest d;
    for (auto v : witness)
        d.update(static_cast<std::uint64_t>(v));
    return d.hex();
}

/// Worker count: FIGRAPH_THREADS if set and positive, else the hardware
/// concurrency; never more than `jobs`.
inline unsigned default_threads(std::size_t jobs) {
    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FIGRAPH_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            threads = static_cast<unsigned>(v);
    }
    return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, jobs)));
}

struct ScanOptions {
    Budget budget = Budget::standard();
    unsigned threads = 0; ///< 0: default_threads()
    bool keep_witness = false;
    /// Throw InvariantViolation if complete rows decrease in alpha.
    bool check_monotone = true;
};

/// Solves make(n) for every n in [n_min, n_max]. Rows may be solved
/// concurrently but are returned in n order.
inline AlphaSequence scan_graphs(const std::function<ConcreteGraph(int)>& make, int n_min,
                                 int n_max, const ScanOptions& options = {},
                                 std::string digest = {}) {
    if (n_min < 0 || n_max < n_min)
        throw std::invalid_argument("scan: need 0 <= n_min <= n_max");
    const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
    AlphaSequence seq;
    seq.digest = std::move(digest);
    seq.rows.resize(count);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                const int n = n_min + static_cast<int>(i);
                const ConcreteGraph g = make(n);
                AlphaRow row;
                row.n = n;
                row.vertices = g.size();
                row.edges = g.edge_count();
                std::vector<std::size_t> witness;
                try {
                    auto result = max_independent_set(g, options.budget);
                    row.alpha = row.upper_bound = result.alpha;
                    row.nodes_explored = result.nodes_explored;
                    row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                     result.elapsed)
                                     .count();
                    witness = std::move(result.witness);
                } catch (const BudgetExceeded& e) {
                    row.status = RowStatus::budget_exceeded;
                    row.alpha = e.lower_bound();
                    row.upper_bound = e.upper_bound();
                    row.nodes_explored = e.nodes_explored();
                    row.millis =
                        std::chrono::duration_cast<std::chrono::milliseconds>(e.elapsed()).count();
                    witness = e.best_witness();
                }
                row.witness_digest = witness_digest(witness);
                if (options.keep_witness)
                    for (auto v : witness)
                        row.witness.push_back(vertex_text(g, v));
                seq.rows[i] = std::move(row);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
            }
        }
    };

    const unsigned threads = options.threads ? options.threads : default_threads(count);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    if (options.check_monotone) {
        const AlphaRow* prev = nullptr;
        for (const AlphaRow& row : seq.rows) {
            if (!row.complete())
                continue;
            if (prev && row.alpha < prev->alpha)
                throw InvariantViolation("alpha decreased from " + std::to_string(prev->alpha) +
                                         " at n=" + std::to_string(prev->n) + " to " +
                                         std::to_string(row.alpha) +
                                         " at n=" + std::to_string(row.n));
            prev = &row;
        }
    }
    return seq;
}

inline AlphaSequence scan_alpha(const ClassificationGraph& c, int n_min, int n_max,
                                const ScanOptions& options = {}) {
    require_valid(c);
    return scan_graphs([&c](int n) { return expand(c, n); }, n_min, n_max, options, digest(c));
}

// ---------------------------------------------------------------------------
// Sequence files

/// Row timings are left out so that reruns produce identical files; the CLI
/// records them in the run manifest instead.
inline std::string to_csv(const AlphaSequence& seq) {
    std::ostringstream out;
    out << "n,alpha,vertices,edges,nodes_explored,status\n";
    for (const AlphaRow& r : seq.rows)
        out << r.n << ',' << r.alpha << ',' << r.vertices << ',' << r.edges << ','
            << r.nodes_explored << ',' << to_string(r.status) << '\n';
    return out.str();
}

inline nlohmann::ordered_json to_json(const AlphaSequence& seq) {
    nlohmann::ordered_json doc;
    doc["digest"] = seq.digest;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const AlphaRow& r : seq.rows) {
        nlohmann::ordered_json row{{"n", r.n},
                                   {"alpha", r.alpha},
                                   {"upper_bound", r.upper_bound},
                                   {"vertices", r.vertices},
                                   {"edges", r.edges},
                                   {"nodes_explored", r.nodes_explored},
                                   {"status", to_string(r.status)},
                                   {"witness_digest", r.witness_digest}};
        if (!r.witness.empty())
            row["witness"] = r.witness;
        doc["rows"].push_back(std::move(row));
    }
    return doc;
}

namespace detail {

inline RowStatus status_from_string(const std::string& s, std::size_t line) {
    if (s == "optimal")
        return RowStatus::optimal;
    if (s == "budget_exceeded")
        return RowStatus::budget_exceeded;
    throw ParseError("unknown row status \"" + s + "\"", line, 1);
}

} // namespace detail

/// Reads the CSV written by to_csv. Only n, alpha and status are required;
/// other known columns are read when present.
inline AlphaSequence sequence_from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    AlphaSequence seq;
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cell;
        std::istringstream cells(s);
        while (std::getline(cells, cell, ','))
            out.push_back(cell);
        return out;
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        if (header.empty()) {
            header = split(line);
            if (std::find(header.begin(), header.end(), "n") == header.end() ||
                std::find(header.begin(), header.end(), "alpha") == header.end())
                throw ParseError("CSV header must contain n and alpha columns", line_no, 1);
            continue;
        }
        const auto cells = split(line);
        if (cells.size() != header.size())
            throw ParseError("expected " + std::to_string(header.size()) + " cells", line_no, 1);
        AlphaRow row;
        try {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                const std::string& key = header[i];
                const std::string& v = cells[i];
                if (key == "n")
                    row.n = std::stoi(v);
                else if (key == "alpha")
                    row.alpha = row.upper_bound = std::stoi(v);
                else if (key == "vertices")
                    row.vertices = std::stoull(v);
                else if (key == "edges")
                    row.edges = std::stoull(v);
                else if (key == "nodes_explored")
                    row.nodes_explored = std::stoull(v);
                else if (key == "millis")
                    row.millis = std::stoll(v);
                else if (key == "status")
                    row.status = detail::status_from_string(v, line_no);
            }
        } catch (const std::logic_error&) {
            throw ParseError("non-numeric cell", line_no, 1);
        }
        seq.rows.push_back(std::move(row));
    }
    if (header.empty())
        throw ParseError("empty CSV document");
    return seq;
}

inline AlphaSequence sequence_from_json(const nlohmann::json& doc) {
    AlphaSequence seq;
    try {
        seq.digest = doc.value("digest", std::string{});
        for (const auto& r : doc.at("rows")) {
            AlphaRow row;
            row.n = r.at("n").get<int>();
            row.alpha = r.at("alpha").get<int>();
            row.upper_bound = r.value("upper_bound", row.alpha);
            row.vertices = r.value("vertices", std::size_t{0});
            row.edges = r.value("edges", std::size_t{0});
            row.nodes_explored = r.value("nodes_explored", std::uint64_t{0});
            row.millis = r.value("millis", std::int64_t{0});
            row.status = detail::status_from_string(r.value("status", std::string("optimal")), 0);
            row.witness_digest = r.value("witness_digest", std::string{});
            if (r.contains("witness"))
                row.witness = r.at("witness").get<std::vector<std::string>>();
            seq.rows.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("sequence document: ") + e.what());
    }
    return seq;
}

/// Accepts either the CSV or the JSON sequence format.
inline AlphaSequence parse_sequence(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        try {
            return sequence_from_json(nlohmann::json::parse(text.begin(), text.end()));
        } catch (const nlohmann::json::parse_error& e) {
            auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
            throw ParseError(e.what(), line, col);
        }
    }
    return sequence_from_csv(text);
}

} // namespace figraph
