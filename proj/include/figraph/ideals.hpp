#pragma once

// Edge ideals I_G in R_G = Q[x_v : v in V(G)] and the Krull dimension of
// R_G / I_G. The minimal primes of a square-free edge ideal are the monomial
// primes generated by minimal vertex covers, so dim R_G/I_G = |V| - tau(G).

#include "figraph/error.hpp"
#include "figraph/expand.hpp"
#include "figraph/solver.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace figraph {

enum class KrullSource {
    cover_search, ///< exhaustive vertex-cover search, independent of the MIS solver
    via_alpha,    ///< |V| - (|V| - alpha) from the MIS solver; graph too large for the search
};

inline const char* to_string(KrullSource s) {
    return s == KrullSource::cover_search ? "cover_search" : "via_alpha";
}

struct KrullDimension {
    int value = 0;
    int cover_number = 0; ///< tau(G)
    KrullSource source = KrullSource::cover_search;
};

namespace detail {

/// Minimum vertex cover size by branching on a vertex v of maximum remaining
/// degree: either v is in the cover, or all of its neighbors are.
inline int cover_number_search(const ConcreteGraph& g) {
    const std::size_t size = g.size();
    std::vector<std::uint32_t> nbr(size, 0);
    for (std::size_t v = 0; v < size; ++v)
        for (auto u : g.neighbors(v))
            nbr[v] |= std::uint32_t{1} << u;

    int best = static_cast<int>(size);
    std::function<void(std::uint32_t, int)> rec = [&](std::uint32_t live, int used) {
        if (used >= best)
            return;
        std::size_t pick = size;
        int pick_degree = 0;
        for (std::size_t v = 0; v < size; ++v) {
            if (!((live >> v) & 1U))
                continue;
            const int d = std::popcount(nbr[v] & live);
            if (d > pick_degree) {
                pick = v;
                pick_degree = d;
            }
        }
        if (pick == size) {
            best = used;
            return;
        }
        const std::uint32_t self = std::uint32_t{1} << pick;
        rec(live & ~self, used + 1);
        const std::uint32_t nb = nbr[pick] & live;
        rec(live & ~nb & ~self, used + std::popcount(nb));
    };
    rec(size == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << size) - 1, 0);
    return best;
}

} // namespace detail

/// dim R_G / I_G. Uses the independent cover search up to 25 vertices; above
/// that falls back to the MIS solver and records the provenance.
inline KrullDimension krull_dimension(const ConcreteGraph& g, const Budget& budget = {}) {
    KrullDimension out;
    if (g.size() <= exhaustive_limit) {
        out.cover_number = detail::cover_number_search(g);
        out.source = KrullSource::cover_search;
    } else {
        const int alpha = max_independent_set(g, budget).alpha;
        out.cover_number = static_cast<int>(g.size()) - alpha;
        out.source = KrullSource::via_alpha;
    }
    out.value = static_cast<int>(g.size()) - out.cover_number;
    return out;
}

struct EdgeIdealPresentation {
    std::vector<std::string> variables;                        ///< one per vertex, "x_{1,2}"
    std::vector<std::pair<std::size_t, std::size_t>> generators; ///< x_u x_v, u < v, sorted
    int krull_dim = 0;
    KrullSource source = KrullSource::cover_search;
};

/// Variable name of a vertex. Orbit ids are included only when the graph has
/// more than one orbit, e.g. "x_{1,2}" or "x_{P1;1,2}".
inline std::string variable_name(const ConcreteGraph& g, std::size_t v) {
    std::set<std::string> orbits;
    for (const auto& label : g.vertices())
        orbits.insert(label.orbit);
    const auto& label = g.label(v);
    if (orbits.size() > 1)
        return "x_{" + label.orbit + ";" + payload_text(label.payload) + "}";
    return "x_{" + payload_text(label.payload) + "}";
}

inline EdgeIdealPresentation edge_ideal(const ConcreteGraph& g, const Budget& budget = {}) {
    EdgeIdealPresentation p;
    for (std::size_t v = 0; v < g.size(); ++v)
        p.variables.push_back(variable_name(g, v));
    p.generators = g.edges();
    const auto dim = krull_dimension(g, budget);
    p.krull_dim = dim.value;
    p.source = dim.source;
    return p;
}

inline std::string to_text(const EdgeIdealPresentation& p) {
    std::ostringstream out;
    out << "R_G = Q[";
    for (std::size_t i = 0; i < p.variables.size(); ++i)
        out << (i ? ", " : "") << p.variables[i];
    out << "]\nI_G = (";
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        out << (i ? ", " : "") << p.variables[p.generators[i].first]
            << p.variables[p.generators[i].second];
    out << ")\ndim R_G/I_G = " << p.krull_dim << " (" << to_string(p.source) << ")\n";
    return out.str();
}

inline nlohmann::ordered_json to_json(const EdgeIdealPresentation& p) {
    nlohmann::ordered_json doc;
    doc["variables"] = p.variables;
    doc["generators"] = nlohmann::ordered_json::array();
    for (auto [a, b] : p.generators)
        doc["generators"].push_back({p.variables[a], p.variables[b]});
    doc["krull_dimension"] = p.krull_dim;
    doc["source"] = to_string(p.source);
    return doc;
}

struct DimAlphaReport {
    bool equal = false;
    int krull_dim = 0;
    int alpha = 0;
};

/// Compares the cover-search Krull dimension with the exhaustive alpha.
/// Throws TooLarge above 25 vertices.
inline DimAlphaReport check_dim_equals_alpha(const ConcreteGraph& g) {
    if (g.size() > exhaustive_limit)
        throw TooLarge("check_dim_equals_alpha accepts at most 25 vertices");
    DimAlphaReport r;
    r.krull_dim = krull_dimension(g).value;
    r.alpha = alpha_bruteforce(g);
    r.equal = r.krull_dim == r.alpha;
    return r;
}

} // namespace figraph
