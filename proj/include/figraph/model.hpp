#pragma once

// Classification graphs: finite labeled multigraphs whose vertices are orbit
// types and whose labeled edges are adjacency rules. One classification graph
// generates a whole nested family of concrete graphs (see expand.hpp).

#include "figraph/error.hpp"
#include "figraph/util.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace figraph {

enum class OrbitKind : std::uint8_t {
    pair,      ///< unordered 2-subsets of [n]; C(n,2) vertices
    linear,    ///< elements of [n]; n vertices
    singleton, ///< one invariant vertex
};

/// Adjacency rules. Declaration order is the canonical sort order.
enum class EdgeLabel : std::uint8_t {
    pair_disjoint,    ///< loop on a pair orbit: disjoint pairs adjacent
    pair_share1,      ///< loop on a pair orbit: pairs sharing one element adjacent
    lin_complete,     ///< loop on a linear orbit: all vertices adjacent
    pp_share0,        ///< pair-pair: labels sharing 0 elements adjacent
    pp_share1,        ///< pair-pair: sharing exactly 1
    pp_share2,        ///< pair-pair: identical pairs
    pl_share0,        ///< pair-linear: element not in the pair
    pl_share1,        ///< pair-linear: element in the pair
    ll_share0,        ///< linear-linear: different elements
    ll_share1,        ///< linear-linear: same element
    all_to_singleton, ///< singleton adjacent to every vertex of the other orbit
};

inline constexpr std::array<EdgeLabel, 11> all_edge_labels = {
    EdgeLabel::pair_disjoint, EdgeLabel::pair_share1, EdgeLabel::lin_complete,
    EdgeLabel::pp_share0,     EdgeLabel::pp_share1,   EdgeLabel::pp_share2,
    EdgeLabel::pl_share0,     EdgeLabel::pl_share1,   EdgeLabel::ll_share0,
    EdgeLabel::ll_share1,     EdgeLabel::all_to_singleton,
};

inline const char* to_string(OrbitKind kind) {
    switch (kind) {
    case OrbitKind::pair: return "pair";
    case OrbitKind::linear: return "linear";
    case OrbitKind::singleton: return "singleton";
    }
    return "?";
}

inline const char* to_string(EdgeLabel label) {
    switch (label) {
    case EdgeLabel::pair_disjoint: return "PairDisjoint";
    case EdgeLabel::pair_share1: return "PairShare1";
    case EdgeLabel::lin_complete: return "LinComplete";
    case EdgeLabel::pp_share0: return "PPShare0";
    case EdgeLabel::pp_share1: return "PPShare1";
    case EdgeLabel::pp_share2: return "PPShare2";
    case EdgeLabel::pl_share0: return "PLShare0";
    case EdgeLabel::pl_share1: return "PLShare1";
    case EdgeLabel::ll_share0: return "LLShare0";
    case EdgeLabel::ll_share1: return "LLShare1";
    case EdgeLabel::all_to_singleton: return "AllToSingleton";
    }
    return "?";
}

inline std::optional<EdgeLabel> edge_label_from_string(std::string_view name) {
    for (EdgeLabel label : all_edge_labels)
        if (name == to_string(label))
            return label;
    return std::nullopt;
}

/// True for the labels that live on a single orbit.
constexpr bool is_loop_label(EdgeLabel label) {
    return label == EdgeLabel::pair_disjoint || label == EdgeLabel::pair_share1 ||
           label == EdgeLabel::lin_complete;
}

/// Loop labels admissible on an orbit of the given kind, in canonical order.
inline std::vector<EdgeLabel> admissible_loop_labels(OrbitKind kind) {
    switch (kind) {
    case OrbitKind::pair: return {EdgeLabel::pair_disjoint, EdgeLabel::pair_share1};
    case OrbitKind::linear: return {EdgeLabel::lin_complete};
    case OrbitKind::singleton: return {};
    }
    return {};
}

/// Edge labels admissible between two distinct orbits of the given kinds.
inline std::vector<EdgeLabel> admissible_edge_labels(OrbitKind a, OrbitKind b) {
    if (a == OrbitKind::singleton || b == OrbitKind::singleton)
        return {EdgeLabel::all_to_singleton};
    if (a > b)
        std::swap(a, b);
    if (a == OrbitKind::pair && b == OrbitKind::pair)
        return {EdgeLabel::pp_share0, EdgeLabel::pp_share1, EdgeLabel::pp_share2};
    if (a == OrbitKind::pair && b == OrbitKind::linear)
        return {EdgeLabel::pl_share0, EdgeLabel::pl_share1};
    return {EdgeLabel::ll_share0, EdgeLabel::ll_share1};
}

struct Orbit {
    std::string id;
    OrbitKind kind;
    friend bool operator==(const Orbit&, const Orbit&) = default;
    friend auto operator<=>(const Orbit&, const Orbit&) = default;
};

struct Loop {
    std::string orbit;
    EdgeLabel label;
    friend bool operator==(const Loop&, const Loop&) = default;
    friend auto operator<=>(const Loop&, const Loop&) = default;
};

/// Edge between two orbits; endpoints are unordered.
struct Edge {
    std::string a;
    std::string b;
    EdgeLabel label;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A vertex-quadratic classification graph restricted to unordered-pair,
/// linear and singleton orbits. Plain value type: build it, validate it, then
/// share it read-only.
struct ClassificationGraph {
    std::vector<Orbit> orbits;
    std::vector<Loop> loops;
    std::vector<Edge> edges;

    friend bool operator==(const ClassificationGraph&, const ClassificationGraph&) = default;

    std::optional<std::size_t> index_of(std::string_view id) const {
        for (std::size_t i = 0; i < orbits.size(); ++i)
            if (orbits[i].id == id)
                return i;
        return std::nullopt;
    }

    std::size_t count(OrbitKind kind) const {
        return static_cast<std::size_t>(std::count_if(
            orbits.begin(), orbits.end(), [kind](const Orbit& o) { return o.kind == kind; }));
    }

    /// Loop labels on the given orbit, canonical order.
    std::vector<EdgeLabel> loop_labels(std::string_view id) const {
        std::vector<EdgeLabel> out;
        for (const Loop& l : loops)
            if (l.orbit == id)
                out.push_back(l.label);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Labels on edges joining orbits `x` and `y` (either orientation).
    std::vector<EdgeLabel> edge_labels(std::string_view x, std::string_view y) const {
        std::vector<EdgeLabel> out;
        for (const Edge& e : edges)
            if ((e.a == x && e.b == y) || (e.a == y && e.b == x))
                out.push_back(e.label);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Number of edges (not loops) touching the orbit.
    std::size_t edge_degree(std::string_view id) const {
        return static_cast<std::size_t>(std::count_if(
            edges.begin(), edges.end(), [&](const Edge& e) { return e.a == id || e.b == id; }));
    }
};

// ---------------------------------------------------------------------------
// Validation

/// Returns the first broken rule, or nullopt when the graph is valid. Rule
/// numbers follow the table in README.md.
inline std::optional<ValidationError> validate(const ClassificationGraph& c) {
    std::set<std::string_view> seen;
    for (const Orbit& o : c.orbits) {
        if (!seen.insert(o.id).second)
            return ValidationError(ValidationCode::duplicate_orbit_id, 1, "orbit " + o.id,
                                   "orbit id declared twice");
    }

    std::set<std::pair<std::string_view, EdgeLabel>> loop_seen;
    for (const Loop& l : c.loops) {
        const std::string subject = "loop " + l.orbit + "/" + to_string(l.label);
        auto idx = c.index_of(l.orbit);
        if (!idx)
            return ValidationError(ValidationCode::unknown_orbit_ref, 3, subject,
                                   "loop references an undeclared orbit");
        const OrbitKind kind = c.orbits[*idx].kind;
        if (kind == OrbitKind::singleton)
            return ValidationError(ValidationCode::loop_on_singleton, 4, subject,
                                   "singleton orbits carry no loops");
        auto ok = admissible_loop_labels(kind);
        if (std::find(ok.begin(), ok.end(), l.label) == ok.end())
            return ValidationError(ValidationCode::incompatible_label, 5, subject,
                                   std::string("label not admissible as a loop on a ") +
                                       to_string(kind) + " orbit");
        if (!loop_seen.emplace(l.orbit, l.label).second)
            return ValidationError(ValidationCode::duplicate_label, 7, subject,
                                   "loop label repeated on the same orbit");
    }

    std::set<std::tuple<std::string_view, std::string_view, EdgeLabel>> edge_seen;
    for (const Edge& e : c.edges) {
        const std::string subject = "edge " + e.a + "-" + e.b + "/" + to_string(e.label);
        auto ia = c.index_of(e.a);
        auto ib = c.index_of(e.b);
        if (!ia || !ib)
            return ValidationError(ValidationCode::unknown_orbit_ref, 3, subject,
                                   "edge references an undeclared orbit");
        const OrbitKind ka = c.orbits[*ia].kind;
        const OrbitKind kb = c.orbits[*ib].kind;
        if (*ia == *ib) {
            if (ka == OrbitKind::singleton)
                return ValidationError(ValidationCode::loop_on_singleton, 4, subject,
                                       "singleton orbits carry no loops");
            return ValidationError(ValidationCode::incompatible_label, 6, subject,
                                   "edges join two distinct orbits; use a loop");
        }
        auto ok = admissible_edge_labels(ka, kb);
        if (std::find(ok.begin(), ok.end(), e.label) == ok.end())
            return ValidationError(ValidationCode::incompatible_label, 6, subject,
                                   std::string("label not admissible between ") + to_string(ka) +
                                       " and " + to_string(kb) + " orbits");
        std::string_view lo = e.a, hi = e.b;
        if (hi < lo)
            std::swap(lo, hi);
        if (!edge_seen.emplace(lo, hi, e.label).second)
            return ValidationError(ValidationCode::duplicate_label, 7, subject,
                                   "edge label repeated between the same orbits");
    }
    return std::nullopt;
}

inline void require_valid(const ClassificationGraph& c) {
    if (auto err = validate(c))
        throw *err;
}

/// Orbits sorted by id, edge endpoints ordered, loops and edges sorted.
inline ClassificationGraph canonicalize(ClassificationGraph c) {
    std::sort(c.orbits.begin(), c.orbits.end(),
              [](const Orbit& x, const Orbit& y) { return x.id < y.id; });
    for (Edge& e : c.edges)
        if (e.b < e.a)
            std::swap(e.a, e.b);
    std::sort(c.loops.begin(), c.loops.end());
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

// ---------------------------------------------------------------------------
// JSON document
//
//   { "orbits": [{"id": str, "kind": "pair"|"linear"|"singleton"}],
//     "loops":  [{"orbit": str, "label": str}],
//     "edges":  [{"a": str, "b": str, "label": str}] }

inline nlohmann::ordered_json to_json(const ClassificationGraph& c) {
    nlohmann::ordered_json doc;
    doc["orbits"] = nlohmann::ordered_json::array();
    for (const Orbit& o : c.orbits)
        doc["orbits"].push_back({{"id", o.id}, {"kind", to_string(o.kind)}});
    doc["loops"] = nlohmann::ordered_json::array();
    for (const Loop& l : c.loops)
        doc["loops"].push_back({{"orbit", l.orbit}, {"label", to_string(l.label)}});
    doc["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : c.edges)
        doc["edges"].push_back({{"a", e.a}, {"b", e.b}, {"label", to_string(e.label)}});
    return doc;
}

inline std::string serialize(const ClassificationGraph& c) { return to_json(c).dump(2) + "\n"; }

/// Digest of the canonical serialization; equal for structurally equal graphs
/// regardless of declaration order.
inline std::string digest(const ClassificationGraph& c) {
    return digest_of(serialize(canonicalize(c)));
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline const nlohmann::json& member(const nlohmann::json& obj, const char* key,
                                    const std::string& where) {
    if (!obj.is_object())
        throw ParseError(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(where + ": missing key \"" + key + "\"");
    return *it;
}

inline std::string string_member(const nlohmann::json& obj, const char* key,
                                 const std::string& where) {
    const auto& v = member(obj, key, where);
    if (!v.is_string())
        throw ParseError(where + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

inline const nlohmann::json& array_member(const nlohmann::json& obj, const char* key) {
    static const nlohmann::json empty = nlohmann::json::array();
    auto it = obj.find(key);
    if (it == obj.end())
        return empty;
    if (!it->is_array())
        throw ParseError(std::string("\"") + key + "\" must be an array");
    return *it;
}

inline EdgeLabel label_member(const nlohmann::json& obj, const std::string& where) {
    std::string name = string_member(obj, "label", where);
    auto label = edge_label_from_string(name);
    if (!label)
        throw ParseError(where + ": unknown label \"" + name + "\"");
    return *label;
}

} // namespace detail

/// Builds a classification graph from an already-parsed JSON value and
/// validates it.
inline ClassificationGraph from_json(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw ParseError("classification graph document must be a JSON object");
    ClassificationGraph c;
    const auto& orbits = detail::array_member(doc, "orbits");
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const std::string where = "orbits[" + std::to_string(i) + "]";
        std::string id = detail::string_member(orbits[i], "id", where);
        std::string kind = detail::string_member(orbits[i], "kind", where);
        if (kind == "pair")
            c.orbits.push_back({id, OrbitKind::pair});
        else if (kind == "linear")
            c.orbits.push_back({id, OrbitKind::linear});
        else if (kind == "singleton")
            c.orbits.push_back({id, OrbitKind::singleton});
        else if (kind == "ordered-pair" || kind == "ordered_pair" || kind == "ordered")
            throw ValidationError(ValidationCode::ordered_pair_unsupported, 2, "orbit " + id,
                                  "ordered-pair orbits are not supported");
        else
            throw ParseError(where + ": unknown orbit kind \"" + kind + "\"");
    }
    const auto& loops = detail::array_member(doc, "loops");
    for (std::size_t i = 0; i < loops.size(); ++i) {
        const std::string where = "loops[" + std::to_string(i) + "]";
        c.loops.push_back({detail::string_member(loops[i], "orbit", where),
                           detail::label_member(loops[i], where)});
    }
    const auto& edges = detail::array_member(doc, "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        c.edges.push_back({detail::string_member(edges[i], "a", where),
                           detail::string_member(edges[i], "b", where),
                           detail::label_member(edges[i], where)});
    }
    require_valid(c);
    return c;
}

/// Parses and validates a JSON classification graph document.
inline ClassificationGraph parse(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(e.what(), line, col);
    }
    return from_json(doc);
}

// ---------------------------------------------------------------------------
// Predicates used by the trend checks

/// Some pair orbit carries no loop, so its C(n,2) vertices are independent.
inline bool has_quadratic_independent_orbit(const ClassificationGraph& c) {
    return std::any_of(c.orbits.begin(), c.orbits.end(), [&](const Orbit& o) {
        return o.kind == OrbitKind::pair && c.loop_labels(o.id).empty();
    });
}

/// Some pair orbit's loop set is exactly {PairShare1}, i.e. it induces a Johnson graph.
inline bool has_johnson_orbit(const ClassificationGraph& c) {
    return std::any_of(c.orbits.begin(), c.orbits.end(), [&](const Orbit& o) {
        return o.kind == OrbitKind::pair &&
               c.loop_labels(o.id) == std::vector<EdgeLabel>{EdgeLabel::pair_share1};
    });
}

/// Stricter reading of a Johnson orbit: loop set {PairShare1} and no edges to
/// any other orbit, so the Johnson graph is a connected component.
inline bool has_isolated_johnson_orbit(const ClassificationGraph& c) {
    return std::any_of(c.orbits.begin(), c.orbits.end(), [&](const Orbit& o) {
        return o.kind == OrbitKind::pair &&
               c.loop_labels(o.id) == std::vector<EdgeLabel>{EdgeLabel::pair_share1} &&
               c.edge_degree(o.id) == 0;
    });
}

// ---------------------------------------------------------------------------
// Named families

enum class FamilyName {
    complete,              ///< K_n: one linear orbit with LinComplete
    kneser2,               ///< KG_{n,2}
    johnson2,              ///< J_{n,2}
    complete_bipartite,    ///< K_{n,n}
    disjoint_union,        ///< k unconnected copies of a sub-family
    singletons_vs_orbit,   ///< k singletons, each joined to one linear orbit
    copies_of_complete,    ///< k copies of K_n, same labels adjacent across copies
    copies_of_kneser2,     ///< k copies of KG_{n,2}, intersecting labels adjacent across copies
    johnson_union_shifted, ///< J_{n,2} disjoint from J_{n+1,2}
};

inline constexpr std::array<std::pair<FamilyName, std::string_view>, 9> family_names = {{
    {FamilyName::complete, "complete"},
    {FamilyName::kneser2, "kneser2"},
    {FamilyName::johnson2, "johnson2"},
    {FamilyName::complete_bipartite, "complete-bipartite"},
    {FamilyName::disjoint_union, "disjoint-union"},
    {FamilyName::singletons_vs_orbit, "singletons-vs-orbit"},
    {FamilyName::copies_of_complete, "copies-of-complete"},
    {FamilyName::copies_of_kneser2, "copies-of-kneser2"},
    {FamilyName::johnson_union_shifted, "johnson-union-shifted"},
}};

inline std::string_view to_string(FamilyName name) {
    for (auto& [n, s] : family_names)
        if (n == name)
            return s;
    return "?";
}

inline std::optional<FamilyName> family_from_string(std::string_view s) {
    for (auto& [n, str] : family_names)
        if (str == s)
            return n;
    return std::nullopt;
}

struct FamilyParams {
    int k = 1;
    /// Required by disjoint_union; must not itself be disjoint_union.
    std::optional<FamilyName> sub;
};

inline ClassificationGraph family(FamilyName name, const FamilyParams& params = {}) {
    using L = EdgeLabel;
    ClassificationGraph c;
    const int k = params.k;
    auto need_k = [&] {
        if (k < 1)
            throw std::invalid_argument("family " + std::string(to_string(name)) +
                                        ": k must be >= 1");
    };
    auto idx = [](const char* prefix, int i) { return prefix + std::to_string(i); };

    switch (name) {
    case FamilyName::complete:
        c.orbits = {{"L", OrbitKind::linear}};
        c.loops = {{"L", L::lin_complete}};
        break;
    case FamilyName::kneser2:
        c.orbits = {{"P", OrbitKind::pair}};
        c.loops = {{"P", L::pair_disjoint}};
        break;
    case FamilyName::johnson2:
        c.orbits = {{"P", OrbitKind::pair}};
        c.loops = {{"P", L::pair_share1}};
        break;
    case FamilyName::complete_bipartite:
        c.orbits = {{"L1", OrbitKind::linear}, {"L2", OrbitKind::linear}};
        c.edges = {{"L1", "L2", L::ll_share0}, {"L1", "L2", L::ll_share1}};
        break;
    case FamilyName::disjoint_union: {
        need_k();
        if (!params.sub || *params.sub == FamilyName::disjoint_union)
            throw std::invalid_argument("disjoint-union needs a non-union sub-family");
        const ClassificationGraph sub = family(*params.sub, {.k = 1, .sub = std::nullopt});
        for (int i = 1; i <= k; ++i) {
            const std::string tag = "c" + std::to_string(i) + ".";
            for (const Orbit& o : sub.orbits)
                c.orbits.push_back({tag + o.id, o.kind});
            for (const Loop& l : sub.loops)
                c.loops.push_back({tag + l.orbit, l.label});
            for (const Edge& e : sub.edges)
                c.edges.push_back({tag + e.a, tag + e.b, e.label});
        }
        break;
    }
    case FamilyName::singletons_vs_orbit:
        need_k();
        c.orbits.push_back({"L", OrbitKind::linear});
        for (int i = 1; i <= k; ++i) {
            c.orbits.push_back({idx("S", i), OrbitKind::singleton});
            c.edges.push_back({"L", idx("S", i), L::all_to_singleton});
        }
        break;
    case FamilyName::copies_of_complete:
        need_k();
        for (int i = 1; i <= k; ++i) {
            c.orbits.push_back({idx("L", i), OrbitKind::linear});
            c.loops.push_back({idx("L", i), L::lin_complete});
        }
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
                c.edges.push_back({idx("L", i), idx("L", j), L::ll_share1});
        break;
    case FamilyName::copies_of_kneser2:
        need_k();
        for (int i = 1; i <= k; ++i) {
            c.orbits.push_back({idx("P", i), OrbitKind::pair});
            c.loops.push_back({idx("P", i), L::pair_disjoint});
        }
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                c.edges.push_back({idx("P", i), idx("P", j), L::pp_share1});
                c.edges.push_back({idx("P", i), idx("P", j), L::pp_share2});
            }
        break;
    case FamilyName::johnson_union_shifted:
        // P2 alone is J_{n,2}; P1 together with L is J_{n+1,2}, with L's
        // element c standing for the pair {c, n+1}.
        c.orbits = {{"P1", OrbitKind::pair}, {"P2", OrbitKind::pair}, {"L", OrbitKind::linear}};
        c.loops = {{"P1", L::pair_share1}, {"P2", L::pair_share1}, {"L", L::lin_complete}};
        c.edges = {{"P1", "L", L::pl_share1}};
        break;
    }
    require_valid(c);
    return c;
}

// ---------------------------------------------------------------------------
// Random generation

struct CountRange {
    int min = 0;
    int max = 0;
};

struct RandomGenParams {
    CountRange pair{0, 2};
    CountRange linear{0, 1};
    CountRange singleton{0, 1};
    /// Independent inclusion probability of every admissible loop and edge label.
    double p = 0.5;
    std::uint64_t seed = 0;
};

inline void check_params(const RandomGenParams& params) {
    for (const CountRange* r : {&params.pair, &params.linear, &params.singleton})
        if (r->min < 0 || r->max < r->min)
            throw std::invalid_argument("orbit count range must satisfy 0 <= min <= max");
    if (!(params.p >= 0.0 && params.p <= 1.0))
        throw std::invalid_argument("inclusion probability must lie in [0, 1]");
}

/// Draws orbit counts, then includes each admissible loop and edge label with
/// probability p. Orbits are named P0.., L0.., S0.. in that order. Output
/// depends only on the parameters (including the seed).
inline ClassificationGraph random_classification(const RandomGenParams& params) {
    check_params(params);
    PortableRng rng(params.seed);
    ClassificationGraph c;
    const int pairs = static_cast<int>(rng.uniform(params.pair.min, params.pair.max));
    const int linears = static_cast<int>(rng.uniform(params.linear.min, params.linear.max));
    const int singles = static_cast<int>(rng.uniform(params.singleton.min, params.singleton.max));
    for (int i = 0; i < pairs; ++i)
        c.orbits.push_back({"P" + std::to_string(i), OrbitKind::pair});
    for (int i = 0; i < linears; ++i)
        c.orbits.push_back({"L" + std::to_string(i), OrbitKind::linear});
    for (int i = 0; i < singles; ++i)
        c.orbits.push_back({"S" + std::to_string(i), OrbitKind::singleton});

    for (const Orbit& o : c.orbits)
        for (EdgeLabel label : admissible_loop_labels(o.kind))
            if (rng.bernoulli(params.p))
                c.loops.push_back({o.id, label});
    for (std::size_t i = 0; i < c.orbits.size(); ++i)
        for (std::size_t j = i + 1; j < c.orbits.size(); ++j)
            for (EdgeLabel label : admissible_edge_labels(c.orbits[i].kind, c.orbits[j].kind))
                if (rng.bernoulli(params.p))
                    c.edges.push_back({c.orbits[i].id, c.orbits[j].id, label});
    return c;
}

inline nlohmann::ordered_json to_json(const RandomGenParams& params) {
    return {{"pair", {params.pair.min, params.pair.max}},
            {"linear", {params.linear.min, params.linear.max}},
            {"singleton", {params.singleton.min, params.singleton.max}},
            {"p", params.p},
            {"seed", params.seed}};
}

/// Reads {"pair":[min,max], "linear":[..], "singleton":[..], "p":x, "seed":s};
/// missing keys keep their defaults.
inline RandomGenParams random_params_from_json(const nlohmann::json& doc) {
    RandomGenParams params;
    try {
        auto range = [&](const char* key, CountRange& out) {
            if (!doc.contains(key))
                return;
            const auto& v = doc.at(key);
            if (v.is_number_integer()) {
                out.min = out.max = v.get<int>();
            } else if (v.is_array() && v.size() == 2) {
                out.min = v[0].get<int>();
                out.max = v[1].get<int>();
            } else {
                throw ParseError(std::string("\"") + key + "\" must be an integer or [min, max]");
            }
        };
        range("pair", params.pair);
        range("linear", params.linear);
        range("singleton", params.singleton);
        if (doc.contains("p"))
            params.p = doc.at("p").get<double>();
        if (doc.contains("seed"))
            params.seed = doc.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("random parameters: ") + e.what());
    }
    check_params(params);
    return params;
}

} // namespace figraph
