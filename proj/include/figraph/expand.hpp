#pragma once

// Concrete graphs G_n and the expansion of a classification graph at a given n.

#include "figraph/error.hpp"
#include "figraph/model.hpp"
#include "figraph/poly.hpp"
#include "figraph/util.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace figraph {

struct UnorderedPair {
    int a; ///< a < b
    int b;
    friend auto operator<=>(const UnorderedPair&, const UnorderedPair&) = default;
};

struct Element {
    int c;
    friend auto operator<=>(const Element&, const Element&) = default;
};

struct Unit {
    friend auto operator<=>(const Unit&, const Unit&) = default;
};

/// Sorted r-subset, used for Kneser-union vertices with r >= 3.
struct Subset {
    std::vector<int> elements;
    friend auto operator<=>(const Subset&, const Subset&) = default;
};

using Payload = std::variant<UnorderedPair, Element, Unit, Subset>;

struct VertexLabel {
    std::string orbit;
    Payload payload;
    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

/// Elements of [n] carried by a label, ascending.
inline std::vector<int> label_elements(const Payload& payload) {
    return std::visit(
        [](const auto& p) -> std::vector<int> {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, UnorderedPair>)
                return {p.a, p.b};
            else if constexpr (std::is_same_v<T, Element>)
                return {p.c};
            else if constexpr (std::is_same_v<T, Subset>)
                return p.elements;
            else
                return {};
        },
        payload);
}

/// Number of elements two labels have in common.
inline int shared_elements(const Payload& x, const Payload& y) {
    const auto ex = label_elements(x);
    const auto ey = label_elements(y);
    int shared = 0;
    std::size_t i = 0, j = 0;
    while (i < ex.size() && j < ey.size()) {
        if (ex[i] == ey[j]) {
            ++shared;
            ++i;
            ++j;
        } else if (ex[i] < ey[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return shared;
}

/// Compact text of a payload: "1,2", "3", "*", "1,2,3".
inline std::string payload_text(const Payload& payload) {
    if (std::holds_alternative<Unit>(payload))
        return "*";
    std::string out;
    for (int e : label_elements(payload)) {
        if (!out.empty())
            out += ",";
        out += std::to_string(e);
    }
    return out;
}

/// Applies a permutation of [n] (sigma[i-1] is the image of i) to a label.
inline Payload permute_payload(const Payload& payload, std::span<const int> sigma) {
    auto img = [&](int x) { return sigma[static_cast<std::size_t>(x - 1)]; };
    return std::visit(
        [&](const auto& p) -> Payload {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, UnorderedPair>) {
                int a = img(p.a), b = img(p.b);
                return UnorderedPair{std::min(a, b), std::max(a, b)};
            } else if constexpr (std::is_same_v<T, Element>) {
                return Element{img(p.c)};
            } else if constexpr (std::is_same_v<T, Subset>) {
                Subset s;
                for (int e : p.elements)
                    s.elements.push_back(img(e));
                std::sort(s.elements.begin(), s.elements.end());
                return s;
            } else {
                return p;
            }
        },
        payload);
}

/// A finite simple graph whose vertices carry orbit labels. Immutable after
/// construction. Neighbor lists are sorted; graphs with at most
/// `bitset_limit` vertices also keep one adjacency bitset per vertex.
class ConcreteGraph {
public:
    using Index = std::size_t;
    static constexpr std::size_t bitset_limit = 4096;

    ConcreteGraph() = default;

    /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
    /// Repeated edges are merged.
    ConcreteGraph(int n, std::vector<VertexLabel> vertices,
                  const std::vector<std::pair<Index, Index>>& edges)
        : n_(n), vertices_(std::move(vertices)), adj_(vertices_.size()) {
        const std::size_t v = vertices_.size();
        for (auto [a, b] : edges) {
            if (a >= v || b >= v)
                throw std::invalid_argument("edge endpoint out of range");
            if (a == b)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        for (auto& list : adj_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            edge_count_ += list.size();
        }
        edge_count_ /= 2;
        if (v <= bitset_limit) {
            words_ = (v + 63) / 64;
            rows_.assign(v * words_, 0);
            for (Index a = 0; a < v; ++a)
                for (Index b : adj_[a])
                    rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
        }
    }

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const std::vector<VertexLabel>& vertices() const noexcept { return vertices_; }
    const VertexLabel& label(Index v) const { return vertices_.at(v); }
    const std::vector<Index>& neighbors(Index v) const { return adj_.at(v); }
    std::size_t degree(Index v) const { return adj_.at(v).size(); }

    bool adjacent(Index a, Index b) const {
        if (!rows_.empty())
            return (rows_[a * words_ + b / 64] >> (b % 64)) & 1U;
        const auto& list = adj_.at(a);
        return std::binary_search(list.begin(), list.end(), b);
    }

    /// Edge list with u < v, lexicographically sorted.
    std::vector<std::pair<Index, Index>> edges() const {
        std::vector<std::pair<Index, Index>> out;
        out.reserve(edge_count_);
        for (Index a = 0; a < adj_.size(); ++a)
            for (Index b : adj_[a])
                if (a < b)
                    out.emplace_back(a, b);
        return out;
    }

    friend bool operator==(const ConcreteGraph& x, const ConcreteGraph& y) {
        return x.n_ == y.n_ && x.vertices_ == y.vertices_ && x.adj_ == y.adj_;
    }

private:
    int n_ = 0;
    std::vector<VertexLabel> vertices_;
    std::vector<std::vector<Index>> adj_;
    std::size_t edge_count_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Unlabeled graph on `size` vertices (orbit "v", element labels 1..size).
inline ConcreteGraph make_graph(std::size_t size,
                                const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<VertexLabel> vertices;
    vertices.reserve(size);
    for (std::size_t i = 0; i < size; ++i)
        vertices.push_back({"v", Element{static_cast<int>(i + 1)}});
    return ConcreteGraph(static_cast<int>(size), std::move(vertices), edges);
}

/// Erdos-Renyi G(size, p) drawn with a portable generator.
inline ConcreteGraph random_graph(std::size_t size, double p, PortableRng& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = a + 1; b < size; ++b)
            if (rng.bernoulli(p))
                edges.emplace_back(a, b);
    return make_graph(size, edges);
}

/// Uniform permutation of [n] (Fisher-Yates), as the image list sigma(1..n).
inline std::vector<int> random_permutation(int n, PortableRng& rng) {
    std::vector<int> sigma(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i)
        sigma[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i)
        std::swap(sigma[static_cast<std::size_t>(i)],
                  sigma[static_cast<std::size_t>(rng.uniform(0, i))]);
    return sigma;
}

inline ConcreteGraph induced_subgraph(const ConcreteGraph& g,
                                      const std::vector<ConcreteGraph::Index>& keep) {
    std::vector<VertexLabel> vertices;
    std::vector<std::size_t> position(g.size(), g.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        position.at(keep[i]) = i;
        vertices.push_back(g.label(keep[i]));
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (auto nb : g.neighbors(keep[i]))
            if (position[nb] < g.size() && i < position[nb])
                edges.emplace_back(i, position[nb]);
    return ConcreteGraph(g.n(), std::move(vertices), edges);
}

// ---------------------------------------------------------------------------
// Expansion

namespace detail {

/// Adjacency rule between the vertices of two orbits (or within one orbit):
/// adjacent when `all` holds or when the labels share exactly j elements for
/// some j with share[j] set.
struct AdjacencyRule {
    bool all = false;
    std::array<bool, 3> share{};
    bool empty() const { return !all && !share[0] && !share[1] && !share[2]; }
};

inline AdjacencyRule rule_for(std::span<const EdgeLabel> labels) {
    AdjacencyRule rule;
    for (EdgeLabel label : labels) {
        switch (label) {
        case EdgeLabel::lin_complete:
        case EdgeLabel::all_to_singleton: rule.all = true; break;
        case EdgeLabel::pair_disjoint:
        case EdgeLabel::pp_share0:
        case EdgeLabel::pl_share0:
        case EdgeLabel::ll_share0: rule.share[0] = true; break;
        case EdgeLabel::pair_share1:
        case EdgeLabel::pp_share1:
        case EdgeLabel::pl_share1:
        case EdgeLabel::ll_share1: rule.share[1] = true; break;
        case EdgeLabel::pp_share2: rule.share[2] = true; break;
        }
    }
    return rule;
}

inline std::size_t orbit_size(OrbitKind kind, int n) {
    const auto m = static_cast<std::size_t>(n);
    switch (kind) {
    case OrbitKind::pair: return m * (m - (m > 0 ? 1 : 0)) / 2;
    case OrbitKind::linear: return m;
    case OrbitKind::singleton: return 1;
    }
    return 0;
}

} // namespace detail

/// Expands a classification graph at n. Vertex order: orbits in declaration
/// order; pairs {a,b} in colex order (by b, then a); elements ascending.
inline ConcreteGraph expand(const ClassificationGraph& c, int n) {
    require_valid(c);
    if (n < 0)
        throw std::invalid_argument("expand: n must be >= 0");

    std::vector<VertexLabel> vertices;
    std::vector<std::size_t> begin(c.orbits.size() + 1, 0);
    for (std::size_t i = 0; i < c.orbits.size(); ++i) {
        const Orbit& o = c.orbits[i];
        begin[i] = vertices.size();
        switch (o.kind) {
        case OrbitKind::pair:
            for (int b = 2; b <= n; ++b)
                for (int a = 1; a < b; ++a)
                    vertices.push_back({o.id, UnorderedPair{a, b}});
            break;
        case OrbitKind::linear:
            for (int x = 1; x <= n; ++x)
                vertices.push_back({o.id, Element{x}});
            break;
        case OrbitKind::singleton: vertices.push_back({o.id, Unit{}}); break;
        }
    }
    begin[c.orbits.size()] = vertices.size();

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < c.orbits.size(); ++i) {
        for (std::size_t j = i; j < c.orbits.size(); ++j) {
            const auto labels = i == j ? c.loop_labels(c.orbits[i].id)
                                       : c.edge_labels(c.orbits[i].id, c.orbits[j].id);
            const auto rule = detail::rule_for(labels);
            if (rule.empty())
                continue;
            for (std::size_t u = begin[i]; u < begin[i + 1]; ++u) {
                for (std::size_t v = (i == j ? u + 1 : begin[j]); v < begin[j + 1]; ++v) {
                    bool adj = rule.all;
                    if (!adj) {
                        const int s = shared_elements(vertices[u].payload, vertices[v].payload);
                        adj = s <= 2 && rule.share[static_cast<std::size_t>(s)];
                    }
                    if (adj)
                        edges.emplace_back(u, v);
                }
            }
        }
    }
    return ConcreteGraph(n, std::move(vertices), edges);
}

/// |V(expand(c, n))| as a polynomial in n: p*n(n-1)/2 + l*n + s.
inline Polynomial vertex_count_poly(const ClassificationGraph& c) {
    require_valid(c);
    const Rational p(static_cast<long long>(c.count(OrbitKind::pair)));
    const Rational l(static_cast<long long>(c.count(OrbitKind::linear)));
    const Rational s(static_cast<long long>(c.count(OrbitKind::singleton)));
    return Polynomial{s, l - p / 2, p / 2};
}

/// Index map from expand(c, n) into expand(c, n + 1): each vertex goes to the
/// vertex with the same orbit and label.
inline std::vector<ConcreteGraph::Index> inclusion_map(const ClassificationGraph& c, int n) {
    require_valid(c);
    if (n < 0)
        throw std::invalid_argument("inclusion_map: n must be >= 0");
    std::vector<ConcreteGraph::Index> map;
    std::size_t to = 0;
    for (const Orbit& o : c.orbits) {
        const std::size_t small = detail::orbit_size(o.kind, n);
        const std::size_t large = detail::orbit_size(o.kind, n + 1);
        // Colex and numeric orders make the n-labels a prefix of the (n+1)-labels.
        for (std::size_t k = 0; k < small; ++k)
            map.push_back(to + k);
        to += large;
    }
    return map;
}

/// Maps each vertex v to the vertex whose label is sigma applied to v's label.
/// Throws std::invalid_argument if sigma is not a permutation of [n] or the
/// image label is missing.
inline std::vector<ConcreteGraph::Index> apply_permutation(const ConcreteGraph& g,
                                                           std::span<const int> sigma) {
    if (sigma.size() != static_cast<std::size_t>(g.n()))
        throw std::invalid_argument("permutation size must equal n");
    std::vector<bool> seen(sigma.size() + 1, false);
    for (int x : sigma) {
        if (x < 1 || x > g.n() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a permutation of [n]");
        seen[static_cast<std::size_t>(x)] = true;
    }
    std::map<VertexLabel, ConcreteGraph::Index> where;
    for (std::size_t v = 0; v < g.size(); ++v)
        where.emplace(g.label(v), v);
    std::vector<ConcreteGraph::Index> out(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        VertexLabel image{g.label(v).orbit, permute_payload(g.label(v).payload, sigma)};
        auto it = where.find(image);
        if (it == where.end())
            throw std::invalid_argument("permuted label not present in graph");
        out[v] = it->second;
    }
    return out;
}

namespace detail {

inline void colex_subsets(int n, int r, std::vector<std::vector<int>>& out) {
    if (r == 0) {
        out.push_back({});
        return;
    }
    for (int top = r; top <= n; ++top) {
        std::vector<std::vector<int>> lower;
        colex_subsets(top - 1, r - 1, lower);
        for (auto& s : lower) {
            s.push_back(top);
            out.push_back(std::move(s));
        }
    }
}

} // namespace detail

/// k copies of the Kneser graph KG_{n,r}. Within a copy, disjoint labels are
/// adjacent; across copies, intersecting labels are adjacent. Orbits are
/// named K1..Kk; labels use the pair/element payloads for r = 2 / r = 1.
inline ConcreteGraph build_kneser_union(int k, int r, int n) {
    if (k < 1 || r < 1 || n < 0)
        throw std::invalid_argument("build_kneser_union: need k >= 1, r >= 1, n >= 0");
    std::vector<std::vector<int>> subsets;
    if (r <= n)
        detail::colex_subsets(n, r, subsets);

    std::vector<VertexLabel> vertices;
    for (int copy = 1; copy <= k; ++copy) {
        const std::string orbit = "K" + std::to_string(copy);
        for (const auto& s : subsets) {
            if (r == 1)
                vertices.push_back({orbit, Element{s[0]}});
            else if (r == 2)
                vertices.push_back({orbit, UnorderedPair{s[0], s[1]}});
            else
                vertices.push_back({orbit, Subset{s}});
        }
    }
    const std::size_t per_copy = subsets.size();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < vertices.size(); ++u) {
        for (std::size_t v = u + 1; v < vertices.size(); ++v) {
            const bool same_copy = u / per_copy == v / per_copy;
            const int s = shared_elements(vertices[u].payload, vertices[v].payload);
            if (same_copy ? s == 0 : s > 0)
                edges.emplace_back(u, v);
        }
    }
    return ConcreteGraph(n, std::move(vertices), edges);
}

// ---------------------------------------------------------------------------
// Import / export

/// DIMACS edge format: "p edge V E" then "e u v" lines with 1-based vertices.
inline std::string to_dimacs(const ConcreteGraph& g) {
    std::ostringstream out;
    out << "c figraph n=" << g.n() << "\n";
    out << "p edge " << g.size() << " " << g.edge_count() << "\n";
    for (auto [a, b] : g.edges())
        out << "e " << a + 1 << " " << b + 1 << "\n";
    return out.str();
}

inline ConcreteGraph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> vertex_count;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag == "c")
            continue;
        if (tag == "p") {
            std::string format;
            std::size_t v = 0, e = 0;
            if (!(fields >> format >> v >> e) || (format != "edge" && format != "col"))
                throw ParseError("malformed problem line, expected \"p edge V E\"", line_no, 1);
            if (vertex_count)
                throw ParseError("duplicate problem line", line_no, 1);
            vertex_count = v;
        } else if (tag == "e") {
            if (!vertex_count)
                throw ParseError("edge line before problem line", line_no, 1);
            long long a = 0, b = 0;
            if (!(fields >> a >> b))
                throw ParseError("malformed edge line, expected \"e u v\"", line_no, 1);
            if (a < 1 || b < 1 || static_cast<std::size_t>(a) > *vertex_count ||
                static_cast<std::size_t>(b) > *vertex_count)
                throw ParseError("edge endpoint out of range", line_no, 1);
            if (a == b)
                throw ParseError("self-loop in a simple graph", line_no, 1);
            edges.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
        } else {
            throw ParseError("unknown line type \"" + tag + "\"", line_no, 1);
        }
    }
    if (!vertex_count)
        throw ParseError("missing problem line");
    return make_graph(*vertex_count, edges);
}

inline nlohmann::ordered_json to_json(const ConcreteGraph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.n();
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const VertexLabel& v : g.vertices()) {
        nlohmann::ordered_json item{{"orbit", v.orbit}};
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, UnorderedPair>)
                    item["pair"] = {p.a, p.b};
                else if constexpr (std::is_same_v<T, Element>)
                    item["element"] = p.c;
                else if constexpr (std::is_same_v<T, Subset>)
                    item["subset"] = p.elements;
            },
            v.payload);
        doc["vertices"].push_back(std::move(item));
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : g.edges())
        doc["edges"].push_back({a, b});
    return doc;
}

/// Reads the JSON produced by to_json(ConcreteGraph); edges use 0-based indices.
inline ConcreteGraph graph_from_json(const nlohmann::json& doc) {
    try {
        const int n = doc.value("n", 0);
        std::vector<VertexLabel> vertices;
        for (const auto& item : doc.at("vertices")) {
            VertexLabel label{item.at("orbit").get<std::string>(), Unit{}};
            if (item.contains("pair")) {
                auto p = item.at("pair").get<std::vector<int>>();
                if (p.size() != 2 || p[0] == p[1])
                    throw ParseError("pair label needs two distinct elements");
                label.payload = UnorderedPair{std::min(p[0], p[1]), std::max(p[0], p[1])};
            } else if (item.contains("element")) {
                label.payload = Element{item.at("element").get<int>()};
            } else if (item.contains("subset")) {
                auto s = item.at("subset").get<std::vector<int>>();
                std::sort(s.begin(), s.end());
                label.payload = Subset{std::move(s)};
            }
            vertices.push_back(std::move(label));
        }
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("edge must be a [u, v] pair");
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        return ConcreteGraph(n, std::move(vertices), edges);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph document: ") + e.what());
    }
}

/// Accepts either a graph JSON document or DIMACS text.
inline ConcreteGraph parse_graph(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text.begin(), text.end());
        } catch (const nlohmann::json::parse_error& e) {
            auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
            throw ParseError(e.what(), line, col);
        }
        return graph_from_json(doc);
    }
    return parse_dimacs(text);
}

} // namespace figraph
