#include "figraph/expand.hpp"
#include "figraph/verify.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace figraph;
using L = EdgeLabel;
using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

namespace {

std::string edge_text(const ConcreteGraph& g) {
    std::string out;
    for (auto [a, b] : g.edges())
        out += (out.empty() ? "" : " ") + payload_text(g.label(a).payload) + "-" +
               payload_text(g.label(b).payload);
    return out;
}

ClassificationGraph complete_on_pairs() {
    return {{{"P", OrbitKind::pair}, {"S", OrbitKind::singleton}},
            {{"P", L::pair_disjoint}, {"P", L::pair_share1}},
            {{"P", "S", L::all_to_singleton}}};
}

RandomGenParams wide_params(std::uint64_t seed) {
    RandomGenParams p;
    p.pair = {0, 2};
    p.linear = {0, 2};
    p.singleton = {0, 2};
    p.seed = seed;
    return p;
}

} // namespace

TEST(Expand, Kneser2AtFourIsThreeDisjointEdges) {
    auto g = expand(family(FamilyName::kneser2), 4);
    EXPECT_EQ(g.size(), 6u);
    EXPECT_EQ(g.edge_count(), 3u);
    // Colex order: 12 13 23 14 24 34.
    EXPECT_EQ(edge_text(g), "1,2-3,4 1,3-2,4 2,3-1,4");
}

TEST(Expand, Johnson2AtThreeIsATriangle) {
    auto g = expand(family(FamilyName::johnson2), 3);
    EXPECT_EQ(g.size(), 3u);
    EXPECT_EQ(g.edges(), (EdgeList{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Expand, CompleteBipartiteAtTwo) {
    auto g = expand(family(FamilyName::complete_bipartite), 2);
    EXPECT_EQ(g.size(), 4u);
    EXPECT_EQ(g.edges(), (EdgeList{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST(Expand, CompleteOnPairsPlusSingletonIsComplete) {
    for (int n = 0; n <= 7; ++n) {
        auto g = expand(complete_on_pairs(), n);
        const std::size_t v = binomial64(n, 2) + 1;
        ASSERT_EQ(g.size(), v);
        EXPECT_EQ(g.edge_count(), v * (v - 1) / 2) << "n=" << n;
    }
}

TEST(Expand, VertexOrderIsColex) {
    auto g = expand(family(FamilyName::kneser2), 4);
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < g.size(); ++v)
        labels.push_back(payload_text(g.label(v).payload));
    EXPECT_EQ(labels, (std::vector<std::string>{"1,2", "1,3", "2,3", "1,4", "2,4", "3,4"}));
}

TEST(Expand, MatchesLabelDefinitionsOnRandomGraphs) {
    for (std::uint64_t s = 0; s < 60; ++s) {
        auto c = random_classification(wide_params(splitmix64(s)));
        for (int n : {0, 1, 2, 3, 5}) {
            auto g = expand(c, n);
            for (std::size_t u = 0; u < g.size(); ++u)
                for (std::size_t v = u + 1; v < g.size(); ++v)
                    ASSERT_EQ(g.adjacent(u, v), oracle::adjacent(c, g.label(u), g.label(v)))
                        << serialize(c) << " n=" << n << " u=" << u << " v=" << v;
        }
    }
}

TEST(Expand, NegativeNRejected) {
    EXPECT_THROW(expand(family(FamilyName::kneser2), -1), std::invalid_argument);
}

TEST(VertexCount, Polynomials) {
    EXPECT_EQ(vertex_count_poly(family(FamilyName::kneser2)).to_string(), "n^2/2 - n/2");
    EXPECT_EQ(vertex_count_poly(family(FamilyName::complete_bipartite)).to_string(), "2n");
    EXPECT_TRUE(vertex_count_poly({}).is_zero());
    for (std::uint64_t s = 0; s < 30; ++s) {
        auto c = random_classification(wide_params(s));
        auto poly = vertex_count_poly(c);
        for (int n = 0; n <= 12; ++n)
            ASSERT_EQ(poly(n), Rational(static_cast<long long>(expand(c, n).size())));
    }
}

TEST(Inclusion, Kneser2FourToFive) {
    const auto c = family(FamilyName::kneser2);
    const auto small = expand(c, 4);
    const auto large = expand(c, 5);
    const auto map = inclusion_map(c, 4);
    ASSERT_EQ(map.size(), 6u);
    for (std::size_t v = 0; v < map.size(); ++v)
        EXPECT_EQ(large.label(map[v]), small.label(v));
    for (auto [a, b] : small.edges())
        EXPECT_TRUE(large.adjacent(map[a], map[b]));
    EXPECT_TRUE(is_induced_inclusion(c, 4));
}

TEST(Inclusion, EmptyToOneIsInjective) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto c = random_classification(wide_params(s));
        auto map = inclusion_map(c, 0);
        std::set<std::size_t> image(map.begin(), map.end());
        EXPECT_EQ(image.size(), map.size());
        EXPECT_EQ(map.size(), c.count(OrbitKind::singleton));
    }
}

TEST(Inclusion, JohnsonTriangleInducedInJ42) {
    const auto big = expand(family(FamilyName::johnson2), 4);
    std::vector<std::size_t> tri;
    for (std::size_t v = 0; v < big.size(); ++v) {
        auto e = label_elements(big.label(v).payload);
        if (e.back() <= 3)
            tri.push_back(v);
    }
    ASSERT_EQ(tri.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            EXPECT_TRUE(big.adjacent(tri[i], tri[j]));
    EXPECT_EQ(induced_subgraph(big, tri).edges(), expand(family(FamilyName::johnson2), 3).edges());
}

TEST(Inclusion, InducedOnRandomGraphs) {
    for (std::uint64_t s = 0; s < 40; ++s) {
        auto c = random_classification(wide_params(100 + s));
        for (int n = 0; n <= 6; ++n)
            ASSERT_TRUE(is_induced_inclusion(c, n)) << serialize(c) << " n=" << n;
    }
}

TEST(Equivariance, RandomTriples) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        PortableRng rng(splitmix64(500 + s));
        auto c = random_classification(wide_params(rng.next()));
        const int n = static_cast<int>(rng.uniform(0, 8));
        auto sigma = random_permutation(n, rng);
        auto g = expand(c, n);
        ASSERT_TRUE(is_equivariant(g, sigma)) << serialize(c) << " n=" << n;
        // Non-edges map to non-edges as well.
        auto image = apply_permutation(g, sigma);
        for (std::size_t u = 0; u < g.size(); ++u)
            for (std::size_t v = u + 1; v < g.size(); ++v)
                ASSERT_EQ(g.adjacent(u, v), g.adjacent(image[u], image[v]));
    }
}

TEST(Equivariance, RejectsNonPermutations) {
    auto g = expand(family(FamilyName::kneser2), 3);
    std::vector<int> bad{1, 1, 2};
    EXPECT_THROW(apply_permutation(g, bad), std::invalid_argument);
    std::vector<int> short_sigma{1, 2};
    EXPECT_THROW(apply_permutation(g, short_sigma), std::invalid_argument);
}

TEST(RandomPermutation, IsAPermutation) {
    PortableRng rng(3);
    for (int n = 0; n <= 9; ++n) {
        auto sigma = random_permutation(n, rng);
        std::sort(sigma.begin(), sigma.end());
        for (int i = 0; i < n; ++i)
            EXPECT_EQ(sigma[static_cast<std::size_t>(i)], i + 1);
    }
}

TEST(KneserUnion, SingleCopyIsKneser2) {
    EXPECT_EQ(build_kneser_union(1, 2, 4).edges(), expand(family(FamilyName::kneser2), 4).edges());
}

TEST(KneserUnion, RankOneIsCopiesOfComplete) {
    EXPECT_EQ(build_kneser_union(2, 1, 3).edges(),
              expand(family(FamilyName::copies_of_complete, {.k = 2}), 3).edges());
}

TEST(KneserUnion, RankTwoIsCopiesOfKneser2) {
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 7; ++n)
            EXPECT_EQ(build_kneser_union(k, 2, n).edges(),
                      expand(family(FamilyName::copies_of_kneser2, {.k = k}), n).edges());
}

TEST(KneserUnion, RankThreeSizes) {
    auto g = build_kneser_union(2, 3, 6);
    EXPECT_EQ(g.size(), 40u);
    EXPECT_EQ(build_kneser_union(3, 3, 7).size(), 105u);
    // Within a copy, disjoint triples of [6]: each triple has exactly one complement.
    std::size_t inside = 0;
    for (auto [a, b] : g.edges())
        inside += g.label(a).orbit == g.label(b).orbit;
    EXPECT_EQ(inside, 2u * 10u);
}

TEST(ConcreteGraph, RejectsBadEdges) {
    EXPECT_THROW(make_graph(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(make_graph(3, {{1, 1}}), std::invalid_argument);
    auto g = make_graph(3, {{0, 1}, {1, 0}, {0, 1}});
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ConcreteGraph, LargeGraphsUseNeighborLists) {
    std::vector<std::pair<std::size_t, std::size_t>> path;
    for (std::size_t i = 0; i + 1 < 5000; ++i)
        path.emplace_back(i, i + 1);
    auto g = make_graph(5000, path);
    EXPECT_TRUE(g.adjacent(4998, 4999));
    EXPECT_FALSE(g.adjacent(0, 4999));
}

TEST(Dimacs, RoundTrip) {
    auto g = expand(family(FamilyName::johnson2), 5);
    auto h = parse_dimacs(to_dimacs(g));
    EXPECT_EQ(h.size(), g.size());
    EXPECT_EQ(h.edges(), g.edges());
}

TEST(Dimacs, Errors) {
    try {
        parse_dimacs("c hi\np edge 3 1\ne 1 4\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_dimacs("e 1 2\n"), ParseError);
    EXPECT_THROW(parse_dimacs("p edge 2 1\ne 1 1\n"), ParseError);
    EXPECT_THROW(parse_dimacs("p edge 2 1\nx 1 2\n"), ParseError);
    EXPECT_THROW(parse_dimacs(""), ParseError);
    EXPECT_EQ(parse_dimacs("p col 2 1\ne 1 2\n").edge_count(), 1u);
}

TEST(GraphJson, RoundTripKeepsLabels) {
    for (auto g : {expand(family(FamilyName::singletons_vs_orbit, {.k = 2}), 3),
                   build_kneser_union(2, 3, 6), expand(family(FamilyName::kneser2), 5)}) {
        auto h = parse_graph(to_json(g).dump());
        EXPECT_EQ(h, g);
    }
    EXPECT_THROW(parse_graph(R"({"vertices": [], "edges": [[0, 1]]})"), ParseError);
    EXPECT_THROW(parse_graph("{ oops"), ParseError);
}
