#include "figraph/model.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace figraph;
using L = EdgeLabel;

namespace {

ValidationCode code_of(const ClassificationGraph& c) {
    auto err = validate(c);
    EXPECT_TRUE(err.has_value());
    return err ? err->code() : ValidationCode::duplicate_orbit_id;
}

const char* kneser_doc = R"({
  "orbits": [{"id": "P", "kind": "pair"}],
  "loops": [{"orbit": "P", "label": "PairDisjoint"}]
})";

} // namespace

TEST(Validate, PairOrbitWithDisjointLoopIsValid) {
    ClassificationGraph c{{{"P", OrbitKind::pair}}, {{"P", L::pair_disjoint}}, {}};
    EXPECT_FALSE(validate(c).has_value());
}

TEST(Validate, EmptyGraphIsValid) { EXPECT_FALSE(validate({}).has_value()); }

TEST(Validate, LoopOnSingletonRejected) {
    for (EdgeLabel label : all_edge_labels) {
        ClassificationGraph c{{{"S", OrbitKind::singleton}}, {{"S", label}}, {}};
        EXPECT_EQ(code_of(c), ValidationCode::loop_on_singleton) << to_string(label);
    }
}

TEST(Validate, EdgeFromSingletonToItselfIsALoop) {
    ClassificationGraph c{{{"S", OrbitKind::singleton}}, {}, {{"S", "S", L::all_to_singleton}}};
    EXPECT_EQ(code_of(c), ValidationCode::loop_on_singleton);
}

TEST(Validate, IncompatibleLoopAndEdgeLabels) {
    ClassificationGraph loop{{{"L", OrbitKind::linear}}, {{"L", L::pair_disjoint}}, {}};
    EXPECT_EQ(code_of(loop), ValidationCode::incompatible_label);

    ClassificationGraph edge{{{"P", OrbitKind::pair}, {"L", OrbitKind::linear}},
                             {},
                             {{"P", "L", L::ll_share0}}};
    EXPECT_EQ(code_of(edge), ValidationCode::incompatible_label);

    ClassificationGraph self{{{"P", OrbitKind::pair}}, {}, {{"P", "P", L::pp_share1}}};
    EXPECT_EQ(code_of(self), ValidationCode::incompatible_label);
}

TEST(Validate, UnknownReferenceAndDuplicates) {
    ClassificationGraph unknown{{{"P", OrbitKind::pair}}, {{"Q", L::pair_disjoint}}, {}};
    EXPECT_EQ(code_of(unknown), ValidationCode::unknown_orbit_ref);

    ClassificationGraph dup_label{{{"P", OrbitKind::pair}},
                                  {{"P", L::pair_disjoint}, {"P", L::pair_disjoint}},
                                  {}};
    EXPECT_EQ(code_of(dup_label), ValidationCode::duplicate_label);

    // Same edge label in the opposite orientation is still a duplicate.
    ClassificationGraph dup_edge{{{"A", OrbitKind::linear}, {"B", OrbitKind::linear}},
                                 {},
                                 {{"A", "B", L::ll_share0}, {"B", "A", L::ll_share0}}};
    EXPECT_EQ(code_of(dup_edge), ValidationCode::duplicate_label);

    ClassificationGraph dup_id{{{"A", OrbitKind::linear}, {"A", OrbitKind::pair}}, {}, {}};
    EXPECT_EQ(code_of(dup_id), ValidationCode::duplicate_orbit_id);
}

TEST(Validate, BothLinearLabelsMayJoinTheSameOrbits) {
    EXPECT_FALSE(validate(family(FamilyName::complete_bipartite)).has_value());
}

TEST(Parse, KneserDocument) {
    auto c = parse(kneser_doc);
    ASSERT_EQ(c.orbits.size(), 1u);
    EXPECT_EQ(c.orbits[0].kind, OrbitKind::pair);
    ASSERT_EQ(c.loops.size(), 1u);
    EXPECT_EQ(c.loops[0].label, L::pair_disjoint);
    EXPECT_EQ(c, family(FamilyName::kneser2));
}

TEST(Parse, OrderedPairKindRejected) {
    try {
        parse(R"({"orbits": [{"id": "O", "kind": "ordered-pair"}]})");
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.code(), ValidationCode::ordered_pair_unsupported);
    }
}

TEST(Parse, MalformedJsonReportsPosition) {
    try {
        parse("{\n  \"orbits\": [\n    {\"id\": \"P\" \"kind\": \"pair\"}\n  ]\n}");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_GT(e.column(), 1u);
    }
}

TEST(Parse, SchemaErrors) {
    EXPECT_THROW(parse("[]"), ParseError);
    EXPECT_THROW(parse(R"({"orbits": [{"id": "P"}]})"), ParseError);
    EXPECT_THROW(parse(R"({"orbits": [{"id": "P", "kind": "cube"}]})"), ParseError);
    EXPECT_THROW(parse(R"({"orbits": [{"id": "P", "kind": "pair"}],
                          "loops": [{"orbit": "P", "label": "Nope"}]})"),
                 ParseError);
    EXPECT_THROW(parse(R"({"orbits": {}})"), ParseError);
}

TEST(Serialize, RoundTripIsByteEqualAfterCanonicalization) {
    const auto kk = family(FamilyName::complete_bipartite);
    const std::string text = serialize(canonicalize(kk));
    EXPECT_EQ(serialize(canonicalize(parse(text))), text);
}

TEST(Serialize, DigestIgnoresDeclarationOrder) {
    auto c = family(FamilyName::copies_of_kneser2, {.k = 3});
    auto shuffled = c;
    std::reverse(shuffled.orbits.begin(), shuffled.orbits.end());
    std::reverse(shuffled.edges.begin(), shuffled.edges.end());
    for (auto& e : shuffled.edges)
        std::swap(e.a, e.b);
    EXPECT_EQ(digest(c), digest(shuffled));
    EXPECT_NE(digest(c), digest(family(FamilyName::copies_of_kneser2, {.k = 2})));
}

TEST(Family, Kneser2) {
    auto c = family(FamilyName::kneser2);
    ASSERT_EQ(c.orbits.size(), 1u);
    EXPECT_EQ(c.orbits[0].kind, OrbitKind::pair);
    EXPECT_EQ(c.loop_labels("P"), std::vector<EdgeLabel>{L::pair_disjoint});
}

TEST(Family, CompleteBipartite) {
    auto c = family(FamilyName::complete_bipartite);
    EXPECT_EQ(c.count(OrbitKind::linear), 2u);
    EXPECT_TRUE(c.loops.empty());
    EXPECT_EQ(c.edge_labels("L1", "L2"), (std::vector<EdgeLabel>{L::ll_share0, L::ll_share1}));
}

TEST(Family, CopiesOfKneser2) {
    auto c = family(FamilyName::copies_of_kneser2, {.k = 2});
    EXPECT_EQ(c.count(OrbitKind::pair), 2u);
    for (const auto& o : c.orbits)
        EXPECT_EQ(c.loop_labels(o.id), std::vector<EdgeLabel>{L::pair_disjoint});
    EXPECT_EQ(c.edge_labels("P1", "P2"), (std::vector<EdgeLabel>{L::pp_share1, L::pp_share2}));
}

TEST(Family, NamesRoundTrip) {
    for (auto [name, text] : family_names) {
        EXPECT_EQ(family_from_string(text), name);
        EXPECT_EQ(to_string(name), text);
    }
    EXPECT_FALSE(family_from_string("petersen").has_value());
}

TEST(Family, DisjointUnionNeedsSubFamily) {
    EXPECT_THROW(family(FamilyName::disjoint_union, {.k = 2}), std::invalid_argument);
    auto c = family(FamilyName::disjoint_union, {.k = 3, .sub = FamilyName::johnson2});
    EXPECT_EQ(c.count(OrbitKind::pair), 3u);
    EXPECT_EQ(c.edges.size(), 0u);
}

TEST(Predicates, Families) {
    auto kneser = family(FamilyName::kneser2);
    EXPECT_FALSE(has_quadratic_independent_orbit(kneser));
    EXPECT_FALSE(has_johnson_orbit(kneser));

    auto johnson = family(FamilyName::johnson2);
    EXPECT_FALSE(has_quadratic_independent_orbit(johnson));
    EXPECT_TRUE(has_johnson_orbit(johnson));
    EXPECT_TRUE(has_isolated_johnson_orbit(johnson));

    ClassificationGraph bare{{{"P", OrbitKind::pair}}, {}, {}};
    EXPECT_TRUE(has_quadratic_independent_orbit(bare));
    EXPECT_FALSE(has_johnson_orbit(bare));

    auto shifted = family(FamilyName::johnson_union_shifted);
    EXPECT_TRUE(has_johnson_orbit(shifted));
    EXPECT_TRUE(has_isolated_johnson_orbit(shifted)); // P2 has no edges
}

TEST(Random, AllLabelsPresentAtProbabilityOne) {
    RandomGenParams p;
    p.pair = {2, 2};
    p.linear = {0, 0};
    p.singleton = {1, 1};
    p.p = 1.0;
    auto c = random_classification(p);
    EXPECT_EQ(c.loops.size(), 4u);
    std::size_t pp = 0, to_singleton = 0;
    for (const auto& e : c.edges) {
        pp += e.label == L::pp_share0 || e.label == L::pp_share1 || e.label == L::pp_share2;
        to_singleton += e.label == L::all_to_singleton;
    }
    EXPECT_EQ(pp, 3u);
    EXPECT_EQ(to_singleton, 2u);
    EXPECT_EQ(c.edges.size(), 5u);
}

TEST(Random, ProbabilityZeroGivesBareOrbits) {
    RandomGenParams p;
    p.pair = {1, 1};
    p.linear = {1, 1};
    p.p = 0.0;
    auto c = random_classification(p);
    EXPECT_TRUE(c.loops.empty());
    EXPECT_TRUE(c.edges.empty());
}

TEST(Random, NoPairOrbitsMeansVertexLinear) {
    RandomGenParams p;
    p.pair = {0, 0};
    p.linear = {1, 3};
    p.singleton = {0, 2};
    for (std::uint64_t s = 0; s < 50; ++s) {
        p.seed = s;
        auto c = random_classification(p);
        EXPECT_EQ(c.count(OrbitKind::pair), 0u);
        EXPECT_FALSE(has_quadratic_independent_orbit(c));
    }
}

TEST(Random, DeterministicForSeed) {
    RandomGenParams p;
    p.seed = 1234;
    EXPECT_EQ(serialize(random_classification(p)), serialize(random_classification(p)));
}

TEST(Random, OutputsValidAndVaried) {
    RandomGenParams p;
    p.pair = {0, 3};
    p.linear = {0, 2};
    p.singleton = {0, 2};
    for (std::uint64_t s = 0; s < 100; ++s) {
        p.seed = splitmix64(s);
        auto c = random_classification(p);
        EXPECT_FALSE(validate(c).has_value());
        EXPECT_LE(c.count(OrbitKind::pair), 3u);
        EXPECT_LE(c.count(OrbitKind::linear), 2u);
        EXPECT_LE(c.count(OrbitKind::singleton), 2u);
    }
}

TEST(Random, DifferentSeedsGiveDifferentGraphs) {
    // At least 2 pair, 1 linear and 1 singleton orbit: 15 or more independent
    // label draws, so 100 seeds should almost never collide.
    RandomGenParams p;
    p.pair = {2, 3};
    p.linear = {1, 2};
    p.singleton = {1, 2};
    std::set<std::string> distinct;
    for (std::uint64_t s = 0; s < 100; ++s) {
        p.seed = splitmix64(s);
        distinct.insert(serialize(random_classification(p)));
    }
    EXPECT_GE(distinct.size(), 99u);
}

TEST(Random, ParamsRoundTripAndChecks) {
    RandomGenParams p;
    p.pair = {1, 2};
    p.p = 0.25;
    p.seed = 99;
    auto q = random_params_from_json(nlohmann::json::parse(to_json(p).dump()));
    EXPECT_EQ(to_json(q), to_json(p));

    p.pair = {3, 1};
    EXPECT_THROW(check_params(p), std::invalid_argument);
    p.pair = {0, 1};
    p.p = 1.5;
    EXPECT_THROW(check_params(p), std::invalid_argument);
}

TEST(PortableRng, UniformStaysInRange) {
    PortableRng rng(5);
    std::set<std::int64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        auto x = rng.uniform(-3, 3);
        ASSERT_GE(x, -3);
        ASSERT_LE(x, 3);
        seen.insert(x);
    }
    EXPECT_EQ(seen.size(), 7u);
}
