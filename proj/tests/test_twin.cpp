#include <gtest/gtest.h>

#include "homalg/counterexample.hpp"
#include "homalg/hom.hpp"
#include "homalg/random.hpp"
#include "homalg/twin.hpp"
#include "oracles.hpp"

using namespace homalg;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST(Twin, Partition) {
    const auto all = WeightedGraph::from_ints(Q, false, {1, 2, 3}, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    EXPECT_EQ(twin_partition(all).size(), 1u);
    const auto k2 = WeightedGraph::from_ints(Q, false, {1, 1}, {{0, 1}, {1, 0}});
    EXPECT_EQ(twin_partition(k2).size(), 2u);
    EXPECT_TRUE(is_twin_free(build_counterexample(CounterexampleSpec{})));
    EXPECT_TRUE(is_twin_free(WeightedGraph::from_ints(Q, false, {5}, {{2}})));
    EXPECT_FALSE(is_twin_free(WeightedGraph::from_ints(Q, false, {1, 1}, {{2, 2}, {2, 2}})));
    // Directed: equal rows are not enough.
    const auto d = WeightedGraph::from_ints(Q, true, {1, 1, 1}, {{0, 0, 1}, {0, 0, 1}, {1, 0, 0}});
    EXPECT_EQ(twin_partition(d).size(), 3u);
}

TEST(Twin, Contraction) {
    const auto pair = WeightedGraph::from_ints(Q, false, {1, 1}, {{2, 2}, {2, 2}});
    const auto c = contract(pair);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.alpha(0).to_string(), "2");
    EXPECT_EQ(c.beta(0, 0).to_string(), "2");

    const auto cancel = WeightedGraph::from_ints(Q, false, {1, -1, 3}, {{2, 2, 1}, {2, 2, 1}, {1, 1, 0}});
    const auto cc = contract_with_map(cancel);
    ASSERT_EQ(cc.graph.size(), 1u);
    EXPECT_EQ(cc.graph.alpha(0).to_string(), "3");
    EXPECT_FALSE(cc.vertex_map[0].has_value());
    EXPECT_EQ(cc.vertex_map[2], std::optional<std::size_t>(0));

    const auto tf = WeightedGraph::from_ints(Q, false, {1, 2}, {{0, 1}, {1, 1}});
    EXPECT_EQ(contract(tf), tf);
}

TEST(Twin, ZeroSumOverPrimeField) {
    const auto F3 = FieldSpec::prime(3);
    const auto h = WeightedGraph::from_ints(F3, false, {1, 2, 1}, {{1, 1, 2}, {1, 1, 2}, {2, 2, 1}});
    const auto c = contract(h);
    EXPECT_EQ(c.size(), 1u);
    for (std::size_t n = 1; n <= 4; ++n) {
        const LabeledGraph path(0, n, false, [&] {
            std::vector<Edge> es;
            for (std::size_t v = 0; v + 1 < n; ++v) es.push_back({v, v + 1, 1});
            return es;
        }());
        EXPECT_EQ(hom(path, h), hom(path, c));
    }
}

TEST(Twin, ContractionCanCascade) {
    // Removing the cancelling pair {0,1} makes 2 and 3 twins.
    const auto h = WeightedGraph::from_ints(Q, false, {1, -1, 1, 2},
                                            {{0, 0, 1, 2}, {0, 0, 1, 2}, {1, 1, 1, 1}, {2, 2, 1, 1}});
    const auto c = contract(h);
    EXPECT_TRUE(is_twin_free(c));
    EXPECT_EQ(c.size(), 1u);
    EXPECT_EQ(c.alpha(0).to_string(), "3");
}

TEST(Twin, HomPreservedAndIdempotent) {
    Rng rng(8);
    for (int i = 0; i < 60; ++i) {
        const auto spec = i % 2 ? FieldSpec::prime(3) : Q;
        const auto h = random_weighted_graph(rng, spec, 1 + i % 4, i % 5 == 0, {-1, 1, 2});
        const auto c = contract(h);
        EXPECT_TRUE(oracle::twin_free(c));
        EXPECT_EQ(contract(c), c);
        for (int t = 0; t < 5; ++t) {
            const auto g = random_labeled_graph(rng, 0, 1 + t, h.directed(), 0.5);
            EXPECT_EQ(hom(g, h), hom(g, c));
        }
    }
}
