#include <gtest/gtest.h>

#include "homalg/counterexample.hpp"
#include "homalg/error.hpp"
#include "homalg/hom.hpp"
#include "homalg/isomorphism.hpp"
#include "homalg/random.hpp"
#include "oracles.hpp"

using namespace homalg;

TEST(Counterexample, SpecValidation) {
    EXPECT_NO_THROW((CounterexampleSpec{2, 2, {2, 1}}.validate()));
    EXPECT_NO_THROW((CounterexampleSpec{3, 3, {3, 2, 1}}.validate()));
    EXPECT_THROW((CounterexampleSpec{4, 2, {2, 1}}.validate()), Error);
    EXPECT_THROW((CounterexampleSpec{2, 1, {1}}.validate()), Error);
    EXPECT_THROW((CounterexampleSpec{2, 2, {1, 1}}.validate()), Error);
    EXPECT_THROW((CounterexampleSpec{2, 2, {2, 0}}.validate()), Error);
    EXPECT_THROW((CounterexampleSpec{2, 2, {2, 1, 0}}.validate()), Error);
    EXPECT_EQ((CounterexampleSpec{2, 2, {2, 1}}.vertex_count()), 8u);
    EXPECT_EQ((CounterexampleSpec{3, 2, {2, 1}}.vertex_count()), 11u);
}

TEST(Counterexample, Shape) {
    const CounterexampleSpec spec{2, 2, {2, 1}};
    const auto h = build_counterexample(spec);
    ASSERT_EQ(h.size(), 8u);
    EXPECT_EQ(h.spec(), FieldSpec::prime(2));
    // u_1 u_2 adjacent; u_1 joined to V_1 (vertices 2..5), u_2 to V_2 (6, 7).
    EXPECT_TRUE(h.beta(0, 1).is_one());
    for (std::size_t v = 2; v < 6; ++v) {
        EXPECT_TRUE(h.beta(0, v).is_one());
        EXPECT_TRUE(h.beta(1, v).is_zero());
    }
    for (std::size_t v = 6; v < 8; ++v) {
        EXPECT_TRUE(h.beta(1, v).is_one());
        EXPECT_TRUE(h.beta(0, v).is_zero());
    }
    EXPECT_TRUE(h.beta(2, 3).is_one());
    EXPECT_TRUE(h.beta(2, 6).is_zero());
    for (std::size_t v = 0; v < 8; ++v) {
        EXPECT_TRUE(h.alpha(v).is_one());
        EXPECT_TRUE(h.beta(v, v).is_zero());
    }
    const auto control = build_counterexample(spec, FieldSpec::rationals());
    EXPECT_TRUE(control.spec().is_rationals());
}

TEST(Counterexample, CollapseMatchesBruteForce) {
    const CounterexampleSpec spec{2, 2, {2, 1}};
    const auto h = build_counterexample(spec);
    const auto ku = complete_graph(2, h.spec());
    Rng rng(21);
    for (int round = 0; round < 40; ++round) {
        const std::size_t k = round % 3;
        const std::size_t n = k + round % 3;
        const auto g = random_simple_graph(rng, k, n, false, 0.5);
        const auto phi = random_label_map(rng, k, 2);
        EXPECT_TRUE(verify_collapse(h, 2, g, phi));
        EXPECT_EQ(oracle::reduce(oracle::hom(g, h, phi.targets), h.spec()),
                  oracle::reduce(oracle::hom(g, ku, phi.targets), h.spec()));
    }
}

TEST(Counterexample, PinnedViolation) {
    ViolationOptions opt;
    opt.max_free = 3;
    const auto rep = demonstrate_violation(CounterexampleSpec{2, 2, {2, 1}}, 1, opt);
    EXPECT_TRUE(rep.violation());
    EXPECT_TRUE(rep.same_type);
    EXPECT_TRUE(rep.hom_equal);
    EXPECT_FALSE(rep.iso_exists);
    EXPECT_TRUE(rep.aut_fixes_U);
    EXPECT_TRUE(rep.aut_preserves_blocks);
    // Aut(H) = S_4 x S_2 on the blocks.
    EXPECT_EQ(rep.automorphisms, 48u);
    ASSERT_TRUE(rep.control_witness.has_value());
    EXPECT_FALSE(rep.control_witness->lhs == rep.control_witness->rhs);
    EXPECT_GT(rep.graphs_checked, 0u);
}

TEST(Counterexample, UnpinnedViolation) {
    ViolationOptions opt;
    opt.max_free = 3;
    const auto rep = demonstrate_violation(CounterexampleSpec{2, 2, {2, 1}}, 0, opt);
    EXPECT_EQ(rep.other_ells, (std::vector<std::size_t>{3, 1}));
    EXPECT_EQ(rep.other_vertices, 10u);
    EXPECT_TRUE(rep.violation());
}

TEST(Counterexample, LargerPrime) {
    ViolationOptions opt;
    opt.max_free = 2;
    const auto rep = demonstrate_violation(CounterexampleSpec{3, 2, {2, 1}}, 1, opt);
    EXPECT_EQ(rep.vertices, 11u);
    EXPECT_TRUE(rep.violation());
}
