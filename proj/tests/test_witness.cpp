#include <gtest/gtest.h>

#include <set>

#include "homalg/error.hpp"
#include "homalg/hom.hpp"
#include "homalg/isomorphism.hpp"
#include "homalg/random.hpp"
#include "homalg/witness.hpp"
#include "oracles.hpp"

using namespace homalg;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST(Witness, GKappaShapes) {
    const auto none = build_G_kappa(ArrowWord(3, Arrow::None));
    EXPECT_EQ(none.k(), 3u);
    EXPECT_EQ(none.n(), 4u);
    EXPECT_EQ(none.edge_count(), 0u);
    const auto zero = build_G_kappa({});
    EXPECT_EQ(zero.n(), 1u);
    EXPECT_EQ(zero.k(), 0u);
    const auto down = build_G_kappa({Arrow::Down});
    EXPECT_EQ(down.multiplicity(1, 0), 1u);
    EXPECT_TRUE(is_simple(build_G_kappa({Arrow::Down, Arrow::Up, Arrow::None})));
    EXPECT_TRUE(is_simple(build_G_kappa({Arrow::Down, Arrow::Up}, false)));
}

TEST(Witness, GKappaValues) {
    Rng rng(21);
    const auto h = random_weighted_graph(rng, Q, 3, true, {-1, 1, 2, 3});
    FieldValue alpha_sum = FieldValue::zero(Q);
    for (auto a : h.alphas()) alpha_sum += a;
    EXPECT_EQ(hom_partial(build_G_kappa(ArrowWord(2, Arrow::None)), h, LabelMap{{0, 2}}), alpha_sum);
    for (std::size_t w = 0; w < 3; ++w) {
        FieldValue want = FieldValue::zero(Q);
        for (std::size_t i = 0; i < 3; ++i) want += h.alpha(i) * h.beta(i, w);
        EXPECT_EQ(hom_partial(build_G_kappa({Arrow::Down}), h, LabelMap{{w}}), want);
    }
}

TEST(Witness, GLambdaTau) {
    const auto g = build_G_lambda_tau(ArrowWord(2, Arrow::None), ArrowWord(2, Arrow::None));
    EXPECT_EQ(g.n(), 4u);
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(build_G_lambda_tau({}, {}).n(), 2u);
    Rng rng(22);
    for (int t = 0; t < 20; ++t) {
        const bool dir = t % 2;
        const std::size_t m = 1 + t % 3;
        const auto h = random_weighted_graph(rng, Q, m, dir, {-1, 1, 2});
        ArrowWord lam, tau;
        for (int i = 0; i < 2; ++i) {
            lam.push_back(static_cast<Arrow>(std::uniform_int_distribution<int>(0, 2)(rng)));
            tau.push_back(static_cast<Arrow>(std::uniform_int_distribution<int>(0, 2)(rng)));
        }
        const auto phi = random_label_map(rng, 2, m);
        const auto gl = build_G_lambda_tau(lam, tau, dir);
        EXPECT_TRUE(is_simple(gl));
        // Closed form: sum_{i,j} a_i a_j b_ij prod_r (factor of lambda at i) (factor of tau at j).
        auto factor = [&](Arrow a, std::size_t x, std::size_t u) {
            if (a == Arrow::Down) return h.beta(x, u);
            if (a == Arrow::Up) return h.beta(u, x);
            return FieldValue::one(Q);
        };
        FieldValue want = FieldValue::zero(Q);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                FieldValue term = h.alpha(i) * h.alpha(j) * h.beta(i, j);
                for (std::size_t r = 0; r < 2; ++r) term *= factor(lam[r], i, phi[r]) * factor(tau[r], j, phi[r]);
                want += term;
            }
        EXPECT_EQ(hom_partial(gl, h, phi), want);
        EXPECT_TRUE(oracle::same(want, oracle::hom(gl, h, phi.targets)));
    }
}

TEST(Witness, FamilyR) {
    const std::vector<std::vector<std::size_t>> blocks{{0, 1, 2, 3}};
    const auto r = build_family_R(4, blocks, 1);
    EXPECT_EQ(r.size(), 4u);
    EXPECT_NE(std::find(r.begin(), r.end(), ArrowWord(4, Arrow::None)), r.end());
    std::set<ArrowWord> distinct(r.begin(), r.end());
    EXPECT_EQ(distinct.size(), r.size());
    EXPECT_THROW(build_family_R(3, {{0, 1, 2}}, 1), Error);
    const std::vector<std::vector<std::size_t>> two{{0, 1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11, 12, 13, 14, 15}};
    EXPECT_EQ(build_family_R(16, two, 2).size(), 256u);
}

TEST(Witness, ClosedFormOfProfileWords) {
    // hom_phi(G_chi, H) = sum_i a_i prod_j b_ij^{k_j} b_ji^{l_j} when J_j all map to j.
    Rng rng(23);
    const std::size_t m = 2;
    const auto h = random_weighted_graph(rng, Q, m, true, {-1, 1, 2, 3});
    const std::vector<std::vector<std::size_t>> blocks{{0, 1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11, 12, 13, 14, 15}};
    LabelMap phi;
    for (std::size_t i = 0; i < 16; ++i) phi.targets.push_back(i / 8);
    for (int t = 0; t < 10; ++t) {
        ExponentProfile p;
        for (std::size_t j = 0; j < m; ++j) {
            p.down.push_back(std::uniform_int_distribution<std::uint64_t>(0, 3)(rng));
            p.up.push_back(std::uniform_int_distribution<std::uint64_t>(0, 3)(rng));
        }
        const auto g = build_G_kappa(word_for_profile(16, blocks, p));
        FieldValue want = FieldValue::zero(Q);
        for (std::size_t i = 0; i < m; ++i) {
            FieldValue term = h.alpha(i);
            for (std::size_t j = 0; j < m; ++j) term *= h.beta(i, j).pow(p.down[j]) * h.beta(j, i).pow(p.up[j]);
            want += term;
        }
        EXPECT_EQ(hom_partial(g, h, phi), want);
    }
}

TEST(Witness, ChooseBlocks) {
    LabelMap phi, psi;
    for (std::size_t i = 0; i < 8; ++i) {
        phi.targets.push_back(0);
        psi.targets.push_back(i < 5 ? 1 : 0);
    }
    const auto b = choose_blocks(phi, psi, 1, 4);
    ASSERT_EQ(b.blocks.size(), 1u);
    EXPECT_EQ(b.blocks[0], (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(b.target[0], 1u);
}

TEST(Witness, ExtendMap) {
    const auto empty = WeightedGraph(Q, false, {}, {});
    const auto e0 = extend_map(LabelMap{}, empty);
    EXPECT_EQ(e0.ell, 0u);
    const auto one = WeightedGraph::from_ints(Q, false, {1}, {{1}});
    const LabelMap four{{0, 0, 0, 0}};
    EXPECT_EQ(extend_map(four, one).ell, 4u);
    EXPECT_EQ(extend_map(four, one).eta, four);
    const auto two = WeightedGraph::from_ints(Q, false, {1, 2}, {{1, 0}, {0, 1}});
    const auto e2 = extend_map(LabelMap{}, two);
    EXPECT_EQ(e2.ell, 32u);
    EXPECT_EQ(std::count(e2.eta.targets.begin(), e2.eta.targets.end(), 0u), 16);
    const auto e3 = extend_map(LabelMap{{1, 1}}, two);
    EXPECT_EQ(e3.ell, 32u);
    EXPECT_EQ(e3.eta[0], 1u);
}

TEST(Witness, SimpleGraphCounts) {
    // Unlabeled simple graphs on 0..5 vertices: 1, 1, 2, 4, 11, 34.
    const std::size_t want[] = {1, 1, 2, 4, 11, 34};
    for (std::size_t f = 0; f <= 5; ++f) EXPECT_EQ(simple_graphs(0, f, false).size(), want[f]) << f;
    // Oriented graphs (no 2-cycles) on 0..4 vertices: 1, 1, 2, 7, 42.
    const std::size_t dwant[] = {1, 1, 2, 7, 42};
    for (std::size_t f = 0; f <= 4; ++f) EXPECT_EQ(simple_graphs(0, f, true).size(), dwant[f]) << f;
    for (const auto& g : simple_graphs(2, 3, false)) EXPECT_TRUE(is_simple(g));
}

TEST(Witness, FindWitness) {
    const auto a = WeightedGraph::from_ints(Q, false, {1, 1}, {{0, 1}, {1, 0}});
    const auto b = WeightedGraph::from_ints(Q, false, {1, 1}, {{1, 1}, {1, 0}});
    const auto w = find_witness(a, b, {}, {});
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_simple(w->graph));
    EXPECT_NE(w->lhs, w->rhs);
    EXPECT_EQ(hom(w->graph, a), w->lhs);
    EXPECT_FALSE(find_witness(a, a, {}, {}).has_value());
    // Pinned: K_2 swap automorphism makes the two pinnings equivalent.
    EXPECT_FALSE(find_witness(a, a, LabelMap{{0}}, LabelMap{{1}}).has_value());
}

TEST(Witness, SeparatingSet) {
    Rng rng(24);
    const auto h = WeightedGraph::from_ints(Q, false, {1, 2}, {{1, 2}, {2, -1}});
    const auto ext = extend_map(LabelMap{}, h);
    // Free only the last three labels; the full enumeration would be 2^32 maps.
    const auto set = build_separating_set(h, h, ext.eta, ext.eta, ext.ell - 3);
    for (const auto& g : set) {
        EXPECT_TRUE(is_simple(g));
        EXPECT_EQ(g.k(), ext.ell);
    }
    // Rigid H: every map other than eta is separated from eta by something.
    EXPECT_FALSE(set.empty());
    EXPECT_THROW(build_separating_set(h, h, ext.eta, LabelMap{}, 0), Error);
}

TEST(Witness, QFamily) {
    const auto h = WeightedGraph::from_ints(Q, false, {1}, {{2}});
    QFamily fam(h, h, LabelMap{{0, 0, 0, 0}}, LabelMap{{0, 0, 0, 0}});
    EXPECT_EQ(fam.ell(), 4u);
    EXPECT_TRUE(fam.separating_set().empty());
    const auto first = fam.next();
    ASSERT_TRUE(first.has_value());
    const auto g = fam.materialize(*first);
    EXPECT_EQ(g.k(), 4u);
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_FALSE(fam.next().has_value());
    EXPECT_EQ(fam.evaluate(*first, 0), fam.evaluate(*first, 1));
}
