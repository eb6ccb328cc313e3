#include <gtest/gtest.h>

#include "homalg/error.hpp"
#include "homalg/hom.hpp"
#include "homalg/isomorphism.hpp"
#include "homalg/random.hpp"
#include "homalg/twin.hpp"
#include "oracles.hpp"

using namespace homalg;

namespace {
const FieldSpec Q = FieldSpec::rationals();

// All labels land on the graph in blocks of `per` labels per vertex, in order.
LabelMap blocks_of(std::size_t m, std::size_t per) {
    LabelMap out;
    for (std::size_t v = 0; v < m; ++v) {
        for (std::size_t c = 0; c < per; ++c) out.targets.push_back(v);
    }
    return out;
}

std::vector<std::size_t> targets(const LabelMap& phi) { return phi.targets; }

void expect_separates(const WitnessResult& w, const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi,
                      const LabelMap& psi) {
    EXPECT_TRUE(is_simple(w.graph));
    EXPECT_EQ(w.graph.k(), phi.k());
    EXPECT_TRUE(oracle::same(w.lhs, oracle::hom(w.graph, h, targets(phi))));
    EXPECT_TRUE(oracle::same(w.rhs, oracle::hom(w.graph, hp, targets(psi))));
    EXPECT_FALSE(w.lhs == w.rhs);
}
}  // namespace

TEST(Iso, IsIsomorphism) {
    const auto h = WeightedGraph::from_ints(Q, false, {1, 2}, {{0, 3}, {3, 1}});
    const auto hp = WeightedGraph::from_ints(Q, false, {2, 1}, {{1, 3}, {3, 0}});
    EXPECT_TRUE(is_isomorphism(h, hp, {1, 0}));
    EXPECT_FALSE(is_isomorphism(h, hp, {0, 1}));
    EXPECT_FALSE(is_isomorphism(h, hp, {0, 0}));
    EXPECT_FALSE(is_isomorphism(h, hp, {1}));
}

TEST(Iso, EnumerationMatchesBruteForce) {
    Rng rng(11);
    for (int round = 0; round < 60; ++round) {
        const std::size_t m = 1 + round % 4;
        const bool directed = round % 3 == 0;
        const auto h = random_weighted_graph(rng, Q, m, directed, {1, 2});
        const auto hp = round % 2 == 0 ? h.permuted(random_permutation(rng, m))
                                       : random_weighted_graph(rng, Q, m, directed, {1, 2});
        auto mine = enumerate_isomorphisms(h, hp);
        auto ref = oracle::isomorphisms(h, hp);
        std::sort(mine.begin(), mine.end());
        EXPECT_EQ(mine, ref);
        EXPECT_EQ(enumerate_automorphisms(h).size(), oracle::isomorphisms(h, h).size());
    }
}

TEST(Iso, EnumerationBudget) {
    Limits tight;
    tight.oracle_max_vertices = 3;
    const auto h = WeightedGraph::from_ints(Q, false, {1, 1, 1, 1}, std::vector<std::vector<std::int64_t>>(4, {1, 1, 1, 1}));
    EXPECT_THROW(enumerate_isomorphisms(h, h, tight), Error);
}

TEST(Iso, SameType) {
    EXPECT_TRUE(same_type(LabelMap{{0, 0, 1}}, LabelMap{{2, 2, 0}}));
    EXPECT_FALSE(same_type(LabelMap{{0, 0, 1}}, LabelMap{{2, 1, 0}}));
    EXPECT_FALSE(same_type(LabelMap{{0, 1, 2}}, LabelMap{{0, 0, 2}}));
}

TEST(Iso, RecoverFindsPermutation) {
    Rng rng(5);
    for (int round = 0; round < 20; ++round) {
        const std::size_t m = 1 + round % 3;
        const auto h = random_twin_free_graph(rng, Q, m, round % 2 == 1, {-1, 1, 2});
        const auto p = random_permutation(rng, m);
        const auto hp = h.permuted(p);
        const auto phi = blocks_of(m, 4 * m * m);
        const auto psi = compose(p, phi);
        const auto cert = recover_isomorphism(h, hp, phi, psi);
        ASSERT_TRUE(cert.iso());
        EXPECT_TRUE(is_isomorphism(h, hp, cert.sigma));
        EXPECT_EQ(compose(cert.sigma, phi), psi);
    }
}

TEST(Iso, RecoverSeparatesNonIsomorphic) {
    Rng rng(6);
    int separated = 0;
    for (int round = 0; round < 20; ++round) {
        const std::size_t m = 1 + round % 2;
        const auto h = random_twin_free_graph(rng, Q, m, false, {-1, 1, 2});
        const auto hp = random_weighted_graph(rng, Q, m, false, {-1, 1, 2});
        const auto phi = blocks_of(m, 4 * m * m);
        const auto psi = random_label_map(rng, phi.k(), m);
        const auto cert = recover_isomorphism(h, hp, phi, psi);
        const bool oracle_iso = [&] {
            for (const auto& s : oracle::isomorphisms(h, hp)) {
                if (compose(s, phi) == psi) return true;
            }
            return false;
        }();
        EXPECT_EQ(cert.iso(), oracle_iso);
        if (!cert.iso()) {
            ASSERT_TRUE(cert.witness.has_value());
            expect_separates(*cert.witness, h, hp, phi, psi);
            ++separated;
        }
    }
    EXPECT_GT(separated, 0);
}

TEST(Iso, RecoverPreconditions) {
    const auto h = WeightedGraph::from_ints(Q, false, {1, 1}, {{0, 1}, {1, 2}});
    // Too few labels per vertex.
    EXPECT_THROW(recover_isomorphism(h, h, blocks_of(2, 3), blocks_of(2, 3)), Error);
    // Twins in H.
    const auto twins = WeightedGraph::from_ints(Q, false, {1, 1}, {{1, 1}, {1, 1}});
    EXPECT_THROW(recover_isomorphism(twins, twins, blocks_of(2, 16), blocks_of(2, 16)), Error);
}

TEST(Iso, ModesAgree) {
    Rng rng(9);
    for (int round = 0; round < 80; ++round) {
        const std::size_t m = 1 + round % 3;
        const std::size_t k = round % 3;
        const bool directed = round % 4 == 3;
        const auto h = random_twin_free_graph(rng, Q, m, directed, {-1, 1, 2});
        const bool twin = round % 2 == 0;
        const auto p = random_permutation(rng, m);
        const auto hp = twin ? h.permuted(p) : random_twin_free_graph(rng, Q, m, directed, {-1, 1, 2});
        const auto phi = random_label_map(rng, k, m);
        const auto psi = twin && round % 4 == 0 ? compose(p, phi) : random_label_map(rng, k, m);

        DecideOptions oracle_opt;
        oracle_opt.mode = DecideMode::Oracle;
        DecideOptions proof_opt;
        proof_opt.mode = DecideMode::Constructive;
        const auto a = decide_pinned_iso(h, hp, phi, psi, oracle_opt);
        const auto b = decide_pinned_iso(h, hp, phi, psi, proof_opt);
        const auto c = decide_pinned_iso(h, hp, phi, psi);
        EXPECT_EQ(a.iso(), b.iso());
        EXPECT_EQ(a.iso(), c.iso());
        for (const auto* cert : {&a, &b, &c}) {
            if (cert->iso()) {
                EXPECT_TRUE(is_isomorphism(h, hp, cert->sigma));
                EXPECT_EQ(compose(cert->sigma, phi), psi);
            } else if (cert->witness) {
                expect_separates(*cert->witness, h, hp, phi, psi);
            }
        }
    }
}

TEST(Iso, DecideErrors) {
    const auto h = WeightedGraph::from_ints(Q, false, {1}, {{1}});
    const auto d = WeightedGraph::from_ints(Q, true, {1}, {{1}});
    const auto f = WeightedGraph::from_ints(FieldSpec::prime(5), false, {1}, {{1}});
    EXPECT_THROW(decide_pinned_iso(h, d, {}, {}), Error);
    EXPECT_THROW(decide_pinned_iso(h, f, {}, {}), Error);
    EXPECT_THROW(decide_pinned_iso(h, h, LabelMap{{0}}, {}), Error);
    EXPECT_THROW(decide_pinned_iso(h, h, LabelMap{{1}}, LabelMap{{0}}), Error);
    const auto twins = WeightedGraph::from_ints(Q, false, {1, 1}, {{1, 1}, {1, 1}});
    DecideOptions proof_opt;
    proof_opt.mode = DecideMode::Constructive;
    try {
        (void)decide_pinned_iso(twins, twins, {}, {}, proof_opt);
        FAIL() << "expected a precondition error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
    }
}

TEST(Iso, CustomSearchIsUsed) {
    const auto h = WeightedGraph::from_ints(Q, false, {1}, {{1}});
    const auto hp = WeightedGraph::from_ints(Q, false, {1}, {{2}});
    DecideOptions opt;
    opt.mode = DecideMode::Oracle;
    bool called = false;
    opt.search = [&](const WeightedGraph&, const WeightedGraph&, const LabelMap&, const LabelMap&) {
        called = true;
        return std::optional<WitnessResult>{};
    };
    const auto cert = decide_pinned_iso(h, hp, {}, {}, opt);
    EXPECT_TRUE(called);
    EXPECT_FALSE(cert.iso());
    EXPECT_FALSE(cert.witness.has_value());
}

TEST(Iso, TwinLevel) {
    // Vertices 0 and 1 are twins; the contraction is a weighted two-vertex graph.
    const auto h = WeightedGraph::from_ints(Q, false, {1, 1, 1}, {{0, 0, 1}, {0, 0, 1}, {1, 1, 1}});
    const auto hp = h.permuted(std::vector<std::size_t>{2, 0, 1});
    const auto res = decide_twin_level(h, hp, LabelMap{{2}}, LabelMap{{1}});
    EXPECT_TRUE(res.certificate.iso());
    EXPECT_EQ(res.classes_a.size(), 2u);
    EXPECT_EQ(res.classes_b.size(), 2u);
    ASSERT_EQ(res.class_sigma.size(), 2u);
    // Pinning into the twin class on one side and the loop vertex on the other fails.
    EXPECT_FALSE(decide_twin_level(h, hp, LabelMap{{0}}, LabelMap{{1}}).certificate.iso());

    const auto weighted = WeightedGraph::from_ints(Q, false, {2, 1}, {{0, 1}, {1, 0}});
    EXPECT_THROW(decide_twin_level(weighted, weighted, {}, {}), Error);
}
