#include "homalg/selftest.hpp"

#include <functional>

#include "homalg/counterexample.hpp"
#include "homalg/hom.hpp"
#include "homalg/isomorphism.hpp"
#include "homalg/random.hpp"
#include "homalg/tensor.hpp"
#include "homalg/twin.hpp"
#include "homalg/vandermonde.hpp"

namespace homalg {

bool SelftestReport::passed() const noexcept {
    for (const auto& c : checks) {
        if (!c.passed()) return false;
    }
    return true;
}

namespace {

const std::vector<std::int64_t> kWeights{-2, -1, 0, 1, 2, 3};

FieldSpec pick_field(Rng& rng) {
    return std::bernoulli_distribution(0.5)(rng) ? FieldSpec::rationals() : FieldSpec::prime(5);
}

SelftestCheck run(const std::string& name, std::size_t cases, Rng& rng,
                  const std::function<bool(Rng&, std::string&)>& body) {
    SelftestCheck c;
    c.name = name;
    for (std::size_t i = 0; i < cases; ++i) {
        ++c.cases;
        std::string why;
        bool ok = false;
        try {
            ok = body(rng, why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (!ok) {
            if (c.failures++ == 0) c.detail = "case " + std::to_string(i) + ": " + why;
        }
    }
    return c;
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed) {
    SelftestReport rep;
    rep.seed = seed;
    Rng rng(seed);

    rep.checks.push_back(run("field inverses and powers", 200, rng, [](Rng& r, std::string& why) {
        const auto spec = pick_field(r);
        const auto a = random_nonzero(r, spec, 50);
        const auto b = FieldValue::from_ratio(std::uniform_int_distribution<int>(1, 9)(r), 7, spec);
        why = a.to_string();
        return (a * a.inverse()).is_one() && a.pow(3) * a.pow(4) == a.pow(7) && (a + b) * a == a * a + b * a;
    }));

    rep.checks.push_back(run("decomposition over pinnings", 40, rng, [](Rng& r, std::string&) {
        const auto spec = pick_field(r);
        const bool dir = std::bernoulli_distribution(0.3)(r);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 5)(r);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(2, n))(r);
        const auto g = random_labeled_graph(r, k, n, dir, 0.4);
        const auto h = random_weighted_graph(r, spec, std::uniform_int_distribution<std::size_t>(1, 3)(r), dir, kWeights);
        return hom_decomposition_check(g, h);
    }));

    rep.checks.push_back(run("multiplicativity of glue", 40, rng, [](Rng& r, std::string&) {
        const auto spec = pick_field(r);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 2)(r);
        const auto g1 = random_labeled_graph(r, k, k + 2, false, 0.5);
        const auto g2 = random_labeled_graph(r, k, k + 2, false, 0.5);
        const auto h = random_weighted_graph(r, spec, 3, false, kWeights);
        const auto psi = random_label_map(r, k, 3);
        return hom_partial(glue(g1, g2), h, psi) == hom_partial(g1, h, psi) * hom_partial(g2, h, psi);
    }));

    rep.checks.push_back(run("twin contraction keeps hom", 30, rng, [](Rng& r, std::string&) {
        const auto spec = pick_field(r);
        auto h = random_weighted_graph(r, spec, 4, false, {-1, 1, 2});
        const auto c = contract(h);
        for (int t = 0; t < 4; ++t) {
            const auto g = random_labeled_graph(r, 0, std::uniform_int_distribution<std::size_t>(1, 4)(r), false, 0.5, 1);
            if (!(hom(g, h) == hom(g, c))) return false;
        }
        return is_twin_free(c);
    }));

    rep.checks.push_back(run("cancellation of moments", 150, rng, [](Rng& r, std::string&) {
        const auto spec = pick_field(r);
        const auto s = std::uniform_int_distribution<std::size_t>(1, 3)(r);
        const auto sys = random_moment_system(r, spec, std::uniform_int_distribution<std::size_t>(0, 6)(r), s, true);
        const auto zero = random_cancelling_system(r, spec, 3, s);
        return cancellation_conclusion_check(sys) && verify_moments(zero, zero.size()) &&
               !find_nonvanishing_moment(zero).has_value();
    }));

    rep.checks.push_back(run("constructive recovery", 10, rng, [](Rng& r, std::string& why) {
        const auto m = std::uniform_int_distribution<std::size_t>(1, 3)(r);
        const bool dir = std::bernoulli_distribution(0.5)(r);
        const auto h = random_twin_free_graph(r, FieldSpec::rationals(), m, dir, {-1, 1, 2});
        const auto p = random_permutation(r, m);
        const auto ext = extend_map(LabelMap{}, h);
        const auto cert = recover_isomorphism(h, h.permuted(p), ext.eta, compose(p, ext.eta));
        why = "m=" + std::to_string(m);
        return cert.iso() && cert.sigma == p;
    }));

    rep.checks.push_back(run("oracle and recovery agree", 25, rng, [](Rng& r, std::string&) {
        const auto m = std::uniform_int_distribution<std::size_t>(1, 2)(r);
        const auto h = random_twin_free_graph(r, FieldSpec::rationals(), m, false, {-1, 1, 2});
        const auto hp = std::bernoulli_distribution(0.5)(r)
                            ? h.permuted(random_permutation(r, m))
                            : random_twin_free_graph(r, FieldSpec::rationals(), m, false, {-1, 1, 2});
        const auto k = std::uniform_int_distribution<std::size_t>(0, 1)(r);
        const auto phi = random_label_map(r, k, m);
        const auto psi = random_label_map(r, k, m);
        const auto cert = decide_pinned_iso(h, hp, phi, psi);
        return cert.iso() || cert.witness.has_value();
    }));

    rep.checks.push_back(run("rank equals orbit count", 4, rng, [](Rng& r, std::string& why) {
        const auto m = std::uniform_int_distribution<std::size_t>(1, 2)(r);
        const auto h = random_twin_free_graph(r, FieldSpec::rationals(), m, false, {-1, 1, 2});
        const auto k = std::uniform_int_distribution<std::size_t>(0, 2)(r);
        const auto ranks = verify_rank_theorem(h, k);
        why = "rank " + std::to_string(ranks.rank_N) + " orbits " + std::to_string(ranks.orbits);
        return ranks.holds();
    }));

    rep.checks.push_back(run("finite-characteristic collapse", 1, rng, [](Rng&, std::string&) {
        ViolationOptions opt;
        opt.max_free = 2;
        return demonstrate_violation(CounterexampleSpec{}, 1, opt).violation();
    }));
    return rep;
}

}  // namespace homalg
