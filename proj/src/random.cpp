#include "homalg/random.hpp"

#include <algorithm>
#include <numeric>

#include "homalg/twin.hpp"

namespace homalg {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

FieldValue random_value(Rng& rng, const FieldSpec& spec, const std::vector<std::int64_t>& choices) {
    return FieldValue::from_int(choices[uniform(rng, 0, static_cast<std::int64_t>(choices.size()) - 1)], spec);
}

FieldValue random_small(Rng& rng, const FieldSpec& spec, std::int64_t range) {
    return FieldValue::from_int(uniform(rng, -range, range), spec);
}

FieldValue random_nonzero(Rng& rng, const FieldSpec& spec, std::int64_t range) {
    while (true) {
        auto v = random_small(rng, spec, range);
        if (!v.is_zero()) return v;
    }
}

WeightedGraph random_weighted_graph(Rng& rng, const FieldSpec& spec, std::size_t m, bool directed,
                                    const std::vector<std::int64_t>& choices) {
    std::vector<FieldValue> alpha;
    for (std::size_t i = 0; i < m; ++i) {
        FieldValue a = random_value(rng, spec, choices);
        while (a.is_zero()) a = random_value(rng, spec, choices);
        alpha.push_back(a);
    }
    std::vector<FieldValue> beta(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = directed ? 0 : i; j < m; ++j) {
            beta[i * m + j] = random_value(rng, spec, choices);
            if (!directed) beta[j * m + i] = beta[i * m + j];
        }
    }
    return WeightedGraph(spec, directed, std::move(alpha), std::move(beta));
}

WeightedGraph random_twin_free_graph(Rng& rng, const FieldSpec& spec, std::size_t m, bool directed,
                                     const std::vector<std::int64_t>& choices) {
    while (true) {
        auto g = random_weighted_graph(rng, spec, m, directed, choices);
        if (is_twin_free(g)) return g;
    }
}

LabeledGraph random_labeled_graph(Rng& rng, std::size_t k, std::size_t n, bool directed, double density,
                                  std::uint64_t max_mult) {
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = directed ? 0 : u + 1; v < n; ++v) {
            if (u == v || !coin(rng)) continue;
            edges.push_back({u, v, static_cast<std::uint64_t>(uniform(rng, 1, static_cast<std::int64_t>(max_mult)))});
        }
    }
    return LabeledGraph(k, n, directed, std::move(edges));
}

LabeledGraph random_simple_graph(Rng& rng, std::size_t k, std::size_t n, bool directed, double density) {
    std::bernoulli_distribution coin(density);
    std::bernoulli_distribution flip(0.5);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (v < k || !coin(rng)) continue;
            if (directed && flip(rng)) {
                edges.push_back({v, u, 1});
            } else {
                edges.push_back({u, v, 1});
            }
        }
    }
    return LabeledGraph(k, n, directed, std::move(edges));
}

LabelMap random_label_map(Rng& rng, std::size_t k, std::size_t m) {
    LabelMap out;
    for (std::size_t i = 0; i < k; ++i) out.targets.push_back(static_cast<std::size_t>(uniform(rng, 0, m - 1)));
    return out;
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t m) {
    std::vector<std::size_t> p(m);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

MomentSystem random_moment_system(Rng& rng, const FieldSpec& spec, std::size_t n, std::size_t s, bool coincide) {
    MomentSystem sys{spec, {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
        sys.a.push_back(random_small(rng, spec, 3));
        if (coincide && i > 0 && uniform(rng, 0, 2) == 0) {
            sys.b.push_back(sys.b[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1))]);
            continue;
        }
        std::vector<FieldValue> t;
        for (std::size_t j = 0; j < s; ++j) t.push_back(random_small(rng, spec, 2));
        sys.b.push_back(std::move(t));
    }
    return sys;
}

MomentSystem random_cancelling_system(Rng& rng, const FieldSpec& spec, std::size_t classes, std::size_t s) {
    MomentSystem sys{spec, {}, {}};
    for (std::size_t c = 0; c < classes; ++c) {
        std::vector<FieldValue> t;
        for (std::size_t j = 0; j < s; ++j) t.push_back(random_small(rng, spec, 3));
        const auto members = static_cast<std::size_t>(uniform(rng, 1, 3));
        FieldValue acc = FieldValue::zero(spec);
        for (std::size_t i = 0; i + 1 < members; ++i) {
            auto a = random_small(rng, spec, 4);
            acc += a;
            sys.a.push_back(a);
            sys.b.push_back(t);
        }
        sys.a.push_back(-acc);
        sys.b.push_back(t);
    }
    // Interleave the classes.
    std::vector<std::size_t> order(sys.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    MomentSystem out{spec, {}, {}};
    for (auto i : order) {
        out.a.push_back(sys.a[i]);
        out.b.push_back(sys.b[i]);
    }
    return out;
}

}  // namespace homalg
