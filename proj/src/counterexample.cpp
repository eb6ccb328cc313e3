#include "homalg/counterexample.hpp"

#include <numeric>

#include "homalg/hom.hpp"
#include "homalg/isomorphism.hpp"

namespace homalg {

void CounterexampleSpec::validate() const {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidSpec, "p = " + std::to_string(p) + " is not prime");
    if (n < 2) throw Error(ErrorCode::InvalidSpec, "n must be at least 2");
    if (ells.size() != n) throw Error(ErrorCode::InvalidSpec, "need exactly n block sizes");
    for (std::size_t i = 0; i < n; ++i) {
        if (ells[i] == 0) throw Error(ErrorCode::InvalidSpec, "block sizes must be positive");
        if (i > 0 && ells[i] >= ells[i - 1]) throw Error(ErrorCode::InvalidSpec, "block sizes must strictly decrease");
    }
}

std::size_t CounterexampleSpec::vertex_count() const {
    return n + static_cast<std::size_t>(p) * std::accumulate(ells.begin(), ells.end(), std::size_t{0});
}

WeightedGraph build_counterexample(const CounterexampleSpec& spec, std::optional<FieldSpec> field) {
    spec.validate();
    const FieldSpec f = field ? *field : FieldSpec::prime(spec.p);
    const std::size_t total = spec.vertex_count();
    if (total > 4096) throw Error(ErrorCode::Budget, "counterexample graph too large");
    std::vector<std::vector<std::int64_t>> adj(total, std::vector<std::int64_t>(total, 0));
    auto join = [&](std::size_t a, std::size_t b) {
        if (a != b) adj[a][b] = adj[b][a] = 1;
    };
    for (std::size_t i = 0; i < spec.n; ++i) {
        for (std::size_t j = 0; j < spec.n; ++j) join(i, j);
    }
    std::size_t next = spec.n;
    for (std::size_t i = 0; i < spec.n; ++i) {
        std::vector<std::size_t> clique{i};
        for (std::size_t c = 0; c < spec.ells[i] * spec.p; ++c) clique.push_back(next++);
        for (auto a : clique) {
            for (auto b : clique) join(a, b);
        }
    }
    return WeightedGraph::from_ints(f, false, std::vector<std::int64_t>(total, 1), adj);
}

WeightedGraph complete_graph(std::size_t n, const FieldSpec& field) {
    std::vector<std::vector<std::int64_t>> adj(n, std::vector<std::int64_t>(n, 1));
    for (std::size_t i = 0; i < n; ++i) adj[i][i] = 0;
    return WeightedGraph::from_ints(field, false, std::vector<std::int64_t>(n, 1), adj);
}

bool verify_collapse(const WeightedGraph& h, std::size_t n, const LabeledGraph& g, const LabelMap& phi,
                     const Limits& limits) {
    if (n > h.size()) throw Error(ErrorCode::ArityMismatch, "U larger than the graph");
    for (auto t : phi.targets) {
        if (t >= n) throw Error(ErrorCode::PreconditionViolated, "pinning must map into U");
    }
    const WeightedGraph ku = complete_graph(n, h.spec());
    return hom_partial(g, h, phi, limits) == hom_partial(g, ku, phi, limits);
}

ViolationReport demonstrate_violation(const CounterexampleSpec& spec, std::size_t k,
                                      const ViolationOptions& options) {
    spec.validate();
    const Limits& limits = options.limits;
    ViolationReport rep;
    rep.spec = spec;
    rep.k = k;
    rep.max_free = options.max_free;
    const WeightedGraph h = build_counterexample(spec);
    rep.vertices = h.size();

    Limits oracle = limits;
    oracle.oracle_max_vertices = std::max(oracle.oracle_max_vertices, h.size());
    const auto autos = enumerate_automorphisms(h, oracle);
    rep.automorphisms = autos.size();
    rep.aut_fixes_U = true;
    rep.aut_preserves_blocks = true;
    std::vector<std::size_t> block(h.size());
    for (std::size_t i = 0; i < spec.n; ++i) block[i] = i;
    {
        std::size_t next = spec.n;
        for (std::size_t i = 0; i < spec.n; ++i) {
            for (std::size_t c = 0; c < spec.ells[i] * spec.p; ++c) block[next++] = spec.n + i;
        }
    }
    for (const auto& sigma : autos) {
        for (std::size_t v = 0; v < h.size(); ++v) {
            if (v < spec.n && sigma[v] != v) rep.aut_fixes_U = false;
            if (block[sigma[v]] != block[v]) rep.aut_preserves_blocks = false;
        }
    }

    const FieldSpec q = FieldSpec::rationals();
    WitnessOptions wopt;
    wopt.max_free = options.max_free;
    wopt.limits = limits;
    rep.hom_equal = true;
    rep.collapse_holds = true;

    if (k >= 1) {
        const LabelMap phi{std::vector<std::size_t>(k, 0)};
        const LabelMap psi{std::vector<std::size_t>(k, 1)};
        rep.same_type = same_type(phi, psi);
        rep.iso_exists = false;
        for (const auto& sigma : autos) {
            if (compose(sigma, phi) == psi) rep.iso_exists = true;
        }
        for (std::size_t f = 0; f <= options.max_free; ++f) {
            for (const auto& g : simple_graphs(k, f, false, limits)) {
                ++rep.graphs_checked;
                if (!(hom_partial(g, h, phi, limits) == hom_partial(g, h, psi, limits))) rep.hom_equal = false;
                if (!verify_collapse(h, spec.n, g, phi, limits) || !verify_collapse(h, spec.n, g, psi, limits)) {
                    rep.collapse_holds = false;
                }
            }
        }
        const WeightedGraph hq = build_counterexample(spec, q);
        rep.control_witness = find_witness(hq, hq, phi, psi, wopt);
        return rep;
    }

    CounterexampleSpec other = spec;
    if (options.other_ells) {
        other.ells = *options.other_ells;
    } else {
        other.ells.front() += 1;
    }
    other.validate();
    rep.other_ells = other.ells;
    const WeightedGraph hp = build_counterexample(other);
    rep.other_vertices = hp.size();
    rep.same_type = true;
    Limits wide = oracle;
    wide.oracle_max_vertices = std::max(wide.oracle_max_vertices, hp.size());
    rep.iso_exists = !enumerate_isomorphisms(h, hp, wide).empty();
    const LabelMap none;
    for (std::size_t f = 0; f <= options.max_free; ++f) {
        for (const auto& g : simple_graphs(0, f, false, limits)) {
            ++rep.graphs_checked;
            if (!(hom(g, h, limits) == hom(g, hp, limits))) rep.hom_equal = false;
            if (!verify_collapse(h, spec.n, g, none, limits) || !verify_collapse(hp, other.n, g, none, limits)) {
                rep.collapse_holds = false;
            }
        }
    }
    rep.control_witness =
        find_witness(build_counterexample(spec, q), build_counterexample(other, q), none, none, wopt);
    return rep;
}

}  // namespace homalg
