#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homalg/error.hpp"
#include "homalg/graphs.hpp"
#include "homalg/witness.hpp"

namespace homalg {

/// H_{n, l_1..l_n}: K_n on U = {u_1..u_n} and a clique on {u_i} u V_i with
/// |V_i| = l_i p, all weights 1, over GF(p).
struct CounterexampleSpec {
    std::uint64_t p = 2;
    std::size_t n = 2;
    std::vector<std::size_t> ells{2, 1};

    /// InvalidSpec unless p is prime, n >= 2 and ells has n strictly
    /// decreasing positive entries.
    void validate() const;
    std::size_t vertex_count() const;
};

/// Vertices u_1..u_n first, then V_1, ..., V_n. `field` overrides GF(p),
/// which gives the characteristic-0 control graph.
WeightedGraph build_counterexample(const CounterexampleSpec& spec, std::optional<FieldSpec> field = std::nullopt);

/// Unweighted complete graph on n vertices, no loops.
WeightedGraph complete_graph(std::size_t n, const FieldSpec& field);

/// hom_phi(G, H) == hom_phi(G, K_U), with U the first n vertices of H.
bool verify_collapse(const WeightedGraph& h, std::size_t n, const LabeledGraph& g, const LabelMap& phi,
                     const Limits& limits = {});

struct ViolationOptions {
    std::size_t max_free = 4;
    /// Second sequence for k = 0; defaults to ells with l_1 + 1.
    std::optional<std::vector<std::size_t>> other_ells;
    Limits limits;
};

struct ViolationReport {
    CounterexampleSpec spec;
    std::size_t k = 0;
    std::vector<std::size_t> other_ells;  // k = 0 only
    std::size_t vertices = 0;
    std::size_t other_vertices = 0;
    std::size_t max_free = 0;
    std::size_t graphs_checked = 0;
    bool same_type = false;
    bool hom_equal = false;
    bool collapse_holds = false;
    std::size_t automorphisms = 0;
    bool aut_fixes_U = false;
    bool aut_preserves_blocks = false;
    bool iso_exists = true;  // pinned isomorphism for k >= 1, plain isomorphism for k = 0
    std::optional<WitnessResult> control_witness;  // same construction over Q

    bool violation() const {
        return same_type && hom_equal && collapse_holds && !iso_exists && aut_fixes_U && control_witness.has_value();
    }
};

/// k >= 1: phi = all labels on u_1, psi = all labels on u_2. k = 0: H for
/// spec.ells against H' for other_ells.
ViolationReport demonstrate_violation(const CounterexampleSpec& spec, std::size_t k,
                                      const ViolationOptions& options = {});

}  // namespace homalg
