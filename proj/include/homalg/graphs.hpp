#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "homalg/field.hpp"

namespace homalg {

/// A field-weighted graph: nonzero vertex weights and a total m x m
/// edge-weight matrix (absent edges carry weight 0).
class WeightedGraph {
public:
    WeightedGraph() = default;
    /// beta is row-major m*m. Throws Malformed on a zero vertex weight, a
    /// non-symmetric matrix for an undirected graph, or mixed fields.
    WeightedGraph(FieldSpec spec, bool directed, std::vector<FieldValue> alpha,
                  std::vector<FieldValue> beta);

    /// Convenience constructor from small integers.
    static WeightedGraph from_ints(FieldSpec spec, bool directed,
                                   const std::vector<std::int64_t>& alpha,
                                   const std::vector<std::vector<std::int64_t>>& beta);

    const FieldSpec& spec() const noexcept { return spec_; }
    bool directed() const noexcept { return directed_; }
    std::size_t size() const noexcept { return alpha_.size(); }
    const FieldValue& alpha(std::size_t i) const { return alpha_[i]; }
    const FieldValue& beta(std::size_t i, std::size_t j) const { return beta_[i * size() + j]; }
    std::span<const FieldValue> alphas() const noexcept { return alpha_; }
    std::span<const FieldValue> betas() const noexcept { return beta_; }

    /// The graph with vertex i renamed to perm[i].
    WeightedGraph permuted(std::span<const std::size_t> perm) const;
    /// Induced subgraph on the given vertices, in the given order.
    WeightedGraph induced(std::span<const std::size_t> vertices) const;

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    FieldSpec spec_;
    bool directed_ = false;
    std::vector<FieldValue> alpha_;
    std::vector<FieldValue> beta_;
};

/// A map [k] -> V(H); targets[i] is the image of label i+1.
struct LabelMap {
    std::vector<std::size_t> targets;

    std::size_t k() const noexcept { return targets.size(); }
    std::size_t operator[](std::size_t i) const { return targets[i]; }
    bool valid_for(std::size_t m) const noexcept;

    friend bool operator==(const LabelMap&, const LabelMap&) = default;
    friend auto operator<=>(const LabelMap&, const LabelMap&) = default;
};

/// sigma o phi.
LabelMap compose(std::span<const std::size_t> sigma, const LabelMap& phi);

struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::uint64_t mult = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A finite loopless multigraph with k labeled vertices. Labeled vertices
/// occupy indices 0..k-1 (label i+1 sits on vertex i); edges are kept sorted
/// with merged multiplicities, undirected ones as (min, max).
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(std::size_t k, std::size_t n, bool directed, std::vector<Edge> edges);

    /// labels[i] is the vertex carrying label i+1 (0-based, distinct);
    /// vertices are renumbered so labeled ones come first.
    static LabeledGraph with_labels(std::size_t n, bool directed,
                                    const std::vector<std::size_t>& labels,
                                    const std::vector<Edge>& edges);
    /// U_k: k labeled vertices, no edges.
    static LabeledGraph unit(std::size_t k, bool directed);

    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t free_count() const noexcept { return n_ - k_; }
    bool directed() const noexcept { return directed_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::uint64_t multiplicity(std::size_t u, std::size_t v) const;
    std::uint64_t edge_count() const noexcept;

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

private:
    std::size_t k_ = 0;
    std::size_t n_ = 0;
    bool directed_ = false;
    std::vector<Edge> edges_;
};

/// Disjoint union with same-label vertices identified.
LabeledGraph glue(const LabeledGraph& a, const LabeledGraph& b);
/// glue of h copies; power(g, 0) = U_k.
LabeledGraph power(const LabeledGraph& g, std::uint64_t h);
/// Member of the simple submonoid: no multi-edges, no edges between labeled
/// vertices and, when directed, no antiparallel pair.
bool is_simple(const LabeledGraph& g);
/// Drops labels keep+1..k; the vertices stay as unlabeled ones.
LabeledGraph unlabel(const LabeledGraph& g, std::size_t keep);
/// Equal strings iff the graphs are label-preserving isomorphic.
std::string canonical_form(const LabeledGraph& g);

}  // namespace homalg
