#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "homalg/graphs.hpp"
#include "homalg/vandermonde.hpp"

namespace homalg {

/// Generators for randomized checks. Everything draws from one engine so a
/// seed reproduces a whole run.
using Rng = std::mt19937_64;

FieldValue random_value(Rng& rng, const FieldSpec& spec, const std::vector<std::int64_t>& choices);
/// Uniform over [-range, range]; for GF(p) reduced mod p.
FieldValue random_small(Rng& rng, const FieldSpec& spec, std::int64_t range);
FieldValue random_nonzero(Rng& rng, const FieldSpec& spec, std::int64_t range);

/// Vertex and edge weights drawn from `choices` (zero vertex weights are
/// redrawn). Undirected graphs get a symmetric matrix.
WeightedGraph random_weighted_graph(Rng& rng, const FieldSpec& spec, std::size_t m, bool directed,
                                    const std::vector<std::int64_t>& choices);
/// Redraws until twin-free.
WeightedGraph random_twin_free_graph(Rng& rng, const FieldSpec& spec, std::size_t m, bool directed,
                                     const std::vector<std::int64_t>& choices);

/// Multigraph with n vertices, k of them labeled, each ordered/unordered pair
/// present with probability `density` and multiplicity in [1, max_mult].
LabeledGraph random_labeled_graph(Rng& rng, std::size_t k, std::size_t n, bool directed, double density,
                                  std::uint64_t max_mult = 2);
/// Member of the simple submonoid.
LabeledGraph random_simple_graph(Rng& rng, std::size_t k, std::size_t n, bool directed, double density);

LabelMap random_label_map(Rng& rng, std::size_t k, std::size_t m);
std::vector<std::size_t> random_permutation(Rng& rng, std::size_t m);

/// Random system; with `coincide` true some tuples are repeated so classes
/// have several members.
MomentSystem random_moment_system(Rng& rng, const FieldSpec& spec, std::size_t n, std::size_t s, bool coincide);
/// Random system whose class sums are all zero.
MomentSystem random_cancelling_system(Rng& rng, const FieldSpec& spec, std::size_t classes, std::size_t s);

}  // namespace homalg
