#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homalg/graphs.hpp"

namespace homalg {

/// Twin classes, each sorted ascending, ordered by smallest member.
struct TwinPartition {
    std::vector<std::vector<std::size_t>> classes;

    std::size_t size() const noexcept { return classes.size(); }
};

/// i ~ j iff beta(i, l) = beta(j, l) and beta(l, i) = beta(l, j) for all l.
/// Vertex weights play no part.
TwinPartition twin_partition(const WeightedGraph& h);

bool is_twin_free(const WeightedGraph& h);

struct Contraction {
    WeightedGraph graph;
    /// Vertex of the input -> vertex of the contraction, or nullopt when its
    /// class was dropped for having zero total weight.
    std::vector<std::optional<std::size_t>> vertex_map;
};

/// Twin contraction: merge each class into its smallest member with the
/// summed weight and drop zero-weight classes. Dropping vertices can create
/// new twins, so this repeats until the result is twin-free.
Contraction contract_with_map(const WeightedGraph& h);

WeightedGraph contract(const WeightedGraph& h);

}  // namespace homalg
