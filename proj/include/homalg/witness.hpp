#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homalg/error.hpp"
#include "homalg/field.hpp"
#include "homalg/graphs.hpp"

namespace homalg {

enum class Arrow : std::uint8_t { None, Down, Up };

/// One arrow per label.
using ArrowWord = std::vector<Arrow>;

/// Per-vertex counts (k_i, l_i): how many labels of block J_i point Down / Up.
struct ExponentProfile {
    std::vector<std::uint64_t> down;
    std::vector<std::uint64_t> up;
};

/// Labels u_1..u_k plus one free vertex v. Down at i is the edge v -> u_i,
/// Up is u_i -> v. Undirected mode uses plain edges for both.
LabeledGraph build_G_kappa(const ArrowWord& kappa, bool directed = true);

/// Labels u_1..u_k plus free v, v' with the edge v -> v'; lambda describes the
/// star around v, tau the star around v'.
LabeledGraph build_G_lambda_tau(const ArrowWord& lambda, const ArrowWord& tau, bool directed = true);

/// The blocks J_u and the constant value s(u) of psi on each of them.
struct BlockChoice {
    std::vector<std::vector<std::size_t>> blocks;  // 0-based label positions
    std::vector<std::size_t> target;               // s(u)
};

/// J_u: the first `size` labels of phi^{-1}(u) on which psi takes its most
/// frequent value there (ties to the smallest vertex). BlockTooSmall if no
/// value occurs `size` times.
BlockChoice choose_blocks(const LabelMap& phi, const LabelMap& psi, std::size_t m, std::size_t size);

/// Down on the first k_i positions of J_i, Up on the next l_i, None elsewhere.
ArrowWord word_for_profile(std::size_t k, const std::vector<std::vector<std::size_t>>& blocks,
                           const ExponentProfile& profile);

/// All words for profiles with 0 <= k_i, l_i < 2m, (2m)^{2m} of them.
std::vector<ArrowWord> build_family_R(std::size_t k, const std::vector<std::vector<std::size_t>>& blocks,
                                      std::size_t m, const Limits& limits = {});

struct Extension {
    std::size_t ell = 0;
    LabelMap eta;
};

/// Pads phi with labels until every vertex of H has at least 4m^2
/// preimages; padding goes to vertices in index order.
Extension extend_map(const LabelMap& phi, const WeightedGraph& h);

/// The simple graphs with k labels and exactly `free` unlabeled vertices, one
/// per label-preserving isomorphism class, in a fixed order. Memoized.
/// Throws Budget when the generation would exceed the cap.
const std::vector<LabeledGraph>& simple_graphs(std::size_t k, std::size_t free, bool directed,
                                               const Limits& limits = {});

struct WitnessResult {
    LabeledGraph graph;
    FieldValue lhs;
    FieldValue rhs;
    std::string source;  // "G_kappa", "G_lambda_tau" or "enumeration"
};

struct WitnessOptions {
    /// Largest number of unlabeled vertices in the enumeration stage.
    std::size_t max_free = 5;
    bool families = true;
    Limits limits;
};

/// First simple k-labeled G with hom_phi(G, H) != hom_psi(G, H'): the G_kappa
/// words, then pairs (lambda, tau), then enumeration by free-vertex count.
/// nullopt if nothing separates within the bounds.
std::optional<WitnessResult> find_witness(const WeightedGraph& h, const WeightedGraph& hp,
                                          const LabelMap& phi, const LabelMap& psi,
                                          const WitnessOptions& options = {});

/// One separating ell-labeled graph for every mu: [ell] -> V(H) agreeing with
/// eta on the first `prefix` labels and not of the form sigma o eta with sigma
/// in Aut(H); likewise for every nu: [ell] -> V(H') agreeing with `pin` on
/// the first `prefix` labels and not of the form sigma o eta with sigma in
/// Isom(H, H'). Duplicates removed. H must be twin-free and eta must meet
/// the 4m^2 threshold.
std::vector<LabeledGraph> build_separating_set(const WeightedGraph& h, const WeightedGraph& hp,
                                               const LabelMap& eta, const LabelMap& pin,
                                               std::size_t prefix, const Limits& limits = {});

/// Lazy enumeration of the products prod_{G in S} G^{h_G}, 0 <= h_G < 2m^ell,
/// projected to k labels. Elements stay factored; hom values are computed by
/// expanding along the projected labels, never from the product graph.
class QFamily {
public:
    QFamily(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi, const LabelMap& psi,
            const Limits& limits = {});

    std::size_t ell() const noexcept { return ext_.ell; }
    const std::vector<LabeledGraph>& separating_set() const noexcept { return set_; }
    std::uint64_t exponent_bound() const noexcept { return bound_; }

    /// Next exponent tuple in odometer order (last factor fastest).
    std::optional<std::vector<std::uint64_t>> next();

    /// pi_[k](prod G^{h_G}). Throws Budget for large products.
    LabeledGraph materialize(const std::vector<std::uint64_t>& exponents) const;
    /// hom_phi of the projected product on H (side 0) or hom_psi on H' (side 1).
    FieldValue evaluate(const std::vector<std::uint64_t>& exponents, int side) const;

private:
    WeightedGraph h_;
    WeightedGraph hp_;
    LabelMap phi_;
    LabelMap psi_;
    Limits limits_;
    Extension ext_;
    std::vector<LabeledGraph> set_;
    std::uint64_t bound_ = 1;
    std::vector<std::uint64_t> cursor_;
    bool started_ = false;
    bool done_ = false;
};

}  // namespace homalg
