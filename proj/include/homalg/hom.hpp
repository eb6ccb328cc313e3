#pragma once

#include <cstdint>
#include <span>

#include "homalg/error.hpp"
#include "homalg/field.hpp"
#include "homalg/graphs.hpp"

namespace homalg {

/// hom(G, H): the weighted sum over all maps V(G) -> V(H). Labels of G are
/// ignored. An edge of multiplicity r contributes beta^r.
FieldValue hom(const LabeledGraph& g, const WeightedGraph& h, const Limits& limits = {});

/// hom_psi(G, H): the sum over maps extending psi on the labeled vertices;
/// labeled vertices contribute no vertex weight.
FieldValue hom_partial(const LabeledGraph& g, const WeightedGraph& h, const LabelMap& psi,
                       const Limits& limits = {});

/// True iff hom(G, H) equals the alpha_psi-weighted sum of hom_psi(G, H)
/// over all psi: [k] -> V(H).
bool hom_decomposition_check(const LabeledGraph& g, const WeightedGraph& h,
                             const Limits& limits = {});

/// prod_i hom_psi(G_i, H)^{h_i}, evaluated factor by factor.
FieldValue hom_power_product(std::span<const LabeledGraph> graphs,
                             std::span<const std::uint64_t> exponents, const WeightedGraph& h,
                             const LabelMap& psi, const Limits& limits = {});

/// alpha_psi = prod_i alpha(psi(i)).
FieldValue alpha_product(const WeightedGraph& h, const LabelMap& psi);

/// Calls fn(psi) for every psi: [k] -> [m] in lexicographic order
/// (label 1 most significant).
template <typename Fn>
void for_each_label_map(std::size_t k, std::size_t m, Fn&& fn) {
    LabelMap psi;
    psi.targets.assign(k, 0);
    if (k > 0 && m == 0) return;
    while (true) {
        fn(static_cast<const LabelMap&>(psi));
        std::size_t i = k;
        while (i > 0) {
            if (++psi.targets[i - 1] < m) break;
            psi.targets[i - 1] = 0;
            --i;
        }
        if (i == 0) return;
    }
}

}  // namespace homalg
