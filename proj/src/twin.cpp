#include "homalg/twin.hpp"

namespace homalg {

namespace {

bool are_twins(const WeightedGraph& h, std::size_t i, std::size_t j) {
    for (std::size_t l = 0; l < h.size(); ++l) {
        if (!(h.beta(i, l) == h.beta(j, l)) || !(h.beta(l, i) == h.beta(l, j))) return false;
    }
    return true;
}

// One round: merge classes, drop zero-weight ones.
Contraction contract_once(const WeightedGraph& h) {
    const auto parts = twin_partition(h);
    std::vector<std::size_t> kept;
    std::vector<FieldValue> alpha;
    Contraction out;
    out.vertex_map.assign(h.size(), std::nullopt);
    for (const auto& cls : parts.classes) {
        FieldValue w = FieldValue::zero(h.spec());
        for (auto v : cls) w += h.alpha(v);
        if (w.is_zero()) continue;
        for (auto v : cls) out.vertex_map[v] = kept.size();
        kept.push_back(cls.front());
        alpha.push_back(w);
    }
    std::vector<FieldValue> beta;
    beta.reserve(kept.size() * kept.size());
    for (auto i : kept) {
        for (auto j : kept) beta.push_back(h.beta(i, j));
    }
    out.graph = WeightedGraph(h.spec(), h.directed(), std::move(alpha), std::move(beta));
    return out;
}

}  // namespace

TwinPartition twin_partition(const WeightedGraph& h) {
    TwinPartition out;
    std::vector<bool> placed(h.size(), false);
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (placed[i]) continue;
        std::vector<std::size_t> cls{i};
        placed[i] = true;
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            if (!placed[j] && are_twins(h, i, j)) {
                cls.push_back(j);
                placed[j] = true;
            }
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

bool is_twin_free(const WeightedGraph& h) { return twin_partition(h).size() == h.size(); }

Contraction contract_with_map(const WeightedGraph& h) {
    Contraction acc = contract_once(h);
    while (!is_twin_free(acc.graph)) {
        Contraction step = contract_once(acc.graph);
        for (auto& v : acc.vertex_map) {
            if (v) v = step.vertex_map[*v];
        }
        acc.graph = std::move(step.graph);
    }
    return acc;
}

WeightedGraph contract(const WeightedGraph& h) { return contract_with_map(h).graph; }

}  // namespace homalg
