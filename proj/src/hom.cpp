#include "homalg/hom.hpp"

#include <map>
#include <vector>

namespace homalg {

namespace {

struct AttachedEdge {
    std::size_t from;
    std::size_t to;
    const std::vector<FieldValue>* weights;  // beta^mult, row-major
};

class PartialEvaluator {
public:
    PartialEvaluator(const LabeledGraph& g, const WeightedGraph& h, const LabelMap& psi)
        : g_(g), h_(h), m_(h.size()), assign_(g.n(), 0), attached_(g.n()) {
        for (std::size_t i = 0; i < g.k(); ++i) assign_[i] = psi[i];
        constant_ = FieldValue::one(h.spec());
        for (const auto& e : g.edges()) {
            const auto* w = &weights_for(e.mult);
            const std::size_t later = std::max(e.from, e.to);
            if (later < g.k()) {
                constant_ *= (*w)[assign_[e.from] * m_ + assign_[e.to]];
            } else {
                attached_[later].push_back({e.from, e.to, w});
            }
        }
    }

    FieldValue run() {
        total_ = FieldValue::zero(h_.spec());
        if (constant_.is_zero()) return total_;
        descend(g_.k(), constant_);
        return total_;
    }

private:
    const std::vector<FieldValue>& weights_for(std::uint64_t mult) {
        auto it = powers_.find(mult);
        if (it != powers_.end()) return it->second;
        std::vector<FieldValue> w;
        w.reserve(m_ * m_);
        for (const auto& b : h_.betas()) w.push_back(mult == 1 ? b : b.pow(mult));
        return powers_.emplace(mult, std::move(w)).first->second;
    }

    void descend(std::size_t v, const FieldValue& acc) {
        if (v == g_.n()) {
            total_ += acc;
            return;
        }
        for (std::size_t t = 0; t < m_; ++t) {
            assign_[v] = t;
            FieldValue f = acc * h_.alpha(t);
            for (const auto& e : attached_[v]) {
                f *= (*e.weights)[assign_[e.from] * m_ + assign_[e.to]];
                if (f.is_zero()) break;
            }
            if (!f.is_zero()) descend(v + 1, f);
        }
    }

    const LabeledGraph& g_;
    const WeightedGraph& h_;
    std::size_t m_;
    std::vector<std::size_t> assign_;
    std::vector<std::vector<AttachedEdge>> attached_;
    std::map<std::uint64_t, std::vector<FieldValue>> powers_;
    FieldValue constant_;
    FieldValue total_;
};

void check_compatible(const LabeledGraph& g, const WeightedGraph& h) {
    if (g.directed() != h.directed()) {
        throw Error(ErrorCode::DirectednessMismatch,
                    std::string("graph is ") + (g.directed() ? "directed" : "undirected") +
                        " but target is " + (h.directed() ? "directed" : "undirected"));
    }
}

}  // namespace

FieldValue hom_partial(const LabeledGraph& g, const WeightedGraph& h, const LabelMap& psi,
                       const Limits& limits) {
    check_compatible(g, h);
    if (psi.k() != g.k()) {
        throw Error(ErrorCode::ArityMismatch, "pinning has " + std::to_string(psi.k()) +
                                                  " labels, graph has " + std::to_string(g.k()));
    }
    if (!psi.valid_for(h.size())) throw Error(ErrorCode::ArityMismatch, "pinning target out of range");
    const std::uint64_t cost =
        sat_mul(sat_pow(h.size(), g.free_count()), 1 + g.edges().size());
    require_budget(cost, limits, "hom");
    if (g.free_count() > 0 && h.size() == 0) return FieldValue::zero(h.spec());
    return PartialEvaluator(g, h, psi).run();
}

FieldValue hom(const LabeledGraph& g, const WeightedGraph& h, const Limits& limits) {
    return hom_partial(unlabel(g, 0), h, LabelMap{}, limits);
}

FieldValue alpha_product(const WeightedGraph& h, const LabelMap& psi) {
    FieldValue out = FieldValue::one(h.spec());
    for (auto t : psi.targets) out *= h.alpha(t);
    return out;
}

bool hom_decomposition_check(const LabeledGraph& g, const WeightedGraph& h, const Limits& limits) {
    const FieldValue full = hom(g, h, limits);
    require_budget(sat_pow(h.size(), g.k()), limits, "decomposition over pinnings");
    FieldValue sum = FieldValue::zero(h.spec());
    for_each_label_map(g.k(), h.size(), [&](const LabelMap& psi) {
        sum += alpha_product(h, psi) * hom_partial(g, h, psi, limits);
    });
    return sum == full;
}

FieldValue hom_power_product(std::span<const LabeledGraph> graphs,
                             std::span<const std::uint64_t> exponents, const WeightedGraph& h,
                             const LabelMap& psi, const Limits& limits) {
    if (graphs.size() != exponents.size()) {
        throw Error(ErrorCode::ArityMismatch, "one exponent per graph required");
    }
    FieldValue out = FieldValue::one(h.spec());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs[i].k() != psi.k()) {
            throw Error(ErrorCode::ArityMismatch, "factor " + std::to_string(i) + " has " +
                                                      std::to_string(graphs[i].k()) + " labels");
        }
        if (exponents[i] == 0) continue;
        out *= hom_partial(graphs[i], h, psi, limits).pow(exponents[i]);
    }
    return out;
}

}  // namespace homalg
