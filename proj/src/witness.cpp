#include "homalg/witness.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "homalg/hom.hpp"
#include "homalg/isomorphism.hpp"

namespace homalg {

namespace {

void add_arrow(std::vector<Edge>& edges, Arrow a, std::size_t center, std::size_t label) {
    if (a == Arrow::Down) edges.push_back({center, label, 1});
    if (a == Arrow::Up) edges.push_back({label, center, 1});
}

void check_pair(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi, const LabelMap& psi) {
    if (h.directed() != hp.directed()) throw Error(ErrorCode::DirectednessMismatch, "graphs differ in directedness");
    if (!(h.spec() == hp.spec())) throw Error(ErrorCode::SpecMismatch, "graphs live over different fields");
    if (phi.k() != psi.k()) throw Error(ErrorCode::LabelCountMismatch, "pinnings have different label counts");
    if (!phi.valid_for(h.size()) || !psi.valid_for(hp.size())) {
        throw Error(ErrorCode::ArityMismatch, "pinning target out of range");
    }
}

// Calls fn(mu) for every mu: [ell] -> [m] agreeing with base on the first
// `prefix` labels; fn returning false stops the walk.
template <typename Fn>
void for_each_extension(const LabelMap& base, std::size_t prefix, std::size_t ell, std::size_t m, Fn&& fn) {
    LabelMap mu;
    mu.targets.assign(ell, 0);
    for (std::size_t i = 0; i < prefix; ++i) mu.targets[i] = base[i];
    if (ell > prefix && m == 0) return;
    while (true) {
        if (!fn(static_cast<const LabelMap&>(mu))) return;
        std::size_t i = ell;
        while (i > prefix) {
            if (++mu.targets[i - 1] < m) break;
            mu.targets[i - 1] = 0;
            --i;
        }
        if (i == prefix) return;
    }
}

std::optional<WitnessResult> compare(const LabeledGraph& g, const WeightedGraph& h, const WeightedGraph& hp,
                                     const LabelMap& phi, const LabelMap& psi, const Limits& limits,
                                     const char* source) {
    FieldValue lhs = hom_partial(g, h, phi, limits);
    FieldValue rhs = hom_partial(g, hp, psi, limits);
    if (lhs == rhs) return std::nullopt;
    return WitnessResult{g, std::move(lhs), std::move(rhs), source};
}

std::vector<ArrowWord> all_words(std::size_t k, bool directed) {
    const std::size_t base = directed ? 3 : 2;
    std::vector<ArrowWord> out;
    ArrowWord w(k, Arrow::None);
    while (true) {
        out.push_back(w);
        std::size_t i = k;
        while (i > 0) {
            auto& a = w[i - 1];
            const auto next = static_cast<std::size_t>(a) + 1;
            if (next < base) {
                a = static_cast<Arrow>(next);
                break;
            }
            a = Arrow::None;
            --i;
        }
        if (i == 0) return out;
    }
}

constexpr std::uint64_t kFamilyCap = 20000;

}  // namespace

LabeledGraph build_G_kappa(const ArrowWord& kappa, bool directed) {
    const std::size_t k = kappa.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i) add_arrow(edges, kappa[i], k, i);
    return LabeledGraph(k, k + 1, directed, std::move(edges));
}

LabeledGraph build_G_lambda_tau(const ArrowWord& lambda, const ArrowWord& tau, bool directed) {
    if (lambda.size() != tau.size()) throw Error(ErrorCode::LabelCountMismatch, "arrow words differ in length");
    const std::size_t k = lambda.size();
    std::vector<Edge> edges{{k, k + 1, 1}};
    for (std::size_t i = 0; i < k; ++i) {
        add_arrow(edges, lambda[i], k, i);
        add_arrow(edges, tau[i], k + 1, i);
    }
    return LabeledGraph(k, k + 2, directed, std::move(edges));
}

BlockChoice choose_blocks(const LabelMap& phi, const LabelMap& psi, std::size_t m, std::size_t size) {
    if (phi.k() != psi.k()) throw Error(ErrorCode::LabelCountMismatch, "pinnings have different label counts");
    BlockChoice out;
    out.blocks.resize(m);
    out.target.resize(m);
    std::size_t values = 0;
    for (auto v : psi.targets) values = std::max(values, v + 1);
    std::vector<std::size_t> freq(values);
    for (std::size_t u = 0; u < m; ++u) {
        std::fill(freq.begin(), freq.end(), 0);
        for (std::size_t x = 0; x < phi.k(); ++x) {
            if (phi[x] == u) ++freq[psi[x]];
        }
        std::size_t best = 0;
        std::size_t best_count = 0;
        for (std::size_t value = 0; value < values; ++value) {
            if (freq[value] > best_count) {
                best = value;
                best_count = freq[value];
            }
        }
        if (best_count < size) {
            throw Error(ErrorCode::BlockTooSmall, "vertex " + std::to_string(u + 1) + " has no block of size " +
                                                      std::to_string(size));
        }
        out.target[u] = best;
        for (std::size_t x = 0; x < phi.k() && out.blocks[u].size() < size; ++x) {
            if (phi[x] == u && psi[x] == best) out.blocks[u].push_back(x);
        }
    }
    return out;
}

ArrowWord word_for_profile(std::size_t k, const std::vector<std::vector<std::size_t>>& blocks,
                           const ExponentProfile& profile) {
    if (profile.down.size() != blocks.size() || profile.up.size() != blocks.size()) {
        throw Error(ErrorCode::ArityMismatch, "profile length differs from block count");
    }
    ArrowWord w(k, Arrow::None);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& block = blocks[i];
        if (profile.down[i] + profile.up[i] > block.size()) {
            throw Error(ErrorCode::BlockTooSmall, "block " + std::to_string(i + 1) + " too small for profile");
        }
        std::size_t pos = 0;
        for (std::uint64_t c = 0; c < profile.down[i]; ++c) w.at(block[pos++]) = Arrow::Down;
        for (std::uint64_t c = 0; c < profile.up[i]; ++c) w.at(block[pos++]) = Arrow::Up;
    }
    return w;
}

std::vector<ArrowWord> build_family_R(std::size_t k, const std::vector<std::vector<std::size_t>>& blocks,
                                      std::size_t m, const Limits& limits) {
    if (blocks.size() != m) throw Error(ErrorCode::ArityMismatch, "need one block per vertex");
    for (std::size_t i = 0; i < m; ++i) {
        if (blocks[i].size() < 4 * m) {
            throw Error(ErrorCode::BlockTooSmall, "block " + std::to_string(i + 1) + " has " +
                                                      std::to_string(blocks[i].size()) + " < 4m labels");
        }
    }
    const std::uint64_t base = 2 * m;
    const std::uint64_t count = sat_pow(base, 2 * m);
    require_budget(sat_mul(count, k + 1), limits, "family R");
    std::vector<ArrowWord> out;
    out.reserve(count);
    ExponentProfile p{std::vector<std::uint64_t>(m, 0), std::vector<std::uint64_t>(m, 0)};
    while (true) {
        out.push_back(word_for_profile(k, blocks, p));
        std::size_t d = 2 * m;
        while (d > 0) {
            auto& digit = (d - 1) % 2 == 0 ? p.down[(d - 1) / 2] : p.up[(d - 1) / 2];
            if (++digit < base) break;
            digit = 0;
            --d;
        }
        if (d == 0) break;
    }
    return out;
}

Extension extend_map(const LabelMap& phi, const WeightedGraph& h) {
    const std::size_t m = h.size();
    if (m == 0) {
        if (phi.k() != 0) throw Error(ErrorCode::ArityMismatch, "no pinning into the empty graph");
        return {0, {}};
    }
    if (!phi.valid_for(m)) throw Error(ErrorCode::ArityMismatch, "pinning target out of range");
    const std::size_t threshold = 4 * m * m;
    std::vector<std::size_t> count(m, 0);
    for (auto t : phi.targets) ++count[t];
    Extension out{0, phi};
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t c = count[u]; c < threshold; ++c) out.eta.targets.push_back(u);
    }
    out.ell = out.eta.k();
    return out;
}

const std::vector<LabeledGraph>& simple_graphs(std::size_t k, std::size_t free, bool directed,
                                               const Limits& limits) {
    static std::mutex mutex;
    static std::map<std::tuple<std::size_t, std::size_t, bool>, std::vector<LabeledGraph>> memo;
    std::lock_guard lock(mutex);
    const auto key = std::make_tuple(k, free, directed);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<LabeledGraph> tier{LabeledGraph::unit(k, directed)};
    const std::uint64_t choices = directed ? 3 : 2;
    // Tier f comes from tier f-1 by adding one free vertex with every
    // possible attachment to the existing vertices.
    for (std::size_t f = 1; f <= free; ++f) {
        const auto tier_key = std::make_tuple(k, f, directed);
        if (auto it = memo.find(tier_key); it != memo.end()) {
            tier = it->second;
            continue;
        }
        const std::size_t old_n = k + f - 1;
        const std::uint64_t raw = sat_mul(tier.size(), sat_pow(choices, old_n));
        require_budget(sat_mul(raw, 500), limits, "simple graph enumeration");
        std::vector<LabeledGraph> next;
        std::set<std::string> seen;
        std::vector<std::uint64_t> digits(old_n, 0);
        for (const auto& g : tier) {
            std::fill(digits.begin(), digits.end(), 0);
            while (true) {
                std::vector<Edge> edges = g.edges();
                for (std::size_t v = 0; v < old_n; ++v) {
                    if (digits[v] == 1) edges.push_back({v, old_n, 1});
                    if (digits[v] == 2) edges.push_back({old_n, v, 1});
                }
                LabeledGraph cand(k, old_n + 1, directed, std::move(edges));
                if (seen.insert(canonical_form(cand)).second) next.push_back(std::move(cand));
                std::size_t i = old_n;
                while (i > 0) {
                    if (++digits[i - 1] < choices) break;
                    digits[i - 1] = 0;
                    --i;
                }
                if (i == 0) break;
            }
        }
        tier = std::move(next);
        memo.emplace(tier_key, tier);
    }
    return memo.emplace(key, std::move(tier)).first->second;
}

std::optional<WitnessResult> find_witness(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi,
                                          const LabelMap& psi, const WitnessOptions& options) {
    check_pair(h, hp, phi, psi);
    const std::size_t k = phi.k();
    const bool directed = h.directed();
    const Limits& limits = options.limits;
    if (options.families) {
        const std::uint64_t words = sat_pow(directed ? 3 : 2, k);
        if (words <= kFamilyCap) {
            const auto family = all_words(k, directed);
            for (const auto& w : family) {
                if (auto r = compare(build_G_kappa(w, directed), h, hp, phi, psi, limits, "G_kappa")) return r;
            }
            if (sat_mul(words, words) <= kFamilyCap) {
                for (const auto& lambda : family) {
                    for (const auto& tau : family) {
                        auto g = build_G_lambda_tau(lambda, tau, directed);
                        if (auto r = compare(g, h, hp, phi, psi, limits, "G_lambda_tau")) return r;
                    }
                }
            }
        }
    }
    for (std::size_t f = 0; f <= options.max_free; ++f) {
        const std::vector<LabeledGraph>* tier = nullptr;
        try {
            tier = &simple_graphs(k, f, directed, limits);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Budget) break;
            throw;
        }
        for (const auto& g : *tier) {
            if (auto r = compare(g, h, hp, phi, psi, limits, "enumeration")) return r;
        }
    }
    return std::nullopt;
}

std::vector<LabeledGraph> build_separating_set(const WeightedGraph& h, const WeightedGraph& hp,
                                               const LabelMap& eta, const LabelMap& pin, std::size_t prefix,
                                               const Limits& limits) {
    const std::size_t ell = eta.k();
    if (prefix > ell || pin.k() < prefix) throw Error(ErrorCode::ArityMismatch, "prefix longer than the pinning");
    if (h.size() < hp.size()) {
        throw Error(ErrorCode::PreconditionViolated, "the first graph must be at least as large as the second");
    }
    const std::size_t m = h.size();
    const std::uint64_t maps = sat_add(sat_pow(m, ell - prefix), sat_pow(hp.size(), ell - prefix));
    require_budget(sat_mul(maps, sat_mul(m * m + 1, ell + 1)), limits, "separating set");

    std::vector<LabeledGraph> out;
    std::set<std::string> seen;
    auto collect = [&](const WeightedGraph& target, const LabelMap& base) {
        for_each_extension(base, prefix, ell, target.size(), [&](const LabelMap& mu) {
            auto cert = recover_isomorphism(h, target, eta, mu, limits);
            if (!cert.iso()) {
                if (!cert.witness) throw Error(ErrorCode::SeparationFailure, "recovery gave no witness");
                if (seen.insert(canonical_form(cert.witness->graph)).second) out.push_back(cert.witness->graph);
            }
            return true;
        });
    };
    collect(h, eta);
    collect(hp, pin);
    return out;
}

QFamily::QFamily(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi, const LabelMap& psi,
                 const Limits& limits)
    : h_(h), hp_(hp), phi_(phi), psi_(psi), limits_(limits) {
    check_pair(h, hp, phi, psi);
    ext_ = extend_map(phi, h);
    set_ = build_separating_set(h, hp, ext_.eta, psi, phi.k(), limits);
    bound_ = sat_mul(2, sat_pow(h.size(), ext_.ell));
}

std::optional<std::vector<std::uint64_t>> QFamily::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        cursor_.assign(set_.size(), 0);
        if (set_.empty()) done_ = true;
        return cursor_;
    }
    std::size_t i = cursor_.size();
    while (i > 0) {
        if (++cursor_[i - 1] < bound_) break;
        cursor_[i - 1] = 0;
        --i;
    }
    if (i == 0) {
        done_ = true;
        return std::nullopt;
    }
    return cursor_;
}

LabeledGraph QFamily::materialize(const std::vector<std::uint64_t>& exponents) const {
    if (exponents.size() != set_.size()) throw Error(ErrorCode::ArityMismatch, "one exponent per graph required");
    std::uint64_t vertices = ext_.ell;
    for (std::size_t i = 0; i < set_.size(); ++i) {
        vertices = sat_add(vertices, sat_mul(exponents[i], set_[i].free_count()));
    }
    require_budget(sat_mul(vertices, 1000), limits_, "product materialization");
    LabeledGraph product = LabeledGraph::unit(ext_.ell, h_.directed());
    for (std::size_t i = 0; i < set_.size(); ++i) product = glue(product, power(set_[i], exponents[i]));
    return unlabel(product, phi_.k());
}

FieldValue QFamily::evaluate(const std::vector<std::uint64_t>& exponents, int side) const {
    if (exponents.size() != set_.size()) throw Error(ErrorCode::ArityMismatch, "one exponent per graph required");
    const WeightedGraph& target = side == 0 ? h_ : hp_;
    const LabelMap& base = side == 0 ? phi_ : psi_;
    const std::size_t k = phi_.k();
    require_budget(sat_mul(sat_pow(target.size(), ext_.ell - k), set_.size() + 1), limits_, "Q-family evaluation");
    FieldValue total = FieldValue::zero(target.spec());
    for_each_extension(base, k, ext_.ell, target.size(), [&](const LabelMap& mu) {
        FieldValue term = FieldValue::one(target.spec());
        for (std::size_t i = k; i < ext_.ell; ++i) term *= target.alpha(mu[i]);
        term *= hom_power_product(set_, exponents, target, mu, limits_);
        total += term;
        return true;
    });
    return total;
}

}  // namespace homalg
