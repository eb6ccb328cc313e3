#include "homalg/isomorphism.hpp"

#include <algorithm>

#include "homalg/hom.hpp"
#include "homalg/twin.hpp"
#include "homalg/vandermonde.hpp"

namespace homalg {

namespace {

void check_pair(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi, const LabelMap& psi) {
    if (h.directed() != hp.directed()) throw Error(ErrorCode::DirectednessMismatch, "graphs differ in directedness");
    if (!(h.spec() == hp.spec())) throw Error(ErrorCode::SpecMismatch, "graphs live over different fields");
    if (phi.k() != psi.k()) throw Error(ErrorCode::LabelCountMismatch, "pinnings have different label counts");
    if (!phi.valid_for(h.size()) || !psi.valid_for(hp.size())) {
        throw Error(ErrorCode::ArityMismatch, "pinning target out of range");
    }
}

[[noreturn]] void internal(const std::string& what) {
    throw Error(ErrorCode::SeparationFailure, "recovery invariant broken: " + what);
}

// (beta(i, x_j), beta(x_j, i)) for j in [m], with x_j = cols[j].
std::vector<FieldValue> profile_tuple(const WeightedGraph& g, std::size_t i, const std::vector<std::size_t>& cols) {
    std::vector<FieldValue> t;
    t.reserve(2 * cols.size());
    for (auto c : cols) {
        t.push_back(g.beta(i, c));
        t.push_back(g.beta(c, i));
    }
    return t;
}

ExponentProfile split_exponents(const std::vector<std::uint64_t>& e, std::size_t m, std::size_t stride,
                                std::size_t offset) {
    ExponentProfile p{std::vector<std::uint64_t>(m), std::vector<std::uint64_t>(m)};
    for (std::size_t j = 0; j < m; ++j) {
        p.down[j] = e[stride * j + offset];
        p.up[j] = e[stride * j + offset + 1];
    }
    return p;
}

IsoCertificate non_iso(LabeledGraph g, const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi,
                       const LabelMap& psi, const Limits& limits, const char* source) {
    FieldValue lhs = hom_partial(g, h, phi, limits);
    FieldValue rhs = hom_partial(g, hp, psi, limits);
    if (lhs == rhs) internal(std::string(source) + " moment is nonzero but hom values agree");
    IsoCertificate cert;
    cert.verdict = Verdict::NonIso;
    cert.witness = WitnessResult{std::move(g), std::move(lhs), std::move(rhs), source};
    return cert;
}

VertexBijection invert(const VertexBijection& sigma) {
    VertexBijection inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = i;
    return inv;
}

std::optional<VertexBijection> oracle_search(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi,
                                             const LabelMap& psi, const Limits& limits) {
    if (h.size() != hp.size()) return std::nullopt;
    for (const auto& sigma : enumerate_isomorphisms(h, hp, limits)) {
        if (compose(sigma, phi) == psi) return sigma;
    }
    return std::nullopt;
}

IsoCertificate recover(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi, const LabelMap& psi,
                       const Limits& limits, bool certify);

struct ConstructiveOutcome {
    std::optional<VertexBijection> sigma;
    std::optional<WitnessResult> witness;
};

// Injective completions of a partial map t: [m] -> [m'] (unset entries are m').
template <typename Fn>
bool for_each_injective(std::vector<std::size_t>& t, std::vector<bool>& used, std::size_t pos, std::size_t mp,
                        Fn&& fn) {
    if (pos == t.size()) return fn(static_cast<const std::vector<std::size_t>&>(t));
    if (t[pos] != mp) return for_each_injective(t, used, pos + 1, mp, fn);
    for (std::size_t v = 0; v < mp; ++v) {
        if (used[v]) continue;
        used[v] = true;
        t[pos] = v;
        const bool stop = for_each_injective(t, used, pos + 1, mp, fn);
        t[pos] = mp;
        used[v] = false;
        if (stop) return true;
    }
    return false;
}

ConstructiveOutcome constructive_search(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi,
                                        const LabelMap& psi, const Limits& limits) {
    bool swapped = h.size() < hp.size() ||
                   (h.size() == hp.size() && !is_twin_free(h) && is_twin_free(hp));
    const WeightedGraph& a = swapped ? hp : h;
    const WeightedGraph& b = swapped ? h : hp;
    const LabelMap& pa = swapped ? psi : phi;
    const LabelMap& pb = swapped ? phi : psi;
    if (!is_twin_free(a)) {
        throw Error(ErrorCode::PreconditionViolated, "constructive mode needs a twin-free graph; contract first");
    }
    ConstructiveOutcome out;
    auto accept = [&](const IsoCertificate& cert) {
        if (cert.iso()) {
            out.sigma = swapped ? invert(cert.sigma) : cert.sigma;
        } else if (cert.witness) {
            out.witness = cert.witness;
            if (swapped) std::swap(out.witness->lhs, out.witness->rhs);
        }
    };

    const Extension ext = extend_map(pa, a);
    if (ext.ell == pa.k()) {
        accept(recover_isomorphism(a, b, pa, pb, limits));
        return out;
    }

    const std::size_t m = a.size();
    const std::size_t mp = b.size();
    // Candidate extensions of pb have the form t o eta; t has to agree with
    // pb on the image of pa and be injective, since it ends up a bijection.
    if (m != mp) return out;
    std::vector<std::size_t> t(m, mp);
    std::vector<bool> used(mp, false);
    for (std::size_t i = 0; i < pa.k(); ++i) {
        auto& slot = t[pa[i]];
        if (slot != mp && slot != pb[i]) return out;
        if (slot == mp) {
            if (used[pb[i]]) return out;
            slot = pb[i];
            used[pb[i]] = true;
        }
    }
    for_each_injective(t, used, 0, mp, [&](const std::vector<std::size_t>& cand) {
        LabelMap nu = pb;
        for (std::size_t i = pa.k(); i < ext.ell; ++i) nu.targets.push_back(cand[ext.eta[i]]);
        const auto cert = recover(a, b, ext.eta, nu, limits, false);
        if (cert.iso()) {
            out.sigma = swapped ? invert(cert.sigma) : cert.sigma;
            return true;
        }
        return false;
    });
    return out;
}

}  // namespace

bool is_isomorphism(const WeightedGraph& h, const WeightedGraph& hp, const VertexBijection& sigma) {
    const std::size_t m = h.size();
    if (hp.size() != m || sigma.size() != m || h.directed() != hp.directed()) return false;
    std::vector<bool> hit(m, false);
    for (auto v : sigma) {
        if (v >= m || hit[v]) return false;
        hit[v] = true;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!(h.alpha(i) == hp.alpha(sigma[i]))) return false;
        for (std::size_t j = 0; j < m; ++j) {
            if (!(h.beta(i, j) == hp.beta(sigma[i], sigma[j]))) return false;
        }
    }
    return true;
}

std::vector<VertexBijection> enumerate_isomorphisms(const WeightedGraph& h, const WeightedGraph& hp,
                                                    const Limits& limits) {
    std::vector<VertexBijection> out;
    const std::size_t m = h.size();
    if (hp.size() != m || h.directed() != hp.directed() || !(h.spec() == hp.spec())) return out;
    if (m > limits.oracle_max_vertices) {
        throw Error(ErrorCode::Budget, "isomorphism oracle limited to " + std::to_string(limits.oracle_max_vertices) +
                                           " vertices, got " + std::to_string(m));
    }
    // Row and column multisets are invariant under isomorphism; use them to
    // cut candidates before backtracking.
    auto signature = [](const WeightedGraph& g, std::size_t i) {
        std::vector<FieldValue> row, col;
        for (std::size_t j = 0; j < g.size(); ++j) {
            row.push_back(g.beta(i, j));
            col.push_back(g.beta(j, i));
        }
        std::sort(row.begin(), row.end());
        std::sort(col.begin(), col.end());
        row.insert(row.end(), col.begin(), col.end());
        row.push_back(g.alpha(i));
        row.push_back(g.beta(i, i));
        return row;
    };
    std::vector<std::vector<FieldValue>> sa(m), sb(m);
    for (std::size_t i = 0; i < m; ++i) {
        sa[i] = signature(h, i);
        sb[i] = signature(hp, i);
    }
    VertexBijection sigma(m, 0);
    std::vector<bool> used(m, false);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
            out.push_back(sigma);
            return;
        }
        for (std::size_t v = 0; v < m; ++v) {
            if (used[v] || !(sa[i] == sb[v])) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                ok = h.beta(i, j) == hp.beta(v, sigma[j]) && h.beta(j, i) == hp.beta(sigma[j], v);
            }
            if (!ok) continue;
            used[v] = true;
            sigma[i] = v;
            self(self, i + 1);
            used[v] = false;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<VertexBijection> enumerate_automorphisms(const WeightedGraph& h, const Limits& limits) {
    return enumerate_isomorphisms(h, h, limits);
}

bool same_type(const LabelMap& phi, const LabelMap& psi) {
    if (phi.k() != psi.k()) throw Error(ErrorCode::LabelCountMismatch, "pinnings have different label counts");
    for (std::size_t i = 0; i < phi.k(); ++i) {
        for (std::size_t j = i + 1; j < phi.k(); ++j) {
            if ((phi[i] == phi[j]) != (psi[i] == psi[j])) return false;
        }
    }
    return true;
}

namespace {

// With certify off, NonIso verdicts come back without a witness graph.
IsoCertificate recover(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi, const LabelMap& psi,
                       const Limits& limits, bool certify) {
    check_pair(h, hp, phi, psi);
    const std::size_t m = h.size();
    const std::size_t mp = hp.size();
    const std::size_t k = phi.k();
    const bool directed = h.directed();
    if (m < mp) throw Error(ErrorCode::PreconditionViolated, "recovery needs m >= m'");
    if (!is_twin_free(h)) throw Error(ErrorCode::PreconditionViolated, "recovery needs a twin-free first graph");
    IsoCertificate cert;
    if (m == 0) {
        cert.verdict = Verdict::Iso;
        return cert;
    }
    {
        std::vector<std::size_t> count(m, 0);
        for (auto t : phi.targets) ++count[t];
        for (std::size_t u = 0; u < m; ++u) {
            if (count[u] < 4 * m * m) {
                throw Error(ErrorCode::PreconditionViolated,
                            "vertex " + std::to_string(u + 1) + " has " + std::to_string(count[u]) +
                                " preimages, needs " + std::to_string(4 * m * m) + "; use extend_map");
            }
        }
    }
    const BlockChoice bc = choose_blocks(phi, psi, m, 4 * m);
    const auto& s = bc.target;
    std::vector<std::size_t> own(m);
    for (std::size_t j = 0; j < m; ++j) own[j] = j;

    std::vector<std::vector<FieldValue>> lhs_t(m), rhs_t(mp);
    for (std::size_t i = 0; i < m; ++i) lhs_t[i] = profile_tuple(h, i, own);
    for (std::size_t q = 0; q < mp; ++q) rhs_t[q] = profile_tuple(hp, q, s);

    auto single_system = [&](auto&& lhs_coeff, auto&& rhs_coeff) {
        MomentSystem sys{h.spec(), {}, {}};
        for (std::size_t i = 0; i < m; ++i) {
            sys.a.push_back(lhs_coeff(i));
            sys.b.push_back(lhs_t[i]);
        }
        for (std::size_t q = 0; q < mp; ++q) {
            sys.a.push_back(-rhs_coeff(q));
            sys.b.push_back(rhs_t[q]);
        }
        return sys;
    };

    // G_chi over the family R.
    const auto sys1 = single_system([&](std::size_t i) { return h.alpha(i); },
                                    [&](std::size_t q) { return hp.alpha(q); });
    if (auto e = find_nonvanishing_moment(sys1)) {
        if (!certify) return cert;
        auto word = word_for_profile(k, bc.blocks, split_exponents(*e, m, 2, 0));
        return non_iso(build_G_kappa(word, directed), h, hp, phi, psi, limits, "G_kappa");
    }

    // All moments vanish, so every class sum is zero: each LHS tuple is met by
    // exactly one RHS vertex with the same weight.
    VertexBijection sigma(m, mp);
    std::vector<bool> covered(mp, false);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t q = 0; q < mp; ++q) {
            if (rhs_t[q] == lhs_t[i]) {
                if (sigma[i] != mp) internal("N_i has more than one element");
                sigma[i] = q;
                covered[q] = true;
            }
        }
        if (sigma[i] == mp) internal("N_i is empty");
        if (!(h.alpha(i) == hp.alpha(sigma[i]))) internal("vertex weights differ across N_i");
    }
    if (m != mp || std::count(covered.begin(), covered.end(), false) != 0) internal("N_i do not cover V(H')");
    {
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) internal("s is not injective");
    }

    // psi is constant on each I_w: test labels outside the blocks with R_down, R_up.
    for (std::size_t w = 0; w < m; ++w) {
        std::vector<bool> checked(mp, false);
        for (std::size_t t = 0; t < k; ++t) {
            if (phi[t] != w || psi[t] == s[w] || checked[psi[t]]) continue;
            checked[psi[t]] = true;
            const std::size_t pt = psi[t];
            const auto down = single_system([&](std::size_t i) { return h.alpha(i) * h.beta(i, w); },
                                            [&](std::size_t q) { return hp.alpha(q) * hp.beta(q, pt); });
            if (auto e = find_nonvanishing_moment(down)) {
                if (!certify) return cert;
                auto word = word_for_profile(k, bc.blocks, split_exponents(*e, m, 2, 0));
                word[t] = Arrow::Down;
        return non_iso(build_G_kappa(word, directed), h, hp, phi, psi, limits, "G_kappa");
            }
            if (directed) {
                const auto up = single_system([&](std::size_t i) { return h.alpha(i) * h.beta(w, i); },
                                              [&](std::size_t q) { return hp.alpha(q) * hp.beta(pt, q); });
                if (auto e = find_nonvanishing_moment(up)) {
                    if (!certify) return cert;
                    auto word = word_for_profile(k, bc.blocks, split_exponents(*e, m, 2, 0));
                    word[t] = Arrow::Up;
        return non_iso(build_G_kappa(word, directed), h, hp, phi, psi, limits, "G_kappa");
                }
            }
            internal("psi not constant on a preimage class although R_down/R_up agree");
        }
    }

    // Edge weights through the pairs (lambda, tau).
    {
        MomentSystem sys{h.spec(), {}, {}};
        auto pair_tuple = [](const std::vector<FieldValue>& x, const std::vector<FieldValue>& y) {
            std::vector<FieldValue> t;
            t.reserve(2 * x.size());
            for (std::size_t r = 0; r < x.size(); r += 2) {
                t.push_back(x[r]);
                t.push_back(x[r + 1]);
                t.push_back(y[r]);
                t.push_back(y[r + 1]);
            }
            return t;
        };
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                sys.a.push_back(h.alpha(i) * h.alpha(j) * h.beta(i, j));
                sys.b.push_back(pair_tuple(lhs_t[i], lhs_t[j]));
            }
        }
        for (std::size_t q = 0; q < mp; ++q) {
            for (std::size_t r = 0; r < mp; ++r) {
                sys.a.push_back(-(hp.alpha(q) * hp.alpha(r) * hp.beta(q, r)));
                sys.b.push_back(pair_tuple(rhs_t[q], rhs_t[r]));
            }
        }
        if (auto e = find_nonvanishing_moment(sys)) {
            if (!certify) return cert;
            auto lambda = word_for_profile(k, bc.blocks, split_exponents(*e, m, 4, 0));
            auto tau = word_for_profile(k, bc.blocks, split_exponents(*e, m, 4, 2));
            return non_iso(build_G_lambda_tau(lambda, tau, directed), h, hp, phi, psi, limits, "G_lambda_tau");
        }
    }

    if (!is_isomorphism(h, hp, sigma)) internal("sigma does not preserve weights");
    if (sigma != s) internal("sigma differs from s");
    if (!(compose(sigma, phi) == psi)) internal("psi != sigma o phi");
    cert.verdict = Verdict::Iso;
    cert.sigma = std::move(sigma);
    return cert;
}

}  // namespace

IsoCertificate recover_isomorphism(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi,
                                   const LabelMap& psi, const Limits& limits) {
    return recover(h, hp, phi, psi, limits, true);
}

IsoCertificate decide_pinned_iso(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi,
                                 const LabelMap& psi, const DecideOptions& options) {
    check_pair(h, hp, phi, psi);
    const Limits& limits = options.limits;
    std::optional<VertexBijection> by_oracle;
    ConstructiveOutcome by_proof;
    if (options.mode != DecideMode::Constructive) by_oracle = oracle_search(h, hp, phi, psi, limits);
    if (options.mode != DecideMode::Oracle) by_proof = constructive_search(h, hp, phi, psi, limits);
    if (options.mode == DecideMode::Both && by_oracle.has_value() != by_proof.sigma.has_value()) {
        throw Error(ErrorCode::SeparationFailure, std::string("oracle says ") + (by_oracle ? "iso" : "noniso") +
                                                      ", constructive recovery disagrees");
    }
    const bool iso = options.mode == DecideMode::Oracle ? by_oracle.has_value() : by_proof.sigma.has_value();

    IsoCertificate cert;
    if (iso) {
        cert.verdict = Verdict::Iso;
        cert.sigma = by_proof.sigma ? *by_proof.sigma : *by_oracle;
        if (!is_isomorphism(h, hp, cert.sigma) || !(compose(cert.sigma, phi) == psi)) {
            throw Error(ErrorCode::SeparationFailure, "returned map is not a pinned isomorphism");
        }
        return cert;
    }
    cert.verdict = Verdict::NonIso;
    if (by_proof.witness) {
        cert.witness = std::move(by_proof.witness);
    } else if (options.search) {
        cert.witness = options.search(h, hp, phi, psi);
    } else {
        cert.witness = find_witness(h, hp, phi, psi, options.witness);
    }
    if (cert.witness && (cert.witness->lhs == cert.witness->rhs || !is_simple(cert.witness->graph))) {
        throw Error(ErrorCode::SeparationFailure, "witness does not separate");
    }
    return cert;
}

TwinLevelResult decide_twin_level(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi,
                                  const LabelMap& psi, const DecideOptions& options) {
    check_pair(h, hp, phi, psi);
    for (const auto* g : {&h, &hp}) {
        for (const auto& a : g->alphas()) {
            if (!a.is_one()) throw Error(ErrorCode::PreconditionViolated, "twin-level decision needs unit vertex weights");
        }
    }
    const auto ca = contract_with_map(h);
    const auto cb = contract_with_map(hp);
    auto push = [](const Contraction& c, const LabelMap& pin) {
        LabelMap out;
        for (auto t : pin.targets) {
            if (!c.vertex_map[t]) throw Error(ErrorCode::PreconditionViolated, "pinned vertex lies in a dropped class");
            out.targets.push_back(*c.vertex_map[t]);
        }
        return out;
    };
    auto classes = [](const Contraction& c) {
        std::vector<std::vector<std::size_t>> out(c.graph.size());
        for (std::size_t v = 0; v < c.vertex_map.size(); ++v) {
            if (c.vertex_map[v]) out[*c.vertex_map[v]].push_back(v);
        }
        return out;
    };
    TwinLevelResult out;
    out.certificate = decide_pinned_iso(ca.graph, cb.graph, push(ca, phi), push(cb, psi), options);
    out.classes_a = classes(ca);
    out.classes_b = classes(cb);
    if (out.certificate.iso()) out.class_sigma = out.certificate.sigma;
    return out;
}

}  // namespace homalg
