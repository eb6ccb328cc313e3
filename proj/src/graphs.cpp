#include "homalg/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "homalg/error.hpp"

namespace homalg {

WeightedGraph::WeightedGraph(FieldSpec spec, bool directed, std::vector<FieldValue> alpha_in,
                             std::vector<FieldValue> beta_in)
    : spec_(spec), directed_(directed), alpha_(std::move(alpha_in)), beta_(std::move(beta_in)) {
    const std::size_t m = alpha_.size();
    if (beta_.size() != m * m) {
        throw Error(ErrorCode::Malformed, "edge-weight matrix must be " + std::to_string(m) + "x" +
                                              std::to_string(m));
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!(alpha_[i].spec() == spec_)) throw Error(ErrorCode::SpecMismatch, "vertex weight field");
        if (alpha_[i].is_zero()) {
            throw Error(ErrorCode::Malformed, "vertex " + std::to_string(i + 1) + " has zero weight");
        }
    }
    for (const auto& b : beta_) {
        if (!(b.spec() == spec_)) throw Error(ErrorCode::SpecMismatch, "edge weight field");
    }
    if (!directed_) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                if (!(beta(i, j) == beta(j, i))) {
                    throw Error(ErrorCode::Malformed, "undirected graph needs a symmetric matrix");
                }
            }
        }
    }
}

WeightedGraph WeightedGraph::from_ints(FieldSpec spec, bool directed,
                                       const std::vector<std::int64_t>& alpha,
                                       const std::vector<std::vector<std::int64_t>>& beta) {
    std::vector<FieldValue> a;
    a.reserve(alpha.size());
    for (auto v : alpha) a.push_back(FieldValue::from_int(v, spec));
    std::vector<FieldValue> b;
    b.reserve(alpha.size() * alpha.size());
    if (beta.size() != alpha.size()) throw Error(ErrorCode::Malformed, "edge-weight matrix rows");
    for (const auto& row : beta) {
        if (row.size() != alpha.size()) throw Error(ErrorCode::Malformed, "edge-weight matrix columns");
        for (auto v : row) b.push_back(FieldValue::from_int(v, spec));
    }
    return WeightedGraph(spec, directed, std::move(a), std::move(b));
}

WeightedGraph WeightedGraph::permuted(std::span<const std::size_t> perm) const {
    const std::size_t m = size();
    if (perm.size() != m) throw Error(ErrorCode::ArityMismatch, "permutation size");
    std::vector<FieldValue> a(m);
    std::vector<FieldValue> b(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        a[perm[i]] = alpha(i);
        for (std::size_t j = 0; j < m; ++j) b[perm[i] * m + perm[j]] = beta(i, j);
    }
    return WeightedGraph(spec_, directed_, std::move(a), std::move(b));
}

WeightedGraph WeightedGraph::induced(std::span<const std::size_t> vertices) const {
    const std::size_t r = vertices.size();
    std::vector<FieldValue> a;
    std::vector<FieldValue> b;
    a.reserve(r);
    b.reserve(r * r);
    for (auto i : vertices) a.push_back(alpha(i));
    for (auto i : vertices) {
        for (auto j : vertices) b.push_back(beta(i, j));
    }
    return WeightedGraph(spec_, directed_, std::move(a), std::move(b));
}

bool LabelMap::valid_for(std::size_t m) const noexcept {
    return std::all_of(targets.begin(), targets.end(), [m](std::size_t t) { return t < m; });
}

LabelMap compose(std::span<const std::size_t> sigma, const LabelMap& phi) {
    LabelMap out;
    out.targets.reserve(phi.k());
    for (auto t : phi.targets) out.targets.push_back(sigma[t]);
    return out;
}

LabeledGraph::LabeledGraph(std::size_t k, std::size_t n, bool directed, std::vector<Edge> edges)
    : k_(k), n_(n), directed_(directed) {
    if (k > n) throw Error(ErrorCode::Malformed, "more labels than vertices");
    for (auto& e : edges) {
        if (e.from >= n || e.to >= n) throw Error(ErrorCode::Malformed, "edge endpoint out of range");
        if (e.from == e.to) throw Error(ErrorCode::Malformed, "loops are not allowed");
        if (!directed && e.from > e.to) std::swap(e.from, e.to);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
    for (const auto& e : edges) {
        if (e.mult == 0) continue;
        if (!edges_.empty() && edges_.back().from == e.from && edges_.back().to == e.to) {
            edges_.back().mult += e.mult;
        } else {
            edges_.push_back(e);
        }
    }
}

LabeledGraph LabeledGraph::with_labels(std::size_t n, bool directed,
                                       const std::vector<std::size_t>& labels,
                                       const std::vector<Edge>& edges) {
    const std::size_t k = labels.size();
    std::vector<std::size_t> rename(n, n);
    for (std::size_t i = 0; i < k; ++i) {
        if (labels[i] >= n) throw Error(ErrorCode::Malformed, "label on missing vertex");
        if (rename[labels[i]] != n) throw Error(ErrorCode::Malformed, "vertex labeled twice");
        rename[labels[i]] = i;
    }
    std::size_t next = k;
    for (std::size_t v = 0; v < n; ++v) {
        if (rename[v] == n) rename[v] = next++;
    }
    std::vector<Edge> renamed;
    renamed.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.from >= n || e.to >= n) throw Error(ErrorCode::Malformed, "edge endpoint out of range");
        renamed.push_back({rename[e.from], rename[e.to], e.mult});
    }
    return LabeledGraph(k, n, directed, std::move(renamed));
}

LabeledGraph LabeledGraph::unit(std::size_t k, bool directed) { return LabeledGraph(k, k, directed, {}); }

std::uint64_t LabeledGraph::multiplicity(std::size_t u, std::size_t v) const {
    if (!directed_ && u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v),
                               [](const Edge& e, const std::pair<std::size_t, std::size_t>& key) {
                                   return std::tie(e.from, e.to) < std::tie(key.first, key.second);
                               });
    if (it != edges_.end() && it->from == u && it->to == v) return it->mult;
    return 0;
}

std::uint64_t LabeledGraph::edge_count() const noexcept {
    std::uint64_t total = 0;
    for (const auto& e : edges_) total += e.mult;
    return total;
}

LabeledGraph glue(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.k() != b.k()) {
        throw Error(ErrorCode::LabelCountMismatch,
                    "glue needs equal label counts (" + std::to_string(a.k()) + " vs " +
                        std::to_string(b.k()) + ")");
    }
    if (a.directed() != b.directed()) throw Error(ErrorCode::DirectednessMismatch, "glue");
    const std::size_t k = a.k();
    const std::size_t offset = a.n() - k;
    auto shift = [&](std::size_t v) { return v < k ? v : v + offset; };
    std::vector<Edge> edges = a.edges();
    for (const auto& e : b.edges()) edges.push_back({shift(e.from), shift(e.to), e.mult});
    return LabeledGraph(k, a.n() + b.n() - k, a.directed(), std::move(edges));
}

LabeledGraph power(const LabeledGraph& g, std::uint64_t h) {
    const std::size_t k = g.k();
    const std::size_t f = g.free_count();
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() * h);
    for (std::uint64_t c = 0; c < h; ++c) {
        auto shift = [&](std::size_t v) { return v < k ? v : v + c * f; };
        for (const auto& e : g.edges()) edges.push_back({shift(e.from), shift(e.to), e.mult});
    }
    return LabeledGraph(k, k + f * h, g.directed(), std::move(edges));
}

bool is_simple(const LabeledGraph& g) {
    for (const auto& e : g.edges()) {
        if (e.mult != 1) return false;
        if (e.from < g.k() && e.to < g.k()) return false;
        if (g.directed() && g.multiplicity(e.to, e.from) != 0) return false;
    }
    return true;
}

LabeledGraph unlabel(const LabeledGraph& g, std::size_t keep) {
    if (keep > g.k()) throw Error(ErrorCode::ArityMismatch, "cannot keep more labels than exist");
    return LabeledGraph(keep, g.n(), g.directed(), g.edges());
}

namespace {

// Iterated colour refinement of the free vertices; labeled vertices keep
// their label as colour. Returns one colour per vertex, canonical in the
// sense that it only depends on the isomorphism class.
std::vector<std::size_t> refine_colours(const LabeledGraph& g) {
    const std::size_t n = g.n();
    const std::size_t k = g.k();
    std::vector<std::size_t> colour(n, k);
    for (std::size_t v = 0; v < k; ++v) colour[v] = v;
    std::size_t classes = (n > k) ? k + 1 : k;

    // Adjacency lists with orientation tags.
    struct Arc {
        std::size_t other;
        std::uint64_t mult;
        int dir;  // 0 undirected, 1 outgoing, 2 incoming
    };
    std::vector<std::vector<Arc>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.from].push_back({e.to, e.mult, g.directed() ? 1 : 0});
        adj[e.to].push_back({e.from, e.mult, g.directed() ? 2 : 0});
    }

    using Signature = std::pair<std::size_t, std::vector<std::tuple<std::size_t, std::uint64_t, int>>>;
    while (true) {
        std::vector<Signature> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            for (const auto& a : adj[v]) sig[v].second.emplace_back(colour[a.other], a.mult, a.dir);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::vector<Signature> distinct;
        for (std::size_t v = k; v < n; ++v) distinct.push_back(sig[v]);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<std::size_t> next(n);
        for (std::size_t v = 0; v < k; ++v) next[v] = v;
        for (std::size_t v = k; v < n; ++v) {
            next[v] = k + static_cast<std::size_t>(
                              std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                              distinct.begin());
        }
        const std::size_t now = k + distinct.size();
        colour = std::move(next);
        if (now == classes) break;
        classes = now;
    }
    return colour;
}

}  // namespace

std::string canonical_form(const LabeledGraph& g) {
    const std::size_t n = g.n();
    const std::size_t k = g.k();
    const auto colour = refine_colours(g);

    // Free vertices grouped into cells by colour; only permutations within a
    // cell can produce the minimum encoding.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                     [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = k; i < n;) {
        std::size_t j = i;
        while (j < n && colour[order[j]] == colour[order[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    std::uint64_t perms = 1;
    for (auto [b, e] : cells) {
        for (std::size_t i = 2; i <= e - b; ++i) perms = sat_mul(perms, i);
    }
    if (perms > 20'000'000) {
        throw Error(ErrorCode::Budget, "canonical form needs " + std::to_string(perms) + " permutations");
    }

    std::vector<std::vector<std::uint64_t>> mat(n, std::vector<std::uint64_t>(n, 0));
    for (const auto& e : g.edges()) {
        mat[e.from][e.to] = e.mult;
        if (!g.directed()) mat[e.to][e.from] = e.mult;
    }

    std::vector<std::uint64_t> best;
    std::vector<std::uint64_t> current;
    auto encode = [&]() {
        current.clear();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = g.directed() ? 0 : i + 1; j < n; ++j) {
                current.push_back(mat[order[i]][order[j]]);
            }
        }
        if (best.empty() || current < best) best = current;
    };
    for (auto& [b, e] : cells) {
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(b),
                  order.begin() + static_cast<std::ptrdiff_t>(e));
    }
    while (true) {
        encode();
        std::size_t c = cells.size();
        while (c > 0) {
            auto [b, e] = cells[c - 1];
            if (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(b),
                                      order.begin() + static_cast<std::ptrdiff_t>(e))) {
                break;
            }
            --c;
        }
        if (c == 0) break;
    }

    std::string out = (g.directed() ? "D" : "U") + std::to_string(k) + ":" + std::to_string(n) + ":";
    for (auto v : best) {
        out += std::to_string(v);
        out += ',';
    }
    return out;
}

}  // namespace homalg
