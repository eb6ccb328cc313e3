#include "homalg/tensor.hpp"

#include <map>
#include <numeric>

#include "homalg/hom.hpp"
#include "homalg/isomorphism.hpp"
#include "homalg/witness.hpp"

namespace homalg {

namespace {

using Column = std::vector<FieldValue>;

// Incremental column echelon basis; add() reports whether the rank grew.
class EchelonBasis {
public:
    bool add(Column v) {
        for (std::size_t b = 0; b < vecs_.size(); ++b) {
            const auto p = pivots_[b];
            if (v[p].is_zero()) continue;
            const FieldValue f = v[p];
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (!vecs_[b][i].is_zero()) v[i] -= f * vecs_[b][i];
            }
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            const FieldValue inv = v[i].inverse();
            for (auto& x : v) x *= inv;
            pivots_.push_back(i);
            vecs_.push_back(std::move(v));
            return true;
        }
        return false;
    }
    std::size_t size() const noexcept { return vecs_.size(); }

private:
    std::vector<Column> vecs_;
    std::vector<std::size_t> pivots_;
};

std::size_t row_index(const LabelMap& phi, std::size_t m) {
    std::size_t r = 0;
    for (auto t : phi.targets) r = r * m + t;
    return r;
}

Column hadamard(const Column& a, const Column& b) {
    Column out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

Tensor tensor_from_columns(const std::vector<Column>& cols, const std::vector<FieldValue>& weights,
                           const FieldSpec& spec, std::size_t n, const Limits& limits) {
    Tensor t;
    t.order = n;
    t.side = cols.size();
    const std::uint64_t count = sat_pow(cols.size(), n);
    require_budget(sat_mul(count, weights.size() * (n + 1)), limits, "connection tensor");
    t.entries.assign(count, FieldValue::zero(spec));
    std::vector<std::size_t> idx(n, 0);
    for (std::uint64_t e = 0; e < count; ++e) {
        FieldValue acc = FieldValue::zero(spec);
        for (std::size_t r = 0; r < weights.size(); ++r) {
            FieldValue term = weights[r];
            for (std::size_t s = 0; s < n && !term.is_zero(); ++s) term *= cols[idx[s]][r];
            acc += term;
        }
        t.entries[e] = std::move(acc);
        std::size_t s = n;
        while (s > 0) {
            if (++idx[s - 1] < cols.size()) break;
            idx[s - 1] = 0;
            --s;
        }
    }
    return t;
}

std::vector<FieldValue> row_weights(const WeightedGraph& h, const std::vector<LabelMap>& rows) {
    std::vector<FieldValue> w;
    w.reserve(rows.size());
    for (const auto& phi : rows) w.push_back(alpha_product(h, phi));
    return w;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& spec)
    : rows_(rows), cols_(cols), spec_(spec), data_(rows * cols, FieldValue::zero(spec)) {}

std::size_t rank(const Matrix& a) {
    Matrix w = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        std::size_t p = r;
        while (p < w.rows() && w.at(p, c).is_zero()) ++p;
        if (p == w.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w.at(p, j), w.at(r, j));
        }
        const FieldValue inv = w.at(r, c).inverse();
        for (std::size_t i = r + 1; i < w.rows(); ++i) {
            if (w.at(i, c).is_zero()) continue;
            const FieldValue f = w.at(i, c) * inv;
            for (std::size_t j = c; j < w.cols(); ++j) w.at(i, j) -= f * w.at(r, j);
        }
        ++r;
    }
    return r;
}

std::vector<LabelMap> all_label_maps(std::size_t k, std::size_t m, const Limits& limits) {
    require_budget(sat_mul(sat_pow(m, k), k + 1), limits, "label maps");
    std::vector<LabelMap> out;
    for_each_label_map(k, m, [&](const LabelMap& phi) { out.push_back(phi); });
    return out;
}

TruncatedConnectionMatrix build_N(const WeightedGraph& h, std::size_t k, const std::vector<LabeledGraph>& columns,
                                  const Limits& limits) {
    TruncatedConnectionMatrix n;
    n.k = k;
    n.rows = all_label_maps(k, h.size(), limits);
    n.columns = columns;
    n.entries = Matrix(n.rows.size(), columns.size(), h.spec());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].k() != k) throw Error(ErrorCode::ArityMismatch, "column graph has the wrong label count");
        for (std::size_t r = 0; r < n.rows.size(); ++r) n.entries.at(r, j) = hom_partial(columns[j], h, n.rows[r], limits);
    }
    return n;
}

Matrix build_M(const WeightedGraph& h, const std::vector<LabeledGraph>& columns, const Limits& limits) {
    Matrix out(columns.size(), columns.size(), h.spec());
    for (std::size_t i = 0; i < columns.size(); ++i) {
        for (std::size_t j = i; j < columns.size(); ++j) {
            out.at(i, j) = hom(glue(columns[i], columns[j]), h, limits);
            out.at(j, i) = out.at(i, j);
        }
    }
    return out;
}

Tensor build_T(const WeightedGraph& h, std::size_t k, std::size_t n, const std::vector<LabeledGraph>& columns,
               const Limits& limits) {
    const auto nm = build_N(h, k, columns, limits);
    std::vector<Column> cols(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (std::size_t r = 0; r < nm.rows.size(); ++r) cols[j].push_back(nm.entries.at(r, j));
    }
    return tensor_from_columns(cols, row_weights(h, nm.rows), h.spec(), n, limits);
}

Matrix unfold_first(const Tensor& t, const FieldSpec& spec) {
    if (t.order == 0) {
        Matrix out(1, 1, spec);
        out.at(0, 0) = t.entries.at(0);
        return out;
    }
    const std::size_t rows = t.side;
    const std::size_t cols = rows == 0 ? 0 : t.entries.size() / rows;
    Matrix out(rows, cols, spec);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = t.entries[i * cols + j];
    }
    return out;
}

OrbitPartition orbit_partition(const WeightedGraph& h, std::size_t k, const Limits& limits) {
    const std::size_t m = h.size();
    const auto rows = all_label_maps(k, m, limits);
    const auto autos = enumerate_automorphisms(h, limits);
    require_budget(sat_mul(sat_mul(rows.size(), autos.size()), k + 1), limits, "orbit count");
    std::vector<std::size_t> parent(rows.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& sigma : autos) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto a = find(r);
            const auto b = find(row_index(compose(sigma, rows[r]), m));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    OrbitPartition out;
    out.orbit_of.resize(rows.size());
    std::map<std::size_t, std::size_t> dense;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto [it, fresh] = dense.try_emplace(find(r), dense.size());
        out.orbit_of[r] = it->second;
    }
    out.count = dense.size();
    return out;
}

std::size_t orbit_count(const WeightedGraph& h, std::size_t k, const Limits& limits) {
    return orbit_partition(h, k, limits).count;
}

bool RankReport::holds() const {
    const bool common = rank_N <= bound && rank_M <= bound && rank_T3 <= bound && rank_M <= rank_N &&
                        rank_N <= orbits && m_direct_agrees && t2_equals_m;
    if (!common) return false;
    if (!field.is_rationals()) return true;
    return rank_N == orbits && rank_M == orbits && rank_T3 == nonzero_classes && nonzero_classes == orbits &&
           rows_match_orbits;
}

namespace {

struct Stabilized {
    std::vector<LabelMap> rows;
    std::vector<LabeledGraph> basis;
    std::vector<Column> basis_cols;
    std::vector<Column> all_cols;
    std::size_t examined = 0;
    bool stabilized = false;
};

Stabilized stabilize(const WeightedGraph& h, std::size_t k, std::size_t target, const RankOptions& options) {
    const Limits& limits = options.limits;
    const bool char0 = h.spec().is_rationals();
    Stabilized st;
    st.rows = all_label_maps(k, h.size(), limits);
    EchelonBasis echelon;
    auto offer = [&](const LabeledGraph& g, Column col) {
        ++st.examined;
        st.all_cols.push_back(col);
        if (echelon.add(col)) {
            st.basis.push_back(g);
            st.basis_cols.push_back(std::move(col));
            return true;
        }
        return false;
    };
    auto done = [&] { return char0 && echelon.size() == target; };

    for (std::size_t f = 0; f <= options.max_free && !done(); ++f) {
        const std::vector<LabeledGraph>* tier = nullptr;
        try {
            tier = &simple_graphs(k, f, h.directed(), limits);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Budget) break;
            throw;
        }
        for (const auto& g : *tier) {
            Column col;
            col.reserve(st.rows.size());
            for (const auto& phi : st.rows) col.push_back(hom_partial(g, h, phi, limits));
            offer(g, std::move(col));
            if (done()) break;
        }
    }
    // Glue products of basis columns: entries multiply pointwise, so the
    // product graphs are never evaluated directly.
    bool grew = true;
    for (std::size_t pass = 0; pass < options.product_passes && grew && !done(); ++pass) {
        grew = false;
        const std::size_t r = st.basis.size();
        for (std::size_t a = 0; a < r && !done(); ++a) {
            for (std::size_t b = a; b < r && !done(); ++b) {
                auto g = glue(st.basis[a], st.basis[b]);
                grew |= offer(g, hadamard(st.basis_cols[a], st.basis_cols[b]));
            }
        }
    }
    st.stabilized = char0 ? echelon.size() == target : !grew;
    return st;
}

}  // namespace

RankReport verify_rank_theorem(const WeightedGraph& h, std::size_t k, const RankOptions& options) {
    const Limits& limits = options.limits;
    RankReport rep;
    rep.k = k;
    rep.m = h.size();
    rep.field = h.spec();
    rep.bound = sat_pow(h.size(), k);
    const auto orbits = orbit_partition(h, k, limits);
    rep.orbits = orbits.count;

    Stabilized st = stabilize(h, k, orbits.count, options);
    rep.basis = st.basis;
    rep.columns_examined = st.examined;
    rep.stabilized = st.stabilized;
    rep.rank_N = st.basis.size();

    // Row classes over every examined column, and their weight sums b_J.
    std::map<Column, std::size_t> cls;
    std::vector<std::size_t> class_of(st.rows.size());
    std::vector<FieldValue> b;
    const auto weights = row_weights(h, st.rows);
    for (std::size_t r = 0; r < st.rows.size(); ++r) {
        Column row;
        for (const auto& c : st.all_cols) row.push_back(c[r]);
        auto [it, fresh] = cls.try_emplace(std::move(row), cls.size());
        if (fresh) b.push_back(FieldValue::zero(h.spec()));
        class_of[r] = it->second;
        b[it->second] += weights[r];
    }
    rep.row_classes = cls.size();
    rep.nonzero_classes = 0;
    for (const auto& x : b) rep.nonzero_classes += x.is_zero() ? 0 : 1;
    rep.rows_match_orbits = true;
    for (std::size_t r = 0; r < st.rows.size() && rep.rows_match_orbits; ++r) {
        for (std::size_t q = r + 1; q < st.rows.size(); ++q) {
            if ((class_of[r] == class_of[q]) != (orbits.orbit_of[r] == orbits.orbit_of[q])) {
                rep.rows_match_orbits = false;
                break;
            }
        }
    }

    const Tensor t2 = tensor_from_columns(st.basis_cols, weights, h.spec(), 2, limits);
    const Matrix m_dec = unfold_first(t2, h.spec());
    rep.rank_M = rank(m_dec);
    const Tensor t3 = tensor_from_columns(st.basis_cols, weights, h.spec(), 3, limits);
    rep.rank_T3 = rank(unfold_first(t3, h.spec()));

    // Cross-check against the glued graphs on the cheapest columns.
    std::vector<std::size_t> small;
    for (std::size_t j = 0; j < st.basis.size() && small.size() < 4; ++j) {
        if (st.basis[j].free_count() <= 3) small.push_back(j);
    }
    rep.m_direct_agrees = true;
    rep.t2_equals_m = true;
    std::vector<LabeledGraph> picked;
    for (auto j : small) picked.push_back(st.basis[j]);
    const Matrix direct = build_M(h, picked, limits);
    const Tensor t2_direct = build_T(h, k, 2, picked, limits);
    for (std::size_t a = 0; a < small.size(); ++a) {
        for (std::size_t c = 0; c < small.size(); ++c) {
            if (!(direct.at(a, c) == m_dec.at(small[a], small[c]))) rep.m_direct_agrees = false;
            if (!(t2_direct.entries[a * small.size() + c] == direct.at(a, c))) rep.t2_equals_m = false;
        }
    }
    return rep;
}

ColumnSpaceReport verify_column_space(const WeightedGraph& h, std::size_t k, const RankOptions& options) {
    const Limits& limits = options.limits;
    ColumnSpaceReport rep;
    rep.k = k;
    const auto orbits = orbit_partition(h, k, limits);
    rep.orbits = orbits.count;
    Stabilized st = stabilize(h, k, orbits.count, options);

    const std::size_t m = h.size();
    const auto autos = enumerate_automorphisms(h, limits);
    rep.invariant = true;
    for (const auto& col : st.all_cols) {
        for (const auto& sigma : autos) {
            for (std::size_t r = 0; r < st.rows.size(); ++r) {
                if (!(col[r] == col[row_index(compose(sigma, st.rows[r]), m)])) rep.invariant = false;
            }
        }
    }
    rep.span_dim = st.basis.size();
    Matrix joint(st.rows.size(), st.basis_cols.size() + orbits.count, h.spec());
    for (std::size_t r = 0; r < st.rows.size(); ++r) {
        for (std::size_t j = 0; j < st.basis_cols.size(); ++j) joint.at(r, j) = st.basis_cols[j][r];
        joint.at(r, st.basis_cols.size() + orbits.orbit_of[r]) = FieldValue::one(h.spec());
    }
    rep.joint_rank = rank(joint);
    return rep;
}

}  // namespace homalg
