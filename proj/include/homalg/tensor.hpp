#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homalg/error.hpp"
#include "homalg/field.hpp"
#include "homalg/graphs.hpp"

namespace homalg {

/// Dense row-major matrix of field values.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& spec);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldSpec& spec() const noexcept { return spec_; }
    FieldValue& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const FieldValue& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    FieldSpec spec_;
    std::vector<FieldValue> data_;
};

/// Exact rank by Gaussian elimination.
std::size_t rank(const Matrix& a);

/// Every map [k] -> [m], lexicographic (label 1 most significant).
std::vector<LabelMap> all_label_maps(std::size_t k, std::size_t m, const Limits& limits = {});

/// Rows indexed by all phi: [k] -> V(H), columns by the given graphs;
/// entry (phi, G) = hom_phi(G, H).
struct TruncatedConnectionMatrix {
    std::size_t k = 0;
    std::vector<LabelMap> rows;
    std::vector<LabeledGraph> columns;
    Matrix entries;
};

TruncatedConnectionMatrix build_N(const WeightedGraph& h, std::size_t k, const std::vector<LabeledGraph>& columns,
                                  const Limits& limits = {});

/// M(i, j) = hom(G_i G_j, H), evaluated on the glued graphs.
Matrix build_M(const WeightedGraph& h, const std::vector<LabeledGraph>& columns, const Limits& limits = {});

/// Flattened n-way truncation, index (i_1, ..., i_n) with i_1 most
/// significant. Entries come from sum_phi alpha_phi prod_t hom_phi(G_{i_t}, H).
struct Tensor {
    std::size_t order = 0;
    std::size_t side = 0;
    std::vector<FieldValue> entries;
};

Tensor build_T(const WeightedGraph& h, std::size_t k, std::size_t n, const std::vector<LabeledGraph>& columns,
               const Limits& limits = {});

/// side x side^{n-1} matrix of the first index against the rest.
Matrix unfold_first(const Tensor& t, const FieldSpec& spec);

/// Orbits of Aut(H) on V(H)^k. orbit_of[r] is the orbit of all_label_maps row r.
struct OrbitPartition {
    std::size_t count = 0;
    std::vector<std::size_t> orbit_of;
};

OrbitPartition orbit_partition(const WeightedGraph& h, std::size_t k, const Limits& limits = {});
std::size_t orbit_count(const WeightedGraph& h, std::size_t k, const Limits& limits = {});

struct RankOptions {
    /// Size tiers of simple graphs used as columns.
    std::size_t max_free = 3;
    /// Rounds of pairwise glue products of the selected columns.
    std::size_t product_passes = 4;
    Limits limits;
};

struct RankReport {
    std::size_t k = 0;
    std::size_t m = 0;
    FieldSpec field;
    std::uint64_t bound = 1;  // m^k
    std::size_t orbits = 0;
    std::size_t rank_N = 0;
    std::size_t rank_M = 0;
    std::size_t rank_T3 = 0;
    std::size_t row_classes = 0;
    std::size_t nonzero_classes = 0;
    std::size_t columns_examined = 0;
    std::vector<LabeledGraph> basis;  // simple graphs whose columns are independent
    bool stabilized = false;
    bool rows_match_orbits = false;
    bool m_direct_agrees = false;
    bool t2_equals_m = false;

    /// The checks the theory promises for this field.
    bool holds() const;
};

/// Grows a column set until rank N reaches orb_k(H) (or nothing more can be
/// added) and reports the ranks of the N, M and T_3 truncations.
RankReport verify_rank_theorem(const WeightedGraph& h, std::size_t k, const RankOptions& options = {});

struct ColumnSpaceReport {
    std::size_t k = 0;
    std::size_t orbits = 0;
    std::size_t span_dim = 0;
    std::size_t joint_rank = 0;  // rank of simple columns together with orbit indicators
    bool invariant = false;
    bool spans_invariants() const { return span_dim == orbits && joint_rank == orbits; }
};

ColumnSpaceReport verify_column_space(const WeightedGraph& h, std::size_t k, const RankOptions& options = {});

}  // namespace homalg
