#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homalg/error.hpp"
#include "homalg/field.hpp"

namespace homalg {

/// Coefficients a_i with tuples b_i in F^s; the moment at exponents l is
/// sum_i a_i prod_j b_ij^{l_j}.
struct MomentSystem {
    FieldSpec spec;
    std::vector<FieldValue> a;
    std::vector<std::vector<FieldValue>> b;

    std::size_t size() const noexcept { return a.size(); }
    /// Tuple length; 0 for an empty system.
    std::size_t width() const noexcept { return b.empty() ? 0 : b.front().size(); }
    /// Throws Malformed on ragged tuples or |a| != |b|, SpecMismatch on mixed fields.
    void validate() const;
};

struct ClassSum {
    std::vector<FieldValue> tuple;
    FieldValue sum;
    std::vector<std::size_t> members;
};

/// Groups indices by exact tuple equality, in order of first occurrence.
std::vector<ClassSum> class_sums(const MomentSystem& sys);

FieldValue moment(const MomentSystem& sys, const std::vector<std::uint64_t>& exponents);

/// True iff every moment with 0 <= l_j < bound vanishes. Odometer order,
/// stops at the first nonzero moment.
bool verify_moments(const MomentSystem& sys, std::uint64_t bound, const Limits& limits = {});

/// Oracle for the cancellation statement: vanishing of all moments below |I|
/// forces every class sum to vanish. Always true unless the field code is wrong.
bool cancellation_conclusion_check(const MomentSystem& sys, const Limits& limits = {});

/// Exponents of a nonvanishing moment, or nullopt when all class sums are
/// zero (then every moment vanishes). Each exponent e_j is smaller than the
/// number of distinct values in coordinate j, so the search is linear in the
/// system size rather than exponential in the width.
std::optional<std::vector<std::uint64_t>> find_nonvanishing_moment(const MomentSystem& sys);

/// s = 1 with moments 1..n instead of 0..n-1.
bool verify_shifted_moments(const std::vector<FieldValue>& a, const std::vector<FieldValue>& x);

}  // namespace homalg
