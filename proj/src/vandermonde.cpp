#include "homalg/vandermonde.hpp"

#include <map>

namespace homalg {

namespace {

FieldValue monomial(const std::vector<FieldValue>& tuple, const std::vector<std::uint64_t>& exps,
                    std::size_t upto, const FieldSpec& spec) {
    FieldValue out = FieldValue::one(spec);
    for (std::size_t j = 0; j < upto; ++j) {
        if (exps[j] == 0) continue;
        out *= tuple[j].pow(exps[j]);
        if (out.is_zero()) break;
    }
    return out;
}

// Exponents making the moment nonzero, fixed one coordinate at a time from
// coordinate 0 upward. level[c] holds the members agreeing with target on all
// coordinates >= c, so the members agreeing everywhere (a nonzero coefficient
// sum) sit inside every level and the restricted moment never vanishes.
void solve(const MomentSystem& sys, const std::vector<FieldValue>& target, std::vector<std::uint64_t>& exps) {
    const std::size_t s = target.size();
    std::vector<std::vector<std::size_t>> level(s);
    for (std::size_t i = 0; i < sys.size(); ++i) level[s - 1].push_back(i);
    for (std::size_t c = s - 1; c > 0; --c) {
        for (auto i : level[c]) {
            if (sys.b[i][c] == target[c]) level[c - 1].push_back(i);
        }
    }
    // mono[i] is the monomial of member i over the coordinates fixed so far.
    std::vector<FieldValue> mono(sys.size(), FieldValue::one(sys.spec));
    std::vector<FieldValue> xs, coeffs, powers;
    for (std::size_t c = 0; c < s; ++c) {
        xs.clear();
        coeffs.clear();
        for (auto i : level[c]) {
            const FieldValue& x = sys.b[i][c];
            std::size_t t = 0;
            while (t < xs.size() && !(xs[t] == x)) ++t;
            if (t == xs.size()) {
                xs.push_back(x);
                coeffs.push_back(FieldValue::zero(sys.spec));
            }
            coeffs[t] += sys.a[i] * mono[i];
        }
        // The A_x vector is nonzero and the x are distinct, so one of the
        // first |xs| power sums is nonzero.
        powers.assign(xs.size(), FieldValue::one(sys.spec));
        bool found = false;
        for (std::uint64_t e = 0; e < xs.size() && !found; ++e) {
            FieldValue acc = FieldValue::zero(sys.spec);
            for (std::size_t t = 0; t < xs.size(); ++t) acc += coeffs[t] * powers[t];
            if (!acc.is_zero()) {
                exps[c] = e;
                found = true;
            }
            for (std::size_t t = 0; t < xs.size(); ++t) powers[t] *= xs[t];
        }
        if (!found) throw Error(ErrorCode::SeparationFailure, "no nonvanishing power sum; field arithmetic is inconsistent");
        if (exps[c] == 0 || c + 1 == s) continue;
        for (auto i : level[s - 1]) mono[i] *= sys.b[i][c].pow(exps[c]);
    }
}

}  // namespace

void MomentSystem::validate() const {
    if (a.size() != b.size()) throw Error(ErrorCode::Malformed, "moment system: |a| != |b|");
    const std::size_t s = width();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i].size() != s) throw Error(ErrorCode::Malformed, "moment system: ragged tuples");
        if (!(a[i].spec() == spec)) throw Error(ErrorCode::SpecMismatch, "moment system: coefficient field");
        for (const auto& v : b[i]) {
            if (!(v.spec() == spec)) throw Error(ErrorCode::SpecMismatch, "moment system: tuple field");
        }
    }
}

std::vector<ClassSum> class_sums(const MomentSystem& sys) {
    sys.validate();
    std::vector<ClassSum> out;
    // Small systems (the common case in recovery) are grouped by scanning.
    constexpr std::size_t kScan = 32;
    std::map<std::vector<FieldValue>, std::size_t> index;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        std::size_t slot = out.size();
        if (sys.size() <= kScan) {
            for (std::size_t t = 0; t < out.size(); ++t) {
                if (out[t].tuple == sys.b[i]) {
                    slot = t;
                    break;
                }
            }
        } else {
            slot = index.try_emplace(sys.b[i], out.size()).first->second;
        }
        if (slot == out.size()) out.push_back({sys.b[i], FieldValue::zero(sys.spec), {}});
        auto& cls = out[slot];
        cls.sum += sys.a[i];
        cls.members.push_back(i);
    }
    return out;
}

FieldValue moment(const MomentSystem& sys, const std::vector<std::uint64_t>& exponents) {
    if (exponents.size() != sys.width() && sys.size() > 0) {
        throw Error(ErrorCode::ArityMismatch, "exponent tuple length differs from tuple width");
    }
    FieldValue out = FieldValue::zero(sys.spec);
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (sys.a[i].is_zero()) continue;
        out += sys.a[i] * monomial(sys.b[i], exponents, exponents.size(), sys.spec);
    }
    return out;
}

bool verify_moments(const MomentSystem& sys, std::uint64_t bound, const Limits& limits) {
    sys.validate();
    if (sys.size() == 0) return true;
    if (bound == 0) return true;
    const std::size_t s = sys.width();
    require_budget(sat_mul(sat_pow(bound, s), sys.size() * (s + 1)), limits, "moment verification");
    std::vector<std::uint64_t> exps(s, 0);
    while (true) {
        if (!moment(sys, exps).is_zero()) return false;
        std::size_t j = s;
        while (j > 0) {
            if (++exps[j - 1] < bound) break;
            exps[j - 1] = 0;
            --j;
        }
        if (j == 0) return true;
    }
}

bool cancellation_conclusion_check(const MomentSystem& sys, const Limits& limits) {
    if (!verify_moments(sys, sys.size(), limits)) return true;
    for (const auto& cls : class_sums(sys)) {
        if (!cls.sum.is_zero()) return false;
    }
    return true;
}

std::optional<std::vector<std::uint64_t>> find_nonvanishing_moment(const MomentSystem& sys) {
    const auto classes = class_sums(sys);
    const ClassSum* target = nullptr;
    for (const auto& cls : classes) {
        if (!cls.sum.is_zero()) {
            target = &cls;
            break;
        }
    }
    if (target == nullptr) return std::nullopt;
    const std::size_t s = sys.width();
    std::vector<std::uint64_t> exps(s, 0);
    if (s == 0) return exps;
    solve(sys, target->tuple, exps);
    return exps;
}

bool verify_shifted_moments(const std::vector<FieldValue>& a, const std::vector<FieldValue>& x) {
    if (a.size() != x.size()) throw Error(ErrorCode::Malformed, "shifted moments: |a| != |x|");
    if (a.empty()) return true;
    const FieldSpec spec = a.front().spec();
    for (std::uint64_t j = 1; j <= a.size(); ++j) {
        FieldValue acc = FieldValue::zero(spec);
        for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * x[i].pow(j);
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace homalg
