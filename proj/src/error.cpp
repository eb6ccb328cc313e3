#include "homalg/error.hpp"

#include <limits>

namespace homalg {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::LabelCountMismatch: return "LabelCountMismatch";
    case ErrorCode::DirectednessMismatch: return "DirectednessMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::Budget: return "Budget";
    case ErrorCode::BlockTooSmall: return "BlockTooSmall";
    case ErrorCode::SeparationFailure: return "SeparationFailure";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::WitnessNotFound: return "WitnessNotFound";
    }
    return "Unknown";
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
    return out;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
    return out;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) noexcept {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        out = sat_mul(out, base);
        if (out == std::numeric_limits<std::uint64_t>::max() || out == 0) break;
    }
    return out;
}

void require_budget(std::uint64_t cost, const Limits& limits, std::string_view what) {
    if (cost > limits.ops) {
        throw Error(ErrorCode::Budget, std::string(what) + ": estimated " + std::to_string(cost) +
                                           " operations exceeds budget " +
                                           std::to_string(limits.ops));
    }
}

}  // namespace homalg
