#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homalg {

enum class ErrorCode {
    SpecMismatch,
    DivisionByZero,
    LabelCountMismatch,
    DirectednessMismatch,
    ArityMismatch,
    Budget,
    BlockTooSmall,
    SeparationFailure,
    PreconditionViolated,
    InvalidSpec,
    Malformed,
    WitnessNotFound,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures surface as this exception; the code is what the
/// C API and CLI translate into status values and exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Work caps shared by every enumerating operation.
struct Limits {
    /// Elementary field operations a single enumeration may spend.
    std::uint64_t ops = 100'000'000;
    /// Largest vertex count the factorial isomorphism oracle accepts.
    std::size_t oracle_max_vertices = 8;
};

/// Saturating helpers for cost estimates.
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) noexcept;

void require_budget(std::uint64_t cost, const Limits& limits, std::string_view what);

}  // namespace homalg
