#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace homalg {

enum class FieldKind { Rationals, PrimeField };

/// The field a value lives in: the rationals, or GF(p) for a prime p < 2^32.
class FieldSpec {
public:
    FieldSpec() = default;

    static FieldSpec rationals() noexcept { return FieldSpec(); }
    /// Throws InvalidSpec unless p is a prime below 2^32.
    static FieldSpec prime(std::uint64_t p);

    FieldKind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return p_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    bool is_rationals() const noexcept { return kind_ == FieldKind::Rationals; }

    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldKind kind_ = FieldKind::Rationals;
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// An exact scalar. Rationals are kept in lowest terms with a positive
/// denominator; values that fit in 64 bits avoid GMP entirely.
class FieldValue {
public:
    FieldValue() = default;

    static FieldValue zero(const FieldSpec& spec) { return from_int(0, spec); }
    static FieldValue one(const FieldSpec& spec) { return from_int(1, spec); }
    static FieldValue from_int(std::int64_t v, const FieldSpec& spec);
    /// Throws DivisionByZero if den == 0.
    static FieldValue from_ratio(std::int64_t num, std::int64_t den, const FieldSpec& spec);
    static FieldValue from_mpq(const mpq_class& q);
    /// Parses "a", "-a" or "a/b". Prime-field input is reduced mod p.
    static FieldValue parse(std::string_view text, const FieldSpec& spec);

    const FieldSpec& spec() const noexcept { return spec_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Residue in [0, p); only meaningful for prime-field values.
    std::uint64_t residue() const noexcept { return static_cast<std::uint64_t>(num_); }
    mpq_class to_mpq() const;

    /// "num/den" (den omitted when 1) or the decimal residue.
    std::string to_string() const;

    FieldValue operator-() const;
    FieldValue inverse() const;
    FieldValue pow(std::uint64_t exponent) const;

    friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator-(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator/(const FieldValue& a, const FieldValue& b);
    FieldValue& operator+=(const FieldValue& o) { return *this = *this + o; }
    FieldValue& operator-=(const FieldValue& o) { return *this = *this - o; }
    FieldValue& operator*=(const FieldValue& o) { return *this = *this * o; }

    friend bool operator==(const FieldValue& a, const FieldValue& b);
    /// A total order used for grouping and canonical sorting; for rationals it
    /// agrees with the numeric order. Values of different fields order by spec.
    friend std::strong_ordering operator<=>(const FieldValue& a, const FieldValue& b);

private:
    static FieldValue make_rational(__int128 num, __int128 den);
    static FieldValue normalize_big(mpq_class q);

    FieldSpec spec_;
    std::int64_t num_ = 0;  // numerator, or residue for GF(p)
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;  // set only when the value does not fit
};

FieldValue add(const FieldValue& a, const FieldValue& b);
FieldValue mul(const FieldValue& a, const FieldValue& b);
FieldValue neg(const FieldValue& a);
FieldValue inv(const FieldValue& a);
FieldValue pow(const FieldValue& a, std::uint64_t n);
/// n * 1_F.
FieldValue nat_embed(std::uint64_t n, const FieldSpec& spec);

}  // namespace homalg
