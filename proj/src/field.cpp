#include "homalg/field.hpp"

#include <limits>

#include "homalg/error.hpp"

namespace homalg {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

bool fits64(i128 v) { return v >= kMin64 && v <= kMax64; }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v) {
    const bool negative = v < 0;
    const u128 mag = negative ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    mpz_class out(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    out <<= 64;
    out += static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
    return negative ? mpz_class(-out) : out;
}

void check_same(const FieldValue& a, const FieldValue& b) {
    if (!(a.spec() == b.spec())) {
        throw Error(ErrorCode::SpecMismatch,
                    "field mismatch: " + a.spec().to_string() + " vs " + b.spec().to_string());
    }
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t out = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) out = mulmod(out, base, p);
        base = mulmod(base, base, p);
        exp >>= 1U;
    }
    return out;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
        throw Error(ErrorCode::InvalidSpec, "modulus " + std::to_string(p) +
                                                " is not a prime below 2^32");
    }
    FieldSpec s;
    s.kind_ = FieldKind::PrimeField;
    s.p_ = p;
    return s;
}

std::string FieldSpec::to_string() const {
    return kind_ == FieldKind::Rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
}

FieldValue FieldValue::from_int(std::int64_t v, const FieldSpec& spec) {
    FieldValue out;
    out.spec_ = spec;
    if (spec.is_rationals()) {
        out.num_ = v;
    } else {
        const auto p = static_cast<std::int64_t>(spec.modulus());
        std::int64_t r = v % p;
        if (r < 0) r += p;
        out.num_ = r;
    }
    return out;
}

FieldValue FieldValue::from_ratio(std::int64_t num, std::int64_t den, const FieldSpec& spec) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    if (spec.is_rationals()) return make_rational(num, den);
    return from_int(num, spec) / from_int(den, spec);
}

FieldValue FieldValue::make_rational(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den != 1) {
        const i128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    if (num == 0) den = 1;
    if (fits64(num) && fits64(den)) {
        FieldValue out;
        out.num_ = static_cast<std::int64_t>(num);
        out.den_ = static_cast<std::int64_t>(den);
        return out;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    q.canonicalize();
    return normalize_big(std::move(q));
}

FieldValue FieldValue::normalize_big(mpq_class q) {
    FieldValue out;
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
        out.num_ = q.get_num().get_si();
        out.den_ = q.get_den().get_si();
    } else {
        out.big_ = std::make_shared<const mpq_class>(std::move(q));
    }
    return out;
}

FieldValue FieldValue::from_mpq(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return normalize_big(std::move(c));
}

FieldValue FieldValue::parse(std::string_view text, const FieldSpec& spec) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorCode::Malformed, "empty field value");
    const auto slash = s.find('/');
    mpz_class num;
    mpz_class den(1);
    auto parse_int = [&](const std::string& part, mpz_class& out) {
        std::string body = part;
        std::size_t start = (!body.empty() && (body[0] == '-' || body[0] == '+')) ? 1 : 0;
        if (body.size() == start) throw Error(ErrorCode::Malformed, "bad field value '" + s + "'");
        for (std::size_t i = start; i < body.size(); ++i) {
            if (body[i] < '0' || body[i] > '9') {
                throw Error(ErrorCode::Malformed, "bad field value '" + s + "'");
            }
        }
        if (body[0] == '+') body.erase(0, 1);
        out.set_str(body, 10);
    };
    if (slash == std::string::npos) {
        parse_int(s, num);
    } else {
        parse_int(s.substr(0, slash), num);
        parse_int(s.substr(slash + 1), den);
    }
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
    if (spec.is_rationals()) return from_mpq(mpq_class(num, den));
    FieldValue n;
    n.spec_ = spec;
    n.num_ = static_cast<std::int64_t>(reduce_mpz(num, spec.modulus()));
    FieldValue d;
    d.spec_ = spec;
    d.num_ = static_cast<std::int64_t>(reduce_mpz(den, spec.modulus()));
    return n / d;
}

bool FieldValue::is_zero() const noexcept { return !big_ && num_ == 0; }

bool FieldValue::is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }

mpq_class FieldValue::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string FieldValue::to_string() const {
    if (!spec_.is_rationals()) return std::to_string(residue());
    if (big_) {
        if (big_->get_den() == 1) return big_->get_num().get_str();
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

FieldValue FieldValue::operator-() const {
    if (!spec_.is_rationals()) {
        FieldValue out = *this;
        out.num_ = num_ == 0 ? 0 : static_cast<std::int64_t>(spec_.modulus()) - num_;
        return out;
    }
    if (big_) return normalize_big(-*big_);
    return make_rational(-static_cast<i128>(num_), den_);
}

FieldValue FieldValue::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (!spec_.is_rationals()) {
        FieldValue out = *this;
        out.num_ = static_cast<std::int64_t>(
            powmod(residue(), spec_.modulus() - 2, spec_.modulus()));
        return out;
    }
    if (big_) return normalize_big(1 / *big_);
    return make_rational(den_, num_);
}

FieldValue FieldValue::pow(std::uint64_t exponent) const {
    if (!spec_.is_rationals()) {
        FieldValue out = *this;
        out.num_ = static_cast<std::int64_t>(powmod(residue(), exponent, spec_.modulus()));
        return out;
    }
    FieldValue result = one(spec_);
    FieldValue base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
    check_same(a, b);
    if (!a.spec_.is_rationals()) {
        FieldValue out = a;
        const std::uint64_t p = a.spec_.modulus();
        out.num_ = static_cast<std::int64_t>((a.residue() + b.residue()) % p);
        return out;
    }
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            return FieldValue::make_rational(static_cast<i128>(a.num_) + b.num_, 1);
        }
        return FieldValue::make_rational(static_cast<i128>(a.num_) * b.den_ +
                                             static_cast<i128>(b.num_) * a.den_,
                                         static_cast<i128>(a.den_) * b.den_);
    }
    return FieldValue::normalize_big(a.to_mpq() + b.to_mpq());
}

FieldValue operator-(const FieldValue& a, const FieldValue& b) { return a + (-b); }

FieldValue operator*(const FieldValue& a, const FieldValue& b) {
    check_same(a, b);
    if (!a.spec_.is_rationals()) {
        FieldValue out = a;
        out.num_ = static_cast<std::int64_t>(mulmod(a.residue(), b.residue(), a.spec_.modulus()));
        return out;
    }
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            return FieldValue::make_rational(static_cast<i128>(a.num_) * b.num_, 1);
        }
        return FieldValue::make_rational(static_cast<i128>(a.num_) * b.num_,
                                         static_cast<i128>(a.den_) * b.den_);
    }
    return FieldValue::normalize_big(a.to_mpq() * b.to_mpq());
}

FieldValue operator/(const FieldValue& a, const FieldValue& b) {
    check_same(a, b);
    return a * b.inverse();
}

bool operator==(const FieldValue& a, const FieldValue& b) {
    if (!(a.spec_ == b.spec_)) return false;
    if (a.big_ || b.big_) {
        if (!a.big_ || !b.big_) return false;
        return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const FieldValue& a, const FieldValue& b) {
    if (!(a.spec_ == b.spec_)) {
        if (a.spec_.kind() != b.spec_.kind()) return a.spec_.kind() <=> b.spec_.kind();
        return a.spec_.modulus() <=> b.spec_.modulus();
    }
    if (!a.spec_.is_rationals()) return a.residue() <=> b.residue();
    if (!a.big_ && !b.big_) {
        return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

FieldValue add(const FieldValue& a, const FieldValue& b) { return a + b; }
FieldValue mul(const FieldValue& a, const FieldValue& b) { return a * b; }
FieldValue neg(const FieldValue& a) { return -a; }
FieldValue inv(const FieldValue& a) { return a.inverse(); }
FieldValue pow(const FieldValue& a, std::uint64_t n) { return a.pow(n); }

FieldValue nat_embed(std::uint64_t n, const FieldSpec& spec) {
    if (spec.is_rationals()) {
        if (n <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            return FieldValue::from_int(static_cast<std::int64_t>(n), spec);
        }
        return FieldValue::from_mpq(mpq_class(mpz_class(static_cast<unsigned long>(n))));
    }
    return FieldValue::from_int(static_cast<std::int64_t>(n % spec.modulus()), spec);
}

}  // namespace homalg
