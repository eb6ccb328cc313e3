#include <gtest/gtest.h>

#include "homalg/error.hpp"
#include "homalg/field.hpp"
#include "homalg/random.hpp"

using namespace homalg;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);
FieldValue r(std::int64_t n, std::int64_t d = 1) { return FieldValue::from_ratio(n, d, Q); }
}  // namespace

TEST(Field, RationalArithmetic) {
    EXPECT_EQ((r(1, 2) + r(1, 3)).to_string(), "5/6");
    EXPECT_EQ(pow(r(2, 3), 3).to_string(), "8/27");
    EXPECT_EQ((r(7) + FieldValue::zero(Q)), r(7));
    EXPECT_EQ(r(-4, 6).to_string(), "-2/3");
    EXPECT_EQ(r(6, 3).to_string(), "2");
}

TEST(Field, PrimeArithmetic) {
    EXPECT_EQ((FieldValue::from_int(3, F5) + FieldValue::from_int(4, F5)).to_string(), "2");
    EXPECT_EQ(inv(FieldValue::from_int(2, F5)).to_string(), "3");
    EXPECT_EQ(FieldValue::from_int(-1, F5).to_string(), "4");
}

TEST(Field, ZeroToTheZeroIsOne) {
    EXPECT_TRUE(pow(FieldValue::zero(Q), 0).is_one());
    EXPECT_TRUE(pow(FieldValue::zero(F5), 0).is_one());
    EXPECT_TRUE(pow(FieldValue::zero(Q), 3).is_zero());
}

TEST(Field, NatEmbed) {
    EXPECT_TRUE(nat_embed(4, FieldSpec::prime(2)).is_zero());
    EXPECT_EQ(nat_embed(4, Q), r(4));
    EXPECT_TRUE(nat_embed(0, F5).is_zero());
    for (std::uint64_t n = 1; n < 200; ++n) EXPECT_FALSE(nat_embed(n, Q).is_zero());
}

TEST(Field, Errors) {
    EXPECT_THROW(inv(FieldValue::zero(Q)), Error);
    try {
        (void)(r(1) + FieldValue::one(F5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SpecMismatch);
    }
    EXPECT_THROW(FieldSpec::prime(4), Error);
    EXPECT_THROW(FieldValue::parse("1/0", Q), Error);
    EXPECT_THROW(FieldValue::parse("abc", Q), Error);
}

TEST(Field, ParseRoundTrip) {
    for (const char* s : {"0", "1", "-7", "3/4", "-22/7", "123456789012345678901234567890"}) {
        EXPECT_EQ(FieldValue::parse(s, Q).to_string(), s);
    }
    EXPECT_EQ(FieldValue::parse("12", F5).to_string(), "2");
}

TEST(Field, LargeValuesStayExact) {
    // Past the 64-bit fast path.
    auto x = r(3, 7);
    auto y = pow(x, 80);
    EXPECT_EQ(y * pow(inv(x), 80), r(1));
    EXPECT_EQ((y + r(1)) - y, r(1));
    EXPECT_EQ(pow(r(2), 100).to_mpq(), mpq_class("1267650600228229401496703205376"));
}

TEST(Field, LargePrime) {
    const auto F = FieldSpec::prime(4294967291ULL);
    auto a = FieldValue::from_int(4294967290LL, F);
    EXPECT_TRUE((a * a).is_one());
    EXPECT_TRUE((a * inv(a)).is_one());
}

TEST(Field, Properties) {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto spec = i % 2 ? F5 : Q;
        const auto a = random_nonzero(rng, spec, 30);
        const auto b = random_small(rng, spec, 30);
        EXPECT_TRUE((a * inv(a)).is_one());
        const std::uint64_t m = i % 7, n = i % 5;
        EXPECT_EQ(pow(a, m + n), pow(a, m) * pow(a, n));
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(neg(neg(b)), b);
    }
}
