#include <gtest/gtest.h>

#include "homalg/error.hpp"
#include "homalg/random.hpp"
#include "homalg/vandermonde.hpp"

using namespace homalg;

namespace {
const FieldSpec Q = FieldSpec::rationals();
FieldValue v(std::int64_t x, const FieldSpec& s = Q) { return FieldValue::from_int(x, s); }
MomentSystem sys1(std::vector<std::int64_t> a, std::vector<std::vector<std::int64_t>> b) {
    MomentSystem s;
    s.spec = Q;
    for (auto x : a) s.a.push_back(v(x));
    for (auto& row : b) {
        std::vector<FieldValue> t;
        for (auto x : row) t.push_back(v(x));
        s.b.push_back(t);
    }
    return s;
}
}  // namespace

TEST(Vandermonde, ClassSums) {
    auto c = class_sums(sys1({1, -1}, {{3}, {3}}));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_TRUE(c[0].sum.is_zero());
    c = class_sums(sys1({2, 5}, {{1}, {-1}}));
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0].sum, v(2));
    EXPECT_EQ(c[1].sum, v(5));
    EXPECT_TRUE(class_sums(MomentSystem{Q, {}, {}}).empty());
}

TEST(Vandermonde, VerifyMoments) {
    EXPECT_TRUE(verify_moments(sys1({1, -1}, {{3}, {3}}), 2));
    EXPECT_FALSE(verify_moments(sys1({1, 1}, {{1}, {-1}}), 2));
    EXPECT_TRUE(verify_moments(sys1({1, 1, -2}, {{1, 0}, {1, 0}, {1, 0}}), 3));
    Limits tight;
    tight.ops = 10;
    EXPECT_THROW(verify_moments(sys1({1, 1, -2}, {{1, 0}, {1, 0}, {1, 0}}), 3, tight), Error);
}

TEST(Vandermonde, Validation) {
    auto s = sys1({1, 2}, {{1}, {1, 2}});
    EXPECT_THROW(s.validate(), Error);
    s = sys1({1}, {{1}, {2}});
    EXPECT_THROW(s.validate(), Error);
}

TEST(Vandermonde, NonvanishingMoment) {
    // Classes {3: 1-1=0}, {5: 2}: some moment must be nonzero.
    const auto s = sys1({1, -1, 2}, {{3}, {3}, {5}});
    const auto e = find_nonvanishing_moment(s);
    ASSERT_TRUE(e.has_value());
    EXPECT_FALSE(moment(s, *e).is_zero());
    EXPECT_FALSE(find_nonvanishing_moment(sys1({1, -1}, {{3}, {3}})).has_value());
    // Zero values in a coordinate and a class that cancels only in one coordinate.
    const auto z = sys1({1, 1, -1}, {{0, 2}, {0, 3}, {0, 2}});
    const auto ez = find_nonvanishing_moment(z);
    ASSERT_TRUE(ez.has_value());
    EXPECT_FALSE(moment(z, *ez).is_zero());
}

TEST(Vandermonde, FunctionalForm) {
    // Vanishing moments below n give sum a_i f(x_i) = 0 for indicator functions f.
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const auto spec = i % 2 ? FieldSpec::prime(13) : Q;
        const auto s = random_cancelling_system(rng, spec, 1 + i % 4, 1);
        ASSERT_TRUE(verify_moments(s, s.size()));
        for (const auto& c : class_sums(s)) {
            FieldValue acc = FieldValue::zero(spec);
            for (std::size_t j = 0; j < s.size(); ++j)
                if (s.b[j] == c.tuple) acc += s.a[j];
            EXPECT_TRUE(acc.is_zero());
        }
    }
}

TEST(Vandermonde, RandomSystems) {
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        const auto spec = i % 2 ? FieldSpec::prime(5) : Q;
        const auto s = random_moment_system(rng, spec, i % 7, 1 + i % 3, i % 2);
        EXPECT_TRUE(cancellation_conclusion_check(s));
        const auto e = find_nonvanishing_moment(s);
        bool all_zero = true;
        for (const auto& c : class_sums(s)) all_zero = all_zero && c.sum.is_zero();
        EXPECT_EQ(!e.has_value(), all_zero);
        if (e) {
            EXPECT_FALSE(moment(s, *e).is_zero());
            for (std::size_t j = 0; j < e->size(); ++j) EXPECT_LT((*e)[j], std::max<std::size_t>(1, s.size()));
        }
    }
}

TEST(Vandermonde, Shifted) {
    const std::vector<FieldValue> a{v(1), v(-1), v(7)};
    const std::vector<FieldValue> x{v(2), v(2), v(0)};
    EXPECT_TRUE(verify_shifted_moments(a, x));
    EXPECT_FALSE(verify_shifted_moments({v(1), v(1)}, {v(2), v(0)}));
    EXPECT_TRUE(verify_shifted_moments({}, {}));
    EXPECT_THROW(verify_shifted_moments({v(1)}, {}), Error);
}
