#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "richlines/grid.hpp"
#include "richlines/number_set.hpp"
#include "richlines/scalar.hpp"

using namespace richlines;

namespace {

NumberSet set_of(std::initializer_list<long> values) {
    std::vector<Scalar> v;
    for (long x : values) v.emplace_back(x);
    return NumberSet(std::move(v));
}

NumberSet random_set(std::mt19937_64& rng, std::size_t max_size) {
    std::size_t n = 1 + rng() % max_size;
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < n; ++i) {
        long num = static_cast<long>(rng() % 41) - 20;
        long den = 1 + static_cast<long>(rng() % 6);
        v.emplace_back(num, den);
    }
    return NumberSet(std::move(v));
}

TEST(Scalar, CanonicalForm) {
    Scalar half(2, 4);
    EXPECT_EQ(half.numerator(), 1);
    EXPECT_EQ(half.denominator(), 2);

    Scalar neg(3, -6);
    EXPECT_EQ(neg.numerator(), -1);
    EXPECT_EQ(neg.denominator(), 2);

    EXPECT_EQ(Scalar(0, 7), Scalar(0));
    EXPECT_EQ(Scalar(0).denominator(), 1);
    EXPECT_THROW(Scalar(1, 0), InvalidArgument);
}

TEST(Scalar, Arithmetic) {
    Scalar a(1, 2), b(1, 3);
    EXPECT_EQ(a + b, Scalar(5, 6));
    EXPECT_EQ(a - b, Scalar(1, 6));
    EXPECT_EQ(a * b, Scalar(1, 6));
    EXPECT_EQ(a / b, Scalar(3, 2));
    EXPECT_EQ(-a, Scalar(-1, 2));
    EXPECT_THROW(a / Scalar(0), InvalidArgument);
    EXPECT_THROW(Scalar(0).reciprocal(), InvalidArgument);
    EXPECT_LT(b, a);
    EXPECT_EQ(Scalar::pow2(-3), Scalar(1, 8));
    EXPECT_EQ(Scalar::pow2(5), Scalar(32));
}

TEST(Scalar, HashAgreesWithEquality) {
    Scalar a(2, 4), b(1, 2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.hash(), b.hash());
    EXPECT_NE(Scalar(1, 2), Scalar(1, 3));
}

TEST(Scalar, ParseAndPrint) {
    EXPECT_EQ(Scalar::parse("12"), Scalar(12));
    EXPECT_EQ(Scalar::parse("-3"), Scalar(-3));
    EXPECT_EQ(Scalar::parse("7/2"), Scalar(7, 2));
    EXPECT_EQ(Scalar::parse("4/6"), Scalar(2, 3));
    EXPECT_EQ(Scalar(7, 2).str(), "7/2");
    EXPECT_EQ(Scalar(-8, 2).str(), "-4");
    EXPECT_THROW(Scalar::parse(""), InvalidArgument);
    EXPECT_THROW(Scalar::parse("1.5"), InvalidArgument);
    EXPECT_THROW(Scalar::parse("3/-2"), InvalidArgument);
    EXPECT_THROW(Scalar::parse("3/0"), InvalidArgument);
    EXPECT_THROW(Scalar::parse("x"), InvalidArgument);
}

TEST(Scalar, ExactPowerComparison) {
    // 63 >= 4^(5/2) = 32 but 31 < 32
    EXPECT_TRUE(at_least_pow(count_t{63}, count_t{4}, Scalar(5, 2)));
    EXPECT_TRUE(at_least_pow(count_t{32}, count_t{4}, Scalar(5, 2)));
    EXPECT_FALSE(at_least_pow(count_t{31}, count_t{4}, Scalar(5, 2)));
    // 10^(1/2): 4 >= sqrt(10) but 3 < sqrt(10)
    EXPECT_TRUE(at_least_pow(count_t{4}, count_t{10}, Scalar(1, 2)));
    EXPECT_FALSE(at_least_pow(count_t{3}, count_t{10}, Scalar(1, 2)));
    EXPECT_TRUE(at_least_pow(count_t{1}, count_t{99}, Scalar(0)));
}

TEST(NumberSet, SortsAndDeduplicates) {
    NumberSet s(std::vector<Scalar>{Scalar(3), Scalar(1), Scalar(3), Scalar(2, 4), Scalar(1, 2)});
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0], Scalar(1, 2));
    EXPECT_EQ(s[1], Scalar(1));
    EXPECT_EQ(s[2], Scalar(3));
    EXPECT_TRUE(s.contains(Scalar(1, 2)));
    EXPECT_FALSE(s.contains(Scalar(4)));
}

TEST(SetOps, SumsetExamples) {
    EXPECT_EQ(sumset(set_of({0}), set_of({0})), set_of({0}));
    EXPECT_EQ(sumset(set_of({1, 2, 3}), set_of({1, 2, 3})), set_of({2, 3, 4, 5, 6}));
    EXPECT_EQ(sumset(set_of({1, 2, 3, 4}), set_of({1, 2, 3, 4})).size(), 7u);
    EXPECT_THROW(sumset(NumberSet(), set_of({1})), InvalidArgument);
}

TEST(SetOps, ProductsetExamples) {
    EXPECT_EQ(productset(set_of({1}), set_of({1})), set_of({1}));
    EXPECT_EQ(productset(set_of({1, 2, 3, 4}), set_of({1, 2, 3, 4})),
              set_of({1, 2, 3, 4, 6, 8, 9, 12, 16}));
    EXPECT_EQ(productset(set_of({2, 4, 8}), set_of({2, 4, 8})), set_of({4, 8, 16, 32, 64}));
    EXPECT_THROW(productset(set_of({1}), NumberSet()), InvalidArgument);
}

TEST(SetOps, DifferencesetExamples) {
    EXPECT_EQ(differenceset(set_of({0, 1}), set_of({0, 1})), set_of({-1, 0, 1}));
    EXPECT_EQ(differenceset(set_of({5}), set_of({2})), set_of({3}));
    NumberSet x = set_of({2, 5, 11});
    EXPECT_TRUE(differenceset(x, x).contains(Scalar(0)));
}

TEST(SetOps, TranslateUnionIntersect) {
    EXPECT_EQ(translate(set_of({1, 2}), Scalar(0)), set_of({1, 2}));
    EXPECT_EQ(translate(set_of({1, 2}), Scalar(-1, 2)), NumberSet(std::vector<Scalar>{Scalar(1, 2), Scalar(3, 2)}));
    EXPECT_EQ(unite(set_of({1, 2}), set_of({2, 3})), set_of({1, 2, 3}));
    EXPECT_EQ(intersect(set_of({1, 2, 3}), set_of({2, 3, 4})), set_of({2, 3}));
}

TEST(SetOps, SizeBoundsProperty) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        NumberSet x = random_set(rng, 12), y = random_set(rng, 12);
        NumberSet s = sumset(x, y);
        EXPECT_GE(s.size(), std::max(x.size(), y.size()));
        EXPECT_LE(s.size(), x.size() * y.size());
        bool has_zero = x.contains(Scalar(0)) || y.contains(Scalar(0));
        if (!has_zero) {
            NumberSet p = productset(x, y);
            EXPECT_GE(p.size(), std::max(x.size(), y.size()));
            EXPECT_LE(p.size(), x.size() * y.size());
        }
        NumberSet d = differenceset(x, x);
        EXPECT_TRUE(d.contains(Scalar(0)));
        for (const Scalar& v : d) EXPECT_TRUE(d.contains(-v));
    }
}

TEST(SetOps, AgreesWithNaiveOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        NumberSet x = random_set(rng, 15), y = random_set(rng, 15);
        EXPECT_EQ(sumset(x, y), oracle::pairwise_sum(x, y));
        EXPECT_EQ(productset(x, y), oracle::pairwise_product(x, y));
        EXPECT_EQ(differenceset(x, y), oracle::pairwise_difference(x, y));
    }
    // one large pair, as a smoke test at the oracle contract's stated size
    NumberSet big_x = make_random(50, 101, 1000), big_y = make_random(50, 102, 1000);
    EXPECT_EQ(sumset(big_x, big_y), oracle::pairwise_sum(big_x, big_y));
    EXPECT_EQ(productset(big_x, big_y), oracle::pairwise_product(big_x, big_y));
    EXPECT_EQ(differenceset(big_x, big_y), oracle::pairwise_difference(big_x, big_y));
}

TEST(Grid, SymmetrizeExamples) {
    Grid g{set_of({1, 2}), set_of({2, 3})};
    Grid sq = symmetrize(g);
    EXPECT_EQ(sq.a, set_of({1, 2, 3}));
    EXPECT_TRUE(sq.is_square());
    EXPECT_EQ(symmetrize(sq), sq);  // idempotent

    Grid disjoint{set_of({1, 2, 3}), set_of({4, 5, 6, 7})};
    EXPECT_EQ(symmetrize(disjoint).a.size(), 7u);
    EXPECT_EQ(g.point_count(), 4u);
}

TEST(Generators, ArithmeticProgression) {
    EXPECT_EQ(make_ap(3, Scalar(0), Scalar(1)), set_of({0, 1, 2}));
    EXPECT_EQ(make_ap(4, Scalar(5), Scalar(-2)), set_of({-1, 1, 3, 5}));
    EXPECT_THROW(make_ap(0, Scalar(0), Scalar(1)), InvalidArgument);
    EXPECT_THROW(make_ap(3, Scalar(0), Scalar(0)), InvalidArgument);
}

TEST(Generators, GeometricProgression) {
    EXPECT_EQ(make_gp(3, Scalar(2), Scalar(2)), set_of({2, 4, 8}));
    EXPECT_EQ(make_gp(3, Scalar(1), Scalar(1, 2)), NumberSet(std::vector<Scalar>{Scalar(1, 4), Scalar(1, 2), Scalar(1)}));
    EXPECT_THROW(make_gp(3, Scalar(2), Scalar(1)), InvalidArgument);
    EXPECT_THROW(make_gp(3, Scalar(2), Scalar(-1)), InvalidArgument);
    EXPECT_THROW(make_gp(3, Scalar(2), Scalar(0)), InvalidArgument);
    EXPECT_THROW(make_gp(3, Scalar(0), Scalar(2)), InvalidArgument);
}

TEST(Generators, RandomIsDeterministic) {
    NumberSet a = make_random(5, 7, 100);
    NumberSet b = make_random(5, 7, 100);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.size(), 5u);
    NumberSet c = make_random(5, 8, 100);
    EXPECT_NE(a, c);  // different seed, overwhelmingly
    NumberSet full = make_random(10, 3, 10);
    EXPECT_EQ(full, make_ap(10, Scalar(0), Scalar(1)));  // range == n forces {0..9}
    EXPECT_THROW(make_random(5, 7, 4), InvalidArgument);
}

}  // namespace
