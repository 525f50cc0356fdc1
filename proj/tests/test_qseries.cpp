#include <gtest/gtest.h>

#include <random>

#include <symchar/qseries.hpp>

using namespace symchar;

namespace {

QSeries poly(std::initializer_list<int> c, int order = QSeries::kExact)
{
    std::vector<Rational> v;
    for (int x : c) v.emplace_back(x);
    return QSeries::from_coeffs(v, order);
}

QSeries random_series(std::mt19937& rng, int order)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), len(0, 8);
    std::vector<Rational> v;
    for (int i = 0, n = len(rng); i < n; ++i) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        v.push_back(r);
    }
    return QSeries::from_coeffs(v, order);
}

} // namespace

TEST(QSeries, Arithmetic)
{
    EXPECT_EQ(poly({1, 1}) * poly({1, 2}), poly({1, 3, 2}));
    EXPECT_EQ(QSeries() + poly({4, 0, 1}), poly({4, 0, 1}));
    EXPECT_EQ(one_minus_q_power(1) * geometric_series(10), QSeries(1).truncated(10));
    EXPECT_EQ((poly({1, 1}) - poly({1, 1})).degree(), -1);
}

TEST(QSeries, TruncationTakesMinimumOrder)
{
    QSeries a = poly({1, 2, 3, 4, 5}, 4);
    QSeries b = poly({1, 1}, 6);
    EXPECT_EQ((a * b).order(), 4);
    EXPECT_EQ((a + poly({0, 0, 0, 0, 0, 9})).order(), 4);
    EXPECT_EQ(a.degree(), 3);
    EXPECT_EQ(poly({1, 1}).order(), QSeries::kExact);
    EXPECT_TRUE(equal_up_to_truncation(poly({1, 2, 3}, 2), poly({1, 2, 7})));
    EXPECT_FALSE(equal_up_to_truncation(poly({1, 2, 3}, 3), poly({1, 2, 7})));
}

TEST(QSeries, RingAxiomsOnRandomTriples)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        QSeries a = random_series(rng, 6), b = random_series(rng, 9), c = random_series(rng, QSeries::kExact);
        EXPECT_TRUE(equal_up_to_truncation((a * b) * c, a * (b * c)));
        EXPECT_TRUE(equal_up_to_truncation(a * (b + c), a * b + a * c));
        EXPECT_TRUE(equal_up_to_truncation(a * b, b * a));
        EXPECT_TRUE(equal_up_to_truncation((a + b) + c, a + (b + c)));
    }
}

TEST(QSeries, InvertGeometric)
{
    for (int d = 1; d <= 64; ++d) {
        QSeries inv = qs_invert(one_minus_q_power(1), d);
        EXPECT_EQ(inv.order(), d);
        for (int i = 0; i < d; ++i) EXPECT_EQ(inv[i], 1);
        EXPECT_EQ(inv * one_minus_q_power(1), QSeries(1).truncated(d));
    }
    EXPECT_EQ(qs_invert(QSeries(1)), QSeries(1));
    EXPECT_EQ(qs_invert(QSeries(2)), QSeries(Rational(1, 2)));
    EXPECT_THROW(qs_invert(poly({0, 1}), 5), ZeroConstantTerm);
    EXPECT_THROW(qs_invert(poly({1, 1})), NotPolynomial);
}

TEST(QSeries, InvertRandom)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        QSeries a = random_series(rng, 12);
        if (a[0] == 0) a += QSeries(3);
        EXPECT_EQ(a * qs_invert(a), QSeries(1).truncated(12));
    }
}

TEST(QSeries, Substitutions)
{
    EXPECT_EQ(qs_substitute(poly({1, 1, 1}), NegateQ{}), poly({1, -1, 1}));
    EXPECT_EQ(qs_substitute(poly({1, 1}), PowerQ{2}), poly({1, 0, 1}));
    EXPECT_EQ(qs_power_q(poly({1, 1, 1}, 3), 3).order(), 3);
    EXPECT_THROW(qs_power_q(poly({1}), 0), std::invalid_argument);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        QSeries a = random_series(rng, 10), b = random_series(rng, 8);
        EXPECT_EQ(qs_negate_q(qs_negate_q(a)), a);
        for (int k = 1; k <= 3; ++k) {
            EXPECT_TRUE(equal_up_to_truncation(qs_power_q(a + b, k), qs_power_q(a, k) + qs_power_q(b, k)));
            EXPECT_TRUE(equal_up_to_truncation(qs_power_q(a * b, k), qs_power_q(a, k) * qs_power_q(b, k)));
        }
    }
}

TEST(QSeries, ExactPolynomial)
{
    QSeries one = one_minus_q_power(1) * geometric_series(6);
    EXPECT_EQ(qs_exact_polynomial(one, 0), QSeries(1));
    EXPECT_THROW(qs_exact_polynomial(poly({1, 1}), 0), NotPolynomial);
    // A truncation order at or below the claimed degree cannot certify anything.
    EXPECT_THROW(qs_exact_polynomial(poly({1}, 2), 2), NotPolynomial);
    EXPECT_TRUE(qs_exact_polynomial(poly({1, 2}, 5), 1).is_exact());
}
