#include <random>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "polyrep/bell.hpp"
#include "polyrep/divisorside.hpp"
#include "polyrep/repcount.hpp"

using namespace polyrep;

namespace {

std::vector<ExactRational> random_arguments(std::mt19937_64& rng, std::size_t count) {
    std::uniform_int_distribution<long long> dist(-5, 5);
    std::vector<ExactRational> x;
    for (std::size_t i = 0; i < count; ++i) {
        x.emplace_back(dist(rng));
    }
    return x;
}

} // namespace

TEST(TaylorCoeffs, Examples) {
    const TaylorCoeffs g4 = taylor_coeffs(PolygonalSpec(4), 6);
    EXPECT_EQ(g4.g[1], ExactInteger(2));
    EXPECT_EQ(g4.g[2], ExactInteger(0));
    EXPECT_EQ(g4.g[4], ExactInteger(48)); // 4! * 2
    const TaylorCoeffs g6 = taylor_coeffs(PolygonalSpec(6), 6);
    EXPECT_EQ(g6.g[3], ExactInteger(6));
    EXPECT_EQ(g6.n_max(), 6u);
}

TEST(TaylorCoeffs, DivisibleByFactorial) {
    for (int s = 3; s <= 9; ++s) {
        const TaylorCoeffs g = taylor_coeffs(PolygonalSpec(s), 20);
        for (std::size_t m = 1; m <= 20; ++m) {
            ASSERT_TRUE((g.g[m] % factorial(static_cast<std::int64_t>(m))).is_zero());
        }
    }
}

TEST(BellPartial, BaseCasesAndSmallExpansions) {
    const std::vector<ExactRational> none;
    EXPECT_EQ(bell_partial(0, 0, none), ExactRational(1));
    EXPECT_EQ(bell_partial(4, 0, none), ExactRational(0));
    EXPECT_EQ(bell_partial(0, 3, none), ExactRational(0));
    EXPECT_EQ(bell_partial(2, 5, none), ExactRational(0));

    const std::vector<ExactRational> x{2, 3, 5, 7, 11};
    for (std::size_t n = 1; n <= 5; ++n) {
        EXPECT_EQ(bell_partial(n, 1, x), x[n - 1]);
        ExactRational x1_power = 1;
        for (std::size_t i = 0; i < n; ++i) x1_power *= x[0];
        EXPECT_EQ(bell_partial(n, n, x), x1_power); // B_{n,n} = x_1^n
    }
    // B_{3,2} = 3 x_1 x_2.
    EXPECT_EQ(bell_partial(3, 2, x), ExactRational(3) * x[0] * x[1]);
}

TEST(BellPartial, InsufficientArguments) {
    const std::vector<ExactRational> x{1, 1};
    EXPECT_THROW(bell_partial(4, 1, x), DomainError);
    EXPECT_NO_THROW(bell_partial(4, 3, x));
}

TEST(BellPartial, RowSumsAreBellNumbers) {
    const std::vector<long long> bell{1, 1, 2, 5, 15, 52, 203};
    const std::vector<ExactRational> ones(10, ExactRational(1));
    for (int n = 0; n <= 6; ++n) {
        ExactRational row;
        for (int k = 0; k <= n; ++k) {
            row += bell_partial(n, k, ones);
        }
        EXPECT_EQ(row, ExactRational(bell[n]));
        EXPECT_EQ(oracle::bell_number_by_enumeration(n), bell[n]);
    }
}

TEST(BellPartial, MatchesSetPartitionsAndDoubleSeries) {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 5; ++trial) {
        const auto x = random_arguments(rng, 8);
        const PartialBellTable table(x, 8);
        for (int n = 0; n <= 8; ++n) {
            for (int k = 0; k <= n; ++k) {
                const auto expected = oracle::bell_by_double_series(n, k, x);
                ASSERT_EQ(table(n, k), expected) << "n=" << n << " k=" << k;
                ASSERT_EQ(oracle::bell_by_set_partitions(n, k, x), expected) << "n=" << n << " k=" << k;
            }
        }
    }
}

TEST(BellPartial, Homogeneity) {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<long long> num(-7, 7), den(1, 5);
    for (int trial = 0; trial < 5; ++trial) {
        const auto x = random_arguments(rng, 8);
        const ExactRational c(ExactInteger(num(rng)), ExactInteger(den(rng)));
        std::vector<ExactRational> scaled;
        for (const auto& v : x) scaled.push_back(c * v);
        const PartialBellTable plain(x, 8), stretched(scaled, 8);
        for (std::size_t n = 0; n <= 8; ++n) {
            ExactRational ck = 1;
            for (std::size_t k = 0; k <= n; ++k) {
                ASSERT_EQ(stretched(n, k), ck * plain(n, k));
                ck *= c;
            }
        }
    }
}

TEST(LogPolynomial, Examples) {
    const TaylorCoeffs g4 = taylor_coeffs(PolygonalSpec(4), 4);
    EXPECT_EQ(log_polynomial(1, g4), ExactRational(-2));
    // Sum_k (-1)^k (k-1)! B_{2,k}: -g_2 + g_1^2 = 4, and 4/2! = divisor_lhs(2, 4).
    EXPECT_EQ(log_polynomial(2, g4), ExactRational(4));
    EXPECT_THROW(log_polynomial(5, g4), DomainError);
    EXPECT_THROW(log_polynomial(0, g4), DomainError);
}

TEST(LogPolynomial, OverFactorialIsNegatedLogCoefficient) {
    for (int s = 4; s <= 8; ++s) {
        const PolygonalSpec spec(s);
        const TaylorCoeffs g = taylor_coeffs(spec, 30);
        const PartialBellTable table(g.bell_arguments(), 30);
        const TruncatedSeries log_g = log(theta_series(spec, 30));
        for (std::size_t n = 1; n <= 30; ++n) {
            const ExactRational scaled =
                log_polynomial(n, table) / ExactRational(factorial(static_cast<std::int64_t>(n)));
            ASSERT_EQ(scaled, -log_g[n]) << "s=" << s << " n=" << n;
            ASSERT_EQ(scaled, divisor_lhs(static_cast<std::int64_t>(n), s)) << "s=" << s << " n=" << n;
        }
    }
}

TEST(BellPartial, RepresentationCountIdentity) {
    for (int s : {4, 5, 6}) {
        const PolygonalSpec spec(s);
        const TaylorCoeffs g = taylor_coeffs(spec, 20);
        const PartialBellTable table(g.bell_arguments(), 20);
        const RepTable reps = build_table(spec, 20, 20);
        for (std::int64_t n = 1; n <= 20; ++n) {
            for (std::int64_t k = 1; k <= n; ++k) {
                ExactInteger alternating;
                for (std::int64_t j = 1; j <= k; ++j) {
                    const ExactInteger term = binomial(k, j) * reps.count(j, n);
                    alternating += ((k - j) % 2 == 0) ? term : -term;
                }
                ASSERT_EQ(table(n, k), ExactRational(factorial(n), factorial(k)) * ExactRational(alternating))
                    << "s=" << s << " n=" << n << " k=" << k;
            }
        }
    }
}
