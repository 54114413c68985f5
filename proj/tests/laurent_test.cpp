#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qchar/laurent.hpp"
#include "support/oracles.hpp"

using namespace qchar;

namespace {

LaurentPoly x(std::size_t n, std::size_t i) { return LaurentPoly::variable(n, i); }
LaurentPoly mono(Exponent e, int c = 1) { return LaurentPoly::monomial(std::move(e), c); }

LaurentPoly random_poly(std::size_t n, std::size_t terms, std::mt19937 &rng) {
    std::uniform_int_distribution<int> exp(-4, 4), coeff(-5, 5);
    LaurentPoly f(n);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponent e(n);
        for (int &v : e)
            v = exp(rng);
        f.add_term(e, coeff(rng));
    }
    return f;
}

// Every exponent of a term shares one parity, as for weights.
LaurentPoly random_weight_poly(std::size_t n, std::size_t terms, std::mt19937 &rng) {
    std::uniform_int_distribution<int> exp(-2, 2), coeff(-5, 5), parity(0, 1);
    LaurentPoly f(n);
    for (std::size_t t = 0; t < terms; ++t) {
        const int odd = parity(rng);
        Exponent e(n);
        for (int &v : e)
            v = 2 * exp(rng) + odd;
        f.add_term(e, coeff(rng));
    }
    return f;
}

std::vector<std::size_t> random_perm(std::size_t n, std::mt19937 &rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::ranges::shuffle(p, rng);
    return p;
}

} // namespace

TEST(Laurent, RingExamples) {
    const LaurentPoly one = LaurentPoly::constant(2, 1);
    const LaurentPoly f = x(2, 0) * Integer(3) - x(2, 1);
    EXPECT_EQ(f * one, f);
    EXPECT_EQ(mono({1}) * mono({1}), x(1, 0));
    EXPECT_EQ((x(2, 0) + x(2, 1)) * (x(2, 0) - x(2, 1)), x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1));
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(-(-f), f);
    EXPECT_THROW(x(2, 0) + x(3, 0), DomainError);
}

TEST(Laurent, ZeroCoefficientsAreDropped) {
    LaurentPoly f(1);
    f.add_term({2}, 3);
    f.add_term({2}, -3);
    EXPECT_TRUE(f.is_zero());
    EXPECT_EQ(f.size(), 0u);
}

TEST(Laurent, BigCoefficients) {
    LaurentPoly f = LaurentPoly::constant(1, 1);
    const LaurentPoly two = LaurentPoly::constant(1, 2);
    for (int k = 0; k < 200; ++k)
        f *= two;
    EXPECT_EQ(specialize_ones(f), Integer(1) << 200);
}

TEST(Permute, Examples) {
    const std::vector<std::size_t> swap{1, 0};
    EXPECT_EQ(permute(x(2, 0), swap), x(2, 1));
    EXPECT_EQ(permute(mono({1, -1}), swap), mono({-1, 1}));
    const LaurentPoly sym = x(2, 0) * x(2, 1) + x(2, 0) + x(2, 1);
    EXPECT_EQ(permute(sym, swap), sym);
}

TEST(Permute, IsAGroupAction) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const LaurentPoly f = random_poly(n, 6, rng);
        const auto u = random_perm(n, rng), v = random_perm(n, rng);
        std::vector<std::size_t> vu(n);
        for (std::size_t i = 0; i < n; ++i)
            vu[i] = v[u[i]];
        EXPECT_EQ(permute(permute(f, u), v), permute(f, vu));
        EXPECT_EQ(permutation_sign(vu), permutation_sign(u) * permutation_sign(v));
    }
}

TEST(Antisymmetrize, Examples) {
    EXPECT_TRUE(antisymmetrize(x(2, 0) * x(2, 1)).is_zero());
    EXPECT_EQ(antisymmetrize(mono({1, -1})), mono({1, -1}) - mono({-1, 1}));
    for (int a = -3; a <= 3; ++a)
        EXPECT_TRUE(antisymmetrize(mono({a, a})).is_zero());
}

TEST(Antisymmetrize, Alternates) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const LaurentPoly a = antisymmetrize(random_poly(n, 4, rng));
        const auto w = random_perm(n, rng);
        LaurentPoly expected = a;
        expected *= Integer(permutation_sign(w));
        EXPECT_EQ(permute(a, w), expected);
    }
}

// antisymmetrize(x^mu) vanishes exactly when mu has a repeated entry.
TEST(Antisymmetrize, VanishesIffExponentRepeats) {
    for (std::size_t n = 1; n <= 5; ++n) {
        Exponent e(n, 0);
        const std::size_t total = static_cast<std::size_t>(std::pow(3, n));
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            for (std::size_t k = 0; k < n; ++k, c /= 3)
                e[k] = static_cast<int>(c % 3) - 1;
            Exponent sorted = e;
            std::ranges::sort(sorted);
            const bool repeats = std::ranges::adjacent_find(sorted) != sorted.end();
            const LaurentPoly a = antisymmetrize(mono(e));
            EXPECT_EQ(a.is_zero(), repeats);
            if (!repeats) {
                EXPECT_EQ(a.size(), std::size_t(std::tgamma(n + 1) + 0.5));
            }
        }
    }
}

TEST(ExactDiv, Examples) {
    const LaurentPoly x1 = x(2, 0), x2 = x(2, 1);
    EXPECT_EQ(exact_div(x1 * x1 - x2 * x2, x1 - x2), x1 + x2);
    const LaurentPoly f = x1 * Integer(4) + mono({-3, 1});
    EXPECT_EQ(exact_div(f, LaurentPoly::constant(2, 1)), f);

    const LaurentPoly num = antisymmetrize(mono({3, -3}));
    const LaurentPoly expected = (x1 * x1 + x1 * x2 + x2 * x2) * mono({-3, -3});
    EXPECT_EQ(exact_div(num, x1 - x2), expected);
    EXPECT_EQ(divide_by_binomial(num, 0, 1, -1), expected);
    EXPECT_EQ(divide_by_vandermonde(num), expected);
}

TEST(ExactDiv, Errors) {
    const LaurentPoly x1 = x(2, 0), x2 = x(2, 1);
    EXPECT_THROW(exact_div(x1 * x1 + x2 * x2, x1 - x2), NonExactDivision);
    EXPECT_THROW(divide_by_binomial(x1 * x1 + x2 * x2, 0, 1, -1), NonExactDivision);
    EXPECT_THROW(exact_div(x1, LaurentPoly(2)), DomainError);
    EXPECT_THROW(divide_exact(x1 * Integer(3), 2), NonExactDivision);
    EXPECT_EQ(divide_exact(x1 * Integer(6), 3), x1 * Integer(2));
}

TEST(ExactDiv, RoundTripsProducts) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const LaurentPoly f = random_poly(n, 5, rng);
        LaurentPoly g = random_poly(n, 3, rng);
        if (g.is_zero())
            continue;
        EXPECT_EQ(exact_div(f * g, g), f);
        if (n >= 2) {
            const LaurentPoly b = x(n, 0) + x(n, n - 1);
            EXPECT_EQ(divide_by_binomial(f * b, 0, n - 1, +1), f);
            const LaurentPoly m = x(n, 1) - x(n, 0);
            EXPECT_EQ(divide_by_binomial(f * m, 1, 0, -1), f);
        }
    }
}

// Two division routes by the Vandermonde product must agree. Antisymmetric
// sums of terms with mixed exponent parities need not be divisible.
TEST(ExactDiv, VandermondeRoutesAgree) {
    std::mt19937 rng(13);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const LaurentPoly a = antisymmetrize(random_weight_poly(n, 3, rng));
            const LaurentPoly q = divide_by_vandermonde(a);
            EXPECT_EQ(q, exact_div(a, vandermonde(n)));
            EXPECT_EQ(q * vandermonde(n), a);
        }
    }
    EXPECT_THROW(divide_by_vandermonde(antisymmetrize(mono({1, 0}))), NonExactDivision);
}

TEST(SpecializeOnes, Examples) {
    EXPECT_EQ(specialize_ones(x(2, 0) + x(2, 1)), 2);
    EXPECT_EQ(specialize_ones(LaurentPoly(3)), 0);
}

TEST(Laurent, EvaluationIsAHomomorphism) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const LaurentPoly f = random_poly(n, 4, rng), g = random_poly(n, 4, rng);
        const auto t = oracle::sample_points(n, rng);
        EXPECT_EQ(oracle::evaluate(f * g, t), oracle::evaluate(f, t) * oracle::evaluate(g, t));
        EXPECT_EQ(oracle::evaluate(f + g, t), oracle::evaluate(f, t) + oracle::evaluate(g, t));
    }
}
