#include <gtest/gtest.h>

#include <random>

#include "qchar/kl.hpp"
#include "qchar/kw.hpp"
#include "support/oracles.hpp"

using namespace qchar;

namespace {

Weight W(std::vector<int> doubled) { return Weight::from_doubled(std::move(doubled)); }
LaurentPoly mono(Exponent e, int c = 1) { return LaurentPoly::monomial(std::move(e), c); }

} // namespace

TEST(KwCharacter, RankTwo) {
    const KwResult r = kw_character(W({1, -1}));
    EXPECT_TRUE(r.connectivity.both);
    EXPECT_EQ(r.character, mono({1, -1}, 2) + mono({-1, 1}, 2));
}

TEST(KwCharacter, TotallyConnected) {
    const Weight w = W({5, 3, -3, -5});
    const KwResult r = kw_character(w);
    EXPECT_EQ(r.connectivity.mode, ConnectivityMode::TotallyConnected);
    EXPECT_EQ(r.sign, -1);
    EXPECT_EQ(r.two_power, 4);
    EXPECT_EQ(r.r_factorial, 2);
    EXPECT_EQ(r.character, irreducible_character(w));
}

TEST(KwCharacter, TotallyDisconnected) {
    const Weight w = W({7, 3, -3, -7});
    const KwResult r = kw_character(w);
    EXPECT_EQ(r.connectivity.mode, ConnectivityMode::TotallyDisconnected);
    EXPECT_EQ(r.two_power, 4);
    EXPECT_EQ(r.character, irreducible_character(w));
}

TEST(KwCharacter, RankFiveConnected) {
    const Weight w = W({7, 5, 3, -3, -7});
    const KwResult r = kw_character(w);
    EXPECT_EQ(r.connectivity.mode, ConnectivityMode::TotallyConnected);
    EXPECT_FALSE(r.connectivity.both);
    EXPECT_EQ(r.character, irreducible_character(w));
}

TEST(KwCharacter, TypicalIsEuler) {
    EXPECT_EQ(kw_character(W({5, 1})).character, euler_character(W({5, 1})));
}

TEST(KwCharacter, Errors) {
    EXPECT_THROW(kw_character(W({9, 7, 5, 1, -1, -5, -9})), MixedWeight);
    EXPECT_THROW(kw_character(Weight::from_integers({1, -1})), DomainError);
    EXPECT_THROW(kw_character(W({1, 3})), DomainError);
}

// The closed formula evaluated directly at rational points, before any
// denominator clearing, agrees with the polynomial.
TEST(KwCharacter, MatchesDirectEvaluation) {
    std::mt19937 rng(29);
    for (const Weight &w : {W({5, 3, -3, -5}), W({7, 3, -3, -7}), W({3, 1, -1}), W({7, 5, 3, -3, -7})}) {
        const KwResult r = kw_character(w);
        const AtypicalStructure s = atypical_structure(w);
        const bool connected = r.connectivity.mode == ConnectivityMode::TotallyConnected;
        const Weight &top = connected ? r.connectivity.uparrow : w;
        oracle::Rational prefactor(r.two_power);
        if (connected)
            prefactor = prefactor * r.sign / oracle::Rational(r.r_factorial);
        for (int trial = 0; trial < 2; ++trial) {
            const auto t = oracle::sample_points(w.size(), rng);
            EXPECT_EQ(oracle::evaluate(r.character, t), oracle::evaluate_formula(top.doubled(), s.pairs, prefactor, t))
                << w.to_string();
        }
    }
}
