#include <gtest/gtest.h>

#include <map>

#include "qchar/kl.hpp"

using namespace qchar;

namespace {

Weight W(std::vector<int> doubled) { return Weight::from_doubled(std::move(doubled)); }
LaurentPoly mono(Exponent e, int c = 1) { return LaurentPoly::monomial(std::move(e), c); }

std::vector<Weight> dominant_half_integer(std::size_t n, int bound2) {
    std::vector<Weight> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int hi) -> void {
        if (cur.size() == n) {
            out.push_back(W(cur));
            return;
        }
        for (int v = hi; v >= -bound2; v -= 2) {
            cur.push_back(v);
            self(self, v - 2);
            cur.pop_back();
        }
    };
    rec(rec, bound2);
    return out;
}

std::map<Weight, long> as_map(const std::vector<TransitionEntry> &entries) {
    std::map<Weight, long> m;
    for (const TransitionEntry &e : entries)
        m[e.mu] = e.coeff;
    return m;
}

} // namespace

TEST(RaiseOp, Examples) {
    EXPECT_EQ(raise_op(W({1, -1}), 0, 1), W({3, -3}));
    EXPECT_EQ(raise_op(W({3, 1, -1}), 1, 2), W({3, 5, -5}));
    EXPECT_THROW(raise_op(W({1, -1, 3}), 0, 2), DomainError);
    EXPECT_THROW(raise_op(W({1, -1}), 1, 0), DomainError);
}

// The inner pair must also keep the enclosing pair's raise regular.
TEST(RaiseOp, ChecksEnclosingPairs) {
    const Weight w = W({3, 1, -1, -3});
    const Weight outer = raise_op(w, 0, 3);
    EXPECT_EQ(outer, W({5, 1, -1, -5}));
    const Weight inner = raise_op(w, 1, 2);
    EXPECT_TRUE(is_regular(inner));
    const int a = (inner.doubled(1) - w.doubled(1)) / 2;
    std::vector<int> moved(outer.doubled().begin(), outer.doubled().end());
    moved[1] += 2 * a;
    moved[2] -= 2 * a;
    EXPECT_TRUE(is_regular(W(moved)));
}

TEST(RThetaTest, Examples) {
    EXPECT_EQ(r_theta(W({5, 3, -5}), {0}, RaiseOrder::Inner), W({5, 3, -5}));
    EXPECT_EQ(r_theta(W({5, 1}), std::span<const int>{}, RaiseOrder::Inner), W({5, 1}));
    EXPECT_EQ(r_theta(W({1, -1}), {1}, RaiseOrder::Inner), W({3, -3}));
    EXPECT_EQ(r_theta(W({3, 1, -1}), {1}, RaiseOrder::Inner), W({5, 3, -5}));
    EXPECT_EQ(r_theta(W({1, -1}), {2}, RaiseOrder::Outer), W({5, -5}));
    EXPECT_THROW(r_theta(W({1, -1}), {1, 0}, RaiseOrder::Inner), DomainError);
    EXPECT_THROW(r_theta(W({1, -1}), {-1}, RaiseOrder::Inner), DomainError);
}

TEST(RThetaTest, OrdersAgreeForOnePair) {
    for (const Weight &w : dominant_half_integer(3, 7)) {
        if (atypical_structure(w).degree() != 1)
            continue;
        for (int t = 0; t <= 3; ++t)
            EXPECT_EQ(r_theta(w, {t}, RaiseOrder::Inner), r_theta(w, {t}, RaiseOrder::Outer)) << w.to_string();
    }
}

TEST(DecomposeEuler, Examples) {
    EXPECT_EQ(decompose_euler(W({3, -3})),
              (std::vector<TransitionEntry>{{W({1, -1}), 1, std::vector<int>{1}},
                                            {W({3, -3}), 1, std::vector<int>{0}}}));
    EXPECT_EQ(decompose_euler(W({5, 1})),
              (std::vector<TransitionEntry>{{W({5, 1}), 1, std::vector<int>{}}}));
    EXPECT_EQ(decompose_euler(W({5, 3, -5})),
              (std::vector<TransitionEntry>{{W({3, 1, -1}), 1, std::vector<int>{1}},
                                            {W({5, 3, -5}), 1, std::vector<int>{0}}}));
    EXPECT_THROW(decompose_euler(Weight::from_integers({1, -1})), DomainError);
}

TEST(BCoeff, Examples) {
    EXPECT_EQ(b_coeff(W({3, -3}), W({3, -3})), 1);
    EXPECT_EQ(b_coeff(W({3, -3}), W({1, -1})), -1);
    EXPECT_EQ(b_coeff(W({5, -5}), W({1, -1})), 1);
    EXPECT_EQ(b_coeff(W({5, -5}), W({3, -3})), -1);
    EXPECT_EQ(b_coeff(W({1, -1}), W({3, -3})), 0);
}

// Sum over nu of a(lambda, nu) b(nu, mu) is the identity on each interval.
TEST(BCoeff, InvertsTheEulerDecomposition) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const Weight &lam : dominant_half_integer(n, 7)) {
            const auto a = as_map(decompose_euler(lam));
            for (const Weight &mu : lower_interval(lam)) {
                long sum = 0;
                for (const auto &[nu, coeff] : a)
                    sum += coeff * b_coeff(nu, mu);
                EXPECT_EQ(sum, lam == mu ? 1 : 0) << lam.to_string() << " / " << mu.to_string();
            }
        }
}

TEST(BCoeff, NonzeroOnlyBelowInChainOrder) {
    for (const Weight &lam : dominant_half_integer(3, 5))
        for (const TransitionEntry &e : b_expansion(lam))
            EXPECT_TRUE(succ_chain_oracle(lam, e.mu)) << lam.to_string() << " / " << e.mu.to_string();
}

// The a-expansion of lambda^sharp is the sharp image of the a-expansion of lambda.
TEST(AExpansion, CommutesWithSharp) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const Weight &lam : dominant_half_integer(n, 7)) {
            std::vector<TransitionEntry> mapped;
            for (const TransitionEntry &e : a_expansion(sharp(lam)))
                mapped.push_back({unsharp(e.mu), e.coeff, e.theta});
            std::ranges::sort(mapped, {}, &TransitionEntry::mu);
            EXPECT_EQ(mapped, decompose_euler(lam)) << lam.to_string();
        }
}

TEST(IrreducibleCharacter, Examples) {
    EXPECT_EQ(irreducible_character(W({5, 1})), euler_character(W({5, 1})));
    const LaurentPoly l1 = irreducible_character(W({1, -1}));
    EXPECT_EQ(l1, mono({1, -1}, 2) + mono({-1, 1}, 2));
    EXPECT_EQ(specialize_ones(l1), 4);
    const LaurentPoly l3 = irreducible_character(W({3, -3}));
    EXPECT_EQ(l3, mono({3, -3}, 2) + mono({1, -1}, 2) + mono({-1, 1}, 2) + mono({-3, 3}, 2));
    EXPECT_EQ(specialize_ones(l3), 8);
}

TEST(IrreducibleCharacter, EulerIsSumOfIrreducibles) {
    CharacterTable table;
    for (const Weight &lam : dominant_half_integer(3, 5)) {
        LaurentPoly sum(3);
        for (const TransitionEntry &e : decompose_euler(lam))
            sum += table.irreducible(e.mu);
        EXPECT_EQ(sum, table.euler(lam)) << lam.to_string();
        EXPECT_EQ(table.irreducible(lam), irreducible_character(lam));
    }
}
