#pragma once

// Characters of Euler characteristics E(lambda) and the signed alternating
// sums sigma(mu).

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "weights.hpp"

namespace qchar {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// D^{-1} sum_w sgn(w) w( x^mu / prod_{(k,l) in roots} (1 + x_l/x_k) ) as an
/// exact Laurent polynomial, with D = prod_{i<j} (x_i - x_j)/(x_i + x_j).
///
/// Each 1/(1 + x_l/x_k) equals x_k/(x_k + x_l). The roots are distinct pairs
/// k < l, so after multiplying through by the symmetric prod_{i<j}(x_i + x_j)
/// every Weyl term is w applied to x^{mu + sum eps_k} times the binomials
/// x_a + x_b over the pairs not in `roots`. The alternating sum is then
/// divided by the Vandermonde determinant.
inline LaurentPoly weyl_quotient(std::span<const int> mu_doubled, std::span<const IndexPair> roots) {
    const std::size_t n = mu_doubled.size();
    std::vector<std::vector<bool>> in_roots(n, std::vector<bool>(n, false));
    Exponent e(mu_doubled.begin(), mu_doubled.end());
    for (auto [k, l] : roots) {
        if (k >= l || l >= n || in_roots[k][l])
            throw DomainError("weyl_quotient: roots must be distinct pairs k < l");
        in_roots[k][l] = true;
        e[k] += 2;
    }
    LaurentPoly term = LaurentPoly::monomial(std::move(e));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!in_roots[a][b])
                term *= LaurentPoly::variable(n, a) + LaurentPoly::variable(n, b);
    return divide_by_vandermonde(antisymmetrize(term));
}

/// Pairs i < j with lambda_i == lambda_j. For dominant weights these all lie
/// inside the block of zeros.
inline std::vector<IndexPair> equal_pairs(const Weight &w) {
    std::vector<IndexPair> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w.doubled(i) == w.doubled(j))
                out.emplace_back(i, j);
    return out;
}

/// ch E(lambda) = 2^{ceil(ell/2)} D^{-1} sum_w sgn(w) w(e^lambda / prod_{beta} (1 + e^{-beta})),
/// beta over the positive roots eps_i - eps_j with lambda_i == lambda_j.
inline LaurentPoly euler_character(const Weight &w) {
    detail::require(is_dominant(w), "euler_character: weight must be dominant");
    const std::vector<IndexPair> roots = equal_pairs(w);
    return weyl_quotient(w.doubled(), roots) * Integer(clifford_dim(w));
}

/// sigma(mu) = 2^{ceil(n/2)} D^{-1} sum_w sgn(w) w(e^mu) for a half-integer mu
/// in any order. Zero when an entry repeats; otherwise sgn * ch E(mu^+).
inline LaurentPoly sigma(const Weight &w) {
    detail::require(w.is_half_integer(), "sigma: weight must be half-integer");
    const Integer two_power = Integer(1) << ((w.size() + 1) / 2);
    return weyl_quotient(w.doubled(), {}) * two_power;
}

} // namespace qchar
