#pragma once

// Closed-form (Kac-Wakimoto type) irreducible characters for totally
// connected and totally disconnected half-integer dominant weights.

#include <string>

#include "errors.hpp"
#include "euler.hpp"
#include "laurent.hpp"
#include "weights.hpp"

namespace qchar {

struct KwResult {
    LaurentPoly character;
    Connectivity connectivity;
    int sign = 1;          ///< (-1)^{|uparrow - lambda|}, 1 in disconnected mode
    Integer r_factorial{1}; ///< divisor r!, 1 in disconnected mode
    Integer two_power{1};   ///< 2^{ceil(n/2)}
};

namespace detail {

inline LaurentPoly kw_connected(const Weight &w, const Connectivity &c,
                                std::span<const IndexPair> roots, const Integer &two_power,
                                const Integer &r_factorial) {
    LaurentPoly sum = weyl_quotient(c.uparrow.doubled(), roots) * two_power;
    if (c.distance % 2)
        sum = -sum;
    try {
        return divide_exact(sum, r_factorial);
    } catch (const NonExactDivision &) {
        throw NonExactDivision("kw_character: r! does not divide the alternating sum for " +
                               w.to_string());
    }
}

inline LaurentPoly kw_disconnected(const Weight &w, std::span<const IndexPair> roots,
                                   const Integer &two_power) {
    return weyl_quotient(w.doubled(), roots) * two_power;
}

} // namespace detail

/// ch L(lambda) by the closed formula matching lambda's connectivity.
///
/// Totally connected:
///   (-1)^{|uparrow - lambda|} 2^{ceil(n/2)} / (r! D) sum_w sgn(w) w(e^{uparrow} / prod_{beta in S} (1 + e^{-beta}))
/// Totally disconnected:
///   2^{ceil(n/2)} / D sum_w sgn(w) w(e^{lambda} / prod_{beta in S} (1 + e^{-beta}))
/// with S the atypical roots. When both predicates hold both are evaluated
/// and must agree. Typical weights give ch E(lambda). Mixed weights throw.
inline KwResult kw_character(const Weight &w) {
    detail::require(w.is_half_integer() && is_dominant(w),
                    "kw_character: weight must be half-integer dominant");
    Connectivity c = connectivity(w);
    const Integer two_power = Integer(1) << ((w.size() + 1) / 2);

    if (c.mode == ConnectivityMode::Typical)
        return {euler_character(w), std::move(c), 1, Integer(1), two_power};
    if (c.mode == ConnectivityMode::Mixed)
        throw MixedWeight("kw_character: " + w.to_string() +
                          " is neither totally connected nor totally disconnected");

    const AtypicalStructure s = atypical_structure(w);
    Integer r_factorial = 1;
    for (std::size_t k = 2; k <= s.degree(); ++k)
        r_factorial *= k;

    if (c.mode == ConnectivityMode::TotallyDisconnected)
        return {detail::kw_disconnected(w, s.pairs, two_power), std::move(c), 1, Integer(1),
                two_power};

    LaurentPoly ch = detail::kw_connected(w, c, s.pairs, two_power, r_factorial);
    if (c.both && detail::kw_disconnected(w, s.pairs, two_power) != ch)
        throw InternalError("kw_character: connected and disconnected formulas disagree for " +
                            w.to_string());
    const int sign = c.distance % 2 ? -1 : 1;
    return {std::move(ch), std::move(c), sign, std::move(r_factorial), two_power};
}

} // namespace qchar
