#pragma once

// Raising operators R_{i,j}, R_theta and R'_theta, the transition
// coefficients between Euler characteristics and irreducibles, and the
// irreducible characters assembled from them.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "euler.hpp"
#include "laurent.hpp"
#include "order.hpp"
#include "weights.hpp"

namespace qchar {

/// One term of [E(lambda)] = sum a [L(mu)] or [L(lambda)] = sum b [E(mu)].
struct TransitionEntry {
    Weight mu;
    long coeff;
    /// For a-entries, the unique theta in {0,1}^r with R_theta(mu) = lambda.
    std::optional<std::vector<int>> theta;

    friend bool operator==(const TransitionEntry &, const TransitionEntry &) = default;
};

namespace detail {

inline Weight shifted(const Weight &w, std::size_t i, std::size_t j, int a) {
    std::vector<int> d(w.doubled().begin(), w.doubled().end());
    d[i] += 2 * a;
    d[j] -= 2 * a;
    return Weight::from_doubled(std::move(d));
}

inline int max_abs_doubled(const Weight &w) {
    int m = 0;
    for (int d : w.doubled())
        m = std::max(m, d < 0 ? -d : d);
    return m;
}

inline void require_atypical_domain(const Weight &w, const char *what) {
    require(is_dominant(w) && all_nonzero(w),
            std::string(what) + ": weight must be dominant with nonzero entries");
}

} // namespace detail

/// R_{i,j}(w) = w + a(eps_i - eps_j) for the least a >= 1 such that the
/// result, and R_{k,l}(w) + a(eps_i - eps_j) for every enclosing pair
/// k < i < j < l with w_k + w_l = 0, all have a dominant conjugate.
/// Indices are 0-based; the result is left unsorted.
inline Weight raise_op(const Weight &w, std::size_t i, std::size_t j) {
    detail::require(i < j && j < w.size(), "raise_op: need i < j < n");
    detail::require(w.doubled(i) + w.doubled(j) == 0, "raise_op: lambda_i + lambda_j must be 0");

    std::vector<Weight> witnesses;
    for (std::size_t k = 0; k < i; ++k)
        for (std::size_t l = j + 1; l < w.size(); ++l)
            if (w.doubled(k) + w.doubled(l) == 0)
                witnesses.push_back(raise_op(w, k, l));

    // Once w_i + a exceeds every magnitude in sight all candidates are regular.
    int bound = detail::max_abs_doubled(w);
    for (const Weight &v : witnesses)
        bound = std::max(bound, detail::max_abs_doubled(v));
    bound = bound + 1;

    for (int a = 1; a <= bound; ++a) {
        Weight candidate = detail::shifted(w, i, j, a);
        if (!is_regular(candidate))
            continue;
        const bool blocked = std::ranges::any_of(witnesses, [&](const Weight &v) {
            return !is_regular(detail::shifted(v, i, j, a));
        });
        if (!blocked)
            return candidate;
    }
    throw InternalError("raise_op: no admissible shift found");
}

enum class RaiseOrder {
    Inner, ///< R_theta: innermost pair first
    Outer, ///< R'_theta: outermost pair first
};

namespace detail {

/// Apply theta[s] raises at pair s, in the given pair order, without sorting.
inline Weight apply_raises(Weight v, const AtypicalStructure &s, std::span<const int> theta,
                           RaiseOrder order) {
    const std::size_t r = s.degree();
    for (std::size_t step = 0; step < r; ++step) {
        const std::size_t k = order == RaiseOrder::Outer ? step : r - 1 - step;
        if (theta[k] < 0)
            throw DomainError("r_theta: theta entries must be non-negative");
        for (int t = 0; t < theta[k]; ++t)
            v = raise_op(v, s.pairs[k].first, s.pairs[k].second);
    }
    return v;
}

inline Weight dominant_or_throw(const Weight &v) {
    auto c = dominant_conjugate(v);
    if (!c)
        throw InternalError("raised weight " + v.to_string() + " has no dominant conjugate");
    return std::move(c->weight);
}

} // namespace detail

/// (R_{i_1,j_1}^{theta_1} o ... o R_{i_r,j_r}^{theta_r}(w))^+ for Inner,
/// the reverse composition for Outer. Pairs are those of w.
inline Weight r_theta(const Weight &w, std::span<const int> theta, RaiseOrder order) {
    detail::require_atypical_domain(w, "r_theta");
    const AtypicalStructure s = atypical_structure(w);
    detail::require(theta.size() == s.degree(), "r_theta: theta length must equal the degree of atypicality");
    return detail::dominant_or_throw(detail::apply_raises(w, s, theta, order));
}

inline Weight r_theta(const Weight &w, std::initializer_list<int> theta, RaiseOrder order) {
    return r_theta(w, std::span<const int>(theta.begin(), theta.size()), order);
}

/// Nonzero a_{lambda mu}: every dominant mu below lambda with
/// R_theta(mu) = lambda for a theta in {0,1}^r. Accepts half-integer dominant
/// weights and integer dominant weights without zeros; for the latter only
/// mu without zero entries are considered.
inline std::vector<TransitionEntry> a_expansion(const Weight &w) {
    detail::require_atypical_domain(w, "a_expansion");
    std::vector<TransitionEntry> out;
    for (const Weight &mu : lower_interval(w)) {
        if (!all_nonzero(mu))
            continue;
        const AtypicalStructure s = atypical_structure(mu);
        const std::size_t r = s.degree();
        std::optional<std::vector<int>> found;
        std::vector<int> theta(r, 0);
        for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
            for (std::size_t k = 0; k < r; ++k)
                theta[k] = static_cast<int>((mask >> k) & 1);
            if (detail::dominant_or_throw(detail::apply_raises(mu, s, theta, RaiseOrder::Inner)) != w)
                continue;
            if (found)
                throw InternalError("two theta vectors map " + mu.to_string() + " to " + w.to_string());
            found = theta;
        }
        if (found)
            out.push_back({mu, 1, std::move(found)});
    }
    return out;
}

/// [E(lambda)] = sum_mu [L(mu)] for a half-integer dominant lambda.
inline std::vector<TransitionEntry> decompose_euler(const Weight &w) {
    detail::require(w.is_half_integer() && is_dominant(w),
                    "decompose_euler: weight must be half-integer dominant");
    return a_expansion(w);
}

/// b_{lambda mu} = sum (-1)^{|theta|} over theta in Z_+^r with R'_theta(mu) = lambda.
///
/// Bound on theta: only pair s moves entry i_s, and each raise moves it up by
/// at least 1, so before sorting entry i_s is >= mu_{i_s} + theta_s. It must be
/// an entry of lambda, hence theta_s <= max(lambda) - mu_{i_s}.
inline long b_coeff(const Weight &lam, const Weight &mu) {
    detail::require_atypical_domain(lam, "b_coeff");
    detail::require_atypical_domain(mu, "b_coeff");
    if (lam.size() != mu.size() || lam.parity() != mu.parity())
        return 0;
    const AtypicalStructure s = atypical_structure(mu);
    const std::size_t r = s.degree();
    const int top = lam.doubled(0);
    std::vector<int> limit(r);
    for (std::size_t k = 0; k < r; ++k) {
        limit[k] = (top - mu.doubled(s.pairs[k].first)) / 2;
        if (limit[k] < 0)
            return 0;
    }

    // Outer order applies pair 0 first, so walk theta depth-first and reuse
    // the partially raised weight.
    long total = 0;
    std::function<void(std::size_t, const Weight &, int)> walk = [&](std::size_t k, const Weight &v,
                                                                     int weight_sum) {
        if (k == r) {
            auto c = dominant_conjugate(v);
            if (!c)
                throw InternalError("raised weight " + v.to_string() + " has no dominant conjugate");
            if (c->weight == lam)
                total += weight_sum % 2 ? -1 : 1;
            return;
        }
        Weight cur = v;
        for (int t = 0; t <= limit[k]; ++t) {
            if (t > 0)
                cur = raise_op(cur, s.pairs[k].first, s.pairs[k].second);
            walk(k + 1, cur, weight_sum + t);
        }
    };
    walk(0, mu, 0);
    return total;
}

/// Nonzero b_{lambda mu}, mu ranging over the lower interval of lambda.
inline std::vector<TransitionEntry> b_expansion(const Weight &lam) {
    detail::require_atypical_domain(lam, "b_expansion");
    std::vector<TransitionEntry> out;
    for (const Weight &mu : lower_interval(lam)) {
        if (!all_nonzero(mu))
            continue;
        if (const long b = b_coeff(lam, mu); b != 0)
            out.push_back({mu, b, std::nullopt});
    }
    return out;
}

/// ch L(lambda) = sum_mu b_{lambda mu} ch E(mu).
inline LaurentPoly irreducible_character(const Weight &w) {
    detail::require(w.is_half_integer() && is_dominant(w),
                    "irreducible_character: weight must be half-integer dominant");
    LaurentPoly ch(w.size());
    for (const TransitionEntry &e : b_expansion(w))
        ch += euler_character(e.mu) * Integer(e.coeff);
    return ch;
}

/// Memoized Euler and irreducible characters. Safe to share between threads.
class CharacterTable {
  public:
    LaurentPoly euler(const Weight &w) {
        if (auto hit = lookup(euler_, w))
            return *hit;
        return store(euler_, w, euler_character(w));
    }

    LaurentPoly irreducible(const Weight &w) {
        if (auto hit = lookup(irreducible_, w))
            return *hit;
        detail::require(w.is_half_integer() && is_dominant(w),
                        "irreducible_character: weight must be half-integer dominant");
        LaurentPoly ch(w.size());
        for (const TransitionEntry &e : b_expansion(w))
            ch += euler(e.mu) * Integer(e.coeff);
        return store(irreducible_, w, std::move(ch));
    }

  private:
    using Map = std::map<Weight, LaurentPoly>;

    std::optional<LaurentPoly> lookup(const Map &m, const Weight &w) {
        std::lock_guard lock(mutex_);
        auto it = m.find(w);
        if (it == m.end())
            return std::nullopt;
        return it->second;
    }

    LaurentPoly store(Map &m, const Weight &w, LaurentPoly ch) {
        std::lock_guard lock(mutex_);
        return m.try_emplace(w, std::move(ch)).first->second;
    }

    std::mutex mutex_;
    Map euler_;
    Map irreducible_;
};

} // namespace qchar
