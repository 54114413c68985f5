#pragma once

// Bruhat-type orders on weights: the chain order (searched directly), the
// order induced by the b_infinity weight lattice, and the gl_infinity order
// on Z^{p|q}; plus enumeration of lower intervals of dominant weights.

#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "weights.hpp"

namespace qchar {

/// Finitely supported integer vector over basis vectors indexed by int.
/// No zero coefficients are stored.
template <class Tag> class LatticeVector {
  public:
    void add(int index, int coeff) {
        if (coeff == 0)
            return;
        auto [it, inserted] = coeffs_.try_emplace(index, coeff);
        if (!inserted && (it->second += coeff) == 0)
            coeffs_.erase(it);
    }

    int operator[](int index) const {
        auto it = coeffs_.find(index);
        return it == coeffs_.end() ? 0 : it->second;
    }

    const std::map<int, int> &coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    friend LatticeVector operator-(LatticeVector a, const LatticeVector &b) {
        for (auto [k, c] : b.coeffs_)
            a.add(k, -c);
        return a;
    }

    friend bool operator==(const LatticeVector &, const LatticeVector &) = default;

  private:
    std::map<int, int> coeffs_;
};

struct BLatticeTag {};
struct GlLatticeTag {};
/// Coefficients of delta_r, r >= 1.
using BLatticeVector = LatticeVector<BLatticeTag>;
/// Coefficients of gamma_r, r in Z.
using GlLatticeVector = LatticeVector<GlLatticeTag>;

/// sum_{i >= first} delta_{lambda_i} with delta_{-r} = -delta_r, delta_0 = 0.
/// `first` is 0-based.
inline BLatticeVector wt_vector(const Weight &w, std::size_t first) {
    detail::require(w.parity() == Parity::Integer, "wt_vector: weight must be integral");
    BLatticeVector v;
    for (std::size_t i = first; i < w.size(); ++i) {
        const int x = w.integer(i);
        if (x > 0)
            v.add(x, 1);
        else if (x < 0)
            v.add(-x, -1);
    }
    return v;
}

inline BLatticeVector wt(const Weight &w) { return wt_vector(w, 0); }

/// v >= u in the b_infinity root order: v - u is a non-negative integral
/// combination of -delta_1 and delta_r - delta_{r+1}.
///
/// Write v - u = a_0(-delta_1) + sum_{t>=1} a_t(delta_t - delta_{t+1}). Reading
/// off the coefficient c_t of delta_t gives c_t = a_t - a_{t-1}, so
/// a_t = a_0 + sum_{k<=t} c_k. Finiteness forces a_t = 0 for large t, hence
/// a_0 = -sum_k c_k and a_t = -sum_{k>t} c_k. The combination is non-negative
/// iff every tail sum sum_{k>t} c_k (t >= 0) is <= 0.
inline bool b_dominates(const BLatticeVector &v, const BLatticeVector &u) {
    const BLatticeVector diff = v - u;
    long tail = 0;
    for (auto it = diff.coeffs().rbegin(); it != diff.coeffs().rend(); ++it) {
        tail += it->second;
        if (tail > 0)
            return false;
    }
    return true;
}

/// a >= b in the order defined by wt and wt_s. Half-integer weights are
/// compared through sharp.
inline bool succeq(const Weight &a, const Weight &b) {
    detail::require(a.size() == b.size(), "succeq: weights of different rank");
    detail::require(a.parity() == b.parity(), "succeq: weights of different parity");
    if (a.is_half_integer())
        return succeq(sharp(a), sharp(b));
    if (wt(a) != wt(b))
        return false;
    for (std::size_t s = 0; s < a.size(); ++s)
        if (!b_dominates(wt_vector(a, s), wt_vector(b, s)))
            return false;
    return true;
}

/// wt_s(f) = sum_{i >= s} sgn(i) gamma_{f(i)}, s given as a storage position
/// (0 is J(p|q)'s first element -p).
inline GlLatticeVector gl_wt_vector(const SignedSequence &f, std::size_t first) {
    GlLatticeVector v;
    for (std::size_t k = first; k < f.size(); ++k)
        v.add(f.values()[k], f.index_at(k) < 0 ? -1 : 1);
    return v;
}

/// v >= u in the gl_infinity root order: v - u is a non-negative integral
/// combination of gamma_r - gamma_{r+1}.
///
/// With v - u = sum_r a_r(gamma_r - gamma_{r+1}) the coefficient of gamma_r is
/// c_r = a_r - a_{r-1}, so a_r = sum_{k<=r} c_k. Non-negativity means every
/// prefix sum is >= 0; finiteness means the total is 0.
inline bool gl_dominates(const GlLatticeVector &v, const GlLatticeVector &u) {
    const GlLatticeVector diff = v - u;
    long prefix = 0;
    for (auto [r, c] : diff.coeffs()) {
        prefix += c;
        if (prefix < 0)
            return false;
    }
    return prefix == 0;
}

inline bool succeq_a(const SignedSequence &f, const SignedSequence &g) {
    detail::require(f.p() == g.p() && f.q() == g.q(), "succeq_a: sequences in different Z^{p|q}");
    if (gl_wt_vector(f, 0) != gl_wt_vector(g, 0))
        return false;
    for (std::size_t s = 0; s < f.size(); ++s)
        if (!gl_dominates(gl_wt_vector(f, s), gl_wt_vector(g, s)))
            return false;
    return true;
}

namespace detail {

inline long abs_sum(const Weight &w) {
    long s = 0;
    for (int d : w.doubled())
        s += std::abs(d);
    return s;
}

/// Weights reachable from w by one chain step nu -> nu + sign*(eps_i - eps_j),
/// i < j, nu_i + nu_j = 0, staying weakly decreasing.
inline std::vector<Weight> chain_neighbours(const Weight &w, int sign) {
    std::vector<Weight> out;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (w.doubled(i) + w.doubled(j) != 0)
                continue;
            std::vector<int> d(w.doubled().begin(), w.doubled().end());
            d[i] += 2 * sign;
            d[j] -= 2 * sign;
            Weight next = Weight::from_doubled(std::move(d));
            if (is_g0_dominant(next))
                out.push_back(std::move(next));
        }
    return out;
}

} // namespace detail

/// Chain order a >= b, decided by breadth-first search upward from b.
///
/// A step nu -> nu + (eps_i - eps_j) with i < j requires nu_i + nu_j = 0 and
/// must stay weakly decreasing. Each step raises sum |nu_k| by 2, so the
/// search is cut off at sum |a_k|.
inline bool succ_chain_oracle(const Weight &a, const Weight &b) {
    detail::require(a.size() == b.size() && a.parity() == b.parity(),
                    "succ_chain_oracle: weights must share rank and parity");
    detail::require(is_g0_dominant(a) && is_g0_dominant(b),
                    "succ_chain_oracle: weights must be weakly decreasing");
    const long limit = detail::abs_sum(a);
    std::set<Weight> seen{b};
    std::deque<Weight> queue{b};
    while (!queue.empty()) {
        Weight cur = std::move(queue.front());
        queue.pop_front();
        if (cur == a)
            return true;
        const bool nonzero = all_nonzero(cur);
        for (Weight &next : detail::chain_neighbours(cur, +1)) {
            // increasing-subset property of weights without zero entries
            if (nonzero && !all_nonzero(next))
                throw InternalError("chain step left the weights without zero entries");
            if (detail::abs_sum(next) > limit || !seen.insert(next).second)
                continue;
            queue.push_back(std::move(next));
        }
    }
    return false;
}

/// All dominant mu with w >= mu in the chain order. The downward search runs
/// through weakly decreasing (not necessarily dominant) weights and
/// terminates since each step lowers sum |nu_k| by 2. Sorted ascending.
inline std::vector<Weight> lower_interval(const Weight &w) {
    detail::require(is_dominant(w), "lower_interval: weight must be dominant");
    std::set<Weight> seen{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        Weight cur = std::move(queue.front());
        queue.pop_front();
        for (Weight &next : detail::chain_neighbours(cur, -1))
            if (seen.insert(next).second)
                queue.push_back(std::move(next));
    }
    std::vector<Weight> out;
    for (const Weight &v : seen)
        if (is_dominant(v))
            out.push_back(v);
    return out;
}

} // namespace qchar
