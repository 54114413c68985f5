#pragma once

// Weights of q(n): classification, the sharp/flat/natural maps, dominant
// conjugation, atypicality and the connectivity predicates used by the
// closed-form character formulas.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qchar {

enum class Parity { Integer, HalfInteger };

/// A weight sum_i lambda_i eps_i, stored in half units: doubled(i) == 2*lambda_i.
///
/// All entries share a parity, so a weight is either integral or lies in
/// 1/2 + Z^n. Ordering is lexicographic on the doubled entries.
class Weight {
  public:
    static Weight from_doubled(std::vector<int> doubled) {
        detail::require(!doubled.empty(), "weight must have at least one entry");
        const bool odd = (doubled.front() & 1) != 0;
        for (int d : doubled)
            detail::require(((d & 1) != 0) == odd,
                            "weight entries must all be integers or all be half-integers");
        return Weight(std::move(doubled));
    }

    /// Integer weight from plain integer entries.
    static Weight from_integers(std::span<const int> values) {
        std::vector<int> d(values.begin(), values.end());
        for (int &x : d)
            x *= 2;
        return from_doubled(std::move(d));
    }
    static Weight from_integers(std::initializer_list<int> values) {
        return from_integers(std::span<const int>(values.begin(), values.size()));
    }

    std::size_t size() const { return doubled_.size(); }
    int doubled(std::size_t i) const { return doubled_[i]; }
    std::span<const int> doubled() const { return doubled_; }

    Parity parity() const {
        return (doubled_.front() & 1) != 0 ? Parity::HalfInteger : Parity::Integer;
    }
    bool is_half_integer() const { return parity() == Parity::HalfInteger; }

    /// Entry i of an integer weight.
    int integer(std::size_t i) const {
        if (parity() != Parity::Integer)
            throw DomainError("integer entry requested from a half-integer weight");
        return doubled_[i] / 2;
    }

    /// "5/2,3/2,-5/2" or "2,0,-1".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < doubled_.size(); ++i) {
            if (i)
                out += ',';
            const int d = doubled_[i];
            out += (d & 1) ? std::to_string(d) + "/2" : std::to_string(d / 2);
        }
        return out;
    }

    friend bool operator==(const Weight &, const Weight &) = default;
    friend auto operator<=>(const Weight &, const Weight &) = default;

  private:
    explicit Weight(std::vector<int> doubled) : doubled_(std::move(doubled)) {}
    std::vector<int> doubled_;
};

struct WeightClass {
    Parity parity;
    bool g0_dominant; ///< weakly decreasing
    bool dominant;    ///< weakly decreasing, and only zero may repeat
    bool all_nonzero;
    /// Number of positive entries, when g0_dominant and all entries are nonzero.
    std::optional<std::size_t> p_index;
};

inline bool is_g0_dominant(const Weight &w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w.doubled(i) < w.doubled(i + 1))
            return false;
    return true;
}

inline bool is_dominant(const Weight &w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w.doubled(i) < w.doubled(i + 1))
            return false;
        if (w.doubled(i) == w.doubled(i + 1) && w.doubled(i) != 0)
            return false;
    }
    return true;
}

inline bool all_nonzero(const Weight &w) {
    return std::ranges::none_of(w.doubled(), [](int d) { return d == 0; });
}

inline WeightClass classify(const Weight &w) {
    WeightClass c{w.parity(), is_g0_dominant(w), is_dominant(w), all_nonzero(w), std::nullopt};
    if (c.g0_dominant && c.all_nonzero)
        c.p_index = static_cast<std::size_t>(
            std::ranges::count_if(w.doubled(), [](int d) { return d > 0; }));
    return c;
}

/// Number of nonzero entries.
inline std::size_t ell(const Weight &w) {
    return static_cast<std::size_t>(
        std::ranges::count_if(w.doubled(), [](int d) { return d != 0; }));
}

/// Dimension 2^ceil(ell/2) of the Clifford module sitting over the highest weight.
inline std::uint64_t clifford_dim(const Weight &w) {
    return std::uint64_t{1} << ((ell(w) + 1) / 2);
}

/// lambda_i -> lambda_i + sgn(lambda_i)/2, from half-integer weights onto
/// integer weights without zero entries.
inline Weight sharp(const Weight &w) {
    detail::require(w.is_half_integer(), "sharp: weight must be half-integer");
    std::vector<int> d(w.doubled().begin(), w.doubled().end());
    for (int &x : d)
        x += x > 0 ? 1 : -1;
    return Weight::from_doubled(std::move(d));
}

inline Weight unsharp(const Weight &w) {
    detail::require(w.parity() == Parity::Integer, "unsharp: weight must be integral");
    detail::require(all_nonzero(w), "unsharp: weight has a zero entry");
    std::vector<int> d(w.doubled().begin(), w.doubled().end());
    for (int &x : d)
        x -= x > 0 ? 1 : -1;
    return Weight::from_doubled(std::move(d));
}

/// An element f of Z^{p|q}, indexed by J(p|q) = {-p,...,-1, 1,...,q}.
class SignedSequence {
  public:
    SignedSequence(std::size_t p, std::vector<int> values) : p_(p), values_(std::move(values)) {
        detail::require(p_ <= values_.size(), "signed sequence: p exceeds length");
    }

    std::size_t p() const { return p_; }
    std::size_t q() const { return values_.size() - p_; }
    std::size_t size() const { return values_.size(); }

    /// f(j) for j in J(p|q).
    int operator()(int j) const { return values_.at(position(j)); }

    /// Values in the order f(-p),...,f(-1), f(1),...,f(q).
    std::span<const int> values() const { return values_; }

    /// Index of J(p|q) at storage position k.
    int index_at(std::size_t k) const {
        return k < p_ ? static_cast<int>(k) - static_cast<int>(p_)
                      : static_cast<int>(k - p_) + 1;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t k = 0; k < values_.size(); ++k) {
            if (k == p_)
                out += p_ == 0 ? "| " : " | ";
            else if (k)
                out += ", ";
            out += std::to_string(values_[k]);
        }
        if (p_ == values_.size())
            out += " |";
        return out + ")";
    }

    friend bool operator==(const SignedSequence &, const SignedSequence &) = default;

  private:
    std::size_t position(int j) const {
        if (j < 0 && static_cast<std::size_t>(-j) <= p_)
            return p_ - static_cast<std::size_t>(-j);
        if (j > 0 && static_cast<std::size_t>(j) <= q())
            return p_ + static_cast<std::size_t>(j) - 1;
        throw DomainError("index outside J(p|q)");
    }

    std::size_t p_;
    std::vector<int> values_;
};

/// (lambda_1..lambda_n) -> (-lambda_1,...,-lambda_p | lambda_{p+1},...,lambda_n).
inline SignedSequence flat(const Weight &w) {
    const WeightClass c = classify(w);
    detail::require(c.parity == Parity::Integer && c.p_index.has_value(),
                    "flat: weight must be integral, weakly decreasing and without zeros");
    const std::size_t p = *c.p_index;
    std::vector<int> values(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        values[i] = i < p ? -w.integer(i) : w.integer(i);
    return SignedSequence(p, std::move(values));
}

/// flat(sharp(w)) for a weakly decreasing half-integer weight.
inline SignedSequence natural(const Weight &w) {
    detail::require(w.is_half_integer() && is_g0_dominant(w),
                    "natural: weight must be half-integer and weakly decreasing");
    return flat(sharp(w));
}

struct Conjugate {
    Weight weight;
    int sign; ///< sign of the sorting permutation
};

/// The dominant weight W-conjugate to w together with the sign of the sorting
/// permutation, or nullopt when a nonzero value repeats (no dominant conjugate).
inline std::optional<Conjugate> dominant_conjugate(const Weight &w) {
    std::vector<int> d(w.doubled().begin(), w.doubled().end());
    int sign = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[i] == d[j] && d[i] != 0)
                return std::nullopt;
            if (d[i] < d[j])
                sign = -sign;
        }
    std::ranges::sort(d, std::greater<>{});
    return Conjugate{Weight::from_doubled(std::move(d)), sign};
}

inline bool is_regular(const Weight &w) { return dominant_conjugate(w).has_value(); }

/// Atypical pairs (i_s, j_s), 0-based, i_1 < ... < i_r < j_r < ... < j_1.
struct AtypicalStructure {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    std::size_t degree() const { return pairs.size(); }
    bool typical() const { return pairs.empty(); }
};

inline AtypicalStructure atypical_structure(const Weight &w) {
    // With zeros present the pairs are not unique and the degree needs a
    // maximal orthogonal family; that case is never needed here.
    detail::require(is_dominant(w) && all_nonzero(w),
                    "atypical_structure: weight must be dominant with nonzero entries");
    AtypicalStructure s;
    for (std::size_t i = 0; i < w.size() && w.doubled(i) > 0; ++i)
        for (std::size_t j = w.size(); j-- > i + 1;)
            if (w.doubled(i) + w.doubled(j) == 0) {
                s.pairs.emplace_back(i, j);
                break;
            }
    return s;
}

inline bool is_typical(const Weight &w) { return atypical_structure(w).typical(); }

enum class ConnectivityMode { Typical, TotallyConnected, TotallyDisconnected, Mixed };

inline const char *to_string(ConnectivityMode m) {
    switch (m) {
    case ConnectivityMode::Typical:
        return "typical";
    case ConnectivityMode::TotallyConnected:
        return "totally_connected";
    case ConnectivityMode::TotallyDisconnected:
        return "totally_disconnected";
    case ConnectivityMode::Mixed:
        return "mixed";
    }
    return "?";
}

struct Connectivity {
    ConnectivityMode mode;
    /// Both predicates hold (always when r <= 1). mode is then TotallyConnected.
    bool both = false;
    /// lambda with every atypical pair replaced by the outermost one's values.
    Weight uparrow;
    /// |uparrow - lambda| measured in the atypical roots.
    int distance = 0;
};

inline Connectivity connectivity(const Weight &w) {
    detail::require(w.is_half_integer() && is_dominant(w),
                    "connectivity: weight must be half-integer dominant");
    const AtypicalStructure s = atypical_structure(w);
    if (s.typical())
        return {ConnectivityMode::Typical, false, w, 0};

    std::set<int> magnitudes;
    for (int d : w.doubled())
        magnitudes.insert(d < 0 ? -d : d);

    bool connected = true;
    bool disconnected = true;
    for (std::size_t k = 0; k + 1 < s.pairs.size(); ++k) {
        const int hi = w.doubled(s.pairs[k].first);
        const int lo = w.doubled(s.pairs[k + 1].first);
        bool all_present = true;
        bool some_missing = false;
        // half-integers t strictly between, in half units
        for (int t = lo + 2; t < hi; t += 2) {
            if (magnitudes.contains(t))
                continue;
            all_present = false;
            some_missing = true;
        }
        connected = connected && all_present;
        disconnected = disconnected && some_missing;
    }

    std::vector<int> up(w.doubled().begin(), w.doubled().end());
    const auto [i1, j1] = s.pairs.front();
    int distance2 = 0;
    for (std::size_t k = 1; k < s.pairs.size(); ++k) {
        const auto [i, j] = s.pairs[k];
        distance2 += up[i1] - up[i];
        up[i] = up[i1];
        up[j] = up[j1];
    }

    Connectivity c{ConnectivityMode::Mixed, false, Weight::from_doubled(std::move(up)),
                   distance2 / 2};
    if (connected && disconnected) {
        c.mode = ConnectivityMode::TotallyConnected;
        c.both = true;
    } else if (connected) {
        c.mode = ConnectivityMode::TotallyConnected;
    } else if (disconnected) {
        c.mode = ConnectivityMode::TotallyDisconnected;
    }
    return c;
}

} // namespace qchar
