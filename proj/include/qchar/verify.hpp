#pragma once

// Cross-checks between the independent routes of the library: the three
// orders, the a/b transition matrices, Euler versus irreducible characters,
// and the closed-form characters. Used by `qchar verify` and the acceptance
// test binary.

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "euler.hpp"
#include "kl.hpp"
#include "kw.hpp"
#include "laurent.hpp"
#include "order.hpp"
#include "weights.hpp"

namespace qchar::verify {

struct Config {
    std::size_t max_n = 4;
    int order_bound = 3;       ///< integer entries in [-b, b] for the order checks
    int sharp_bound2 = 7;      ///< |entries| <= sharp_bound2/2 for the sharp/natural check
    int character_bound2 = 9;  ///< |entries| <= character_bound2/2 for the character checks
};

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
};

/// Weakly decreasing sequences of length n drawn from `values` (given in
/// half units, sorted descending); strict when `strict` is set.
inline std::vector<Weight> decreasing_weights(std::size_t n, const std::vector<int> &values, bool strict) {
    std::vector<Weight> out;
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (cur.size() == n) {
            out.push_back(Weight::from_doubled(cur));
            return;
        }
        for (std::size_t k = from; k < values.size(); ++k) {
            cur.push_back(values[k]);
            rec(strict ? k + 1 : k);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Weakly decreasing integer weights with entries in [-b, b].
inline std::vector<Weight> integer_g0_dominant(std::size_t n, int b, bool skip_zero = false) {
    std::vector<int> values;
    for (int v = b; v >= -b; --v)
        if (!(skip_zero && v == 0))
            values.push_back(2 * v);
    return decreasing_weights(n, values, false);
}

/// Half-integer dominant weights with |entries| <= bound2/2.
inline std::vector<Weight> half_integer_dominant(std::size_t n, int bound2) {
    std::vector<int> values;
    for (int v = bound2 % 2 ? bound2 : bound2 - 1; v >= -bound2; v -= 2)
        values.push_back(v);
    return decreasing_weights(n, values, true);
}

inline bool is_w_symmetric(const LaurentPoly &f) {
    std::vector<std::size_t> perm(f.nvars());
    for (std::size_t k = 0; k + 1 < f.nvars(); ++k) {
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = i;
        std::swap(perm[k], perm[k + 1]);
        if (permute(f, perm) != f)
            return false;
    }
    return true;
}

inline bool has_nonnegative_coefficients(const LaurentPoly &f) {
    for (const auto &[e, c] : f.terms())
        if (c < 0)
            return false;
    return true;
}

namespace detail {

struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;

    void record(bool ok, const std::function<std::string()> &describe) {
        ++checked;
        if (!ok && failed++ == 0)
            first_failure = describe();
    }

    std::string summary(const std::string &unit) const {
        std::string s = std::to_string(checked) + " " + unit + ", " + std::to_string(failed) + " failed";
        if (failed)
            s += "; first: " + first_failure;
        return s;
    }
};

template <class F> CriterionResult timed(int id, std::string name, F &&body) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r{id, std::move(name), false, "", 0.0};
    try {
        auto [ok, detail] = body();
        r.passed = ok;
        r.detail = std::move(detail);
    } catch (const std::exception &e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline bool same_natural_block(const Weight &a, const Weight &b) {
    return classify(a).p_index == classify(b).p_index;
}

} // namespace detail

/// Chain order and wt order agree on weakly decreasing integer weights.
inline CriterionResult order_equivalence(const Config &cfg) {
    return detail::timed(1, "order equivalence: chain search vs wt_s order", [&] {
        detail::Tally t;
        for (std::size_t n = 1; n <= cfg.max_n; ++n) {
            const auto ws = integer_g0_dominant(n, cfg.order_bound);
            for (const Weight &a : ws)
                for (const Weight &b : ws)
                    t.record(succ_chain_oracle(a, b) == succeq(a, b),
                             [&] { return a.to_string() + " vs " + b.to_string(); });
        }
        return std::pair{t.failed == 0, t.summary("pairs")};
    });
}

/// Chain order on half-integer dominant weights agrees with the order after
/// sharp and with the gl order after natural.
inline CriterionResult sharp_compatibility(const Config &cfg) {
    return detail::timed(2, "sharp/natural compatibility of the orders", [&] {
        detail::Tally t;
        for (std::size_t n = 1; n <= cfg.max_n; ++n) {
            const auto ws = half_integer_dominant(n, cfg.sharp_bound2);
            for (const Weight &a : ws)
                for (const Weight &b : ws) {
                    const bool chain = succ_chain_oracle(a, b);
                    const bool via_sharp = succeq(sharp(a), sharp(b));
                    const bool via_natural = detail::same_natural_block(sharp(a), sharp(b)) &&
                                             succeq_a(natural(a), natural(b));
                    t.record(chain == via_sharp && chain == via_natural,
                             [&] { return a.to_string() + " vs " + b.to_string(); });
                }
        }
        return std::pair{t.failed == 0, t.summary("pairs")};
    });
}

/// wt order agrees with the gl order after flat on weights without zeros.
inline CriterionResult flat_compatibility(const Config &cfg) {
    return detail::timed(3, "flat compatibility: wt_s order vs gl order", [&] {
        detail::Tally t;
        for (std::size_t n = 1; n <= cfg.max_n; ++n) {
            const auto ws = integer_g0_dominant(n, cfg.order_bound, true);
            for (const Weight &a : ws)
                for (const Weight &b : ws) {
                    const bool gl = detail::same_natural_block(a, b) && succeq_a(flat(a), flat(b));
                    t.record(succeq(a, b) == gl, [&] { return a.to_string() + " vs " + b.to_string(); });
                }
        }
        return std::pair{t.failed == 0, t.summary("pairs")};
    });
}

/// Shared state for the character criteria so each character is built once.
class CharacterChecks {
  public:
    explicit CharacterChecks(const Config &cfg) : cfg_(cfg) {}

    std::vector<Weight> weights(std::size_t n) const { return half_integer_dominant(n, cfg_.character_bound2); }

    /// sum_nu a_{lambda nu} b_{nu mu} = delta_{lambda mu}.
    CriterionResult inversion() {
        return guarded(4, "inversion identity sum_nu a b = delta", [&] {
            detail::Tally t;
            for (std::size_t n = 1; n <= cfg_.max_n; ++n) {
                const auto ws = weights(n);
                for (const Weight &lam : ws) {
                    const auto a = decompose_euler(lam);
                    for (const Weight &mu : ws) {
                        long sum = 0;
                        for (const TransitionEntry &e : a)
                            sum += e.coeff * b_coeff(e.mu, mu);
                        t.record(sum == (lam == mu ? 1 : 0), [&] {
                            return lam.to_string() + " / " + mu.to_string() + " gives " + std::to_string(sum);
                        });
                    }
                }
            }
            return std::pair{t.failed == 0, t.summary("pairs")};
        });
    }

    /// ch E(lambda) = sum_mu a_{lambda mu} ch L(mu).
    CriterionResult consistency() {
        return guarded(5, "character consistency ch E = sum a ch L", [&] {
            detail::Tally t;
            for (std::size_t n = 1; n <= cfg_.max_n; ++n)
                for (const Weight &lam : weights(n)) {
                    LaurentPoly sum(n);
                    for (const TransitionEntry &e : decompose_euler(lam))
                        sum += table_.irreducible(e.mu) * Integer(e.coeff);
                    t.record(sum == table_.euler(lam), [&] { return lam.to_string(); });
                }
            return std::pair{t.failed == 0, t.summary("weights")};
        });
    }

    /// ch L is W-symmetric, non-negative, has 2^{ceil(n/2)} at x^lambda, and
    /// equals ch E for typical lambda.
    CriterionResult sanity() {
        return guarded(6, "irreducible character sanity", [&] {
            detail::Tally t;
            for (std::size_t n = 1; n <= cfg_.max_n; ++n) {
                const Integer top = Integer(1) << ((n + 1) / 2);
                for (const Weight &lam : weights(n)) {
                    const LaurentPoly ch = table_.irreducible(lam);
                    const Exponent e(lam.doubled().begin(), lam.doubled().end());
                    bool ok = is_w_symmetric(ch) && has_nonnegative_coefficients(ch) && ch.coeff(e) == top;
                    if (is_typical(lam))
                        ok = ok && ch == table_.euler(lam);
                    t.record(ok, [&] { return lam.to_string(); });
                }
            }
            return std::pair{t.failed == 0, t.summary("weights")};
        });
    }

    /// Closed forms equal ch L on totally connected and totally disconnected weights.
    CriterionResult kac_wakimoto() {
        return guarded(7, "closed-form characters equal ch L", [&] {
            detail::Tally t;
            std::size_t connected = 0, disconnected = 0, mixed = 0;
            for (std::size_t n = 1; n <= cfg_.max_n; ++n)
                for (const Weight &lam : weights(n)) {
                    const Connectivity c = connectivity(lam);
                    if (c.mode == ConnectivityMode::Typical)
                        continue;
                    if (c.mode == ConnectivityMode::Mixed) {
                        ++mixed;
                        continue;
                    }
                    (c.mode == ConnectivityMode::TotallyConnected ? connected : disconnected)++;
                    t.record(kw_character(lam).character == table_.irreducible(lam),
                             [&] { return lam.to_string(); });
                }
            std::string detail = t.summary("weights") + " (" + std::to_string(connected) + " connected, " +
                                 std::to_string(disconnected) + " disconnected, " + std::to_string(mixed) +
                                 " mixed skipped)";
            return std::pair{t.failed == 0, detail};
        });
    }

    /// No exact division failed while running the character criteria.
    CriterionResult exactness() const {
        CriterionResult r{8, "no inexact division in criteria 4-7", non_exact_ == 0, "", 0.0};
        r.detail = std::to_string(non_exact_) + " inexact divisions" +
                   (non_exact_ ? "; first: " + first_non_exact_ : std::string());
        return r;
    }

  private:
    template <class F> CriterionResult guarded(int id, std::string name, F &&body) {
        return detail::timed(id, std::move(name), [&] {
            try {
                return body();
            } catch (const NonExactDivision &e) {
                if (non_exact_++ == 0)
                    first_non_exact_ = e.what();
                throw;
            }
        });
    }

    Config cfg_;
    CharacterTable table_;
    std::size_t non_exact_ = 0;
    std::string first_non_exact_;
};

namespace detail {

inline LaurentPoly poly2(std::initializer_list<std::pair<std::pair<int, int>, int>> terms) {
    LaurentPoly p(2);
    for (const auto &[e, c] : terms)
        p.add_term({e.first, e.second}, c);
    return p;
}

} // namespace detail

/// Frozen small cases, derived by hand and checked with an independent
/// computer-algebra evaluation of the defining formulas.
inline CriterionResult golden(const Config &) {
    return detail::timed(9, "golden regressions", [] {
        std::vector<std::string> failures;
        const Weight half = Weight::from_doubled({1, -1});
        const Weight three_halves = Weight::from_doubled({3, -3});

        if (euler_character(half) != detail::poly2({{{1, -1}, 2}, {{-1, 1}, 2}}))
            failures.push_back("ch E(1/2,-1/2)");
        if (euler_character(three_halves) !=
            detail::poly2({{{3, -3}, 2}, {{1, -1}, 4}, {{-1, 1}, 4}, {{-3, 3}, 2}}))
            failures.push_back("ch E(3/2,-3/2)");
        const LaurentPoly irr = irreducible_character(three_halves);
        if (irr != detail::poly2({{{3, -3}, 2}, {{1, -1}, 2}, {{-1, 1}, 2}, {{-3, 3}, 2}}) ||
            specialize_ones(irr) != 8)
            failures.push_back("ch L(3/2,-3/2)");

        std::vector<TransitionEntry> expected{{Weight::from_doubled({3, 1, -1}), 1, std::vector<int>{1}},
                                              {Weight::from_doubled({5, 3, -5}), 1, std::vector<int>{0}}};
        if (decompose_euler(Weight::from_doubled({5, 3, -5})) != expected)
            failures.push_back("decomposition of E(5/2,3/2,-5/2)");

        std::string detail = failures.empty() ? "4 cases match" : "mismatch:";
        for (const std::string &f : failures)
            detail += " " + f;
        return std::pair{failures.empty(), detail};
    });
}

/// Run every criterion in order.
inline std::vector<CriterionResult> run_all(const Config &cfg,
                                            const std::function<void(const CriterionResult &)> &on_result = {}) {
    std::vector<CriterionResult> results;
    auto push = [&](CriterionResult r) {
        if (on_result)
            on_result(r);
        results.push_back(std::move(r));
    };
    push(order_equivalence(cfg));
    push(sharp_compatibility(cfg));
    push(flat_compatibility(cfg));
    CharacterChecks chars(cfg);
    push(chars.inversion());
    push(chars.consistency());
    push(chars.sanity());
    push(chars.kac_wakimoto());
    push(chars.exactness());
    push(golden(cfg));
    return results;
}

inline std::string format_line(const CriterionResult &r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + ". " + r.name + ": " +
           r.detail + " (" + secs + " s)";
}

} // namespace qchar::verify
