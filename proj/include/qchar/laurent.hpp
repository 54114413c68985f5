#pragma once

// Exact Laurent polynomials in x_1..x_n with half-integer exponents and
// arbitrary-precision integer coefficients. x_i plays the role of e^{eps_i}.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace qchar {

using Integer = boost::multiprecision::cpp_int;

/// Exponent vector in half units: entry k is twice the exponent of x_k.
using Exponent = std::vector<int>;

class LaurentPoly {
  public:
    using TermMap = std::map<Exponent, Integer>;

    explicit LaurentPoly(std::size_t nvars) : n_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, Integer c) {
        LaurentPoly p(nvars);
        p.add_term(Exponent(nvars, 0), std::move(c));
        return p;
    }

    static LaurentPoly monomial(Exponent exp2, Integer c = 1) {
        LaurentPoly p(exp2.size());
        p.add_term(std::move(exp2), std::move(c));
        return p;
    }

    /// x_i (0-based).
    static LaurentPoly variable(std::size_t nvars, std::size_t i) {
        Exponent e(nvars, 0);
        e.at(i) = 2;
        return monomial(std::move(e));
    }

    std::size_t nvars() const { return n_; }
    const TermMap &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Integer coeff(const Exponent &exp2) const {
        auto it = terms_.find(exp2);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(Exponent exp2, Integer c) {
        if (exp2.size() != n_)
            throw DomainError("exponent length does not match variable count");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(exp2), std::move(c));
        if (!inserted && (it->second += c) == 0)
            terms_.erase(it);
    }

    LaurentPoly &operator+=(const LaurentPoly &o) {
        check_compatible(o);
        for (const auto &[e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    LaurentPoly &operator-=(const LaurentPoly &o) {
        check_compatible(o);
        for (const auto &[e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    LaurentPoly &operator*=(const Integer &s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &[e, c] : terms_)
            c *= s;
        return *this;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto &[e, c] : r.terms_)
            c = -c;
        return r;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Integer &s) { return a *= s; }
    friend LaurentPoly operator*(const Integer &s, LaurentPoly a) { return a *= s; }

    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
        a.check_compatible(b);
        LaurentPoly r(a.n_);
        Exponent e(a.n_);
        for (const auto &[ea, ca] : a.terms_)
            for (const auto &[eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < a.n_; ++k)
                    e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

    /// Human-readable form, e.g. "2*x1^(1/2)*x2^(-1/2) + 2*x1^(-1/2)*x2^(1/2)",
    /// highest exponents first.
    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Integer c = it->second;
            const bool neg = c < 0;
            if (neg)
                c = -c;
            if (it == terms_.rbegin())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string mono;
            for (std::size_t k = 0; k < n_; ++k) {
                const int d = it->first[k];
                if (d == 0)
                    continue;
                if (!mono.empty())
                    mono += '*';
                mono += "x" + std::to_string(k + 1);
                if (d != 2)
                    mono += "^" + (d % 2 ? "(" + std::to_string(d) + "/2)" : std::to_string(d / 2));
            }
            if (mono.empty())
                out += c.str();
            else if (c == 1)
                out += mono;
            else
                out += c.str() + "*" + mono;
        }
        return out;
    }

  private:
    void check_compatible(const LaurentPoly &o) const {
        if (o.n_ != n_)
            throw DomainError("Laurent polynomials in different numbers of variables");
    }

    std::size_t n_;
    TermMap terms_;
};

/// Sign of a permutation given in one-line notation.
inline int permutation_sign(std::span<const std::size_t> perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                sign = -sign;
    return sign;
}

/// Substitute x_i -> x_{perm[i]}. permute(permute(f, u), v) == permute(f, v o u).
inline LaurentPoly permute(const LaurentPoly &f, std::span<const std::size_t> perm) {
    if (perm.size() != f.nvars())
        throw DomainError("permutation size does not match variable count");
    LaurentPoly r(f.nvars());
    Exponent e(f.nvars());
    for (const auto &[exp, c] : f.terms()) {
        for (std::size_t i = 0; i < perm.size(); ++i)
            e[perm[i]] = exp[i];
        r.add_term(e, c);
    }
    return r;
}

/// sum over all permutations w of sgn(w) * w(f).
inline LaurentPoly antisymmetrize(const LaurentPoly &f) {
    std::vector<std::size_t> perm(f.nvars());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    LaurentPoly r(f.nvars());
    do {
        LaurentPoly term = permute(f, perm);
        if (permutation_sign(perm) < 0)
            r -= term;
        else
            r += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

/// Value at x_1 = ... = x_n = 1.
inline Integer specialize_ones(const LaurentPoly &f) {
    Integer s = 0;
    for (const auto &[e, c] : f.terms())
        s += c;
    return s;
}

/// Coefficient-wise division by an integer; every coefficient must be divisible.
inline LaurentPoly divide_exact(const LaurentPoly &f, const Integer &d) {
    if (d == 0)
        throw DomainError("division by zero");
    LaurentPoly r(f.nvars());
    for (const auto &[e, c] : f.terms()) {
        if (c % d != 0)
            throw NonExactDivision("coefficient " + c.str() + " is not divisible by " + d.str());
        r.add_term(e, c / d);
    }
    return r;
}

/// f / (x_i + sign * x_j), i != j, sign = +1 or -1.
///
/// Synthetic division with x_i as the principal variable. Writing f_e and q_e
/// for the coefficients of x_i^e (e in half units) in f and the quotient,
/// f = q (x_i + s x_j) gives q_{e-2} = f_e - s x_j q_e, run from the top
/// degree down. Exponents of x_i in separate residue classes mod 2 never
/// interact. The recurrence must produce zero below the lowest degree of f.
inline LaurentPoly divide_by_binomial(const LaurentPoly &f, std::size_t i, std::size_t j, int sign) {
    if (i == j || i >= f.nvars() || j >= f.nvars() || (sign != 1 && sign != -1))
        throw DomainError("divide_by_binomial: bad binomial");
    using Slice = std::map<Exponent, Integer>;
    std::map<int, Slice> by_degree;
    for (const auto &[e, c] : f.terms()) {
        Exponent rest = e;
        rest[i] = 0;
        by_degree[e[i]].emplace(std::move(rest), c);
    }

    LaurentPoly q(f.nvars());
    for (int residue : {0, 1}) {
        int top = 0, bottom = 0;
        bool any = false;
        for (const auto &[deg, slice] : by_degree) {
            if (((deg % 2) + 2) % 2 != residue)
                continue;
            if (!any)
                bottom = deg;
            top = deg;
            any = true;
        }
        if (!any)
            continue;
        Slice carry; // q_e at the current e
        for (int e = top; e >= bottom; e -= 2) {
            Slice next;
            if (auto it = by_degree.find(e); it != by_degree.end())
                next = it->second;
            for (const auto &[rest, c] : carry) {
                Exponent shifted = rest;
                shifted[j] += 2;
                auto [pos, inserted] = next.try_emplace(shifted, sign > 0 ? Integer(-c) : c);
                if (!inserted) {
                    pos->second += sign > 0 ? Integer(-c) : c;
                    if (pos->second == 0)
                        next.erase(pos);
                }
            }
            if (e - 2 < bottom) {
                if (!next.empty())
                    throw NonExactDivision("binomial division left a remainder");
                break;
            }
            for (const auto &[rest, c] : next) {
                Exponent full = rest;
                full[i] = e - 2;
                q.add_term(std::move(full), c);
            }
            carry = std::move(next);
        }
    }
    return q;
}

/// prod_{i<j} (x_i - x_j).
inline LaurentPoly vandermonde(std::size_t n) {
    LaurentPoly v = LaurentPoly::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            v *= LaurentPoly::variable(n, i) - LaurentPoly::variable(n, j);
    return v;
}

/// f / prod_{i<j} (x_i - x_j), one binomial at a time.
inline LaurentPoly divide_by_vandermonde(LaurentPoly f) {
    const std::size_t n = f.nvars();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            f = divide_by_binomial(f, i, j, -1);
    return f;
}

/// Exact quotient f / g for arbitrary nonzero g.
///
/// Long division on lexicographic leading terms. Lex order on Z^n is a group
/// order, so if f = q g the leading term of f is LT(q) LT(g) at every stage.
/// Quotient exponents are confined to the box
/// [min_k f - min_k g, max_k f - max_k g] in each variable k; a candidate
/// outside it proves that no exact quotient exists.
inline LaurentPoly exact_div(const LaurentPoly &f, const LaurentPoly &g) {
    if (g.nvars() != f.nvars())
        throw DomainError("exact_div: different numbers of variables");
    if (g.is_zero())
        throw DomainError("exact_div: division by zero");
    const std::size_t n = f.nvars();
    if (f.is_zero())
        return LaurentPoly(n);

    auto bounds = [n](const LaurentPoly &p) {
        std::vector<int> lo(n), hi(n);
        bool first = true;
        for (const auto &[e, c] : p.terms()) {
            for (std::size_t k = 0; k < n; ++k) {
                lo[k] = first ? e[k] : std::min(lo[k], e[k]);
                hi[k] = first ? e[k] : std::max(hi[k], e[k]);
            }
            first = false;
        }
        return std::pair{lo, hi};
    };
    const auto [flo, fhi] = bounds(f);
    const auto [glo, ghi] = bounds(g);

    const auto &[glead, gcoeff] = *g.terms().rbegin();
    LaurentPoly rem = f;
    LaurentPoly q(n);
    Exponent t(n);
    while (!rem.is_zero()) {
        const auto &[rlead, rcoeff] = *rem.terms().rbegin();
        for (std::size_t k = 0; k < n; ++k) {
            t[k] = rlead[k] - glead[k];
            if (t[k] < flo[k] - glo[k] || t[k] > fhi[k] - ghi[k])
                throw NonExactDivision("exact_div: quotient term out of range");
        }
        if (rcoeff % gcoeff != 0)
            throw NonExactDivision("exact_div: leading coefficient not divisible");
        const LaurentPoly term = LaurentPoly::monomial(t, rcoeff / gcoeff);
        rem -= term * g;
        q += term;
    }
    return q;
}

} // namespace qchar
