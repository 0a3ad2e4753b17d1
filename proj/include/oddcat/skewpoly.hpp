/**
 * @file skewpoly.hpp
 * @brief Skew polynomials in n variables (x_i x_j = -x_j x_i for i != j),
 *        the signed symmetric group action, and odd divided differences.
 *
 * Monomials are kept normal-ordered as x_1^{a_1}...x_n^{a_n}. Reordering a
 * product x^a * x^b into normal order costs the sign (-1)^{sum_{i>j} a_i b_j};
 * squares are central.
 */
#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "grading.hpp"
#include "perm.hpp"

namespace oddcat {

using Exponents = std::vector<int>;

inline int exp_total(const Exponents& a) {
    int t = 0;
    for (int e : a) t += e;
    return t;
}

/** Sign for normal-ordering x^a * x^b: (-1)^{sum_{i>j} a_i b_j}. */
inline int reorder_sign(const Exponents& a, const Exponents& b) {
    long long crossings = 0;
    long long suffix = 0;  // sum of a_i for i > j while scanning j downward
    int n = static_cast<int>(a.size());
    for (int j = n - 1; j >= 0; --j) {
        crossings += suffix * b[j];
        suffix += a[j];
    }
    return crossings % 2 == 0 ? 1 : -1;
}

class SkewPoly {
public:
    SkewPoly() : n_(0) {}
    explicit SkewPoly(int n) : n_(n) {}

    static SkewPoly unit(int n) { return monomial(n, Exponents(n, 0), 1); }
    static SkewPoly variable(int n, int i) {  // x_i, 1-based
        Exponents e(n, 0);
        e.at(i - 1) = 1;
        return monomial(n, e, 1);
    }
    static SkewPoly monomial(int n, Exponents e, Int c) {
        SkewPoly p(n);
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Int>& terms() const { return terms_; }
    Int coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    SkewPoly operator+(const SkewPoly& o) const {
        check_same(o);
        SkewPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.bump(e, c);
        return r;
    }
    SkewPoly operator-() const {
        SkewPoly r(n_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    SkewPoly operator-(const SkewPoly& o) const { return *this + (-o); }
    SkewPoly operator*(Int c) const {
        SkewPoly r(n_);
        if (c == 0) return r;
        for (const auto& [e, v] : terms_) r.terms_[e] = checked_mul(v, c);
        return r;
    }
    SkewPoly operator*(const SkewPoly& o) const {
        check_same(o);
        SkewPoly r(n_);
        for (const auto& [a, ca] : terms_) {
            for (const auto& [b, cb] : o.terms_) {
                Exponents e(n_);
                for (int i = 0; i < n_; ++i) e[i] = a[i] + b[i];
                r.bump(std::move(e), checked_mul(checked_mul(ca, cb), reorder_sign(a, b)));
            }
        }
        return r;
    }
    bool operator==(const SkewPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            (void)c;
            int t = exp_total(e);
            if (d < 0) d = t;
            else if (d != t) return false;
        }
        return true;
    }
    /** Degree(2*letters, letters mod 2) of a homogeneous element. */
    Degree degree() const {
        if (terms_.empty()) return Degree(0, 0);
        int t = exp_total(terms_.begin()->first);
        return Degree(2 * t, t % 2);
    }
    SkewPoly component(int zdeg) const {
        SkewPoly r(n_);
        for (const auto& [e, c] : terms_)
            if (2 * exp_total(e) == zdeg) r.terms_[e] = c;
        return r;
    }
    SkewPoly parity_component(int p) const {
        SkewPoly r(n_);
        for (const auto& [e, c] : terms_)
            if (exp_total(e) % 2 == p) r.terms_[e] = c;
        return r;
    }
    int max_zdegree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            (void)c;
            d = std::max(d, 2 * exp_total(e));
        }
        return d;
    }

    /** Embed into m variables sending x_i to x_{i+offset} (order-preserving,
     *  so no signs). */
    SkewPoly shifted(int m, int offset) const {
        if (offset + n_ > m) throw std::invalid_argument("shift out of range");
        SkewPoly r(m);
        for (const auto& [e, c] : terms_) {
            Exponents f(m, 0);
            for (int i = 0; i < n_; ++i) f[i + offset] = e[i];
            r.terms_[std::move(f)] = c;
        }
        return r;
    }

    /** View in m >= n variables (append zero exponents). */
    SkewPoly widened(int m) const {
        if (m < n_) throw std::invalid_argument("cannot shrink variable count");
        SkewPoly r(m);
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            f.resize(m, 0);
            r.terms_[std::move(f)] = c;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << (c >= 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Int a = c < 0 ? -c : c;
            bool any = false;
            for (int i = 0; i < n_; ++i) any = any || e[i] > 0;
            if (a != 1 || !any) os << a;
            for (int i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                os << "x" << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

    void bump(Exponents e, Int c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[std::move(e)] = c;
        } else {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    void check_same(const SkewPoly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    }

    int n_;
    std::map<Exponents, Int> terms_;
};

inline SkewPoly operator*(Int c, const SkewPoly& p) { return p * c; }

/**
 * Signed symmetric group action: w(x_i) = (-1)^{l(w)} x_{w(i)},
 * multiplicative on products.
 */
inline SkewPoly sym_act(const Permutation& w, const SkewPoly& f) {
    int n = f.n();
    if (w.n() != n) throw std::invalid_argument("permutation size mismatch");
    int lw = w.length();
    SkewPoly r(n);
    for (const auto& [a, c] : f.terms()) {
        int letters = exp_total(a);
        // each letter x_i maps to (-1)^{l(w)} x_{w(i)}; then re-normal-order
        // the word x_{w(1)}^{a_1}...x_{w(n)}^{a_n}
        long long sign_exp = static_cast<long long>(lw) * letters;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (w.one_line()[i] > w.one_line()[j])
                    sign_exp += static_cast<long long>(a[i]) * a[j];
        Exponents e(n, 0);
        for (int i = 0; i < n; ++i) e[w.one_line()[i]] = a[i];
        r.bump(std::move(e), sign_exp % 2 == 0 ? c : -c);
    }
    return r;
}

namespace detail {

// partial(u^p v^q) for the two interacting variables u = x_i, v = x_{i+1},
// as a polynomial in (u,v), computed by the twisted Leibniz recursion
//   partial(u f) = f|... anchored at partial(u) = partial(v) = 1,
//   s(u) = -v, s(v) = -u.
// Returned as a map (exp_u, exp_v) -> coeff.
inline const std::map<std::pair<int, int>, Int>& dd_two_var(int p, int q) {
    static std::map<std::pair<int, int>, std::map<std::pair<int, int>, Int>> memo;
    static std::recursive_mutex mtx;
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto key = std::make_pair(p, q);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::map<std::pair<int, int>, Int> out;
    auto bump = [&out](int a, int b, Int c) {
        if (c == 0) return;
        auto& slot = out[{a, b}];
        slot = checked_add(slot, c);
        if (slot == 0) out.erase({a, b});
    };
    if (p > 0) {
        // partial(u^p v^q) = partial(u) u^{p-1} v^q + s(u) partial(u^{p-1} v^q)
        //                  = u^{p-1} v^q - v * partial(u^{p-1} v^q)
        bump(p - 1, q, 1);
        for (const auto& [ab, c] : dd_two_var(p - 1, q)) {
            // v * u^a v^b = (-1)^a u^a v^{b+1}
            bump(ab.first, ab.second + 1, (ab.first % 2 == 0 ? -c : c));
        }
    } else if (q > 0) {
        // partial(v^q) = v^{q-1} - u * partial(v^{q-1})
        bump(0, q - 1, 1);
        for (const auto& [ab, c] : dd_two_var(0, q - 1)) bump(ab.first + 1, ab.second, -c);
    }
    // p == q == 0: partial(1) = 0
    return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace detail

/**
 * Odd divided difference via the twisted Leibniz rule. Lowers Z-degree by 2
 * and flips parity.
 */
inline SkewPoly divided_difference(int i, const SkewPoly& f) {
    int n = f.n();
    if (i < 1 || i > n - 1) throw std::invalid_argument("strand index out of range");
    SkewPoly r(n);
    for (const auto& [a, c] : f.terms()) {
        int prefix = 0;
        for (int t = 0; t < i - 1; ++t) prefix += a[t];
        Int base = (prefix % 2 == 0) ? c : -c;
        for (const auto& [pq, coef] : detail::dd_two_var(a[i - 1], a[i])) {
            Exponents e = a;
            e[i - 1] = pq.first;
            e[i] = pq.second;
            r.bump(std::move(e), checked_mul(base, coef));
        }
    }
    return r;
}

/**
 * Odd divided difference through the closed formula
 *   ((x_{i+1}-x_i) f - s_i(f)(x_{i+1}-x_i)) / (x_{i+1}^2 - x_i^2),
 * with the division performed exactly against the central denominator.
 * Throws if the division leaves a remainder (that would be a bug, not bad
 * input).
 */
inline SkewPoly divided_difference_closed(int i, const SkewPoly& f) {
    int n = f.n();
    if (i < 1 || i > n - 1) throw std::invalid_argument("strand index out of range");
    SkewPoly xi = SkewPoly::variable(n, i), xj = SkewPoly::variable(n, i + 1);
    SkewPoly d = xj - xi;
    SkewPoly num = d * f - sym_act(Permutation::transposition(n, i), f) * d;

    // divide by the central element z = x_{i+1}^2 - x_i^2:
    // z * x^b = x^{b + 2 e_{i+1}} - x^{b + 2 e_i} (squares are central).
    SkewPoly quot(n);
    while (!num.is_zero()) {
        // pick the term with the largest x_i exponent (then lex-largest)
        const Exponents* pick = nullptr;
        Int pc = 0;
        for (const auto& [e, c] : num.terms()) {
            if (!pick || e[i - 1] > (*pick)[i - 1] || (e[i - 1] == (*pick)[i - 1] && e > *pick)) {
                pick = &e;
                pc = c;
            }
        }
        if ((*pick)[i - 1] < 2) throw std::logic_error("inexact division by central element");
        Exponents b = *pick;
        b[i - 1] -= 2;
        Int qc = -pc;  // the -x^{b+2e_i} branch produced this term
        quot.bump(b, qc);
        Exponents b1 = b, b2 = b;
        b1[i] += 2;
        b2[i - 1] += 2;
        num.bump(std::move(b1), -qc);
        num.bump(std::move(b2), qc);
    }
    return quot;
}

/** Composite partial_w for an explicit word, applied left to right:
 *  dd_word({i1,...,ir}, f) = partial_{i1}(partial_{i2}(...(f)...)). */
inline SkewPoly dd_word(const Word& word, const SkewPoly& f) {
    SkewPoly r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = divided_difference(*it, r);
    return r;
}

/** partial_w with the canonical reduced word of w. */
inline SkewPoly dd_perm(const Permutation& w, const SkewPoly& f) {
    return dd_word(w.canonical_word(), f);
}

}  // namespace oddcat
