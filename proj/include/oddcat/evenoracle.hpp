/**
 * @file evenoracle.hpp
 * @brief Independent classical (even, commutative) implementations used as
 *        correctness oracles for mod-2 comparisons: ordinary polynomials,
 *        semistandard-tableau Schur polynomials, Littlewood-Richardson
 *        numbers by tableau enumeration, and even divided differences.
 *
 * Nothing here shares a code path with the odd modules; agreement between
 * the two sides is evidence, not tautology.
 */
#pragma once

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "linalg.hpp"
#include "oddsym.hpp"

namespace oddcat {

/** Commutative polynomial over Z in n variables (exponent vector -> coeff). */
class EvenPoly {
public:
    EvenPoly() : n_(0) {}
    explicit EvenPoly(int n) : n_(n) {}
    static EvenPoly unit(int n) { return monomial(n, std::vector<int>(n, 0), 1); }
    static EvenPoly variable(int n, int i) {
        std::vector<int> e(n, 0);
        e.at(i - 1) = 1;
        return monomial(n, e, 1);
    }
    static EvenPoly monomial(int n, std::vector<int> e, Int c) {
        EvenPoly p(n);
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }

    EvenPoly operator+(const EvenPoly& o) const {
        EvenPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.bump(e, c);
        return r;
    }
    EvenPoly operator-() const {
        EvenPoly r(n_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    EvenPoly operator-(const EvenPoly& o) const { return *this + (-o); }
    EvenPoly operator*(Int c) const {
        EvenPoly r(n_);
        if (c == 0) return r;
        for (const auto& [e, v] : terms_) r.terms_[e] = checked_mul(v, c);
        return r;
    }
    EvenPoly operator*(const EvenPoly& o) const {
        EvenPoly r(n_);
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) {
                std::vector<int> e(n_);
                for (int i = 0; i < n_; ++i) e[i] = a[i] + b[i];
                r.bump(std::move(e), checked_mul(ca, cb));
            }
        return r;
    }
    bool operator==(const EvenPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    void bump(std::vector<int> e, Int c) {
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
    int n_;
    std::map<std::vector<int>, Int> terms_;
};

/** Polynomial over GF(2) in commuting variables: the set of monomials present. */
class Mod2Poly {
public:
    Mod2Poly() : n_(0) {}
    explicit Mod2Poly(int n) : n_(n) {}
    static Mod2Poly from_even(const EvenPoly& p) {
        Mod2Poly r(p.n());
        for (const auto& [e, c] : p.terms())
            if (c % 2 != 0) r.toggle(e);
        return r;
    }

    int n() const { return n_; }
    bool is_zero() const { return monos_.empty(); }
    const std::set<std::vector<int>>& monomials() const { return monos_; }

    void toggle(const std::vector<int>& e) {
        auto it = monos_.find(e);
        if (it == monos_.end()) monos_.insert(e);
        else monos_.erase(it);
    }

    Mod2Poly operator+(const Mod2Poly& o) const {
        Mod2Poly r = *this;
        for (const auto& e : o.monos_) r.toggle(e);
        return r;
    }
    Mod2Poly operator*(const Mod2Poly& o) const {
        Mod2Poly r(n_);
        for (const auto& a : monos_)
            for (const auto& b : o.monos_) {
                std::vector<int> e(n_);
                for (int i = 0; i < n_; ++i) e[i] = a[i] + b[i];
                r.toggle(e);
            }
        return r;
    }
    bool operator==(const Mod2Poly& o) const { return monos_ == o.monos_; }

private:
    int n_;
    std::set<std::vector<int>> monos_;
};

/** Forget signs: skew polynomial -> GF(2) commutative polynomial. */
inline Mod2Poly reduce_mod2(const SkewPoly& f) {
    Mod2Poly r(f.n());
    for (const auto& [e, c] : f.terms())
        if (c % 2 != 0) r.toggle(e);
    return r;
}

/** Classical elementary symmetric polynomial. */
inline EvenPoly even_elementary(int k, int n) {
    if (k < 0 || k > n) return EvenPoly(n);
    EvenPoly r(n);
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == k) {
            std::vector<int> e(n, 0);
            for (int i : idx) e[i] = 1;
            r.bump(std::move(e), 1);
            return;
        }
        for (int i = from; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return r;
}

/** Classical complete homogeneous symmetric polynomial. */
inline EvenPoly even_complete(int k, int n) {
    if (k < 0) return EvenPoly(n);
    if (k == 0) return EvenPoly::unit(n);
    EvenPoly r(n);
    std::vector<int> e(n, 0);
    std::function<void(int, int)> rec = [&](int from, int rem) {
        if (rem == 0) {
            r.bump(e, 1);
            return;
        }
        if (from == n) return;
        for (int take = rem; take >= 0; --take) {
            e[from] = take;
            rec(from + 1, rem - take);
        }
        e[from] = 0;
    };
    rec(0, k);
    return r;
}

/**
 * Classical Schur polynomial by semistandard tableau enumeration: rows
 * weakly increase, columns strictly increase, entries in 1..n.
 */
inline EvenPoly even_schur(const Partition& lambda, int n) {
    if (lambda.length() > n) return EvenPoly(n);
    EvenPoly r(n);
    std::vector<std::vector<int>> t(lambda.length());
    for (int i = 0; i < lambda.length(); ++i) t[i].assign(lambda.parts()[i], 0);
    std::function<void(int, int)> rec = [&](int row, int col) {
        if (row == lambda.length()) {
            std::vector<int> e(n, 0);
            for (const auto& rr : t)
                for (int v : rr) e[v - 1]++;
            r.bump(std::move(e), 1);
            return;
        }
        int nrow = row, ncol = col + 1;
        if (ncol >= lambda.parts()[row]) {
            nrow = row + 1;
            ncol = 0;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, t[row][col - 1]);
        if (row > 0 && col < lambda.parts()[row - 1]) lo = std::max(lo, t[row - 1][col] + 1);
        for (int v = lo; v <= n; ++v) {
            t[row][col] = v;
            rec(nrow, ncol);
        }
    };
    if (lambda.length() == 0) return EvenPoly::unit(n);
    rec(0, 0);
    return r;
}

/**
 * Classical Littlewood-Richardson coefficient c^lambda_{mu nu}: the number of
 * LR skew tableaux of shape lambda/mu and weight nu (rows weakly increase,
 * columns strictly increase, reverse reading word is a lattice word).
 */
inline Int even_lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    int rows = lambda.length();
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return 0;
    if (mu.length() > rows) return 0;

    // cells of lambda/mu, row-major
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < rows; ++i)
        for (int j = mu.part(i); j < lambda.part(i); ++j) cells.emplace_back(i, j);
    if (cells.empty()) return nu.size() == 0 ? 1 : 0;

    std::map<std::pair<int, int>, int> fill;
    std::vector<int> weight(nu.length() + 1, 0);
    Int count = 0;
    auto lattice_ok = [&]() {
        // reverse reading word: rows top to bottom, each row right to left;
        // every prefix must contain at least as many (v-1)'s as v's
        std::vector<int> seen(nu.length() + 2, 0);
        for (int r = 0; r < rows; ++r) {
            for (int c = lambda.part(r) - 1; c >= mu.part(r); --c) {
                int v = fill.at({r, c});
                seen[v]++;
                if (v > 1 && seen[v] > seen[v - 1]) return false;
            }
        }
        return true;
    };
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            for (int v = 0; v < nu.length(); ++v)
                if (weight[v + 1] != nu.parts()[v]) return;
            if (lattice_ok()) ++count;
            return;
        }
        auto [i, j] = cells[idx];
        int lo = 1, hi = nu.length();
        auto left = fill.find({i, j - 1});
        if (left != fill.end()) lo = std::max(lo, left->second);
        auto up = fill.find({i - 1, j});
        if (up != fill.end()) lo = std::max(lo, up->second + 1);
        for (int v = lo; v <= hi; ++v) {
            if (weight[v] + 1 > nu.part(v - 1)) continue;  // weight bound prune
            fill[{i, j}] = v;
            weight[v]++;
            rec(idx + 1);
            weight[v]--;
            fill.erase({i, j});
        }
    };
    rec(0);
    return count;
}

/** All classical LR coefficients for mu * nu. */
inline std::map<Partition, Int> even_lr(const Partition& mu, const Partition& nu) {
    std::map<Partition, Int> out;
    int total = mu.size() + nu.size();
    for (const auto& lam : Partition::all_of_size(total, total, total)) {
        Int c = even_lr_coefficient(lam, mu, nu);
        if (c != 0) out[lam] = c;
    }
    return out;
}

/** Even divided difference (f - s_i f) / (x_i - x_{i+1}). */
inline EvenPoly even_divided_difference(int i, const EvenPoly& f) {
    int n = f.n();
    // s_i f
    EvenPoly g(n);
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> e2 = e;
        std::swap(e2[i - 1], e2[i]);
        g.bump(std::move(e2), c);
    }
    EvenPoly num = f - g;
    // divide by x_i - x_{i+1} exactly
    EvenPoly quot(n);
    while (!num.is_zero()) {
        // take the term with the largest x_i exponent
        const std::vector<int>* pick = nullptr;
        Int pc = 0;
        for (const auto& [e, c] : num.terms()) {
            if (!pick || e[i - 1] > (*pick)[i - 1] ||
                (e[i - 1] == (*pick)[i - 1] && e > *pick)) {
                pick = &e;
                pc = c;
            }
        }
        if ((*pick)[i - 1] < 1) throw std::logic_error("even divided difference: inexact division");
        std::vector<int> b = *pick;
        b[i - 1] -= 1;
        quot.bump(b, pc);
        std::vector<int> b1 = b, b2 = b;
        b1[i - 1] += 1;
        b2[i] += 1;
        num.bump(std::move(b1), -pc);
        num.bump(std::move(b2), pc);
    }
    return quot;
}

/**
 * Mod-2 independence certificate for vectors over a free based module,
 * given as GF(2) rows. Independence mod 2 of integral vectors implies
 * independence over Z.
 */
inline bool independence_certificate_gf2(const std::vector<SparseVec<Int>>& vecs, int ncols) {
    Gf2Echelon ech(ncols);
    for (const auto& v : vecs)
        if (!ech.add_row(v)) return false;
    return true;
}

/** Exact integer-rank fallback when the mod-2 certificate is inapplicable. */
inline bool independence_integer(const std::vector<SparseVec<Int>>& vecs, int ncols) {
    return int_rank(vecs, ncols) == static_cast<int>(vecs.size());
}

/** GF(2) linear solver over monomial rows (mirror of IntSolver, mod 2). */
class Gf2Solver {
public:
    explicit Gf2Solver(std::vector<std::set<std::vector<int>>> columns)
        : columns_(std::move(columns)) {
        for (const auto& col : columns_)
            for (const auto& mono : col)
                if (!rows_.count(mono)) {
                    int id = static_cast<int>(rows_.size());
                    rows_.emplace(mono, id);
                }
        int j = 0;
        for (const auto& col : columns_) {
            SparseVec<Int> v;
            for (const auto& mono : col) v.emplace_back(rows_.at(mono), 1);
            v.emplace_back(static_cast<int>(rows_.size()) + j, 1);
            std::sort(v.begin(), v.end());
            tracked_.push_back(v);
            ++j;
        }
    }

    /** Solve target = sum of a subset of columns over GF(2); nullopt if
     *  outside the span. */
    std::optional<std::vector<int>> solve(const std::set<std::vector<int>>& target) const {
        SparseVec<Int> v;
        for (const auto& mono : target) {
            auto it = rows_.find(mono);
            if (it == rows_.end()) return std::nullopt;
            v.emplace_back(it->second, 1);
        }
        std::sort(v.begin(), v.end());
        return dense_solve(v);
    }

private:
    static int leading(const std::vector<uint64_t>& r) {
        for (size_t w = 0; w < r.size(); ++w)
            if (r[w]) return static_cast<int>(w * 64 + __builtin_ctzll(r[w]));
        return -1;
    }

    std::optional<std::vector<int>> dense_solve(const SparseVec<Int>& target) const {
        int ncols = static_cast<int>(rows_.size());
        int nb = static_cast<int>(columns_.size());
        int words = (ncols + nb + 63) / 64;
        std::vector<std::vector<uint64_t>> rowsm;
        for (int j = 0; j < nb; ++j) rowsm.push_back(Gf2Echelon::pack(tracked_[j], words));
        std::map<int, int> pivot;
        for (int idx = 0; idx < nb; ++idx) {
            auto& r = rowsm[idx];
            while (true) {
                int lead = leading(r);
                if (lead < 0 || lead >= ncols) break;
                auto it = pivot.find(lead);
                if (it == pivot.end()) {
                    pivot[lead] = idx;
                    break;
                }
                for (int w = 0; w < words; ++w) r[w] ^= rowsm[it->second][w];
            }
        }
        auto t = Gf2Echelon::pack(target, words);
        while (true) {
            int lead = leading(t);
            if (lead < 0 || lead >= ncols) break;
            auto it = pivot.find(lead);
            if (it == pivot.end()) return std::nullopt;
            for (int w = 0; w < words; ++w) t[w] ^= rowsm[it->second][w];
        }
        std::vector<int> coeffs(nb, 0);
        for (int w = 0; w < words; ++w) {
            uint64_t bits = t[w];
            while (bits) {
                int b = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                if (b < ncols) return std::nullopt;
                coeffs[b - ncols] = 1;
            }
        }
        return coeffs;
    }

    std::vector<std::set<std::vector<int>>> columns_;
    std::map<std::vector<int>, int> rows_;
    std::vector<SparseVec<Int>> tracked_;
};

}  // namespace oddcat
