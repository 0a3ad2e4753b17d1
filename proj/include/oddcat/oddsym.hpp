/**
 * @file oddsym.hpp
 * @brief Odd symmetric polynomials: elementary/complete generators, odd Schur
 *        and Schubert polynomials, basis coordinates, odd Littlewood-Richardson
 *        coefficients, and straightening of h-words.
 */
#pragma once

#include <cassert>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "linalg.hpp"
#include "skewpoly.hpp"

namespace oddcat {

/** Integer partition: weakly decreasing positive parts. */
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        validate();
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based

    Partition dual() const {
        std::vector<int> d;
        for (int col = 1; parts_.size() && col <= parts_[0]; ++col) {
            int h = 0;
            for (int p : parts_)
                if (p >= col) ++h;
            d.push_back(h);
        }
        return Partition(std::move(d));
    }

    bool fits_in_box(int rows, int cols) const {
        return length() <= rows && (parts_.empty() || parts_[0] <= cols);
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }  // lex

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    static std::vector<Partition> all_of_size(int size, int max_len, int max_part) {
        std::vector<Partition> out;
        if (size < 0) return out;
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int rem, int cap) {
            if (rem == 0) {
                out.emplace_back(std::vector<int>(cur));
                return;
            }
            if (static_cast<int>(cur.size()) >= max_len) return;
            for (int p = std::min(rem, cap); p >= 1; --p) {
                cur.push_back(p);
                rec(rem - p, p);
                cur.pop_back();
            }
        };
        rec(size, max_part);
        return out;
    }

private:
    void validate() const {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must weakly decrease");
        }
    }
    std::vector<int> parts_;
};

/** A skew polynomial known to lie in the common kernel of all partial_i. */
struct OddSymElement {
    SkewPoly poly;

    OddSymElement() = default;
    explicit OddSymElement(SkewPoly p) : poly(std::move(p)) {
#ifndef NDEBUG
        for (int i = 1; i <= poly.n() - 1; ++i)
            assert(divided_difference(i, poly).is_zero() && "element is not odd symmetric");
#endif
    }
};

inline bool is_odd_symmetric(const SkewPoly& f) {
    for (int i = 1; i <= f.n() - 1; ++i)
        if (!divided_difference(i, f).is_zero()) return false;
    return true;
}

/** Odd elementary symmetric polynomial e_k(x_1..x_n), with xt_i = (-1)^{i-1} x_i. */
inline SkewPoly elementary(int k, int n) {
    if (k < 0 || k > n) return SkewPoly(n);
    SkewPoly r(n);
    // subsets i_1 < ... < i_k; monomial is squarefree so already ordered
    std::vector<int> idx(k);
    std::function<void(int, int, int)> rec = [&](int pos, int from, int signexp) {
        if (pos == k) {
            Exponents e(n, 0);
            for (int i : idx) e[i] = 1;
            r.bump(std::move(e), signexp % 2 == 0 ? 1 : -1);
            return;
        }
        for (int i = from; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1, signexp + i);  // tilde sign (-1)^{i} for 0-based i
        }
    };
    rec(0, 0, 0);
    return r;
}

/** Odd complete symmetric polynomial h_k(x_1..x_n). */
inline SkewPoly complete(int k, int n) {
    if (k < 0) return SkewPoly(n);
    if (k == 0) return SkewPoly::unit(n);
    SkewPoly r(n);
    // weakly increasing words i_1 <= ... <= i_k: exponent vectors of total k
    Exponents e(n, 0);
    std::function<void(int, int)> rec = [&](int from, int rem) {
        if (rem == 0) {
            long long signexp = 0;
            for (int i = 0; i < n; ++i) signexp += static_cast<long long>(i) * e[i];
            r.bump(e, signexp % 2 == 0 ? 1 : -1);
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

/** sum_{j=0}^{l} (-1)^{j(j+1)/2} e_j h_{l-j} == 0 for l >= 1. */
inline bool elem_complete_check(int l, int n) {
    SkewPoly acc(n);
    for (int j = 0; j <= l; ++j) {
        Int s = ((static_cast<long long>(j) * (j + 1) / 2) % 2 == 0) ? 1 : -1;
        acc = acc + elementary(j, n) * complete(l - j, n) * s;
    }
    return acc.is_zero();
}

inline SkewPoly staircase_monomial(int n) {  // x_1^{n-1} x_2^{n-2} ... x_n^0
    Exponents e(n);
    for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
    return SkewPoly::monomial(n, e, 1);
}

namespace detail {
inline int binom3_sign(int n) {
    long long b = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
    return b % 2 == 0 ? 1 : -1;
}
}  // namespace detail

/**
 * Odd Schur polynomial
 *   s_lambda = (-1)^{binom(n,3)} ( partial_{w_0}(x^lambda x^delta) )^{w_0}
 * with the canonical reduced word for w_0 and the signed w_0 action.
 */
inline SkewPoly schur(const Partition& lambda, int n) {
    if (lambda.length() > n) throw std::invalid_argument("partition too long for variable count");
    static std::map<std::pair<std::vector<int>, int>, SkewPoly> memo;
    static std::mutex mtx;
    auto key = std::make_pair(lambda.parts(), n);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Exponents lam(n, 0);
    for (int i = 0; i < lambda.length(); ++i) lam[i] = lambda.parts()[i];
    SkewPoly xl = SkewPoly::monomial(n, lam, 1);
    Permutation w0 = Permutation::longest(n);
    SkewPoly r = dd_perm(w0, xl * staircase_monomial(n));
    r = sym_act(w0, r) * detail::binom3_sign(n);
    std::lock_guard<std::mutex> lock(mtx);
    memo[key] = r;
    return r;
}

/** Odd Schubert polynomial s_w = partial_{w^{-1} w_0}(x^delta). */
inline SkewPoly schubert(const Permutation& w, int n) {
    if (w.n() != n) throw std::invalid_argument("permutation size mismatch");
    Permutation u = w.inverse() * Permutation::longest(n);
    return dd_perm(u, staircase_monomial(n));
}

/**
 * Generic cached coordinate extraction: expand homogeneous pieces of f over
 * products basis[i] * coeff (side = right) or coeff * basis[i] (side = left),
 * where coeff runs over the odd Schur basis of OL_n. Returns, per basis
 * index, the OL_n coefficient as a SkewPoly. Throws when f is not in the
 * span (basis failure).
 */
class OlModuleBasis {
public:
    enum class Side { LeftCoeff, RightCoeff };

    OlModuleBasis(int n, std::vector<SkewPoly> basis, Side side)
        : n_(n), basis_(std::move(basis)), side_(side) {}

    int size() const { return static_cast<int>(basis_.size()); }
    const SkewPoly& element(int i) const { return basis_[i]; }

    std::vector<SkewPoly> coordinates(const SkewPoly& f) const {
        std::vector<SkewPoly> out(basis_.size(), SkewPoly(n_));
        if (f.is_zero()) return out;
        for (int d = 0; d <= f.max_zdegree(); d += 2) {
            SkewPoly piece = f.component(d);
            if (piece.is_zero()) continue;
            solve_degree(piece, d, out);
        }
        return out;
    }

private:
    struct DegreeData {
        std::vector<Exponents> monomials;                  // row labels
        std::map<Exponents, int> row_of;
        std::vector<std::pair<int, Partition>> columns;    // (basis idx, schur label)
        IntSolver solver{{}, 0};
    };

    void solve_degree(const SkewPoly& piece, int d, std::vector<SkewPoly>& out) const {
        const DegreeData& dd = degree_data(d);
        SparseVec<Int> rhs;
        for (const auto& [e, c] : piece.terms()) {
            auto it = dd.row_of.find(e);
            if (it == dd.row_of.end()) throw std::logic_error("monomial outside module span");
            rhs.emplace_back(it->second, c);
        }
        std::sort(rhs.begin(), rhs.end());
        auto sol = dd.solver.solve(rhs);
        if (!sol) throw std::logic_error("coordinate solve failed: not in basis span");
        for (size_t j = 0; j < dd.columns.size(); ++j) {
            if ((*sol)[j] == 0) continue;
            out[dd.columns[j].first] =
                out[dd.columns[j].first] + schur(dd.columns[j].second, n_) * (*sol)[j];
        }
    }

    const DegreeData& degree_data(int d) const {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = cache_.find(d);
        if (it != cache_.end()) return *it->second;
        auto data = std::make_unique<DegreeData>();
        // enumerate monomials of degree d reachable from basis*OL products
        std::vector<SparseVec<Int>> cols;
        for (size_t bi = 0; bi < basis_.size(); ++bi) {
            if (basis_[bi].is_zero()) continue;
            int bd = basis_[bi].degree().z;
            int cd = d - bd;
            if (cd < 0 || cd % 2 != 0) continue;
            for (const Partition& mu : Partition::all_of_size(cd / 2, n_, cd / 2)) {
                SkewPoly prod = side_ == Side::RightCoeff ? basis_[bi] * schur(mu, n_)
                                                          : schur(mu, n_) * basis_[bi];
                if (prod.is_zero()) continue;
                SparseVec<Int> col;
                for (const auto& [e, c] : prod.terms()) {
                    auto rit = data->row_of.find(e);
                    int row;
                    if (rit == data->row_of.end()) {
                        row = static_cast<int>(data->monomials.size());
                        data->row_of[e] = row;
                        data->monomials.push_back(e);
                    } else {
                        row = rit->second;
                    }
                    col.emplace_back(row, c);
                }
                std::sort(col.begin(), col.end());
                cols.push_back(std::move(col));
                data->columns.emplace_back(static_cast<int>(bi), mu);
            }
        }
        // degree-0 coefficient: the empty partition (constant 1) is included
        // above since all_of_size(0,..) yields the empty partition
        data->solver = IntSolver(std::move(cols), static_cast<int>(data->monomials.size()));
        auto [pos, inserted] = cache_.emplace(d, std::move(data));
        (void)inserted;
        return *pos->second;
    }

    int n_;
    std::vector<SkewPoly> basis_;
    Side side_;
    mutable std::mutex mtx_;
    mutable std::map<int, std::unique_ptr<DegreeData>> cache_;
};

/**
 * Coordinates of f over the odd Schubert basis with right OL_n coefficients:
 * f = sum_w schubert(w) * c_w. Keys are indices into group.elements().
 */
inline std::map<int, SkewPoly> ol_coordinates(const SkewPoly& f, const SymmetricGroup& group) {
    int n = f.n();
    static std::map<int, std::unique_ptr<OlModuleBasis>> memo;
    static std::mutex mtx;
    OlModuleBasis* mb;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(n);
        if (it == memo.end()) {
            std::vector<SkewPoly> basis;
            for (const auto& w : group.elements()) basis.push_back(schubert(w, n));
            it = memo.emplace(n, std::make_unique<OlModuleBasis>(
                                     n, std::move(basis), OlModuleBasis::Side::RightCoeff))
                     .first;
        }
        mb = it->second.get();
    }
    auto coords = mb->coordinates(f);
    std::map<int, SkewPoly> out;
    for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) out[static_cast<int>(i)] = coords[i];
    return out;
}

/**
 * Odd Littlewood-Richardson coefficients: s_mu s_nu = sum_lambda c^lambda s_lambda,
 * solved degreewise against the odd Schur basis in n variables.
 */
inline std::map<Partition, Int> lr_coefficients(const Partition& mu, const Partition& nu, int n) {
    SkewPoly prod = schur(mu, n) * schur(nu, n);
    std::map<Partition, Int> out;
    if (prod.is_zero()) return out;
    int total = mu.size() + nu.size();
    auto lambdas = Partition::all_of_size(total, n, total);
    std::vector<SparseVec<Int>> cols;
    std::map<Exponents, int> row_of;
    auto vec_of = [&](const SkewPoly& p) {
        SparseVec<Int> v;
        for (const auto& [e, c] : p.terms()) {
            auto it = row_of.find(e);
            int row;
            if (it == row_of.end()) {
                row = static_cast<int>(row_of.size());
                row_of[e] = row;
            } else {
                row = it->second;
            }
            v.emplace_back(row, c);
        }
        std::sort(v.begin(), v.end());
        return v;
    };
    std::vector<Partition> labels;
    for (const auto& lam : lambdas) {
        SkewPoly s = schur(lam, n);
        if (s.is_zero()) continue;
        labels.push_back(lam);
        cols.push_back(vec_of(s));
    }
    SparseVec<Int> rhs = vec_of(prod);
    IntSolver solver(std::move(cols), static_cast<int>(row_of.size()));
    auto sol = solver.solve(rhs);
    if (!sol) throw std::logic_error("Schur product not in Schur span");
    for (size_t i = 0; i < labels.size(); ++i)
        if ((*sol)[i] != 0) out[labels[i]] = (*sol)[i];
    return out;
}

/**
 * Straighten a product h_{r_1}...h_{r_m} of odd complete symmetric functions
 * into the spanning family of weakly decreasing words. Adjacent letters with
 * even index sum commute; the odd-sum shuffle is
 *   p even: h_p h_l =  h_l h_p + 2 sum_{i=1}^{p} (-1)^{binom(i,2)}   h_{l+i} h_{p-i}
 *   p odd:  h_p h_l = -h_l h_p + 2 sum_{i=1}^{p} (-1)^{binom(i-1,2)} h_{l+i} h_{p-i}
 * for p < l. Zero letters are dropped (h_0 = 1).
 */
inline std::map<Word, Int> straighten_h(const Word& word) {
    Word w;
    for (int r : word) {
        if (r < 0) return {};  // h_{negative} = 0
        if (r > 0) w.push_back(r);
    }
    std::map<Word, Int> out;
    std::map<Word, Int> work;
    work[w] = 1;
    auto binom2 = [](int i) { return static_cast<long long>(i) * (i - 1) / 2; };
    while (!work.empty()) {
        auto it = work.begin();
        Word cur = it->first;
        Int coef = it->second;
        work.erase(it);
        if (coef == 0) continue;
        // find first ascent
        size_t pos = 0;
        bool sorted = true;
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] < cur[i + 1]) {
                pos = i;
                sorted = false;
                break;
            }
        }
        if (sorted) {
            out[cur] += coef;
            if (out[cur] == 0) out.erase(cur);
            continue;
        }
        int p = cur[pos], l = cur[pos + 1];
        auto emit = [&](int a, int b, Int c) {
            Word next = cur;
            next[pos] = a;
            next[pos + 1] = b;
            // drop zero letters
            Word clean;
            for (int r : next)
                if (r > 0) clean.push_back(r);
            work[clean] += c;
            if (work[clean] == 0) work.erase(clean);
        };
        if ((p + l) % 2 == 0) {
            emit(l, p, coef);
        } else if (p % 2 == 0) {
            emit(l, p, coef);
            for (int i = 1; i <= p; ++i)
                emit(l + i, p - i, checked_mul(coef, binom2(i) % 2 == 0 ? 2 : -2));
        } else {
            emit(l, p, -coef);
            for (int i = 1; i <= p; ++i)
                emit(l + i, p - i, checked_mul(coef, binom2(i - 1) % 2 == 0 ? 2 : -2));
        }
    }
    return out;
}

/** Evaluate an h-word as an element of OPol_n. */
inline SkewPoly h_word_poly(const Word& w, int n) {
    SkewPoly r = SkewPoly::unit(n);
    for (int i : w) r = r * complete(i, n);
    return r;
}

}  // namespace oddcat
