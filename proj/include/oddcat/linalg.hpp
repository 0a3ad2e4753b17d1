/**
 * @file linalg.hpp
 * @brief Exact integer linear algebra: echelon forms, unique integral solves,
 *        Smith normal form, and GF(2) rank.
 *
 * Everything here is exact. The fast path works in checked 64-bit integers and
 * escalates to arbitrary precision (boost cpp_int) when an overflow is
 * detected, so no result ever silently wraps.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddcat {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;

struct OverflowError : std::runtime_error {
    OverflowError() : std::runtime_error("integer overflow in exact arithmetic") {}
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError{};
    return r;
}
inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError{};
    return r;
}
inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError{};
    return r;
}

// Sparse integer vector: sorted (index, value) pairs, no zero values.
template <typename T>
using SparseVec = std::vector<std::pair<int, T>>;

inline Int add_cs(Int a, Int b) { return checked_add(a, b); }
inline Int mul_cs(Int a, Int b) { return checked_mul(a, b); }
inline BigInt add_cs(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt mul_cs(const BigInt& a, const BigInt& b) { return a * b; }

template <typename T>
void sparse_axpy(SparseVec<T>& dst, const T& c, const SparseVec<T>& src) {
    if (c == 0) return;
    SparseVec<T> out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            T v = mul_cs(c, src[j].second);
            if (v != 0) out.emplace_back(src[j].first, v);
            ++j;
        } else {
            T v = add_cs(dst[i].second, mul_cs(c, src[j].second));
            if (v != 0) out.emplace_back(dst[i].first, v);
            ++i, ++j;
        }
    }
    dst = std::move(out);
}

/**
 * Integer row echelon via gcd-style elimination. Row operations are
 * unimodular plus row scaling is never used, so the row space over Z is
 * preserved exactly. Works for rank, Z-row-space membership and unique
 * integral solves.
 */
template <typename T>
class RowEchelon {
public:
    explicit RowEchelon(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduce v against the current rows (Euclidean steps), inserting the
    // remainder as a new pivot row when nonzero. Returns true if v enlarged
    // the row space.
    bool add_row(SparseVec<T> v) {
        reduce(v);
        if (v.empty()) return false;
        insert_row(std::move(v));
        return true;
    }

    // Fully reduce v modulo the Z-row space; v becomes the canonical residue.
    void reduce(SparseVec<T>& v) const {
        bool changed = true;
        while (changed && !v.empty()) {
            changed = false;
            auto it = pivot_of_.find(v.front().first);
            if (it == pivot_of_.end()) {
                // leading index is not a pivot: cannot reduce the front, but
                // later entries may still hit pivots
                break;
            }
            const auto& prow = rows_[it->second];
            T p = prow.front().second;
            T q = floordiv(v.front().second, p);
            if (q != 0) {
                sparse_axpy(v, T(-q), prow);
                changed = true;
            } else {
                break;
            }
        }
        // tail reduction: reduce every entry that sits on a pivot column
        bool again = true;
        while (again) {
            again = false;
            for (size_t i = 0; i < v.size(); ++i) {
                auto it = pivot_of_.find(v[i].first);
                if (it == pivot_of_.end()) continue;
                const auto& prow = rows_[it->second];
                T q = floordiv(v[i].second, prow.front().second);
                if (q != 0) {
                    sparse_axpy(v, T(-q), prow);
                    again = true;
                    break;
                }
            }
        }
    }

    bool in_row_space(SparseVec<T> v) const {
        // Z-row-space membership needs full Euclidean closure, which the
        // echelon alone does not give; use only when pivots are units or
        // after saturation. We additionally run pairwise gcd steps here.
        reduce_euclid(v);
        return v.empty();
    }

    const std::vector<SparseVec<T>>& rows() const { return rows_; }

private:
    void insert_row(SparseVec<T> v) {
        if (v.front().second < 0) negate(v);
        int lead = v.front().first;
        auto it = pivot_of_.find(lead);
        if (it == pivot_of_.end()) {
            pivot_of_[lead] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(v));
            return;
        }
        // gcd step against the existing pivot row
        int ri = it->second;
        SparseVec<T> a = rows_[ri], b = std::move(v);
        while (!b.empty() && !a.empty() && b.front().first == a.front().first) {
            T p = a.front().second, q = b.front().second;
            T f = floordiv(q, p);
            sparse_axpy(b, T(-f), a);
            if (!b.empty() && b.front().first == a.front().first) std::swap(a, b);
        }
        rows_[ri] = std::move(a);
        if (!b.empty()) insert_row(std::move(b));
    }

    void reduce_euclid(SparseVec<T>& v) const {
        while (!v.empty()) {
            auto it = pivot_of_.find(v.front().first);
            if (it == pivot_of_.end()) return;
            const auto& prow = rows_[it->second];
            T p = prow.front().second, q = v.front().second;
            if (q % p != 0) return;
            sparse_axpy(v, T(-(q / p)), prow);
        }
    }

    static void negate(SparseVec<T>& v) {
        for (auto& e : v) e.second = -e.second;
    }

    static T floordiv(const T& a, const T& b) {
        T q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    }

    int ncols_;
    std::vector<SparseVec<T>> rows_;
    std::map<int, int> pivot_of_;
};

/** Rank of an integer matrix given as sparse rows (exact, over Q). */
inline int int_rank(const std::vector<SparseVec<Int>>& rows, int ncols) {
    auto run = [&](auto tag) -> int {
        using T = decltype(tag);
        RowEchelon<T> ech(ncols);
        for (const auto& r : rows) {
            SparseVec<T> v;
            v.reserve(r.size());
            for (auto [i, x] : r) v.emplace_back(i, T(x));
            ech.add_row(std::move(v));
        }
        return ech.rank();
    };
    try {
        return run(Int{});
    } catch (const OverflowError&) {
        return run(BigInt{});
    }
}

/**
 * Unique integral solve: find x with sum_j x_j * rows[j] = target, assuming
 * the rows are Z-linearly independent and a (then unique) integral solution
 * exists. Returns nullopt when no integral solution exists.
 *
 * Implemented by echelonizing the transpose-augmented system with full
 * bookkeeping of the combination coefficients.
 */
template <typename T>
std::optional<std::vector<T>> solve_in_basis(const std::vector<SparseVec<T>>& basis,
                                             const SparseVec<T>& target, int ncols) {
    // Augment each basis vector with a tracking unit column; reduce target.
    int nb = static_cast<int>(basis.size());
    RowEchelon<T> ech(ncols + nb);
    for (int j = 0; j < nb; ++j) {
        SparseVec<T> v = basis[j];
        v.emplace_back(ncols + j, T(1));
        ech.add_row(std::move(v));
    }
    SparseVec<T> v = target;
    ech.reduce(v);
    // A solution exists iff the residue is supported entirely on tracking
    // columns; the (negated) tracking entries are the coefficients.
    std::vector<T> x(nb, T(0));
    for (auto& [i, val] : v) {
        if (i < ncols) return std::nullopt;
        x[i - ncols] = -val;
    }
    return x;
}

/** Cached solver: assemble a basis once, answer many solve queries. */
class IntSolver {
public:
    IntSolver(std::vector<SparseVec<Int>> basis, int ncols)
        : basis_(std::move(basis)), ncols_(ncols) {
        try {
            build_small();
        } catch (const OverflowError&) {
            small_.reset();
            build_big();
        }
    }

    int basis_size() const { return static_cast<int>(basis_.size()); }

    // Coordinates of target in the basis; nullopt if not in the Z-span.
    std::optional<std::vector<Int>> solve(const SparseVec<Int>& target) const {
        if (small_) {
            try {
                SparseVec<Int> v = target;
                small_->reduce(v);
                return extract<Int>(v);
            } catch (const OverflowError&) {
                // fall through to big path
            }
        }
        if (!big_) build_big();
        SparseVec<BigInt> v;
        for (auto [i, x] : target) v.emplace_back(i, BigInt(x));
        big_->reduce(v);
        auto r = extract<BigInt>(v);
        if (!r) return std::nullopt;
        std::vector<Int> out(r->size());
        for (size_t i = 0; i < r->size(); ++i) {
            if ((*r)[i] > BigInt(INT64_MAX) || (*r)[i] < BigInt(INT64_MIN)) throw OverflowError{};
            out[i] = static_cast<Int>((*r)[i]);
        }
        return out;
    }

    bool independent() const {
        int rk = small_ ? small_->rank() : big_->rank();
        return rk == basis_size();
    }

private:
    template <typename T, typename V>
    std::optional<std::vector<T>> extract(const V& v) const {
        std::vector<T> x(basis_.size(), T(0));
        for (const auto& [i, val] : v) {
            if (i < ncols_) return std::nullopt;
            x[i - ncols_] = -val;
        }
        return x;
    }

    void build_small() {
        small_.emplace(ncols_ + static_cast<int>(basis_.size()));
        int j = 0;
        for (const auto& b : basis_) {
            SparseVec<Int> v = b;
            v.emplace_back(ncols_ + j, 1);
            small_->add_row(std::move(v));
            ++j;
        }
    }
    void build_big() const {
        big_.emplace(ncols_ + static_cast<int>(basis_.size()));
        int j = 0;
        for (const auto& b : basis_) {
            SparseVec<BigInt> v;
            for (auto [i, x] : b) v.emplace_back(i, BigInt(x));
            v.emplace_back(ncols_ + j, BigInt(1));
            big_->add_row(std::move(v));
            ++j;
        }
    }

    std::vector<SparseVec<Int>> basis_;
    int ncols_;
    std::optional<RowEchelon<Int>> small_;
    mutable std::optional<RowEchelon<BigInt>> big_;
};

/**
 * Smith normal form elementary divisors of a sparse integer matrix.
 * Dense working copy; pivots chosen by minimal absolute value to keep
 * intermediate growth down. Escalates to BigInt on overflow.
 */
template <typename T>
std::vector<T> snf_divisors_impl(std::vector<std::map<int, T>> m, int ncols) {
    std::vector<T> divisors;
    int r0 = 0;  // rows below r0 untouched
    (void)r0;
    // column occupancy index
    while (true) {
        // find a pivot: smallest |value|
        int pi = -1, pj = -1;
        T best = T(0);
        for (size_t i = 0; i < m.size(); ++i) {
            for (const auto& [j, v] : m[i]) {
                T a = v < 0 ? T(-v) : v;
                if (a != 0 && (pi < 0 || a < best)) {
                    best = a;
                    pi = static_cast<int>(i);
                    pj = j;
                }
            }
        }
        if (pi < 0) break;
        // eliminate column pj and row pi
        bool clean = false;
        while (!clean) {
            clean = true;
            T p = m[pi].at(pj);
            for (size_t i = 0; i < m.size(); ++i) {
                if (static_cast<int>(i) == pi) continue;
                auto it = m[i].find(pj);
                if (it == m[i].end()) continue;
                T q = it->second / p;
                if (it->second % p != 0) clean = false;
                if (q != 0) {
                    for (const auto& [j, v] : m[pi]) {
                        T nv = (m[i].count(j) ? m[i][j] : T(0)) - mul_cs(q, v);
                        if (nv == 0) m[i].erase(j); else m[i][j] = nv;
                    }
                }
            }
            // row elimination
            p = m[pi].at(pj);
            std::vector<int> cols;
            for (const auto& [j, v] : m[pi]) if (j != pj) cols.push_back(j);
            for (int j : cols) {
                T q = m[pi][j] / p;
                if (m[pi][j] % p != 0) clean = false;
                if (q != 0) {
                    for (auto& row : m) {
                        auto itp = row.find(pj);
                        if (itp == row.end()) continue;
                        T nv = (row.count(j) ? row[j] : T(0)) - mul_cs(q, itp->second);
                        if (nv == 0) row.erase(j); else row[j] = nv;
                    }
                }
            }
            if (!clean) {
                // a non-divisible remainder ended up in the cross; re-pick
                // the smallest entry in row/column and loop
                T bst = T(0);
                int bi = pi, bj = pj;
                for (size_t i = 0; i < m.size(); ++i) {
                    auto it = m[i].find(pj);
                    if (it == m[i].end() || it->second == 0) continue;
                    T a = it->second < 0 ? T(-it->second) : it->second;
                    if (bst == 0 || a < bst) { bst = a; bi = static_cast<int>(i); bj = pj; }
                }
                for (const auto& [j, v] : m[pi]) {
                    T a = v < 0 ? T(-v) : v;
                    if (a != 0 && (bst == 0 || a < bst)) { bst = a; bi = pi; bj = j; }
                }
                pi = bi; pj = bj;
            }
        }
        T d = m[pi].at(pj);
        if (d < 0) d = -d;
        divisors.push_back(d);
        m[pi].clear();
        for (auto& row : m) row.erase(pj);
        (void)ncols;
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

inline std::vector<Int> snf_divisors(const std::vector<SparseVec<Int>>& rows, int ncols) {
    try {
        std::vector<std::map<int, Int>> m(rows.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (auto [j, v] : rows[i]) m[i][j] = v;
        return snf_divisors_impl<Int>(std::move(m), ncols);
    } catch (const OverflowError&) {
        std::vector<std::map<int, BigInt>> m(rows.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (auto [j, v] : rows[i]) m[i][j] = BigInt(v);
        auto d = snf_divisors_impl<BigInt>(std::move(m), ncols);
        std::vector<Int> out;
        for (auto& x : d) {
            if (x > BigInt(INT64_MAX)) throw OverflowError{};
            out.push_back(static_cast<Int>(x));
        }
        return out;
    }
}

/** GF(2) elimination on bit rows; returns rank. */
class Gf2Echelon {
public:
    explicit Gf2Echelon(int ncols) : ncols_(ncols), words_((ncols + 63) / 64) {}

    static std::vector<uint64_t> pack(const SparseVec<Int>& v, int nwords) {
        std::vector<uint64_t> r(nwords, 0);
        for (auto [i, x] : v)
            if (x & 1) r[i >> 6] ^= (uint64_t(1) << (i & 63));
        return r;
    }

    bool add_row(std::vector<uint64_t> row) {
        while (true) {
            int lead = leading(row);
            if (lead < 0) return false;
            auto it = pivot_.find(lead);
            if (it == pivot_.end()) {
                pivot_[lead] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(row));
                return true;
            }
            const auto& p = rows_[it->second];
            for (size_t w = 0; w < row.size(); ++w) row[w] ^= p[w];
        }
    }

    bool add_row(const SparseVec<Int>& v) { return add_row(pack(v, words_)); }

    // Reduce without inserting; true iff v lies in the row space.
    bool in_row_space(const SparseVec<Int>& v) const {
        auto row = pack(v, words_);
        while (true) {
            int lead = leading(row);
            if (lead < 0) return true;
            auto it = pivot_.find(lead);
            if (it == pivot_.end()) return false;
            const auto& p = rows_[it->second];
            for (size_t w = 0; w < row.size(); ++w) row[w] ^= p[w];
        }
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    static int leading(const std::vector<uint64_t>& row) {
        for (size_t w = 0; w < row.size(); ++w)
            if (row[w]) return static_cast<int>(w * 64 + __builtin_ctzll(row[w]));
        return -1;
    }
    int ncols_, words_;
    std::vector<std::vector<uint64_t>> rows_;
    std::map<int, int> pivot_;
};

}  // namespace oddcat
