/**
 * @file perm.hpp
 * @brief Symmetric group utilities: one-line permutations, lengths, reduced
 *        words (canonical = lexicographically smallest), parabolic cosets.
 *
 * Strand indices are 1-based in every public interface, matching the
 * generators s_1,...,s_{n-1}; storage is 0-based one-line notation.
 */
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oddcat {

using Word = std::vector<int>;  // letters are 1-based simple reflections

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Permutation(std::vector<int> one_line_0based) : img_(std::move(one_line_0based)) {}

    static Permutation identity(int n) { return Permutation(n); }
    static Permutation transposition(int n, int i) {  // s_i, 1 <= i <= n-1
        Permutation p(n);
        std::swap(p.img_[i - 1], p.img_[i]);
        return p;
    }
    static Permutation from_word(int n, const Word& w) {
        Permutation p(n);
        for (int i : w) p = p * transposition(n, i);
        return p;
    }
    static Permutation longest(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = n - 1 - i;
        return Permutation(std::move(v));
    }

    int n() const { return static_cast<int>(img_.size()); }
    int apply(int i) const { return img_[i - 1] + 1; }  // 1-based image
    const std::vector<int>& one_line() const { return img_; }

    Permutation operator*(const Permutation& o) const {  // (this*o)(x) = this(o(x))
        std::vector<int> r(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) r[i] = img_[o.img_[i]];
        return Permutation(std::move(r));
    }
    Permutation inverse() const {
        std::vector<int> r(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) r[img_[i]] = static_cast<int>(i);
        return Permutation(std::move(r));
    }

    int length() const {
        int l = 0;
        for (size_t i = 0; i < img_.size(); ++i)
            for (size_t j = i + 1; j < img_.size(); ++j)
                if (img_[i] > img_[j]) ++l;
        return l;
    }

    bool is_identity() const {
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    // Left descent: l(s_i w) < l(w), i.e. i appears after i+1 in the one-line.
    bool left_descent(int i) const {
        return inverse().img_[i - 1] > inverse().img_[i];
    }

    /** Lexicographically smallest reduced word. */
    Word canonical_word() const {
        Word w;
        Permutation p = *this;
        int n = this->n();
        while (!p.is_identity()) {
            Permutation pinv = p.inverse();
            int pick = -1;
            for (int i = 1; i <= n - 1; ++i) {
                if (pinv.img_[i - 1] > pinv.img_[i]) { pick = i; break; }
            }
            w.push_back(pick);
            p = transposition(n, pick) * p;
        }
        return w;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

inline bool word_is_reduced(int n, const Word& w) {
    return Permutation::from_word(n, w).length() == static_cast<int>(w.size());
}

/** All elements of S_n in some fixed order, with index lookups. */
class SymmetricGroup {
public:
    explicit SymmetricGroup(int n) : n_(n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        do {
            index_[v] = static_cast<int>(elems_.size());
            elems_.push_back(Permutation(v));
        } while (std::next_permutation(v.begin(), v.end()));
    }

    int n() const { return n_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const Permutation& at(int i) const { return elems_[i]; }
    int index_of(const Permutation& p) const { return index_.at(p.one_line()); }
    const std::vector<Permutation>& elements() const { return elems_; }

private:
    int n_;
    std::vector<Permutation> elems_;
    std::map<std::vector<int>, int> index_;
};

/**
 * Minimal-length representatives of S_m / S_{[a,b]}, where S_{[a,b]} is the
 * parabolic subgroup permuting positions a..b (generated by s_a..s_{b-1}).
 * The representatives are exactly the w increasing on positions a..b.
 * Intervals with a >= b give the whole group.
 */
inline std::vector<Permutation> coset_min_reps(int m, int a, int b) {
    std::vector<Permutation> out;
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 0);
    do {
        bool ok = true;
        for (int i = a; i < b && ok; ++i)
            if (v[i - 1] > v[i]) ok = false;
        if (ok) out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/** Minimal representative of the coset w S_{[a,b]}: sort positions a..b. */
inline Permutation coset_min_rep_of(const Permutation& w, int a, int b) {
    std::vector<int> v = w.one_line();
    if (a < b) std::sort(v.begin() + (a - 1), v.begin() + b);
    return Permutation(std::move(v));
}

/**
 * Longest minimal-length representative of S_n / (S_k x S_{n-k}): sends
 * 1..k to n-k+1..n and k+1..n to 1..n-k, each block in increasing order.
 */
inline Permutation grassmannian_longest(int n, int k) {
    std::vector<int> v(n);
    for (int i = 0; i < k; ++i) v[i] = n - k + i;
    for (int i = k; i < n; ++i) v[i] = i - k;
    return Permutation(std::move(v));
}

}  // namespace oddcat
