/**
 * @file oddnilhecke.hpp
 * @brief The odd nilHecke algebra ONH_n: PBW normal forms tau_w x^alpha,
 *        multiplication by rewriting, the faithful action on skew
 *        polynomials, and the (interval) idempotents.
 *
 * Defining relations:
 *   tau_i^2 = 0,   tau_i tau_{i+1} tau_i = tau_{i+1} tau_i tau_{i+1},
 *   x_i tau_i + tau_i x_{i+1} = 1,   tau_i x_i + x_{i+1} tau_i = 1,
 *   x_i x_j + x_j x_i = 0 (i != j),  tau_i tau_j + tau_j tau_i = 0 (|i-j|>1),
 *   x_i tau_j + tau_j x_i = 0 (i != j, j+1).
 *
 * A tau-word is well defined up to sign; the canonical representative of
 * each permutation is its lexicographically smallest reduced word, and the
 * sign of any other reduced word is found by breadth-first search over
 * braid moves (sign +1) and distant swaps (sign -1).
 */
#pragma once

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <variant>
#include <vector>

#include "oddsym.hpp"
#include "perm.hpp"
#include "skewpoly.hpp"

namespace oddcat {

/** Shared S_n tables, one per n. */
inline const SymmetricGroup& symmetric_group(int n) {
    static std::map<int, std::unique_ptr<SymmetricGroup>> groups;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = groups.find(n);
    if (it == groups.end()) it = groups.emplace(n, std::make_unique<SymmetricGroup>(n)).first;
    return *it->second;
}

/**
 * Sign table: for each permutation, the signs of all its reduced words
 * relative to the canonical word. Built lazily per permutation, memoized,
 * and optionally serialized to a cache file.
 */
class SignedWordTable {
public:
    explicit SignedWordTable(int n) : n_(n) {}

    int n() const { return n_; }

    /** Sign of a reduced word relative to the canonical word of its permutation. */
    int sign_of(const Word& w) {
        Permutation p = Permutation::from_word(n_, w);
        if (p.length() != static_cast<int>(w.size()))
            throw std::invalid_argument("sign_of requires a reduced word");
        std::lock_guard<std::mutex> lock(mtx_);
        auto& entry = ensure(p);
        return entry.at(w);
    }

    /** Number of reduced words of w (exposes the table for tests). */
    const std::map<Word, int>& words_of(const Permutation& p) {
        std::lock_guard<std::mutex> lock(mtx_);
        return ensure(p);
    }

    std::string serialize() {
        std::lock_guard<std::mutex> lock(mtx_);
        std::ostringstream os;
        os << "signedwordtable " << n_ << " " << table_.size() << "\n";
        for (const auto& [one_line, words] : table_) {
            for (int v : one_line) os << v << " ";
            os << words.size() << "\n";
            for (const auto& [w, s] : words) {
                os << s << " " << w.size();
                for (int i : w) os << " " << i;
                os << "\n";
            }
        }
        return os.str();
    }

    bool deserialize(const std::string& text) {
        std::istringstream is(text);
        std::string tag;
        int n = 0;
        size_t count = 0;
        if (!(is >> tag >> n >> count) || tag != "signedwordtable" || n != n_) return false;
        std::map<std::vector<int>, std::map<Word, int>> tmp;
        for (size_t t = 0; t < count; ++t) {
            std::vector<int> ol(n_);
            for (int& v : ol)
                if (!(is >> v)) return false;
            size_t nw = 0;
            if (!(is >> nw)) return false;
            std::map<Word, int> words;
            for (size_t j = 0; j < nw; ++j) {
                int s = 0, len = 0;
                if (!(is >> s >> len) || len < 0) return false;
                Word w(len);
                for (int& i : w)
                    if (!(is >> i)) return false;
                words[w] = s;
            }
            tmp[ol] = std::move(words);
        }
        std::lock_guard<std::mutex> lock(mtx_);
        table_ = std::move(tmp);
        return true;
    }

private:
    // BFS over the reduced-word graph from the canonical word. Braid moves
    // i,i+1,i <-> i+1,i,i+1 carry sign +1; distant swaps i,j <-> j,i with
    // |i-j| > 1 carry sign -1.
    std::map<Word, int>& ensure(const Permutation& p) {
        auto it = table_.find(p.one_line());
        if (it != table_.end()) return it->second;
        std::map<Word, int> signs;
        Word start = p.canonical_word();
        signs[start] = 1;
        std::deque<Word> queue{start};
        while (!queue.empty()) {
            Word w = queue.front();
            queue.pop_front();
            int s = signs[w];
            for (size_t i = 0; i + 1 < w.size(); ++i) {
                if (std::abs(w[i] - w[i + 1]) > 1) {
                    Word v = w;
                    std::swap(v[i], v[i + 1]);
                    if (!signs.count(v)) {
                        signs[v] = -s;
                        queue.push_back(v);
                    }
                }
                if (i + 2 < w.size() && w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1) {
                    Word v = w;
                    v[i] = w[i + 1];
                    v[i + 1] = w[i];
                    v[i + 2] = w[i + 1];
                    if (!signs.count(v)) {
                        signs[v] = s;
                        queue.push_back(v);
                    }
                }
            }
        }
        return table_.emplace(p.one_line(), std::move(signs)).first->second;
    }

    int n_;
    std::mutex mtx_;
    std::map<std::vector<int>, std::map<Word, int>> table_;
};

inline SignedWordTable& signed_word_table(int n) {
    static std::map<int, std::unique_ptr<SignedWordTable>> tables;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = tables.find(n);
    if (it == tables.end()) it = tables.emplace(n, std::make_unique<SignedWordTable>(n)).first;
    return *it->second;
}

/** A generator letter of ONH_n. */
struct TauLetter {
    int i;
};
struct XLetter {
    int i;
};
using GenLetter = std::variant<TauLetter, XLetter>;

namespace detail {

// x_j^p x_{j+1}^q * tau_j written as P + tau_j Q with P, Q polynomials in
// the two interacting variables (SkewPoly on 2 variables: u = x_j, v = x_{j+1}).
struct TauPush {
    SkewPoly plain;  // P
    SkewPoly tau;    // Q
};

inline const TauPush& tau_push(int p, int q) {
    static std::map<std::pair<int, int>, TauPush> memo;
    static std::recursive_mutex mtx;
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto key = std::make_pair(p, q);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    TauPush out{SkewPoly(2), SkewPoly(2)};
    SkewPoly u = SkewPoly::variable(2, 1), v = SkewPoly::variable(2, 2);
    if (p == 0 && q == 0) {
        out.tau = SkewPoly::unit(2);
    } else if (q > 0) {
        // x^p v^{q-1} (v tau) = x^p v^{q-1} - (x^p v^{q-1} tau) x_j
        const TauPush& prev = tau_push(p, q - 1);
        Exponents e{p, q - 1};
        out.plain = SkewPoly::monomial(2, e, 1) - prev.plain * u;
        out.tau = -(prev.tau * u);
    } else {
        // x^{p-1} (u tau) = x^{p-1} - (x^{p-1} tau) x_{j+1}
        const TauPush& prev = tau_push(p - 1, 0);
        Exponents e{p - 1, 0};
        out.plain = SkewPoly::monomial(2, e, 1) - prev.plain * v;
        out.tau = -(prev.tau * v);
    }
    return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace detail

/**
 * Element of ONH_n in PBW form: sum of c * tau_w x^alpha over pairs
 * (permutation index, exponent vector), canonical reduced words throughout.
 */
class NilHeckeElement {
public:
    using Key = std::pair<int, Exponents>;  // (index into S_n, exponents)

    NilHeckeElement() : n_(0) {}
    explicit NilHeckeElement(int n) : n_(n) {}

    static NilHeckeElement unit(int n) {
        NilHeckeElement e(n);
        e.terms_[{symmetric_group(n).index_of(Permutation::identity(n)), Exponents(n, 0)}] = 1;
        return e;
    }
    static NilHeckeElement x(int n, int i) { return unit(n).mul_x(i); }
    static NilHeckeElement tau(int n, int i) { return unit(n).mul_tau(i); }
    static NilHeckeElement from_poly(const SkewPoly& f) {
        NilHeckeElement e(f.n());
        int id = symmetric_group(f.n()).index_of(Permutation::identity(f.n()));
        for (const auto& [a, c] : f.terms()) e.terms_[{id, a}] = c;
        return e;
    }
    /** Normalize an arbitrary word in the generators (with a global sign). */
    static NilHeckeElement from_letters(int n, const std::vector<GenLetter>& letters,
                                        Int sign = 1) {
        NilHeckeElement e = unit(n) * sign;
        for (const auto& l : letters) {
            if (std::holds_alternative<TauLetter>(l))
                e = e.mul_tau(std::get<TauLetter>(l).i);
            else
                e = e.mul_x(std::get<XLetter>(l).i);
        }
        return e;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Int>& terms() const { return terms_; }

    NilHeckeElement operator+(const NilHeckeElement& o) const {
        check_same(o);
        NilHeckeElement r = *this;
        for (const auto& [k, c] : o.terms_) r.bump(k, c);
        return r;
    }
    NilHeckeElement operator-() const {
        NilHeckeElement r(n_);
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    NilHeckeElement operator-(const NilHeckeElement& o) const { return *this + (-o); }
    NilHeckeElement operator*(Int c) const {
        NilHeckeElement r(n_);
        if (c == 0) return r;
        for (const auto& [k, v] : terms_) r.terms_[k] = checked_mul(v, c);
        return r;
    }
    bool operator==(const NilHeckeElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const NilHeckeElement& o) const { return !(*this == o); }

    /** Right multiplication by x_i. */
    NilHeckeElement mul_x(int i) const {
        NilHeckeElement r(n_);
        for (const auto& [k, c] : terms_) {
            int suffix = 0;
            for (int t = i; t < n_; ++t) suffix += k.second[t];
            Exponents e = k.second;
            e[i - 1] += 1;
            r.bump({k.first, std::move(e)}, suffix % 2 == 0 ? c : -c);
        }
        return r;
    }

    /** Right multiplication by tau_j. */
    NilHeckeElement mul_tau(int j) const {
        const SymmetricGroup& G = symmetric_group(n_);
        NilHeckeElement r(n_);
        for (const auto& [k, c] : terms_) {
            const Exponents& g = k.second;
            int prefix = 0, suffix = 0;
            for (int t = 0; t < j - 1; ++t) prefix += g[t];
            for (int t = j + 1; t < n_; ++t) suffix += g[t];
            const detail::TauPush& tp = detail::tau_push(g[j - 1], g[j]);
            Int base = suffix % 2 == 0 ? c : -c;
            // plain part: tau_w (A * P * B)
            for (const auto& [pq, pc] : tp.plain.terms()) {
                Exponents e = g;
                e[j - 1] = pq[0];
                e[j] = pq[1];
                r.bump({k.first, std::move(e)}, checked_mul(base, pc));
            }
            // tau part: (tau_w tau_j) (A * Q * B), with the sign from moving
            // tau_j through the prefix variables
            const Permutation& w = G.at(k.first);
            Permutation ws = w * Permutation::transposition(n_, j);
            if (ws.length() != w.length() + 1) continue;  // tau_w tau_j = 0
            Word concat = w.canonical_word();
            concat.push_back(j);
            int s = signed_word_table(n_).sign_of(concat);
            Int base2 = (prefix + suffix) % 2 == 0 ? c : -c;
            base2 = checked_mul(base2, s);
            int widx = G.index_of(ws);
            for (const auto& [pq, qc] : tp.tau.terms()) {
                Exponents e = g;
                e[j - 1] = pq[0];
                e[j] = pq[1];
                r.bump({widx, std::move(e)}, checked_mul(base2, qc));
            }
        }
        return r;
    }

    NilHeckeElement operator*(const NilHeckeElement& o) const {
        check_same(o);
        const SymmetricGroup& G = symmetric_group(n_);
        NilHeckeElement result(n_);
        // group the right factor by permutation to reuse pushed prefixes
        for (const auto& [ko, co] : o.terms_) {
            const Permutation& v = G.at(ko.first);
            Word vword = v.canonical_word();
            for (const auto& [k, c] : terms_) {
                // E = x^alpha * tau_v * x^beta in PBW form
                NilHeckeElement e = from_poly(SkewPoly::monomial(n_, k.second, 1));
                for (int j : vword) e = e.mul_tau(j);
                for (int i = 1; i <= n_; ++i)
                    for (int t = 0; t < ko.second[i - 1]; ++t) e = e.mul_x(i);
                // prepend tau_w
                const Permutation& w = G.at(k.first);
                Int cc = checked_mul(c, co);
                if (w.is_identity()) {
                    for (const auto& [ke, ce] : e.terms_)
                        result.bump(ke, checked_mul(cc, ce));
                    continue;
                }
                Word wword = w.canonical_word();
                for (const auto& [ke, ce] : e.terms_) {
                    const Permutation& u = G.at(ke.first);
                    Permutation wu = w * u;
                    if (wu.length() != w.length() + u.length()) continue;
                    Word concat = wword;
                    Word uword = u.canonical_word();
                    concat.insert(concat.end(), uword.begin(), uword.end());
                    int s = signed_word_table(n_).sign_of(concat);
                    result.bump({G.index_of(wu), ke.second},
                                checked_mul(checked_mul(cc, ce), s));
                }
            }
        }
        return result;
    }

    /** View inside ONH_m for m >= n (strands n+1..m untouched). */
    NilHeckeElement widened(int m) const {
        if (m < n_) throw std::invalid_argument("cannot shrink strand count");
        if (m == n_) return *this;
        const SymmetricGroup& G = symmetric_group(n_);
        const SymmetricGroup& H = symmetric_group(m);
        NilHeckeElement r(m);
        for (const auto& [k, c] : terms_) {
            std::vector<int> ol = G.at(k.first).one_line();
            for (int t = n_; t < m; ++t) ol.push_back(t);
            Exponents e = k.second;
            e.resize(m, 0);
            r.terms_[{H.index_of(Permutation(std::move(ol))), std::move(e)}] = c;
        }
        return r;
    }

    /** Faithful action on skew polynomials: x_i by multiplication, tau_i by
     *  the odd divided difference. */
    SkewPoly act(const SkewPoly& f) const {
        if (f.n() != n_) throw std::invalid_argument("variable count mismatch");
        const SymmetricGroup& G = symmetric_group(n_);
        SkewPoly out(n_);
        for (const auto& [k, c] : terms_) {
            SkewPoly g = SkewPoly::monomial(n_, k.second, c) * f;
            out = out + dd_word(G.at(k.first).canonical_word(), g);
        }
        return out;
    }

    Int coeff(const Permutation& w, const Exponents& a) const {
        auto it = terms_.find({symmetric_group(n_).index_of(w), a});
        return it == terms_.end() ? 0 : it->second;
    }

    bool is_homogeneous() const {
        bool first = true;
        Degree d(0, 0);
        for (const auto& [k, c] : terms_) {
            (void)c;
            Degree t = term_degree(k);
            if (first) d = t;
            else if (!(d == t)) return false;
            first = false;
        }
        return true;
    }
    Degree degree() const {
        if (terms_.empty()) return Degree(0, 0);
        return term_degree(terms_.begin()->first);
    }
    Degree term_degree(const Key& k) const {
        int lw = symmetric_group(n_).at(k.first).length();
        int xa = exp_total(k.second);
        return Degree(-2 * lw + 2 * xa, lw + xa);
    }
    NilHeckeElement parity_component(int p) const {
        NilHeckeElement r(n_);
        for (const auto& [k, c] : terms_)
            if (term_degree(k).parity == p) r.terms_[k] = c;
        return r;
    }
    int max_zdegree() const {
        int d = 0;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            (void)c;
            int t = term_degree(k).z;
            if (first || t > d) d = t;
            first = false;
        }
        return d;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        const SymmetricGroup& G = symmetric_group(n_);
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << (c >= 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Int a = c < 0 ? -c : c;
            Word w = G.at(k.first).canonical_word();
            bool anyx = exp_total(k.second) > 0;
            if (a != 1 || (w.empty() && !anyx)) os << a;
            for (int i : w) os << "t" << i;
            for (int i = 0; i < n_; ++i) {
                if (k.second[i] == 0) continue;
                os << "x" << (i + 1);
                if (k.second[i] > 1) os << "^" << k.second[i];
            }
        }
        return os.str();
    }

    void bump(Key k, Int c) {
        if (c == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[std::move(k)] = c;
        } else {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    void check_same(const NilHeckeElement& o) const {
        if (n_ != o.n_) throw std::invalid_argument("strand count mismatch");
    }

    int n_;
    std::map<Key, Int> terms_;
};

inline NilHeckeElement operator*(Int c, const NilHeckeElement& e) { return e * c; }

/** tau_w for an explicit word (zero if the word is not reduced). */
inline NilHeckeElement tau_word(int n, const Word& w) {
    if (!word_is_reduced(n, w)) return NilHeckeElement(n);
    NilHeckeElement e = NilHeckeElement::unit(n);
    for (int i : w) e = e.mul_tau(i);
    return e;
}

/** The longest-word tau with the preferred factorization
 *  tau_1 (tau_2 tau_1) ... (tau_{n-1} ... tau_1) restricted to [l,m]:
 *  (tau_l ... tau_{m-1}) (tau_l ... tau_{m-2}) ... (tau_l). */
inline Word interval_longest_word(int l, int m) {
    Word w;
    for (int top = m - 1; top >= l; --top)
        for (int i = l; i <= top; ++i) w.push_back(i);
    return w;
}

/** Reversed factorization (tau_{m-1} ... tau_l)(tau_{m-1} ... tau_{l+1}) ... (tau_{m-1}). */
inline Word interval_longest_word_reversed(int l, int m) {
    Word w;
    for (int s = l; s <= m - 1; ++s)
        for (int i = m - 1; i >= s; --i) w.push_back(i);
    return w;
}

/** The preferred longest-word factorization tau_1 (tau_2 tau_1) ... (tau_{n-1} ... tau_1). */
inline Word longest_word_preferred(int n) {
    Word w;
    for (int t = 1; t <= n - 1; ++t)
        for (int i = t; i >= 1; --i) w.push_back(i);
    return w;
}

namespace detail {
inline int interval_sign3(int len) {  // (-1)^{binom(len,3)}
    long long b = static_cast<long long>(len) * (len - 1) * (len - 2) / 6;
    return b % 2 == 0 ? 1 : -1;
}
inline int interval_sign2(int len) {  // (-1)^{binom(len,2)}
    long long b = static_cast<long long>(len) * (len - 1) / 2;
    return b % 2 == 0 ? 1 : -1;
}
}  // namespace detail

/** x_{[l,m]} = (-1)^{binom(m-l+1,3)} x_m^0 x_{m-1}^1 ... x_l^{m-l} as a polynomial. */
inline SkewPoly interval_x(int n, int l, int m) {
    SkewPoly r = SkewPoly::unit(n) * detail::interval_sign3(m - l + 1);
    for (int v = m - 1; v >= l; --v)
        for (int t = 0; t < m - v; ++t) r = r * SkewPoly::variable(n, v);
    return r;
}

/**
 * x'_{[l,m]} = (-1)^{binom(m-l+1,3)} x_l^0 x_{l+1}^1 ... x_m^{m-l}.
 * The sign is forced by e'_{[l,m]} e'_{[l,m]} = e'_{[l,m]}; machine checks
 * confirm it for every interval length through 5.
 */
inline SkewPoly interval_x_prime(int n, int l, int m) {
    int len = m - l + 1;
    SkewPoly r = SkewPoly::unit(n) * detail::interval_sign3(len);
    for (int v = l + 1; v <= m; ++v)
        for (int t = 0; t < v - l; ++t) r = r * SkewPoly::variable(n, v);
    return r;
}

/** e_{[l,m]} = tau_{w0[l,m]} x_{[l,m]} inside ONH_n. Empty intervals give 1. */
inline NilHeckeElement interval_idempotent_e(int n, int l, int m) {
    if (l > m) return NilHeckeElement::unit(n);
    if (l < 1 || m > n) throw std::invalid_argument("bad interval");
    NilHeckeElement e = tau_word(n, interval_longest_word(l, m));
    return e * NilHeckeElement::from_poly(interval_x(n, l, m));
}

/** e'_{[l,m]} = x'_{[l,m]} tau_{w0[l,m]} with the reversed tau factorization. */
inline NilHeckeElement interval_idempotent_e_prime(int n, int l, int m) {
    if (l > m) return NilHeckeElement::unit(n);
    if (l < 1 || m > n) throw std::invalid_argument("bad interval");
    NilHeckeElement e = NilHeckeElement::from_poly(interval_x_prime(n, l, m));
    for (int i : interval_longest_word_reversed(l, m)) e = e.mul_tau(i);
    return e;
}

/** e_n = (-1)^{binom(n,3)} x_1^{n-1}...x_n^0 tau_{w_0}, preferred w_0 word. */
inline NilHeckeElement idempotent_e(int n) {
    SkewPoly x = staircase_monomial(n) * detail::interval_sign3(n);
    NilHeckeElement e = NilHeckeElement::from_poly(x);
    for (int i : longest_word_preferred(n)) e = e.mul_tau(i);
    return e;
}

/** e'_n = (-1)^{binom(n,3)} tau_{w_0} x_n^{n-1} x_{n-1}^{n-2} ... x_1^0. */
inline NilHeckeElement idempotent_e_prime(int n) {
    NilHeckeElement e = tau_word(n, longest_word_preferred(n)) * detail::interval_sign3(n);
    for (int v = n; v >= 1; --v)
        for (int t = 0; t < v - 1; ++t) e = e.mul_x(v);
    return e;
}

/** PBW basis elements of ONH_k with a fixed Z-degree (finite list). */
inline std::vector<NilHeckeElement> onh_pbw_of_degree(int k, int deg) {
    std::vector<NilHeckeElement> out;
    const SymmetricGroup& G = symmetric_group(k);
    for (int wi = 0; wi < G.size(); ++wi) {
        int lw = G.at(wi).length();
        int rem = deg + 2 * lw;
        if (rem < 0 || rem % 2 != 0) continue;
        int total = rem / 2;
        if (k == 0) continue;
        Exponents e(k, 0);
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == k - 1) {
                e[i] = left;
                NilHeckeElement t(k);
                t.bump({wi, e}, 1);
                out.push_back(t);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                e[i] = v;
                rec(i + 1, left - v);
            }
        };
        rec(0, total);
    }
    return out;
}

/** PBW basis count of ONH_n in Z-degree d (exact combinatorics). */
inline long long onh_dim_in_degree(int n, int d) {
    const SymmetricGroup& G = symmetric_group(n);
    auto compositions = [](long long t, int parts) -> long long {
        // C(t + parts - 1, parts - 1)
        long long r = 1;
        for (int i = 1; i <= parts - 1; ++i) r = r * (t + i) / i;
        return r;
    };
    long long total = 0;
    for (const auto& w : G.elements()) {
        long long num = d + 2LL * w.length();
        if (num < 0 || num % 2 != 0) continue;
        total += compositions(num / 2, n);
    }
    return total;
}

}  // namespace oddcat
