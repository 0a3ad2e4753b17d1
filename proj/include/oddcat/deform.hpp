/**
 * @file deform.hpp
 * @brief The deformation coefficient superalgebra A_n, the polynomial a^n(t),
 *        deformed cyclotomic quotients ONH_k^n, the odd equivariant
 *        Grassmannian superalgebra M_k^n with its matrix-ring model, the
 *        Grassmannian bimodule, and the complementary isomorphism gamma.
 *
 * Grading convention: deg(c_i) = 2i, so deg(chi_j) = 4j and deg(d) = 2.
 * This keeps a^n(x_1) and h'_m homogeneous against deg(x_i) = 2; parities
 * are untouched (chi_j even, d odd).
 */
#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <vector>

#include "evenoracle.hpp"
#include "oddnilhecke.hpp"
#include "oddsym.hpp"

namespace oddcat {

/** Monomial of A_n: chi exponents beta_1..beta_{floor(n/2)} and a d-flag. */
struct AnMono {
    std::vector<int> chi;
    bool d = false;

    bool operator<(const AnMono& o) const {
        if (d != o.d) return d < o.d;
        return chi < o.chi;
    }
    bool operator==(const AnMono& o) const { return d == o.d && chi == o.chi; }

    int zdegree() const {
        int s = d ? 2 : 0;
        for (size_t j = 0; j < chi.size(); ++j) s += 4 * static_cast<int>(j + 1) * chi[j];
        return s;
    }
    int parity() const { return d ? 1 : 0; }
};

inline AnMono an_unit_mono(int n) { return AnMono{std::vector<int>(n / 2, 0), false}; }

/** Product of monomials; nullopt when the relations kill it. */
inline std::optional<AnMono> an_mono_mul(int n, const AnMono& a, const AnMono& b) {
    if (a.d && b.d) return std::nullopt;  // d^2 = 0
    AnMono r = an_unit_mono(n);
    for (size_t j = 0; j < r.chi.size(); ++j) r.chi[j] = a.chi[j] + b.chi[j];
    r.d = a.d || b.d;
    if (r.d && n % 2 == 0 && n / 2 >= 1 && r.chi[n / 2 - 1] > 0)
        return std::nullopt;  // d chi_{n/2} = 0 for even n
    return r;
}

/** Element of A_n. Commutative; odd part squares to zero structurally. */
class AnScalar {
public:
    AnScalar() : n_(0) {}
    explicit AnScalar(int n) : n_(n) {}
    static AnScalar unit(int n) { return monomial(n, an_unit_mono(n), 1); }
    static AnScalar monomial(int n, AnMono m, Int c) {
        AnScalar r(n);
        if (c != 0) {
            if (m.d && n % 2 == 0 && n / 2 >= 1 && m.chi[n / 2 - 1] > 0) return r;
            r.terms_[std::move(m)] = c;
        }
        return r;
    }
    /** Deformation generator c_i (c_0 = 1, c_i = 0 for i > n). */
    static AnScalar c(int n, int i) {
        if (i == 0) return unit(n);
        if (i < 0 || i > n) return AnScalar(n);
        AnMono m = an_unit_mono(n);
        if (i % 2 == 0) {
            m.chi[i / 2 - 1] = 1;
        } else {
            m.d = true;
            if (i > 1) m.chi[(i - 1) / 2 - 1] = 1;
        }
        return monomial(n, std::move(m), 1);
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<AnMono, Int>& terms() const { return terms_; }

    AnScalar operator+(const AnScalar& o) const {
        AnScalar r = *this;
        for (const auto& [m, c] : o.terms_) r.bump(m, c);
        return r;
    }
    AnScalar operator-() const {
        AnScalar r(n_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    AnScalar operator-(const AnScalar& o) const { return *this + (-o); }
    AnScalar operator*(Int c) const {
        AnScalar r(n_);
        if (c == 0) return r;
        for (const auto& [m, v] : terms_) r.terms_[m] = checked_mul(v, c);
        return r;
    }
    AnScalar operator*(const AnScalar& o) const {
        AnScalar r(n_);
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) {
                auto m = an_mono_mul(n_, a, b);
                if (m) r.bump(std::move(*m), checked_mul(ca, cb));
            }
        return r;
    }
    bool operator==(const AnScalar& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const AnScalar& o) const { return !(*this == o); }

    AnScalar parity_component(int p) const {
        AnScalar r(n_);
        for (const auto& [m, c] : terms_)
            if (m.parity() == p) r.terms_[m] = c;
        return r;
    }
    bool is_homogeneous() const {
        bool first = true;
        int d = 0, p = 0;
        for (const auto& [m, c] : terms_) {
            (void)c;
            if (first) { d = m.zdegree(); p = m.parity(); }
            else if (m.zdegree() != d || m.parity() != p) return false;
            first = false;
        }
        return true;
    }

    /** Specializations: d -> 0 (Kang-Kashiwara-Oh) or all c_i -> 0 (undeformed). */
    AnScalar specialize_d0() const {
        AnScalar r(n_);
        for (const auto& [m, c] : terms_)
            if (!m.d) r.terms_[m] = c;
        return r;
    }
    Int constant_term() const {
        auto it = terms_.find(an_unit_mono(n_));
        return it == terms_.end() ? 0 : it->second;
    }

    void bump(AnMono m, Int c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[std::move(m)] = c;
        } else {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << (c >= 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Int a = c < 0 ? -c : c;
            bool anyvar = m.d;
            for (int e : m.chi) anyvar = anyvar || e > 0;
            if (a != 1 || !anyvar) os << a;
            if (m.d) os << "d";
            for (size_t j = 0; j < m.chi.size(); ++j) {
                if (m.chi[j] == 0) continue;
                os << "chi" << (j + 1);
                if (m.chi[j] > 1) os << "^" << m.chi[j];
            }
        }
        return os.str();
    }

private:
    int n_;
    std::map<AnMono, Int> terms_;
};

inline AnScalar operator*(Int c, const AnScalar& a) { return a * c; }

/** Enumerate the monomial basis of A_n in a fixed Z-degree. */
inline std::vector<AnMono> an_monomials_of_degree(int n, int deg) {
    std::vector<AnMono> out;
    if (deg < 0) return out;
    int half = n / 2;
    std::function<void(AnMono&, int, int)> rec = [&](AnMono& m, int j, int rem) {
        if (j == half) {
            if (rem == 0) out.push_back(m);
            return;
        }
        int step = 4 * (j + 1);
        for (int e = 0; e * step <= rem; ++e) {
            m.chi[j] = e;
            rec(m, j + 1, rem - e * step);
        }
        m.chi[j] = 0;
    };
    AnMono m = an_unit_mono(n);
    rec(m, 0, deg);
    if (deg >= 2) {
        AnMono md = an_unit_mono(n);
        md.d = true;
        std::function<void(AnMono&, int, int)> recd = [&](AnMono& mm, int j, int rem) {
            if (j == half) {
                if (rem == 0) {
                    if (!(n % 2 == 0 && half >= 1 && mm.chi[half - 1] > 0)) out.push_back(mm);
                }
                return;
            }
            int step = 4 * (j + 1);
            for (int e = 0; e * step <= rem; ++e) {
                mm.chi[j] = e;
                recd(mm, j + 1, rem - e * step);
            }
            mm.chi[j] = 0;
        };
        recd(md, 0, deg - 2);
    }
    return out;
}

/** grdim(A_n) as an exact series. */
inline GradedSeries an_grdim_series(int n) {
    int half = n / 2;
    // even part: Z[chi_1..chi_half], chi_j of degree 4j = 2*(2j)
    GradedSeries even(GradedScalar::one());
    for (int j = 1; j <= half; ++j) even = even * GradedSeries::geometric(2 * j);
    GradedSeries odd(GradedScalar::q(2));
    int odd_top = (n % 2 == 0) ? half - 1 : half;
    for (int j = 1; j <= odd_top; ++j) odd = odd * GradedSeries::geometric(2 * j);
    return even + odd;
}

/**
 * Polynomial in the odd variable t with left A_n coefficients,
 * t a = (-1)^{|a|} a t.
 */
class AnPolynomial {
public:
    AnPolynomial() : n_(0) {}
    explicit AnPolynomial(int n) : n_(n) {}
    static AnPolynomial scalar(const AnScalar& a) {
        AnPolynomial p(a.n());
        p.coeffs_.push_back(a);
        p.trim();
        return p;
    }
    static AnPolynomial t(int n) {
        AnPolynomial p(n);
        p.coeffs_.push_back(AnScalar(n));
        p.coeffs_.push_back(AnScalar::unit(n));
        return p;
    }

    int n() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree_t() const { return static_cast<int>(coeffs_.size()) - 1; }
    AnScalar coeff(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : AnScalar(n_);
    }

    AnPolynomial operator+(const AnPolynomial& o) const {
        AnPolynomial r(n_);
        size_t len = std::max(coeffs_.size(), o.coeffs_.size());
        r.coeffs_.resize(len, AnScalar(n_));
        for (size_t i = 0; i < len; ++i) {
            if (i < coeffs_.size()) r.coeffs_[i] = r.coeffs_[i] + coeffs_[i];
            if (i < o.coeffs_.size()) r.coeffs_[i] = r.coeffs_[i] + o.coeffs_[i];
        }
        r.trim();
        return r;
    }
    AnPolynomial operator-() const {
        AnPolynomial r(n_);
        for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
        return r;
    }
    AnPolynomial operator-(const AnPolynomial& o) const { return *this + (-o); }
    AnPolynomial operator*(const AnPolynomial& o) const {
        // (a t^i)(b t^j) = (-1)^{i |b|} a b t^{i+j}
        AnPolynomial r(n_);
        r.coeffs_.resize(coeffs_.size() + o.coeffs_.size(), AnScalar(n_));
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            for (size_t j = 0; j < o.coeffs_.size(); ++j) {
                for (int p = 0; p <= 1; ++p) {
                    AnScalar part = o.coeffs_[j].parity_component(p);
                    if (part.is_zero()) continue;
                    Int sign = (static_cast<long long>(i) * p) % 2 == 0 ? 1 : -1;
                    r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * part * sign;
                }
            }
        }
        r.trim();
        return r;
    }
    bool operator==(const AnPolynomial& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }
    bool operator!=(const AnPolynomial& o) const { return !(*this == o); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    int n_;
    std::vector<AnScalar> coeffs_;
};

/** a^n(t) = sum_{l=0}^{n} (-1)^l t^l c_{n-l}, stored with left coefficients. */
inline AnPolynomial a_poly(int n) {
    AnPolynomial r(n);
    AnPolynomial t = AnPolynomial::t(n);
    for (int l = 0; l <= n; ++l) {
        AnPolynomial term = AnPolynomial::scalar(AnScalar::c(n, n - l));
        for (int i = 0; i < l; ++i) term = t * term;  // t^l on the left
        r = r + (l % 2 == 0 ? term : -term);
    }
    return r;
}

/** Both twisted commutation relations of a^n(t). */
inline bool a_poly_relations_hold(int n) {
    AnPolynomial a = a_poly(n);
    AnPolynomial t = AnPolynomial::t(n);
    AnPolynomial d2 = AnPolynomial::scalar(AnScalar::c(n, 1) * 2);
    bool r1 = (t * a == a * (t - d2));
    AnPolynomial rhs = (n % 2 == 0) ? (t + d2) * a : (t - d2) * a;
    bool r2 = (a * t == rhs);
    return r1 && r2;
}

/** Element of OL_k tensor A_n (stored as A_n-monomial -> k-variable SkewPoly). */
class OlkAn {
public:
    OlkAn() : k_(0), n_(0) {}
    OlkAn(int k, int n) : k_(k), n_(n) {}
    static OlkAn from(const SkewPoly& f, const AnScalar& a) {
        OlkAn r(f.n(), a.n());
        for (const auto& [m, c] : a.terms()) r.slots_[m] = f * c;
        r.clean();
        return r;
    }
    static OlkAn unit(int k, int n) { return from(SkewPoly::unit(k), AnScalar::unit(n)); }

    int k() const { return k_; }
    int n() const { return n_; }
    bool is_zero() const { return slots_.empty(); }
    const std::map<AnMono, SkewPoly>& slots() const { return slots_; }

    OlkAn operator+(const OlkAn& o) const {
        OlkAn r = *this;
        for (const auto& [m, f] : o.slots_) {
            auto it = r.slots_.find(m);
            if (it == r.slots_.end()) r.slots_[m] = f;
            else it->second = it->second + f;
        }
        r.clean();
        return r;
    }
    OlkAn operator-() const {
        OlkAn r(k_, n_);
        for (const auto& [m, f] : slots_) r.slots_[m] = -f;
        return r;
    }
    OlkAn operator-(const OlkAn& o) const { return *this + (-o); }
    OlkAn operator*(Int c) const {
        OlkAn r(k_, n_);
        if (c == 0) return r;
        for (const auto& [m, f] : slots_) r.slots_[m] = f * c;
        return r;
    }
    /** Koszul product: (f ox a)(g ox b) = (-1)^{|a||g|} fg ox ab. */
    OlkAn operator*(const OlkAn& o) const {
        OlkAn r(k_, n_);
        for (const auto& [m1, f1] : slots_) {
            int pa = AnMono(m1).parity();
            for (const auto& [m2, f2] : o.slots_) {
                auto m = an_mono_mul(n_, m1, m2);
                if (!m) continue;
                SkewPoly g = pa == 0 ? f2 : (f2.parity_component(0) - f2.parity_component(1));
                SkewPoly prod = f1 * g;
                if (prod.is_zero()) continue;
                auto it = r.slots_.find(*m);
                if (it == r.slots_.end()) r.slots_[*m] = prod;
                else it->second = it->second + prod;
            }
        }
        r.clean();
        return r;
    }
    /** Right multiplication by a scalar from A_n. */
    OlkAn scale(const AnScalar& a) const { return *this * from(SkewPoly::unit(k_), a); }

    bool operator==(const OlkAn& o) const {
        return k_ == o.k_ && n_ == o.n_ && slots_ == o.slots_;
    }
    bool operator!=(const OlkAn& o) const { return !(*this == o); }

    void add_slot(const AnMono& m, const SkewPoly& f) {
        auto it = slots_.find(m);
        if (it == slots_.end()) slots_[m] = f;
        else it->second = it->second + f;
        if (slots_[m].is_zero()) slots_.erase(m);
    }

    void clean() {
        for (auto it = slots_.begin(); it != slots_.end();) {
            if (it->second.is_zero()) it = slots_.erase(it);
            else ++it;
        }
    }

private:
    int k_, n_;
    std::map<AnMono, SkewPoly> slots_;
};

/** h'_m = sum_{r=0}^m (-1)^r h_{m-r} ox c_r in OL_k tensor A_n. */
inline OlkAn h_prime(int m, int k, int n) {
    OlkAn r(k, n);
    for (int t = 0; t <= m; ++t) {
        AnScalar cr = AnScalar::c(n, t);
        if (cr.is_zero()) continue;
        r = r + OlkAn::from(complete(m - t, k) * (t % 2 == 0 ? 1 : -1), cr);
    }
    return r;
}

/** Element of ONH_k tensor A_n (A_n-monomial -> nilHecke element). */
class OnhAn {
public:
    OnhAn() : k_(0), n_(0) {}
    OnhAn(int k, int n) : k_(k), n_(n) {}
    static OnhAn from(const NilHeckeElement& h, const AnScalar& a) {
        OnhAn r(h.n(), a.n());
        for (const auto& [m, c] : a.terms()) r.slots_[m] = h * c;
        r.clean();
        return r;
    }
    static OnhAn unit(int k, int n) {
        return from(NilHeckeElement::unit(k), AnScalar::unit(n));
    }

    int k() const { return k_; }
    int n() const { return n_; }
    bool is_zero() const { return slots_.empty(); }
    const std::map<AnMono, NilHeckeElement>& slots() const { return slots_; }

    OnhAn operator+(const OnhAn& o) const {
        OnhAn r = *this;
        for (const auto& [m, h] : o.slots_) {
            auto it = r.slots_.find(m);
            if (it == r.slots_.end()) r.slots_[m] = h;
            else it->second = it->second + h;
        }
        r.clean();
        return r;
    }
    OnhAn operator-() const {
        OnhAn r(k_, n_);
        for (const auto& [m, h] : slots_) r.slots_[m] = -h;
        return r;
    }
    OnhAn operator-(const OnhAn& o) const { return *this + (-o); }
    OnhAn operator*(Int c) const {
        OnhAn r(k_, n_);
        if (c == 0) return r;
        for (const auto& [m, h] : slots_) r.slots_[m] = h * c;
        return r;
    }
    OnhAn operator*(const OnhAn& o) const {
        OnhAn r(k_, n_);
        for (const auto& [m1, h1] : slots_) {
            int pa = m1.parity();
            for (const auto& [m2, h2] : o.slots_) {
                auto m = an_mono_mul(n_, m1, m2);
                if (!m) continue;
                NilHeckeElement g =
                    pa == 0 ? h2 : (h2.parity_component(0) - h2.parity_component(1));
                NilHeckeElement prod = h1 * g;
                if (prod.is_zero()) continue;
                auto it = r.slots_.find(*m);
                if (it == r.slots_.end()) r.slots_[*m] = prod;
                else it->second = it->second + prod;
            }
        }
        r.clean();
        return r;
    }
    bool operator==(const OnhAn& o) const {
        return k_ == o.k_ && n_ == o.n_ && slots_ == o.slots_;
    }
    bool operator!=(const OnhAn& o) const { return !(*this == o); }

    /** View inside ONH_m tensor A_n for m >= k strands. */
    OnhAn widened(int m) const {
        OnhAn r(m, n_);
        for (const auto& [mono, h] : slots_) r.slots_[mono] = h.widened(m);
        return r;
    }

    void add_slot(const AnMono& m, const NilHeckeElement& h) {
        auto it = slots_.find(m);
        if (it == slots_.end()) slots_[m] = h;
        else it->second = it->second + h;
        if (slots_[m].is_zero()) slots_.erase(m);
    }
    void clean() {
        for (auto it = slots_.begin(); it != slots_.end();) {
            if (it->second.is_zero()) it = slots_.erase(it);
            else ++it;
        }
    }

private:
    int k_, n_;
    std::map<AnMono, NilHeckeElement> slots_;
};

/** Z-degree of a homogeneous element of ONH_k ox A_n; throws when mixed. */
inline int onhan_degree(const OnhAn& elt) {
    int deg = 0;
    bool found = false;
    for (const auto& [mono, h] : elt.slots())
        for (const auto& [key, c] : h.terms()) {
            (void)c;
            int d = h.term_degree(key).z + mono.zdegree();
            if (!found) deg = d, found = true;
            else if (d != deg) throw std::invalid_argument("inhomogeneous element");
        }
    return deg;
}

/** a^n(x_1) = sum_l (-1)^l x_1^l ox c_{n-l} inside ONH_k tensor A_n. */
inline OnhAn a_poly_at_x1(int k, int n) {
    OnhAn r(k, n);
    NilHeckeElement x1pow = NilHeckeElement::unit(k);
    for (int l = 0; l <= n; ++l) {
        AnScalar c = AnScalar::c(n, n - l);
        if (!c.is_zero()) r = r + OnhAn::from(x1pow * (l % 2 == 0 ? 1 : -1), c);
        if (l < n) x1pow = x1pow.mul_x(1);
    }
    return r;
}

/** Power-of-X entry table over OL_k: literal powers and the recursion. */
class XPowerTable {
public:
    explicit XPowerTable(int k) : k_(k) {}

    /** The displayed matrix X itself. */
    std::vector<std::vector<SkewPoly>> matrix_X() const {
        std::vector<std::vector<SkewPoly>> X(k_, std::vector<SkewPoly>(k_, SkewPoly(k_)));
        for (int i = 1; i <= k_; ++i) {
            long long b = static_cast<long long>(i - 1) * (i - 2) / 2;
            X[i - 1][0] = elementary(i, k_) * (b % 2 == 0 ? 1 : -1);
            if (i + 1 <= k_) X[i - 1][i] = SkewPoly::unit(k_);
        }
        return X;
    }

    /** Literal matrix power, row-entry-first products. */
    std::vector<std::vector<SkewPoly>> literal_power(int m) const {
        auto X = matrix_X();
        std::vector<std::vector<SkewPoly>> R(k_, std::vector<SkewPoly>(k_, SkewPoly(k_)));
        for (int i = 0; i < k_; ++i) R[i][i] = SkewPoly::unit(k_);
        for (int t = 0; t < m; ++t) {
            std::vector<std::vector<SkewPoly>> next(k_, std::vector<SkewPoly>(k_, SkewPoly(k_)));
            for (int i = 0; i < k_; ++i)
                for (int j = 0; j < k_; ++j)
                    for (int l = 0; l < k_; ++l) next[i][j] = next[i][j] + R[i][l] * X[l][j];
            R = std::move(next);
        }
        return R;
    }

    /** Recursion: b^m_{i,j} = h_{m+i-j} - sum_{l=1}^{i-1} h_l b^m_{i-l,j} for
     *  j <= m, and delta_{i+m,j} otherwise (1-based i,j). */
    SkewPoly entry(int m, int i, int j) const {
        auto key = std::make_tuple(m, i, j);
        std::lock_guard<std::recursive_mutex> lock(mtx_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        SkewPoly r(k_);
        if (j > m) {
            if (i + m == j) r = SkewPoly::unit(k_);
        } else {
            r = complete(m + i - j, k_);
            for (int l = 1; l <= i - 1; ++l) r = r - complete(l, k_) * entry(m, i - l, j);
        }
        memo_[key] = r;
        return r;
    }

private:
    int k_;
    mutable std::recursive_mutex mtx_;
    mutable std::map<std::tuple<int, int, int>, SkewPoly> memo_;
};

/** C_{i,j} = (-1)^n sum_{r=0}^n (-1)^r b^{n-r}_{i,j} ox c_r (1-based i,j). */
inline OlkAn c_matrix_entry(int k, int n, int i, int j, const XPowerTable& xp) {
    OlkAn r(k, n);
    for (int t = 0; t <= n; ++t) {
        AnScalar ct = AnScalar::c(n, t);
        if (ct.is_zero()) continue;
        Int s = ((n + t) % 2 == 0) ? 1 : -1;
        r = r + OlkAn::from(xp.entry(n - t, i, j) * s, ct);
    }
    return r;
}

/** Decreasing h-words with parts <= maxpart and total size = size. */
inline std::vector<Word> decreasing_words(int size, int maxpart) {
    std::vector<Word> out;
    Word cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(size, maxpart);
    return out;
}

/** The quotient map OL_n -> A_n on generators: eps_i -> (-1)^{binom(i,2)} c_i. */
inline AnScalar bar_epsilon_word(int n, const Word& w) {
    AnScalar r = AnScalar::unit(n);
    for (int i : w) {
        long long b = static_cast<long long>(i) * (i - 1) / 2;
        r = r * (AnScalar::c(n, i) * (b % 2 == 0 ? 1 : -1));
    }
    return r;
}

/**
 * The odd equivariant Grassmannian superalgebra M_k^n, realized through the
 * bimodule model (OL_k ox OL_{n-k}) ox_{OL_n} A_n with the twisted right
 * OL_n-action. Elements are canonicalized over the Schur box basis
 * { s_lambda ox 1 ox 1 : lambda inside the (n-k)^k box } with A_n
 * coefficients, by exact degreewise integer solves.
 */
class GrassmannianModel {
public:
    GrassmannianModel(int k, int n) : k_(k), n_(n) {
        if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
        for (int s = 0; s <= k * (n - k); ++s)
            for (const auto& lam : Partition::all_of_size(s, k, n - k)) box_.push_back(lam);
    }

    static const GrassmannianModel& get(int k, int n) {
        static std::map<std::pair<int, int>, std::unique_ptr<GrassmannianModel>> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(k, n);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, std::make_unique<GrassmannianModel>(k, n)).first;
        return *it->second;
    }

    int k() const { return k_; }
    int n() const { return n_; }
    const std::vector<Partition>& box() const { return box_; }
    int box_index(const Partition& lam) const {
        for (size_t i = 0; i < box_.size(); ++i)
            if (box_[i] == lam) return static_cast<int>(i);
        throw std::invalid_argument("partition not in box");
    }

    /** Twisted action element T(eps_r) in OPol_n. */
    SkewPoly twisted_eps(int r) const {
        SkewPoly out(n_);
        for (int j = 0; j <= r; ++j) {
            Int s = (static_cast<long long>(r - j) * j) % 2 == 0 ? 1 : -1;
            SkewPoly a = elementary(r - j, k_).widened(n_);
            SkewPoly b = elementary(j, n_ - k_).shifted(n_, k_);
            out = out + a * b * s;
        }
        return out;
    }
    SkewPoly twisted_eps_word(const Word& w) const {
        SkewPoly r = SkewPoly::unit(n_);
        for (int i : w) r = r * twisted_eps(i);
        return r;
    }

    using Coords = std::map<std::pair<int, AnMono>, Int>;  // (box index, A_n monomial)

    /** Canonical coordinates of f ox mono with f an n-variable polynomial in
     *  the span of OL^{[1,k],[k+1,n]}. */
    Coords canonicalize_nvar(const SkewPoly& f, const AnMono& mono) const {
        Coords out;
        if (f.is_zero()) return out;
        for (int dz = 0; dz <= f.max_zdegree(); dz += 2) {
            SkewPoly piece = f.component(dz);
            if (piece.is_zero()) continue;
            const DegreeSolver& ds = degree_solver(dz);
            SparseVec<Int> rhs;
            for (const auto& [e, c] : piece.terms()) {
                auto it = ds.row_of.find(e);
                if (it == ds.row_of.end())
                    throw std::logic_error("polynomial outside the bimodule span");
                rhs.emplace_back(it->second, c);
            }
            std::sort(rhs.begin(), rhs.end());
            auto sol = ds.solver->solve(rhs);
            if (!sol) throw std::logic_error("bimodule coordinate solve failed");
            for (size_t j = 0; j < ds.columns.size(); ++j) {
                if ((*sol)[j] == 0) continue;
                const auto& [bi, word] = ds.columns[j];
                AnScalar barw = bar_epsilon_word(n_, word);
                for (const auto& [m2, c2] : barw.terms()) {
                    auto m = an_mono_mul(n_, m2, mono);
                    if (!m) continue;
                    bump(out, {bi, *m}, checked_mul((*sol)[j], c2));
                }
            }
        }
        return out;
    }

    Coords canonicalize(const OlkAn& elt) const {
        Coords out;
        for (const auto& [mono, f] : elt.slots()) {
            Coords part = canonicalize_nvar(f.widened(n_), mono);
            for (const auto& [key, c] : part) bump(out, key, c);
        }
        return out;
    }

    static void bump(Coords& c, std::pair<int, AnMono> key, Int v) {
        if (v == 0) return;
        auto it = c.find(key);
        if (it == c.end()) {
            c[std::move(key)] = v;
        } else {
            it->second = checked_add(it->second, v);
            if (it->second == 0) c.erase(it);
        }
    }

private:
    struct DegreeSolver {
        std::map<Exponents, int> row_of;
        std::vector<std::pair<int, Word>> columns;  // (box index, eps word)
        std::unique_ptr<IntSolver> solver;
    };

    const DegreeSolver& degree_solver(int dz) const {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = solvers_.find(dz);
        if (it != solvers_.end()) return *it->second;
        auto ds = std::make_unique<DegreeSolver>();
        std::vector<SparseVec<Int>> cols;
        for (size_t bi = 0; bi < box_.size(); ++bi) {
            int rest = dz - 2 * box_[bi].size();
            if (rest < 0 || rest % 2 != 0) continue;
            SkewPoly slam = schur(box_[bi], k_).widened(n_);
            for (const Word& w : decreasing_words(rest / 2, n_)) {
                SkewPoly col = slam * twisted_eps_word(w);
                if (col.is_zero()) continue;
                SparseVec<Int> v;
                for (const auto& [e, c] : col.terms()) {
                    auto rit = ds->row_of.find(e);
                    int row;
                    if (rit == ds->row_of.end()) {
                        row = static_cast<int>(ds->row_of.size());
                        ds->row_of.emplace(e, row);
                    } else {
                        row = rit->second;
                    }
                    v.emplace_back(row, c);
                }
                std::sort(v.begin(), v.end());
                cols.push_back(std::move(v));
                ds->columns.emplace_back(static_cast<int>(bi), w);
            }
        }
        ds->solver = std::make_unique<IntSolver>(std::move(cols),
                                                 static_cast<int>(ds->row_of.size()));
        auto [pos, ins] = solvers_.emplace(dz, std::move(ds));
        (void)ins;
        return *pos->second;
    }

    int k_, n_;
    std::vector<Partition> box_;
    mutable std::mutex mtx_;
    mutable std::map<int, std::unique_ptr<DegreeSolver>> solvers_;
};

/** Element of M_k^n in canonical Schur-box coordinates over A_n monomials. */
class MknElement {
public:
    MknElement() : k_(0), n_(0) {}
    MknElement(int k, int n) : k_(k), n_(n) {}
    static MknElement unit(int k, int n) {
        return from(OlkAn::unit(k, n));
    }
    static MknElement from(const OlkAn& rep) {
        MknElement r(rep.k(), rep.n());
        r.coords_ = GrassmannianModel::get(rep.k(), rep.n()).canonicalize(rep);
        return r;
    }
    static MknElement from_poly(int k, int n, const SkewPoly& f) {
        return from(OlkAn::from(f, AnScalar::unit(n)));
    }

    int k() const { return k_; }
    int n() const { return n_; }
    bool is_zero() const { return coords_.empty(); }
    const GrassmannianModel::Coords& coords() const { return coords_; }

    /** Representative in OL_k tensor A_n (sum of Schur box reps). */
    OlkAn representative() const {
        const auto& model = GrassmannianModel::get(k_, n_);
        OlkAn r(k_, n_);
        for (const auto& [key, c] : coords_) {
            r = r + OlkAn::from(schur(model.box()[key.first], k_) * c,
                                AnScalar::monomial(n_, key.second, 1));
        }
        return r;
    }

    MknElement operator+(const MknElement& o) const {
        MknElement r = *this;
        for (const auto& [key, c] : o.coords_) GrassmannianModel::bump(r.coords_, key, c);
        return r;
    }
    MknElement operator-() const {
        MknElement r(k_, n_);
        for (const auto& [key, c] : coords_) r.coords_[key] = -c;
        return r;
    }
    MknElement operator-(const MknElement& o) const { return *this + (-o); }
    MknElement operator*(Int c) const {
        MknElement r(k_, n_);
        if (c == 0) return r;
        for (const auto& [key, v] : coords_) r.coords_[key] = checked_mul(v, c);
        return r;
    }
    MknElement operator*(const MknElement& o) const {
        return from(representative() * o.representative());
    }
    /** Right multiplication by a scalar from A_n (free module structure). */
    MknElement scale(const AnScalar& a) const {
        MknElement r(k_, n_);
        for (const auto& [key, c] : coords_) {
            for (const auto& [m2, c2] : a.terms()) {
                auto m = an_mono_mul(n_, key.second, m2);
                if (m) GrassmannianModel::bump(r.coords_, {key.first, *m},
                                               checked_mul(c, c2));
            }
        }
        return r;
    }
    bool operator==(const MknElement& o) const {
        return k_ == o.k_ && n_ == o.n_ && coords_ == o.coords_;
    }
    bool operator!=(const MknElement& o) const { return !(*this == o); }

    bool is_homogeneous() const {
        bool first = true;
        Degree d(0, 0);
        const auto& model = GrassmannianModel::get(k_, n_);
        for (const auto& [key, c] : coords_) {
            (void)c;
            Degree t = key_degree(model, key);
            if (first) d = t;
            else if (!(d == t)) return false;
            first = false;
        }
        return true;
    }
    static Degree key_degree(const GrassmannianModel& model,
                             const std::pair<int, AnMono>& key) {
        int s = model.box()[key.first].size();
        return Degree(2 * s + key.second.zdegree(), (s + key.second.parity()) % 2);
    }

    std::string str() const {
        if (coords_.empty()) return "0";
        const auto& model = GrassmannianModel::get(k_, n_);
        std::ostringstream os;
        bool first = true;
        for (const auto& [key, c] : coords_) {
            if (!first) os << (c >= 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Int a = c < 0 ? -c : c;
            if (a != 1) os << a << "*";
            os << "s" << model.box()[key.first].str();
            os << "{" << AnScalar::monomial(n_, key.second, 1).str() << "}";
        }
        return os.str();
    }

private:
    int k_, n_;
    GrassmannianModel::Coords coords_;
};

inline MknElement mkn_h(int k, int n, int j) {
    return MknElement::from_poly(k, n, complete(j, k));
}
inline MknElement mkn_eps(int k, int n, int j) {
    return MknElement::from_poly(k, n, elementary(j, k));
}
inline MknElement mkn_h_prime(int m, int k, int n) {
    return MknElement::from(h_prime(m, k, n));
}

/** Box count: graded dimension of M_k^n over A_n restricted to the OL part. */
inline GradedSeries mkn_grdim_series(int k, int n) {
    GradedScalar boxsum;
    for (int s = 0; s <= k * (n - k); ++s) {
        Int cnt = static_cast<Int>(Partition::all_of_size(s, k, n - k).size());
        boxsum = boxsum + GradedScalar::monomial(cnt, 2 * s);
    }
    return an_grdim_series(n) * boxsum;
}

/**
 * The complementary isomorphism gamma_k^n : M_k^n -> M_{n-k}^n with
 * gamma(h'_r) = (-1)^{(k+1)r + binom(r,2)} eps_r ox 1.
 */
inline MknElement gamma_image_of_h_prime(int k, int n, int r) {
    long long e = static_cast<long long>(k + 1) * r + static_cast<long long>(r) * (r - 1) / 2;
    return MknElement::from_poly(n - k, n, elementary(r, n - k)) * (e % 2 == 0 ? 1 : -1);
}

}  // namespace oddcat
