/**
 * @file grading.hpp
 * @brief Arithmetic of the grading ring Z[q,q^-1,pi]/(pi^2-1), the (q,pi)
 *        quantum integers/factorials/binomials, and formal graded-dimension
 *        series with denominators of the form (1-q^{2i}).
 */
#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace oddcat {

/** Z-degree plus parity; additive under multiplication of homogeneous elements. */
struct Degree {
    int z = 0;
    int parity = 0;  // 0 or 1

    Degree() = default;
    Degree(int z_, int p_) : z(z_), parity(((p_ % 2) + 2) % 2) {}
    Degree operator+(const Degree& o) const { return Degree(z + o.z, parity + o.parity); }
    bool operator==(const Degree& o) const { return z == o.z && parity == o.parity; }
    bool operator!=(const Degree& o) const { return !(*this == o); }
};

/**
 * Element of Z[q,q^-1,pi]/(pi^2-1): finite map (q-exponent, pi-exponent in
 * {0,1}) -> nonzero integer. Immutable value semantics throughout.
 */
class GradedScalar {
public:
    using Key = std::pair<int, int>;

    GradedScalar() = default;
    static GradedScalar monomial(Int c, int qexp, int piexp = 0) {
        GradedScalar r;
        if (c != 0) r.coeffs_[{qexp, ((piexp % 2) + 2) % 2}] = c;
        return r;
    }
    static GradedScalar one() { return monomial(1, 0, 0); }
    static GradedScalar q(int e = 1) { return monomial(1, e, 0); }
    static GradedScalar pi() { return monomial(1, 0, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Key, Int>& coeffs() const { return coeffs_; }

    Int coeff(int qexp, int piexp) const {
        auto it = coeffs_.find({qexp, ((piexp % 2) + 2) % 2});
        return it == coeffs_.end() ? 0 : it->second;
    }

    GradedScalar operator+(const GradedScalar& o) const {
        GradedScalar r = *this;
        for (const auto& [k, v] : o.coeffs_) r.bump(k, v);
        return r;
    }
    GradedScalar operator-() const {
        GradedScalar r;
        for (const auto& [k, v] : coeffs_) r.coeffs_[k] = -v;
        return r;
    }
    GradedScalar operator-(const GradedScalar& o) const { return *this + (-o); }
    GradedScalar operator*(const GradedScalar& o) const {
        GradedScalar r;
        for (const auto& [k1, v1] : coeffs_)
            for (const auto& [k2, v2] : o.coeffs_)
                r.bump({k1.first + k2.first, (k1.second + k2.second) % 2}, checked_mul(v1, v2));
        return r;
    }
    GradedScalar operator*(Int c) const {
        GradedScalar r;
        if (c == 0) return r;
        for (const auto& [k, v] : coeffs_) r.coeffs_[k] = checked_mul(v, c);
        return r;
    }
    bool operator==(const GradedScalar& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const GradedScalar& o) const { return !(*this == o); }

    /** Substitute pi = 1 or pi = -1, leaving a Laurent polynomial in q. */
    GradedScalar specialize_pi(int value) const {
        if (value != 1 && value != -1) throw std::invalid_argument("pi must be +-1");
        GradedScalar r;
        for (const auto& [k, v] : coeffs_)
            r.bump({k.first, 0}, k.second == 1 && value == -1 ? -v : v);
        return r;
    }

    /** Drop all terms of q-degree above the bound (used for truncations). */
    GradedScalar truncate(int qbound) const {
        GradedScalar r;
        for (const auto& [k, v] : coeffs_)
            if (k.first <= qbound) r.coeffs_[k] = v;
        return r;
    }

    int min_q() const {
        int m = 0;
        bool first = true;
        for (const auto& [k, v] : coeffs_) {
            (void)v;
            if (first || k.first < m) m = k.first;
            first = false;
        }
        return m;
    }
    int max_q() const {
        int m = 0;
        bool first = true;
        for (const auto& [k, v] : coeffs_) {
            (void)v;
            if (first || k.first > m) m = k.first;
            first = false;
        }
        return m;
    }

    /**
     * Exact division; nullopt when the quotient does not exist in the ring.
     * Coefficients live in Z[pi]/(pi^2-1), which is not a domain, so
     * division is done through the pi = +-1 eigenvalues: f splits as
     * (f(1), f(-1)) and the quotient is reassembled, with integrality of
     * (h(1)+h(-1))/2 checked at the end.
     */
    std::optional<GradedScalar> divide_exact(const GradedScalar& g) const {
        if (g.is_zero()) return std::nullopt;
        auto h1 = laurent_divide(specialize_pi(1), g.specialize_pi(1));
        auto h2 = laurent_divide(specialize_pi(-1), g.specialize_pi(-1));
        if (!h1 || !h2) return std::nullopt;
        GradedScalar r;
        auto grab = [&](const GradedScalar& h, int qe) {
            auto it = h.coeffs_.find({qe, 0});
            return it == h.coeffs_.end() ? Int(0) : it->second;
        };
        std::map<int, bool> seen;
        for (const auto& [k, v] : h1->coeffs_) { (void)v; seen[k.first] = true; }
        for (const auto& [k, v] : h2->coeffs_) { (void)v; seen[k.first] = true; }
        for (const auto& [qe, flag] : seen) {
            (void)flag;
            Int a = grab(*h1, qe), b = grab(*h2, qe);
            if ((a + b) % 2 != 0 || (a - b) % 2 != 0) return std::nullopt;
            r.bump({qe, 0}, (a + b) / 2);
            r.bump({qe, 1}, (a - b) / 2);
        }
        if (!(r * g == *this)) return std::nullopt;
        return r;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : coeffs_) {
            Int c = v;
            if (!first) os << (c >= 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Int a = c < 0 ? -c : c;
            bool unit = (a == 1) && (k.first != 0 || k.second != 0);
            if (!unit) os << a;
            if (k.second) os << "pi";
            if (k.first != 0) {
                os << "q";
                if (k.first != 1) os << "^" << k.first;
            }
        }
        return os.str();
    }

private:
    void bump(const Key& k, Int v) {
        if (v == 0) return;
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_[k] = v;
        } else {
            it->second = checked_add(it->second, v);
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    // Laurent polynomial division for pi-free inputs (coefficients in Z).
    // A quotient h with f = g h has exponents in [min f - min g, max f - max g],
    // which bounds the descent and makes failure detectable.
    static std::optional<GradedScalar> laurent_divide(GradedScalar f, const GradedScalar& g) {
        if (g.is_zero()) return f.is_zero() ? std::optional<GradedScalar>(GradedScalar{})
                                            : std::nullopt;
        if (f.is_zero()) return GradedScalar{};
        GradedScalar h;
        int glead = g.max_q();
        Int gc = g.coeff(glead, 0);
        int lowbound = f.min_q() - g.min_q();
        while (!f.is_zero()) {
            int flead = f.max_q();
            Int fc = f.coeff(flead, 0);
            if (flead - glead < lowbound) return std::nullopt;
            if (fc % gc != 0) return std::nullopt;
            GradedScalar t = monomial(fc / gc, flead - glead);
            h = h + t;
            f = f - t * g;
            if (!f.is_zero() && f.max_q() >= flead) return std::nullopt;
        }
        return h;
    }

    std::map<Key, Int> coeffs_;
};

inline GradedScalar operator*(Int c, const GradedScalar& s) { return s * c; }

/** The (q,pi) quantum integer [n]. */
inline GradedScalar qpi_integer(int n) {
    GradedScalar r;
    if (n > 0) {
        for (int t = 0; t < n; ++t) r = r + GradedScalar::monomial(1, n - 1 - 2 * t, t % 2);
    } else if (n < 0) {
        int m = -n;
        // [n] = -pi^n ( q^{-n-1} + pi q^{-n-3} + ... + pi^{-n-1} q^{1+n} )
        for (int t = 0; t < m; ++t)
            r = r - GradedScalar::monomial(1, m - 1 - 2 * t, (n % 2 + 2 + t) % 2);
    }
    return r;
}

inline GradedScalar qpi_factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    GradedScalar r = GradedScalar::one();
    for (int i = 1; i <= n; ++i) r = r * qpi_integer(i);
    return r;
}

/** (q,pi) binomial coefficient; fails loudly if the division is not exact. */
inline GradedScalar qpi_binomial(int n, int r) {
    if (r < 0 || r > n) return GradedScalar{};
    auto q = qpi_factorial(n).divide_exact(qpi_factorial(r) * qpi_factorial(n - r));
    if (!q) throw std::logic_error("quantum binomial division left a remainder");
    return *q;
}

/**
 * Formal series numerator / prod_i (1 - q^{2i}), the only denominator shape
 * graded dimensions need here. Equality is decided exactly by clearing
 * denominators.
 */
class GradedSeries {
public:
    GradedSeries() : num_(GradedScalar::one()) {}
    explicit GradedSeries(GradedScalar num, std::vector<int> dens = {})
        : num_(std::move(num)), dens_(std::move(dens)) {
        for (int i : dens_)
            if (i <= 0) throw std::invalid_argument("denominator index must be positive");
        std::sort(dens_.begin(), dens_.end());
    }

    static GradedSeries zero() { return GradedSeries(GradedScalar{}); }
    static GradedSeries geometric(int i) {  // 1 / (1 - q^{2i})
        return GradedSeries(GradedScalar::one(), {i});
    }

    const GradedScalar& numerator() const { return num_; }
    const std::vector<int>& denominators() const { return dens_; }

    GradedSeries operator*(const GradedSeries& o) const {
        std::vector<int> d = dens_;
        d.insert(d.end(), o.dens_.begin(), o.dens_.end());
        return GradedSeries(num_ * o.num_, std::move(d));
    }
    GradedSeries operator*(const GradedScalar& s) const { return GradedSeries(num_ * s, dens_); }

    GradedSeries operator+(const GradedSeries& o) const {
        // common denominator: multiset max of the two denominator multisets
        std::map<int, int> c1 = counts(dens_), c2 = counts(o.dens_);
        std::map<int, int> cm = c1;
        for (auto [i, m] : c2) cm[i] = std::max(cm[i], m);
        GradedScalar n1 = num_, n2 = o.num_;
        std::vector<int> dens;
        for (auto [i, m] : cm) {
            for (int t = 0; t < m; ++t) dens.push_back(i);
            for (int t = 0; t < m - (c1.count(i) ? c1[i] : 0); ++t) n1 = n1 * one_minus_q2i(i);
            for (int t = 0; t < m - (c2.count(i) ? c2[i] : 0); ++t) n2 = n2 * one_minus_q2i(i);
        }
        return GradedSeries(n1 + n2, std::move(dens));
    }
    GradedSeries operator-(const GradedSeries& o) const {
        return *this + GradedSeries(-o.num_, o.dens_);
    }

    /** Truncated expansion: all terms of q-degree <= bound are exact. */
    GradedScalar expand(int bound) const {
        GradedScalar r = num_;
        for (int i : dens_) {
            // multiply by 1 + q^{2i} + q^{4i} + ... up to the bound window
            GradedScalar geo;
            int lo = r.is_zero() ? 0 : r.min_q();
            for (int e = 0; lo + e <= bound; e += 2 * i) geo = geo + GradedScalar::q(e);
            r = (r * geo).truncate(bound);
        }
        return r.truncate(bound);
    }

    /** Exact equality via cross-multiplication of denominators. */
    bool operator==(const GradedSeries& o) const {
        GradedScalar lhs = num_, rhs = o.num_;
        std::map<int, int> c1 = counts(dens_), c2 = counts(o.dens_);
        for (auto [i, m] : c2) {
            int have = c1.count(i) ? c1[i] : 0;
            for (int t = 0; t < std::max(0, m - have); ++t) lhs = lhs * one_minus_q2i(i);
        }
        for (auto [i, m] : c1) {
            int have = c2.count(i) ? c2[i] : 0;
            for (int t = 0; t < std::max(0, m - have); ++t) rhs = rhs * one_minus_q2i(i);
        }
        return lhs == rhs;
    }
    bool operator!=(const GradedSeries& o) const { return !(*this == o); }

    static GradedScalar one_minus_q2i(int i) {
        return GradedScalar::one() - GradedScalar::q(2 * i);
    }

private:
    static std::map<int, int> counts(const std::vector<int>& v) {
        std::map<int, int> c;
        for (int i : v) c[i]++;
        return c;
    }

    GradedScalar num_;
    std::vector<int> dens_;  // sorted; each i stands for a factor (1 - q^{2i})
};

}  // namespace oddcat
