/**
 * @file onhkn.hpp
 * @brief Elements of the deformed cyclotomic quotient ONH_k^n.
 *
 * An element carries its presentation-level representative in ONH_k ox A_n;
 * equality, zero tests and coordinate extraction go through the left action
 * on the column module (column.hpp), which the whole cyclotomic ideal
 * annihilates by construction. The k! x k! matrix-ring picture over M_k^n is
 * realized separately and checked against this representation by the
 * matrix-iso verification suite.
 *
 * Also here: the honest two-sided-ideal reduction at small scale (used to
 * cross-check the column model) and the first-row ideal membership
 * certificates for the C-matrix entries.
 */
#pragma once

#include "column.hpp"
#include "deform.hpp"

namespace oddcat {

/** Action fingerprint of an element on the column module: the images of all
 *  bounded-exponent generators with unit A_n part, vectorized. */
class ColumnActionIndex {
public:
    explicit ColumnActionIndex(int k, int n) : k_(k), n_(n) {}

    using RowKey = std::tuple<Exponents, Exponents, AnMono>;  // (input a, output a', mu)

    /** Action fingerprint: images of every bounded generator, vectorized.
     *  When the index is frozen, rows outside it signal "not in the span"
     *  via a sentinel column past the frozen range. */
    SparseVec<Int> action_vector(const OnhAn& elt) {
        const ColumnModule& C = ColumnModule::get(k_, n_);
        SparseVec<Int> v;
        int sentinel = 0;
        auto handle = [&](const Exponents& a) {
            ColumnVec g = ColumnVec::generator(k_, n_, a, an_unit_mono(n_));
            ColumnVec img = C.act(elt, g);
            for (const auto& [key, c] : img.terms()) {
                int row = row_of(a, key.first, key.second);
                // unknown rows after freezing: park at negative indices, which
                // no solver column can touch ("not in the span")
                if (row < 0) row = -1 - (sentinel++);
                v.emplace_back(row, c);
            }
        };
        if (k_ == 0) {
            handle(Exponents{});
        } else {
            Exponents a(k_, 0);
            std::function<void(int)> rec = [&](int i) {
                if (i == k_) {
                    handle(a);
                    return;
                }
                for (int e = 0; e <= n_ - (i + 1); ++e) {
                    a[i] = e;
                    rec(i + 1);
                }
                a[i] = 0;
            };
            rec(0);
        }
        std::sort(v.begin(), v.end());
        return v;
    }

    void freeze() { frozen_size_ = static_cast<int>(index_.size()); }
    int rows() const { return static_cast<int>(index_.size()); }

private:
    int row_of(const Exponents& in, const Exponents& out, const AnMono& mu) {
        RowKey key{in, out, mu};
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        if (frozen_size_ >= 0) return -1;
        int id = static_cast<int>(index_.size());
        index_.emplace(std::move(key), id);
        return id;
    }
    int k_, n_;
    int frozen_size_ = -1;
    std::map<RowKey, int> index_;
};

/**
 * The k! x k! matrix model of ONH_k^n over M_k^n realized inside the column
 * module: the column is free as a right M_k^n-module on the staircase
 * monomials xt^gamma, and matrix entries are the star-coordinates of the
 * acted generators. Plain matrix multiplication matches the algebra product
 * (verified by the matrix-iso suite).
 */
class MatrixModel {
public:
    using Entry = std::map<std::pair<int, AnMono>, Int>;  // M_k^n box coords
    using Matrix = std::vector<std::vector<Entry>>;       // [i][j]

    MatrixModel(int k, int n) : k_(k), n_(n), gm_(&GrassmannianModel::get(k, n)) {
        Exponents g(k, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == k_) {
                gammas_.push_back(g);
                return;
            }
            for (int e = 0; e <= k_ - 1 - i; ++e) {
                g[i] = e;
                rec(i + 1);
            }
            g[i] = 0;
        };
        if (k == 0) gammas_.push_back({});
        else rec(0);
    }

    static const MatrixModel& get(int k, int n) {
        static std::map<std::pair<int, int>, std::unique_ptr<MatrixModel>> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(k, n);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, std::make_unique<MatrixModel>(k, n)).first;
        return *it->second;
    }

    int rank() const { return static_cast<int>(gammas_.size()); }
    const std::vector<Exponents>& staircase() const { return gammas_; }

    SkewPoly tilde_monomial(const Exponents& e) const {
        long long s = 0;
        for (size_t i = 0; i < e.size(); ++i) s += static_cast<long long>(i) * e[i];
        return SkewPoly::monomial(k_, e, s % 2 == 0 ? 1 : -1);
    }

    /** Matrix of a homogeneous element; nullopt if a column fails to solve
     *  (which would falsify the free-module structure). */
    std::optional<Matrix> matrix_of(const OnhAn& elt, int elt_degree) const {
        Matrix m(rank(), std::vector<Entry>(rank()));
        const ColumnModule& C = ColumnModule::get(k_, n_);
        for (int j = 0; j < rank(); ++j) {
            ColumnVec vj(k_, n_);
            SkewPoly tj = tilde_monomial(gammas_[j]);
            for (const auto& [e, c] : tj.terms())
                vj = vj + ColumnVec::generator(k_, n_, e, an_unit_mono(n_)) * c;
            ColumnVec img = C.act(elt, C.reduce(vj));
            if (img.is_zero()) continue;
            int deg = elt_degree + 2 * exp_total(gammas_[j]) - k_ * (k_ - 1);
            const DegreeSolver& ds = degree_solver(deg);
            SparseVec<Int> rhs;
            for (const auto& [key, c] : img.terms()) {
                auto rit = ds.rows.find(key);
                if (rit == ds.rows.end()) return std::nullopt;
                rhs.emplace_back(rit->second, c);
            }
            std::sort(rhs.begin(), rhs.end());
            auto sol = ds.solver->solve(rhs);
            if (!sol) return std::nullopt;
            for (size_t t = 0; t < ds.cols.size(); ++t) {
                if ((*sol)[t] == 0) continue;
                const auto& [i, bi, mu] = ds.cols[t];
                m[i][j][{bi, mu}] += (*sol)[t];
            }
        }
        return m;
    }

    MknElement entry_element(const Entry& e) const {
        MknElement r(k_, n_);
        for (const auto& [key, c] : e)
            r = r + MknElement::from_poly(k_, n_, schur(gm_->box()[key.first], k_))
                        .scale(AnScalar::monomial(n_, key.second, c));
        return r;
    }

    static bool equal(const Matrix& a, const Matrix& b) { return a == b; }

private:
    struct DegreeSolver {
        std::map<ColumnVec::Key, int> rows;
        std::vector<std::tuple<int, int, AnMono>> cols;  // (gamma idx, box idx, mu)
        std::unique_ptr<IntSolver> solver;
    };

    /** Basis vector xt^gamma_i * s_lambda tau_{w_0} ox mu, reduced. */
    ColumnVec star(int i, const Partition& lam, const AnMono& mu) const {
        SkewPoly p = tilde_monomial(gammas_[i]) * schur(lam, k_);
        ColumnVec v(k_, n_);
        for (const auto& [e, c] : p.terms())
            v = v + ColumnVec::generator(k_, n_, e, mu) * c;
        return ColumnModule::get(k_, n_).reduce(v);
    }

    const DegreeSolver& degree_solver(int deg) const {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = solvers_.find(deg);
        if (it != solvers_.end()) return *it->second;
        auto ds = std::make_unique<DegreeSolver>();
        std::vector<SparseVec<Int>> cols;
        for (int i = 0; i < rank(); ++i) {
            for (size_t bi = 0; bi < gm_->box().size(); ++bi) {
                int rest = deg - 2 * exp_total(gammas_[i]) + k_ * (k_ - 1) -
                           2 * gm_->box()[bi].size();
                if (rest < 0) continue;
                for (const auto& mu : an_monomials_of_degree(n_, rest)) {
                    ColumnVec sv = star(i, gm_->box()[bi], mu);
                    SparseVec<Int> v;
                    for (const auto& [key, c] : sv.terms()) {
                        auto rit = ds->rows.find(key);
                        int row;
                        if (rit == ds->rows.end()) {
                            row = static_cast<int>(ds->rows.size());
                            ds->rows.emplace(key, row);
                        } else {
                            row = rit->second;
                        }
                        v.emplace_back(row, c);
                    }
                    std::sort(v.begin(), v.end());
                    cols.push_back(std::move(v));
                    ds->cols.emplace_back(i, static_cast<int>(bi), mu);
                }
            }
        }
        ds->solver = std::make_unique<IntSolver>(std::move(cols),
                                                 static_cast<int>(ds->rows.size()));
        auto [pos, ins] = solvers_.emplace(deg, std::move(ds));
        (void)ins;
        return *pos->second;
    }

    int k_, n_;
    const GrassmannianModel* gm_;
    std::vector<Exponents> gammas_;
    mutable std::mutex mtx_;
    mutable std::map<int, std::unique_ptr<DegreeSolver>> solvers_;
};

/** Element of ONH_k^n. */
class OnhKnElement {
public:
    OnhKnElement() : k_(0), n_(0) {}
    OnhKnElement(int k, int n) : k_(k), n_(n), rep_(k, n) {}
    static OnhKnElement from(const OnhAn& rep) {
        OnhKnElement r;
        r.k_ = rep.k();
        r.n_ = rep.n();
        r.rep_ = rep;
        return r;
    }
    static OnhKnElement unit(int k, int n) { return from(OnhAn::unit(k, n)); }

    int k() const { return k_; }
    int n() const { return n_; }
    const OnhAn& representative() const { return rep_; }

    /** The k! x k! matrix over M_k^n (homogeneous elements only). */
    std::optional<MatrixModel::Matrix> matrix() const {
        if (rep_.is_zero()) return MatrixModel::get(k_, n_).matrix_of(rep_, 0);
        return MatrixModel::get(k_, n_).matrix_of(rep_, onhan_degree(rep_));
    }

    OnhKnElement operator*(const OnhKnElement& o) const { return from(rep_ * o.rep_); }
    OnhKnElement operator+(const OnhKnElement& o) const { return from(rep_ + o.rep_); }
    OnhKnElement operator-(const OnhKnElement& o) const { return from(rep_ - o.rep_); }
    OnhKnElement operator*(Int c) const { return from(rep_ * c); }

    /** Zero in the quotient: the column action vanishes on all generators. */
    bool is_zero() const {
        if (rep_.is_zero()) return true;
        const ColumnModule& C = ColumnModule::get(k_, n_);
        Exponents a(k_, 0);
        bool zero = true;
        std::function<void(int)> rec = [&](int i) {
            if (!zero) return;
            if (i == k_) {
                ColumnVec g = ColumnVec::generator(k_, n_, a, an_unit_mono(n_));
                if (!C.act(rep_, g).is_zero()) zero = false;
                return;
            }
            for (int e = 0; e <= n_ - (i + 1) && zero; ++e) {
                a[i] = e;
                rec(i + 1);
            }
            a[i] = 0;
        };
        rec(0);
        return zero;
    }
    bool operator==(const OnhKnElement& o) const { return (*this - o).is_zero(); }
    bool operator!=(const OnhKnElement& o) const { return !(*this == o); }

private:
    int k_, n_;
    OnhAn rep_;
};

/**
 * Honest two-sided-ideal reduction: the ideal (a^n(x_1)) inside
 * ONH_k ox A_n, spanned degreewise by u * a^n(x_1) * v ox mu over PBW pairs
 * and A_n monomials. Intended for small k, n, degrees; it cross-checks the
 * column model.
 */
class CyclotomicIdeal {
public:
    CyclotomicIdeal(int k, int n) : k_(k), n_(n), gen_(a_poly_at_x1(k, n)) {}

    std::vector<OnhAn> ideal_span(int deg) const {
        std::vector<OnhAn> out;
        int gdeg = 2 * n_;
        int minu = -2 * (k_ * (k_ - 1) / 2), minv = minu;
        for (int du = minu; du + gdeg + minv <= deg; du += 2) {
            auto us = onh_pbw_of_degree(k_, du);
            if (us.empty()) continue;
            for (int dv = minv; du + gdeg + dv <= deg; dv += 2) {
                auto vs = onh_pbw_of_degree(k_, dv);
                if (vs.empty()) continue;
                int dmu = deg - du - gdeg - dv;
                auto mus = an_monomials_of_degree(n_, dmu);
                if (mus.empty()) continue;
                for (const auto& u : us)
                    for (const auto& v : vs) {
                        OnhAn mid = OnhAn::from(u, AnScalar::unit(n_)) * gen_ *
                                    OnhAn::from(v, AnScalar::unit(n_));
                        if (mid.is_zero()) continue;
                        for (const auto& mu : mus) {
                            OnhAn w = mid * OnhAn::from(NilHeckeElement::unit(k_),
                                                        AnScalar::monomial(n_, mu, 1));
                            if (!w.is_zero()) out.push_back(std::move(w));
                        }
                    }
            }
        }
        return out;
    }

    struct RowIndex {
        std::map<std::pair<NilHeckeElement::Key, AnMono>, int> index;
        int of(const NilHeckeElement::Key& k, const AnMono& m) {
            auto key = std::make_pair(k, m);
            auto it = index.find(key);
            if (it != index.end()) return it->second;
            int id = static_cast<int>(index.size());
            index.emplace(std::move(key), id);
            return id;
        }
    };

    static SparseVec<Int> vectorize(const OnhAn& e, RowIndex& rows) {
        SparseVec<Int> v;
        for (const auto& [mono, h] : e.slots())
            for (const auto& [key, c] : h.terms()) v.emplace_back(rows.of(key, mono), c);
        std::sort(v.begin(), v.end());
        return v;
    }

    /** Dimension of the degree piece of the quotient over Q, with a GF(2)
     *  cross-check (the two agree when the quotient is 2-torsion free). */
    std::optional<long long> quotient_dim(int deg) const {
        RowIndex rows;
        std::vector<SparseVec<Int>> vecs;
        for (const auto& w : ideal_span(deg)) vecs.push_back(vectorize(w, rows));
        long long full = 0;
        for (int du = -2 * (k_ * (k_ - 1) / 2); du <= deg; du += 2) {
            long long c = static_cast<long long>(onh_pbw_of_degree(k_, du).size());
            if (c == 0) continue;
            full += c * static_cast<long long>(an_monomials_of_degree(n_, deg - du).size());
        }
        int ncols = static_cast<int>(rows.index.size());
        int rz = int_rank(vecs, ncols);
        Gf2Echelon g2(ncols);
        for (const auto& v : vecs) g2.add_row(v);
        if (g2.rank() != rz) return std::nullopt;
        return full - rz;
    }

    /** Coordinates of elt over `basis` modulo the ideal (exact, integral). */
    std::optional<std::vector<Int>> reduce(const OnhAn& elt,
                                           const std::vector<OnhAn>& basis) const {
        if (elt.is_zero()) return std::vector<Int>(basis.size(), 0);
        int deg = 0;
        bool found = false;
        for (const auto& [mono, h] : elt.slots()) {
            for (const auto& [key, c] : h.terms()) {
                (void)c;
                int d = h.term_degree(key).z + mono.zdegree();
                if (!found) deg = d, found = true;
                else if (d != deg) throw std::invalid_argument("inhomogeneous reduction input");
            }
        }
        RowIndex rows;
        std::vector<SparseVec<Int>> cols;
        for (const auto& b : basis) cols.push_back(vectorize(b, rows));
        for (const auto& w : ideal_span(deg)) cols.push_back(vectorize(w, rows));
        SparseVec<Int> rhs = vectorize(elt, rows);
        IntSolver solver(std::move(cols), static_cast<int>(rows.index.size()));
        auto sol = solver.solve(rhs);
        if (!sol) return std::nullopt;
        return std::vector<Int>(sol->begin(), sol->begin() + basis.size());
    }

private:
    int k_, n_;
    OnhAn gen_;
};

/**
 * Certificate that C_{i,j} lies in the first-row ideal
 * I' = (h'_m : n-k+1 <= m <= n) of OL_k ox A_n.
 */
struct IdealMembership {
    bool member = false;
    int combination_size = 0;
};

inline IdealMembership verify_cij_in_iprime(int k, int n, int i, int j,
                                            const XPowerTable& xp) {
    OlkAn target = c_matrix_entry(k, n, i, j, xp);
    if (target.is_zero()) return {true, 0};
    int deg = 2 * (n + i - j);

    std::map<std::pair<Exponents, AnMono>, int> rows;
    auto vec_of = [&](const OlkAn& e) {
        SparseVec<Int> v;
        for (const auto& [mono, f] : e.slots())
            for (const auto& [exp, c] : f.terms()) {
                auto key = std::make_pair(exp, mono);
                auto it = rows.find(key);
                int id;
                if (it == rows.end()) {
                    id = static_cast<int>(rows.size());
                    rows.emplace(key, id);
                } else {
                    id = it->second;
                }
                v.emplace_back(id, c);
            }
        std::sort(v.begin(), v.end());
        return v;
    };

    std::vector<SparseVec<Int>> cols;
    for (int m = n - k + 1; m <= n; ++m) {
        OlkAn hm = h_prime(m, k, n);
        for (int du = 0; 2 * m + du <= deg; du += 2) {
            for (const Word& wu : decreasing_words(du / 2, k)) {
                OlkAn u = OlkAn::from(h_word_poly(wu, k), AnScalar::unit(n));
                OlkAn uh = u * hm;
                for (int dv = 0; 2 * m + du + dv <= deg; dv += 2) {
                    for (const Word& wv : decreasing_words(dv / 2, k)) {
                        OlkAn uhv =
                            uh * OlkAn::from(h_word_poly(wv, k), AnScalar::unit(n));
                        if (uhv.is_zero()) continue;
                        int dmu = deg - 2 * m - du - dv;
                        for (const auto& mu : an_monomials_of_degree(n, dmu)) {
                            OlkAn w = uhv.scale(AnScalar::monomial(n, mu, 1));
                            if (!w.is_zero()) cols.push_back(vec_of(w));
                        }
                    }
                }
            }
        }
    }
    SparseVec<Int> rhs = vec_of(target);
    IntSolver solver(std::move(cols), static_cast<int>(rows.size()));
    auto sol = solver.solve(rhs);
    if (!sol) return {false, 0};
    int used = 0;
    for (Int c : *sol)
        if (c != 0) ++used;
    return {true, used};
}

}  // namespace oddcat
