/**
 * @file suites_deform.hpp
 * @brief Verification suites for the deformation layer: A_n, the Grassmannian
 *        superalgebras M_k^n, the matrix-ring model, the complementary
 *        isomorphism gamma, mod-2 bridges, and graded-dimension bookkeeping.
 */
#pragma once

#include "suites.hpp"

namespace oddcat {

// ---------------------------------------------------------------------------
// Suite: deform — A_n, a^n(t), h', M_k^n structure, Grassmannian bimodule.
// ---------------------------------------------------------------------------
inline std::vector<VerificationRecord> suite_deform(const SuiteConfig& cfg) {
    std::vector<VerificationRecord> out;
    int n = cfg.n;
    using detail::make_record;

    {  // A_n relations and the twisted commutation of a^n(t)
        Timed t;
        bool ok = true;
        for (int m = 1; m <= std::max(n, 2); ++m) {
            AnScalar d = AnScalar::c(m, 1);
            if (!(d * d).is_zero()) ok = false;
            if (m % 2 == 0 && m / 2 >= 1) {
                AnScalar chitop = AnScalar::c(m, m);
                if (!(d * chitop).is_zero()) ok = false;
            }
            for (int i = 0; 2 * i + 1 <= m; ++i) {
                // c_{2i+1} = c_1 c_{2i}
                if (!(AnScalar::c(m, 2 * i + 1) == AnScalar::c(m, 1) * AnScalar::c(m, 2 * i)))
                    ok = false;
            }
            if (!a_poly_relations_hold(m)) ok = false;
        }
        out.push_back(make_record("deform", "A_n relations; twisted commutation of a^n(t)",
                                  "deformation superalgebra A_n and a^n(t)", {{"n", n}}, ok,
                                  "", t.seconds()));
    }

    {  // h'_m vanishing pattern and homogeneity
        Timed t;
        bool ok = true;
        for (int k = 0; k <= n; ++k) {
            for (int m = 0; m <= n - k; ++m)
                if (mkn_h_prime(m, k, n).is_zero()) ok = false;
            for (int m = n - k + 1; m <= n + 2; ++m)
                if (!mkn_h_prime(m, k, n).is_zero()) ok = false;
            for (int m = 1; m <= n && k > 0; ++m) {
                OlkAn hp = h_prime(m, k, n);
                for (const auto& [mono, f] : hp.slots()) {
                    for (const auto& [e, c] : f.terms()) {
                        (void)c;
                        if (2 * exp_total(e) + mono.zdegree() != 2 * m) ok = false;
                        if ((exp_total(e) + mono.parity()) % 2 != m % 2) ok = false;
                    }
                }
            }
        }
        out.push_back(make_record("deform",
                                  "h'_m homogeneous of degree 2m, zero in M_k^n exactly for m > n-k",
                                  "first-row generators h'_m", {{"n", n}}, ok, "", t.seconds()));
    }

    {  // M_k^n: unital, associative on samples, h-box transition unipotent
        Timed t;
        bool ok = true;
        std::string witness;
        for (int k = 0; k <= n; ++k) {
            const auto& model = GrassmannianModel::get(k, n);
            MknElement one = MknElement::unit(k, n);
            std::vector<MknElement> gens;
            for (int j = 1; j <= std::min(k, n - k) + 1 && j <= k; ++j)
                gens.push_back(mkn_h(k, n, j));
            for (auto& g : gens) {
                if (!(one * g == g && g * one == g)) ok = false;
            }
            for (size_t a = 0; a < gens.size(); ++a)
                for (size_t b = 0; b < gens.size(); ++b)
                    for (size_t c = 0; c < gens.size(); ++c)
                        if (!((gens[a] * gens[b]) * gens[c] == gens[a] * (gens[b] * gens[c])))
                            ok = false;
            // h-box transition to the Schur box is unitriangular per OL-degree
            for (int s = 0; s <= k * (n - k); ++s) {
                std::vector<Partition> boxdeg;
                for (const auto& lam : model.box())
                    if (lam.size() == s) boxdeg.push_back(lam);
                for (const auto& lam : boxdeg) {
                    Word w(lam.parts().begin(), lam.parts().end());
                    MknElement hl = MknElement::from_poly(k, n, h_word_poly(w, k));
                    // the pure-OL-degree-s part of hl must be unitriangular vs lam
                    for (const auto& [key, c] : hl.coords()) {
                        const Partition& mu = model.box()[key.first];
                        if (key.second == an_unit_mono(n)) {
                            if (mu == lam && c != 1) {
                                ok = false;
                                witness = "h-box diagonal != 1";
                            }
                            if (mu.size() == s && !(lam < mu) && !(mu == lam) && c != 0) {
                                ok = false;
                                witness = "h-box transition not triangular";
                            }
                        }
                    }
                }
            }
        }
        out.push_back(make_record("deform",
                                  "M_k^n algebra axioms on generators; h-box to Schur-box "
                                  "transition is unitriangular",
                                  "spanning h-box of the odd Grassmannian algebra",
                                  {{"n", n}}, ok, witness, t.seconds()));
    }

    {  // Grassmannian bimodule: h'_{n-k+1} kills the unit; basis counts with parity
        Timed t;
        bool ok = true;
        for (int k = 0; k <= n; ++k) {
            if (k > 0 && !mkn_h_prime(n - k + 1, k, n).is_zero()) ok = false;
            // parity-refined box count: sum over the box of q^{2|lam|} pi^{|lam|}
            // equals pi^{k(n-k)} q^{k(n-k)} [n choose k]_{q,pi}
            GradedScalar boxsum;
            for (const auto& lam : GrassmannianModel::get(k, n).box())
                boxsum = boxsum + GradedScalar::monomial(1, 2 * lam.size(), lam.size() % 2);
            GradedScalar target = qpi_binomial(n, k) *
                                  GradedScalar::monomial(1, k * (n - k), k * (n - k));
            if (!(boxsum == target)) ok = false;
        }
        out.push_back(make_record("deform",
                                  "free A_n-rank of the Grassmannian bimodule equals "
                                  "q^{k(n-k)} [n choose k]_{q,pi}",
                                  "basis of the odd equivariant Grassmannian bimodule",
                                  {{"n", n}}, ok, "", t.seconds()));
    }

    {  // worked product identities
        Timed t;
        bool ok = true;
        // (h_1 ox 1)^2 = h_1 ox d - 1 ox chi_1 in M_1^2
        auto h1 = mkn_h(1, 2, 1);
        auto expect = mkn_h(1, 2, 1).scale(AnScalar::c(2, 1)) -
                      MknElement::unit(1, 2).scale(AnScalar::c(2, 2));
        if (!(h1 * h1 == expect)) ok = false;
        // straighten-then-eliminate agrees with the model where it applies
        auto st = straighten_h({1, 2});
        MknElement lhs = mkn_h(2, 3, 1) * mkn_h(2, 3, 2);
        MknElement rhs(2, 3);
        for (const auto& [w, c] : st) {
            MknElement term = MknElement::unit(2, 3);
            for (int part : w) term = term * mkn_h(2, 3, part);
            rhs = rhs + term * c;
        }
        if (!(lhs == rhs)) ok = false;
        out.push_back(make_record("deform", "worked product identities in small M_k^n",
                                  "h_2-elimination in rank one", {{"n", n}}, ok, "",
                                  t.seconds()));
    }

    {  // d -> 0 specialization sanity: reduced dims still match counts
        Timed t;
        bool ok = true;
        // the undeformed / d0 structure is exercised through the column module
        // dimension certification, which throws on mismatch
        try {
            for (int k = 1; k <= std::min(n, 3); ++k)
                ColumnModule::get(k, n).reduced_dim(std::min(8, 2 * n));
        } catch (const std::exception&) {
            ok = false;
        }
        out.push_back(make_record("deform", "column module dimension certification",
                                  "basis of the deformed cyclotomic quotient", {{"n", n}}, ok,
                                  "", t.seconds()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suite: matrix-iso — the matrix-ring model of ONH_k^n.
// ---------------------------------------------------------------------------
inline std::vector<VerificationRecord> suite_matrix_iso(const SuiteConfig& cfg) {
    std::vector<VerificationRecord> out;
    int n = cfg.n;
    using detail::make_record;

    {  // fruitloops recursion equals literal matrix powers
        Timed t;
        bool ok = true;
        for (int k = 1; k <= std::min(n, 4); ++k) {
            XPowerTable xp(k);
            for (int m = 0; m <= 8; ++m) {
                auto lit = xp.literal_power(m);
                for (int i = 1; i <= k; ++i)
                    for (int j = 1; j <= k; ++j)
                        if (!(lit[i - 1][j - 1] == xp.entry(m, i, j))) ok = false;
            }
        }
        out.push_back(make_record("matrix-iso", "power-entry recursion equals literal powers of X",
                                  "recursion for the entries of X^m", {{"n", n}, {"m_max", 8}},
                                  ok, "", t.seconds()));
    }

    {  // first-row ideal membership certificates for all C_{i,j}
        Timed t;
        bool ok = true;
        std::string witness;
        for (int k = 1; k <= std::min(n, 4); ++k) {
            XPowerTable xp(k);
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= k; ++j) {
                    auto r = verify_cij_in_iprime(k, n, i, j, xp);
                    if (!r.member) {
                        ok = false;
                        if (witness.empty())
                            witness = "C_{" + std::to_string(i) + "," + std::to_string(j) +
                                      "} k=" + std::to_string(k);
                    }
                }
        }
        out.push_back(make_record("matrix-iso", "every C_{i,j} lies in the first-row ideal I'",
                                  "first-row ideal contains the full matrix ideal", {{"n", n}},
                                  ok, witness, t.seconds()));
    }

    {  // matrix model: identity, multiplicativity, ideal vanishing
        Timed t;
        bool ok = true;
        std::string witness;
        for (int k = 1; k <= std::min(n, 3); ++k) {
            const auto& mm = MatrixModel::get(k, n);
            auto idm = mm.matrix_of(OnhAn::unit(k, n), 0);
            if (!idm) {
                ok = false;
                continue;
            }
            for (int i = 0; i < mm.rank(); ++i)
                for (int j = 0; j < mm.rank(); ++j) {
                    bool diag = i == j;
                    MknElement e = mm.entry_element((*idm)[i][j]);
                    if (diag ? !(e == MknElement::unit(k, n)) : !e.is_zero()) ok = false;
                }
            auto z = mm.matrix_of(a_poly_at_x1(k, n), 2 * n);
            if (!z) {
                ok = false;
            } else {
                for (auto& row : *z)
                    for (auto& e : row)
                        if (!e.empty()) ok = false, witness = "a^n(x_1) has nonzero matrix";
            }
            std::vector<std::pair<OnhAn, int>> elts = {
                {OnhAn::from(NilHeckeElement::x(k, 1), AnScalar::unit(n)), 2},
                {OnhAn::from(NilHeckeElement::unit(k), AnScalar::c(n, 1)), 2},
            };
            if (k >= 2) {
                elts.push_back({OnhAn::from(NilHeckeElement::tau(k, 1), AnScalar::unit(n)), -2});
                elts.push_back({OnhAn::from(idempotent_e(k), AnScalar::unit(n)), 0});
                elts.push_back({OnhAn::from(NilHeckeElement::x(k, 2), AnScalar::unit(n)), 2});
            }
            for (auto& [a, da] : elts)
                for (auto& [b, db] : elts) {
                    auto mab = mm.matrix_of(a * b, da + db);
                    auto ma = mm.matrix_of(a, da);
                    auto mb = mm.matrix_of(b, db);
                    if (!mab || !ma || !mb) {
                        ok = false;
                        continue;
                    }
                    for (int i = 0; i < mm.rank(); ++i)
                        for (int j = 0; j < mm.rank(); ++j) {
                            MknElement acc(k, n);
                            for (int l = 0; l < mm.rank(); ++l)
                                acc = acc + mm.entry_element((*ma)[i][l]) *
                                                mm.entry_element((*mb)[l][j]);
                            if (!(acc == mm.entry_element((*mab)[i][j]))) {
                                ok = false;
                                witness = "matrix multiplicativity failure";
                            }
                        }
                }
        }
        out.push_back(make_record("matrix-iso",
                                  "k! x k! matrix model: unit, products, and the vanishing of "
                                  "the cyclotomic generator",
                                  "matrix-ring description of the deformed quotient",
                                  {{"n", n}}, ok, witness, t.seconds()));
    }

    {  // degreewise dimension: quotient (honest elimination) = k!^2 dim M_k^n
        Timed t;
        bool ok = true;
        std::string witness;
        int kmax = std::min(n, 2);
        for (int k = 1; k <= kmax; ++k) {
            CyclotomicIdeal ideal(k, n);
            int dmax = n <= 2 ? 8 : 6;
            for (int d = -2 * (k * (k - 1) / 2); d <= dmax; d += 2) {
                auto qd = ideal.quotient_dim(d);
                if (!qd) {
                    ok = false;
                    witness = "2-torsion flag in honest elimination";
                    continue;
                }
                // expected: sum over pairs (alpha, beta <= staircase) of
                // dim M_k^n in the complementary degree
                long long expect = 0;
                const auto& mm = MatrixModel::get(k, n);
                GradedScalar mdim;
                for (const auto& lam : GrassmannianModel::get(k, n).box())
                    mdim = mdim + GradedScalar::monomial(1, 2 * lam.size());
                for (const auto& ga : mm.staircase())
                    for (const auto& gb : mm.staircase()) {
                        int shift = 2 * exp_total(ga) - 2 * exp_total(gb);
                        for (const auto& [key, c] : mdim.coeffs()) {
                            int rest = d - shift - key.first;
                            if (rest < 0) continue;
                            expect += c * static_cast<long long>(
                                              an_monomials_of_degree(n, rest).size());
                        }
                    }
                if (*qd != expect) {
                    ok = false;
                    witness = "dim mismatch at degree " + std::to_string(d) + " (k=" +
                              std::to_string(k) + "): " + std::to_string(*qd) + " vs " +
                              std::to_string(expect);
                }
            }
        }
        out.push_back(make_record("matrix-iso",
                                  "honest quotient dimension equals the matrix-ring count",
                                  "graded dimension through the matrix-ring model",
                                  {{"n", n}}, ok, witness, t.seconds()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suite: gamma — the complementary isomorphism M_k^n -> M_{n-k}^n.
// ---------------------------------------------------------------------------
inline std::vector<VerificationRecord> suite_gamma(const SuiteConfig& cfg) {
    std::vector<VerificationRecord> out;
    int n = cfg.n;
    int D = cfg.degree_bound > 0 ? std::min(cfg.degree_bound, 16) : (n <= 2 ? 12 : 16);
    using detail::make_record;

    for (int k = (cfg.k >= 0 ? cfg.k : 0); k <= (cfg.k >= 0 ? cfg.k : n); ++k) {
        {  // the images satisfy the h'-presentation relations
            Timed t;
            bool ok = true;
            auto g = [&](int r) { return gamma_image_of_h_prime(k, n, r); };
            for (int i = 1; i <= n; ++i)
                for (int m2 = 1; 2 * m2 - i <= n; ++m2) {
                    int j = 2 * m2 - i;
                    if (j < 1 || i > n || j > n) continue;
                    if (!(g(i) * g(j) == g(j) * g(i))) ok = false;
                    int j2 = 2 * m2 + 1 - i;
                    if (i <= n - 1 && j <= n - 1 && j2 >= 0) {
                        Int s = i % 2 == 0 ? 1 : -1;
                        auto lhs = g(i) * g(j2) + g(j2) * g(i) * s;
                        auto rhs = g(i + 1) * g(j) * s + g(j) * g(i + 1);
                        if (!(lhs == rhs)) ok = false;
                    }
                }
            for (int m2 = 1; 2 * m2 <= n - 1; ++m2) {
                if (2 * m2 <= 1) continue;
                auto lhs = g(1) * g(2 * m2) + g(2 * m2) * g(1);
                auto rhs = g(2 * m2 + 1) * 2;
                if (!(lhs == rhs)) ok = false;
            }
            for (int r = n - k + 1; r <= n; ++r)
                if (!g(r).is_zero()) ok = false;
            // the same relations hold for the h'_r in M_k^n itself
            auto hp = [&](int r) { return mkn_h_prime(r, k, n); };
            for (int i = 1; i <= n - 1; ++i) {
                int j = i % 2 == 0 ? i + 2 : i + 1;  // spot-check a few pairs
                if ((i + j) % 2 == 0 && j <= n)
                    if (!(hp(i) * hp(j) == hp(j) * hp(i))) ok = false;
            }
            out.push_back(make_record("gamma",
                                      "gamma(h'_r) satisfies the h'-presentation; kills r > n-k",
                                      "complementary Grassmannian isomorphism", {{"n", n}, {"k", k}},
                                      ok, "", t.seconds()));
        }

        {  // degreewise bijectivity via the h'-box basis
            Timed t;
            bool ok = true;
            std::string witness;
            const auto& src = GrassmannianModel::get(k, n);
            const auto& dst = GrassmannianModel::get(n - k, n);
            // gamma(h'_lambda) for box lambda, with A_n monomial shifts
            std::map<std::vector<int>, MknElement> gamma_cache;
            auto gamma_of_box = [&](const Partition& lam) {
                auto it = gamma_cache.find(lam.parts());
                if (it != gamma_cache.end()) return it->second;
                MknElement r = MknElement::unit(n - k, n);
                for (int part : lam.parts()) r = r * gamma_image_of_h_prime(k, n, part);
                gamma_cache.emplace(lam.parts(), r);
                return r;
            };
            for (int deg = 0; deg <= D && ok; deg += 2) {
                // columns: gamma(h'_lam) * mu over source labels of this degree
                std::map<std::pair<int, AnMono>, int> rows;
                std::vector<SparseVec<Int>> cols;
                int count_src = 0;
                for (const auto& lam : src.box()) {
                    int rest = deg - 2 * lam.size();
                    if (rest < 0) continue;
                    for (const auto& mu : an_monomials_of_degree(n, rest)) {
                        ++count_src;
                        MknElement img = gamma_of_box(lam).scale(AnScalar::monomial(n, mu, 1));
                        SparseVec<Int> v;
                        for (const auto& [key, c] : img.coords()) {
                            auto rit = rows.find(key);
                            int id = rit == rows.end() ? static_cast<int>(rows.size())
                                                       : rit->second;
                            if (rit == rows.end()) rows.emplace(key, id);
                            v.emplace_back(id, c);
                        }
                        std::sort(v.begin(), v.end());
                        cols.push_back(std::move(v));
                    }
                }
                // target dimension at this degree
                int count_dst = 0;
                for (const auto& lam : dst.box()) {
                    int rest = deg - 2 * lam.size();
                    if (rest >= 0)
                        count_dst += static_cast<int>(an_monomials_of_degree(n, rest).size());
                }
                if (count_src != count_dst) {
                    ok = false;
                    witness = "graded dimension mismatch at degree " + std::to_string(deg);
                    continue;
                }
                // unimodular: SNF divisors all 1 and full rank
                auto div = snf_divisors(cols, static_cast<int>(rows.size()));
                if (static_cast<int>(div.size()) != count_src) {
                    ok = false;
                    witness = "gamma rank-deficient at degree " + std::to_string(deg);
                }
                for (Int d : div)
                    if (d != 1) {
                        ok = false;
                        witness = "gamma non-unimodular at degree " + std::to_string(deg);
                    }
            }
            out.push_back(make_record("gamma", "gamma is a degreewise Z-isomorphism",
                                      "complementary isomorphism is bijective",
                                      {{"n", n}, {"k", k}, {"D", D}}, ok, witness, t.seconds()));
        }

        {  // lem:hpverson-style: h'-box transition to h-box is unipotent
            Timed t;
            bool ok = true;
            const auto& model = GrassmannianModel::get(k, n);
            for (const auto& lam : model.box()) {
                MknElement hp = MknElement::unit(k, n);
                for (int part : lam.parts()) hp = hp * mkn_h_prime(part, k, n);
                // leading pure term must be the h-box image with coefficient 1
                Word w(lam.parts().begin(), lam.parts().end());
                MknElement hb = MknElement::from_poly(k, n, h_word_poly(w, k));
                MknElement difference = hp - hb;
                for (const auto& [key, c] : difference.coords()) {
                    (void)c;
                    // all correction terms carry a nontrivial A_n monomial
                    if (key.second == an_unit_mono(n) &&
                        model.box()[key.first].size() == lam.size()) {
                        ok = false;
                    }
                }
            }
            out.push_back(make_record("gamma", "h'-box differs from h-box by lower A_n-terms",
                                      "alternative h'-basis of M_k^n", {{"n", n}, {"k", k}}, ok,
                                      "", t.seconds()));
        }
        if (cfg.k >= 0) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suite: mod2 — reductions to the classical commutative picture.
// ---------------------------------------------------------------------------
inline std::vector<VerificationRecord> suite_mod2(const SuiteConfig& cfg) {
    std::vector<VerificationRecord> out;
    int n = cfg.n;
    using detail::make_record;

    {  // multiplicativity of the reduction and generator matching
        Timed t;
        bool ok = true;
        std::mt19937 rng(1234);
        for (int trial = 0; trial < 100; ++trial) {
            SkewPoly f = detail::random_poly(n, 8, rng), g = detail::random_poly(n, 8, rng);
            if (!(reduce_mod2(f * g) == reduce_mod2(f) * reduce_mod2(g))) ok = false;
            if (!(reduce_mod2(f + g) == reduce_mod2(f) + reduce_mod2(g))) ok = false;
        }
        if (n >= 2) {
            // x_2 x_1 = -x_1 x_2 -> x_1 x_2
            auto p = SkewPoly::variable(n, 2) * SkewPoly::variable(n, 1);
            std::vector<int> e(n, 0);
            e[0] = e[1] = 1;
            Mod2Poly expect(n);
            expect.toggle(e);
            if (!(reduce_mod2(p) == expect)) ok = false;
        }
        out.push_back(make_record("mod2", "reduction is a ring map fixing the x_i",
                                  "mod-2 isomorphism with the polynomial ring", {{"n", n}}, ok,
                                  "", t.seconds()));
    }

    {  // eps -> e, h -> h, s -> s mod 2
        Timed t;
        bool ok = true;
        for (int kk = 0; kk <= n; ++kk) {
            if (!(reduce_mod2(elementary(kk, n)) == Mod2Poly::from_even(even_elementary(kk, n))))
                ok = false;
            if (!(reduce_mod2(complete(kk, n)) == Mod2Poly::from_even(even_complete(kk, n))))
                ok = false;
        }
        for (int s = 0; s <= 6; ++s)
            for (const auto& lam : Partition::all_of_size(s, n, s))
                if (!(reduce_mod2(schur(lam, n)) == Mod2Poly::from_even(even_schur(lam, n))))
                    ok = false;
        out.push_back(make_record("mod2",
                                  "odd elementary/complete/Schur reduce to their classical "
                                  "counterparts",
                                  "mod-2 comparison of symmetric functions", {{"n", n}}, ok, "",
                                  t.seconds()));
    }

    {  // odd divided differences reduce to even ones; even relations hold
        Timed t;
        bool ok = true;
        std::mt19937 rng(99);
        for (int trial = 0; trial < 30; ++trial) {
            SkewPoly f = detail::random_poly(n, 8, rng);
            for (int i = 1; i <= n - 1; ++i) {
                // build the even lift of the mod-2 class and compare images
                EvenPoly lift(n);
                for (const auto& [e, c] : f.terms())
                    if (c % 2 != 0) lift.bump(e, 1);
                Mod2Poly lhs = reduce_mod2(divided_difference(i, f));
                Mod2Poly rhs = Mod2Poly::from_even(even_divided_difference(i, lift));
                if (!(lhs == rhs)) ok = false;
            }
        }
        // even nilHecke relations for the even operators
        EvenPoly probe(n);
        std::mt19937 rng2(5);
        for (int trial = 0; trial < 10; ++trial) {
            EvenPoly f(n);
            for (int t2 = 0; t2 < 4; ++t2) {
                std::vector<int> e(n);
                int rem = 4;
                for (int i = 0; i < n; ++i) {
                    e[i] = static_cast<int>(rng2() % (rem + 1));
                    rem -= e[i];
                }
                f.bump(e, static_cast<Int>(rng2() % 5) - 2);
            }
            for (int i = 1; i <= n - 1; ++i) {
                if (!even_divided_difference(i, even_divided_difference(i, f)).is_zero())
                    ok = false;
                if (i + 1 <= n - 1) {
                    auto a = even_divided_difference(
                        i, even_divided_difference(i + 1, even_divided_difference(i, f)));
                    auto b = even_divided_difference(
                        i + 1, even_divided_difference(i, even_divided_difference(i + 1, f)));
                    if (!(a == b)) ok = false;
                }
            }
        }
        out.push_back(make_record("mod2",
                                  "odd divided differences reduce to the even operators; even "
                                  "nilHecke relations hold in the oracle",
                                  "mod-2 reduction of the nilHecke action", {{"n", n}}, ok, "",
                                  t.seconds()));
    }

    {  // independence certificate behavior, including the {v, 2v} fallback
        Timed t;
        bool ok = true;
        std::vector<SparseVec<Int>> std_basis = {{{0, 1}}, {{1, 1}}, {{2, 1}}};
        if (!independence_certificate_gf2(std_basis, 3)) ok = false;
        std::vector<SparseVec<Int>> v2v = {{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}};
        if (independence_certificate_gf2(v2v, 2)) ok = false;  // certificate must refuse
        if (independence_integer(v2v, 2)) ok = false;           // and they are truly dependent
        std::vector<SparseVec<Int>> v3v = {{{0, 1}}, {{0, 3}}};
        if (independence_certificate_gf2(v3v, 1)) ok = false;   // mod-2 cannot certify
        out.push_back(make_record("mod2", "independence certificates and integer-rank fallback",
                                  "independence from mod-2 reduction", {{"n", n}}, ok, "",
                                  t.seconds()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suite: grdim — (q,pi) bookkeeping and idempotent truncation formulas.
// ---------------------------------------------------------------------------
inline std::vector<VerificationRecord> suite_grdim(const SuiteConfig& cfg) {
    std::vector<VerificationRecord> out;
    int n = cfg.n;
    using detail::make_record;

    {  // quantum integer and binomial identities
        Timed t;
        bool ok = true;
        for (int m = -12; m <= 12; ++m) {
            auto lhs = qpi_integer(m) * (GradedScalar::q(1) - GradedScalar::pi() * GradedScalar::q(-1));
            auto rhs = GradedScalar::monomial(1, m, 0) - GradedScalar::monomial(1, -m, m);
            if (!(lhs == rhs)) ok = false;
            // pi = 1 specialization is the classical quantum integer
            GradedScalar cl;
            int a = std::abs(m);
            for (int t2 = 0; t2 < a; ++t2)
                cl = cl + GradedScalar::q(a - 1 - 2 * t2) * (m >= 0 ? 1 : -1);
            if (!(qpi_integer(m).specialize_pi(1) == cl)) ok = false;
        }
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; a + b <= 8; ++b) {
                auto lhs = qpi_binomial(a + b, a) * qpi_factorial(a) * qpi_factorial(b);
                if (!(lhs == qpi_factorial(a + b))) ok = false;
            }
        out.push_back(make_record("grdim",
                                  "[n] against its rational definition; [a+b choose a][a]![b]! = [a+b]!",
                                  "(q,pi) integer arithmetic", {{"n", n}}, ok, "", t.seconds()));
    }

    {  // series equality is an equivalence relation on a randomized suite
        Timed t;
        bool ok = true;
        std::mt19937 rng(31);
        std::vector<GradedSeries> pool;
        for (int i = 0; i < 8; ++i) {
            GradedScalar num;
            for (int t2 = 0; t2 < 3; ++t2)
                num = num + GradedScalar::monomial(static_cast<Int>(rng() % 5) - 2,
                                                   static_cast<int>(rng() % 7) - 3,
                                                   static_cast<int>(rng() % 2));
            std::vector<int> dens;
            for (int t2 = 0; t2 < static_cast<int>(rng() % 3); ++t2)
                dens.push_back(1 + static_cast<int>(rng() % 3));
            pool.emplace_back(num, dens);
        }
        for (auto& s : pool)
            if (!(s == s)) ok = false;
        for (auto& s : pool)
            for (auto& u : pool) {
                if ((s == u) != (u == s)) ok = false;
                // scale both by a common factor: equality must be preserved
                GradedSeries s2 = s * GradedSeries::geometric(2);
                GradedSeries u2 = u * GradedSeries::geometric(2);
                if ((s == u) != (s2 == u2)) ok = false;
            }
        out.push_back(make_record("grdim", "series equality by cross-multiplication is consistent",
                                  "plumbing", {{"n", n}}, ok, "", t.seconds()));
    }

    {  // idempotent truncation graded dimensions (direct counts vs formulas)
        Timed t;
        bool ok = true;
        std::string witness;
        int mmax = std::min(n, 4);
        for (int m = 1; m <= mmax; ++m) {
            int bound = m <= 3 ? 10 : 8;
            auto ep = idempotent_e_prime(m);
            auto e = idempotent_e(m);
            // grdim(e' ONH_m) should equal q^{m(m-1)} grdim(OPol_m) / ... ;
            // the clean statements: grdim(e'_m ONH_m) = q^{binom(m,2)} grdim(ONH_m)/[m]!
            // and likewise for e_m; both equal grdim(OPol_m) up to a power of q.
            // Direct counts: rank of { e' * (PBW basis) } per degree.
            auto count_rank = [&](const NilHeckeElement& idem, bool left) {
                std::map<int, int> ranks;
                for (int d = -m * (m - 1); d <= bound; d += 2) {
                    auto pbw = onh_pbw_of_degree(m, d);
                    std::map<NilHeckeElement::Key, int> rows;
                    std::vector<SparseVec<Int>> vecs;
                    for (const auto& p : pbw) {
                        NilHeckeElement q = left ? idem * p : p * idem;
                        SparseVec<Int> v;
                        for (const auto& [key, c] : q.terms()) {
                            auto it = rows.find(key);
                            int id = it == rows.end() ? static_cast<int>(rows.size())
                                                      : it->second;
                            if (it == rows.end()) rows.emplace(key, id);
                            v.emplace_back(id, c);
                        }
                        std::sort(v.begin(), v.end());
                        if (!v.empty()) vecs.push_back(std::move(v));
                    }
                    ranks[d] = int_rank(vecs, static_cast<int>(rows.size()));
                }
                return ranks;
            };
            // the four truncation formulas specialize to:
            //   grdim(e'_m ONH_m) = grdim(ONH_m e_m) = grdim(OPol_m)
            //   grdim(e_m ONH_m) = grdim(ONH_m e'_m) = q^{-m(m-1)} grdim(OPol_m)
            auto eprime_left = count_rank(ep, true);
            auto e_right = count_rank(e, false);
            auto e_left = count_rank(e, true);
            auto eprime_right = count_rank(ep, false);
            GradedSeries opol(GradedScalar::one());
            for (int i = 0; i < m; ++i) opol = opol * GradedSeries::geometric(1);
            GradedScalar opol_exp = opol.expand(bound + m * (m - 1));
            for (int d = -m * (m - 1); d <= bound; d += 2) {
                long long unshifted = opol_exp.coeff(d, 0);
                long long shifted = opol_exp.coeff(d + m * (m - 1), 0);
                if (eprime_left[d] != unshifted || e_right[d] != unshifted) {
                    ok = false;
                    witness = "unshifted truncation count mismatch (m=" + std::to_string(m) + ")";
                }
                if (e_left[d] != shifted || eprime_right[d] != shifted) {
                    ok = false;
                    witness = "shifted truncation count mismatch (m=" + std::to_string(m) + ")";
                }
            }
        }
        out.push_back(make_record("grdim",
                                  "idempotent truncations of ONH_m have the predicted graded "
                                  "dimensions",
                                  "graded dimension of idempotent truncations",
                                  {{"n", n}, {"m_max", mmax}}, ok, witness, t.seconds()));
    }

    {  // q-power bookkeeping of the term bases; grdim(ONH_k^n) formula
        Timed t;
        bool ok = true;
        std::string witness;
        int D = cfg.degree_bound > 0 ? cfg.degree_bound : default_degree_bound(n);
        for (int k = 0; k <= n; ++k) {
            // grdim(ONH_k^n) as counted from the basis {x^a tau_w ox mu}
            GradedScalar count;
            const auto& G = symmetric_group(k);
            std::function<void(int, int, GradedScalar&)> xs = [&](int i, int acc,
                                                                  GradedScalar& into) {
                if (i == k) {
                    into = into + GradedScalar::q(2 * acc);
                    return;
                }
                for (int e = 0; e <= n - (i + 1); ++e) xs(i + 1, acc + e, into);
            };
            GradedScalar xpart;
            if (k == 0) xpart = GradedScalar::one();
            else xs(0, 0, xpart);
            GradedScalar taupart;
            for (const auto& w : G.elements())
                taupart = taupart + GradedScalar::q(-2 * w.length());
            count = xpart * taupart;
            GradedSeries counted = GradedSeries(count) * an_grdim_series(n);
            // formula: q^{k(n-k)} [k]! [n]! / [n-k]! grdim(A_n)
            auto kf = qpi_factorial(k).specialize_pi(1);
            auto nf = qpi_factorial(n).specialize_pi(1);
            auto nkf = qpi_factorial(n - k).specialize_pi(1);
            auto quot = (kf * nf).divide_exact(nkf);
            if (!quot) {
                ok = false;
                continue;
            }
            GradedSeries formula = GradedSeries(*quot * GradedScalar::q(k * (n - k))) *
                                   an_grdim_series(n);
            if (!(counted == formula)) {
                ok = false;
                witness = "grdim ONH_k^n formula mismatch at k=" + std::to_string(k);
            }
            // truncated sanity: expansions agree coefficientwise to D
            if (!(counted.expand(D) == formula.expand(D))) ok = false;
        }
        out.push_back(make_record("grdim",
                                  "grdim ONH_k^n = q^{k(n-k)}[k]![n]!/[n-k]! grdim A_n (exact "
                                  "series identity)",
                                  "graded dimension of the deformed quotient",
                                  {{"n", n}, {"D", D}}, ok, witness, t.seconds()));
    }
    return out;
}

}  // namespace oddcat
