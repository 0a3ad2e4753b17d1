/**
 * @file suites.hpp
 * @brief The verification suites behind `oddcat verify`: each one
 *        machine-checks a family of structural claims at desk scale and
 *        returns pass/fail records.
 */
#pragma once

#include <random>
#include <set>

#include "cache.hpp"
#include "crcomplex.hpp"
#include "evenoracle.hpp"
#include "report.hpp"

namespace oddcat {

struct SuiteConfig {
    int n = 4;
    int k = -1;            // -1: all admissible k
    int degree_bound = -1;  // -1: default 2n^2+8
    std::string specialize;  // "", "d0", "undeformed"
    std::filesystem::path cache_dir = default_cache_dir();
};

inline int default_degree_bound(int n) { return 2 * n * n + 8; }

namespace detail {

inline VerificationRecord make_record(std::string suite, std::string check,
                                      std::string citation,
                                      std::map<std::string, int> params, bool passed,
                                      std::string witness, double secs) {
    VerificationRecord r;
    r.suite = std::move(suite);
    r.check = std::move(check);
    r.citation = std::move(citation);
    r.params = std::move(params);
    r.passed = passed;
    r.witness = std::move(witness);
    r.wall_seconds = secs;
    return r;
}

/** All skew monomials in n variables with Z-degree <= bound. */
inline std::vector<SkewPoly> monomials_up_to(int n, int zbound) {
    std::vector<SkewPoly> out;
    Exponents e(n, 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == n) {
            out.push_back(SkewPoly::monomial(n, e, 1));
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            e[i] = v;
            rec(i + 1, rem - v);
        }
        e[i] = 0;
    };
    rec(0, zbound / 2);
    return out;
}

inline SkewPoly random_poly(int n, int maxdeg, std::mt19937& rng, int nterms = 4) {
    SkewPoly f(n);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(n);
        int rem = maxdeg / 2;
        for (int i = 0; i < n; ++i) {
            e[i] = static_cast<int>(rng() % (rem + 1));
            rem -= e[i];
        }
        f = f + SkewPoly::monomial(n, e, static_cast<Int>(rng() % 7) - 3);
    }
    return f;
}

inline NilHeckeElement random_nilhecke(int n, std::mt19937& rng, int nterms = 3) {
    const auto& G = symmetric_group(n);
    NilHeckeElement e(n);
    for (int t = 0; t < nterms; ++t) {
        Exponents a(n);
        for (int i = 0; i < n; ++i) a[i] = static_cast<int>(rng() % 3);
        Int c = static_cast<Int>(rng() % 5) - 2;
        e = e + NilHeckeElement::from_poly(SkewPoly::monomial(n, a, c)) *
                    tau_word(n, G.at(rng() % G.size()).canonical_word());
    }
    return e;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suite: onh — defining relations, PBW structure, idempotents, graded count.
// ---------------------------------------------------------------------------
inline std::vector<VerificationRecord> suite_onh(const SuiteConfig& cfg) {
    std::vector<VerificationRecord> out;
    int n = cfg.n;
    int D = cfg.degree_bound > 0 ? cfg.degree_bound : default_degree_bound(n);
    using detail::make_record;

    {  // defining relations as operators on all monomials of degree <= D
        Timed t;
        bool ok = true;
        std::string witness;
        auto monos = detail::monomials_up_to(n, D);
        auto check_zero = [&](const NilHeckeElement& rel, const std::string& name) {
            for (const auto& m : monos) {
                if (!rel.act(m).is_zero()) {
                    ok = false;
                    if (witness.empty()) witness = name + " fails on " + m.str();
                }
            }
        };
        for (int i = 1; i <= n - 1; ++i) {
            auto ti = NilHeckeElement::tau(n, i);
            auto xi = NilHeckeElement::x(n, i), xi1 = NilHeckeElement::x(n, i + 1);
            check_zero(ti * ti, "tau^2");
            check_zero(xi * ti + ti * xi1 - NilHeckeElement::unit(n), "x_i tau_i + tau_i x_{i+1} - 1");
            check_zero(ti * xi + xi1 * ti - NilHeckeElement::unit(n), "tau_i x_i + x_{i+1} tau_i - 1");
            if (i + 1 <= n - 1) {
                auto ti1 = NilHeckeElement::tau(n, i + 1);
                check_zero(ti * ti1 * ti - ti1 * ti * ti1, "braid");
            }
            for (int j = 1; j <= n - 1; ++j)
                if (std::abs(i - j) > 1)
                    check_zero(ti * NilHeckeElement::tau(n, j) +
                                   NilHeckeElement::tau(n, j) * ti,
                               "distant tau anticommute");
            for (int j = 1; j <= n; ++j)
                if (j != i && j != i + 1)
                    check_zero(NilHeckeElement::x(n, j) * ti + ti * NilHeckeElement::x(n, j),
                               "x tau anticommute");
        }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j)
                    check_zero(NilHeckeElement::x(n, i) * NilHeckeElement::x(n, j) +
                                   NilHeckeElement::x(n, j) * NilHeckeElement::x(n, i),
                               "x anticommute");
        out.push_back(make_record("onh", "defining relations under the faithful action",
                                  "odd nilHecke defining relations", {{"n", n}, {"D", D}},
                                  ok, witness, t.seconds()));
    }

    {  // mul agrees with operator composition; associativity
        Timed t;
        std::mt19937 rng(20240811);
        bool ok = true;
        for (int trial = 0; trial < 24; ++trial) {
            auto a = detail::random_nilhecke(n, rng);
            auto b = detail::random_nilhecke(n, rng);
            auto f = detail::random_poly(n, 6, rng);
            if (!((a * b).act(f) == a.act(b.act(f)))) ok = false;
            if (trial < 8) {
                auto c = detail::random_nilhecke(n, rng);
                if (!((a * b) * c == a * (b * c))) ok = false;
            }
        }
        out.push_back(make_record("onh", "product vs faithful action oracle; associativity",
                                  "faithful polynomial representation", {{"n", n}}, ok, "",
                                  t.seconds()));
    }

    {  // tau product law and sign table coherence
        Timed t;
        bool ok = true;
        const auto& G = symmetric_group(n);
        SkewPoly delta = staircase_monomial(n);
        for (const auto& w : G.elements()) {
            const auto& words = signed_word_table(n).words_of(w);
            SkewPoly base = dd_word(w.canonical_word(), delta);
            for (const auto& [word, sign] : words)
                if (!(dd_word(word, delta) == base * sign)) ok = false;
        }
        for (const auto& w : G.elements())
            for (const auto& v : G.elements()) {
                auto p = tau_word(n, w.canonical_word()) * tau_word(n, v.canonical_word());
                auto wv = w * v;
                if (w.length() + v.length() == wv.length()) {
                    auto e = tau_word(n, wv.canonical_word());
                    if (!(p == e || p == -e)) ok = false;
                } else if (!p.is_zero()) {
                    ok = false;
                }
            }
        out.push_back(make_record("onh", "tau_w tau_w' = +-tau_ww' or 0; sign table vs action",
                                  "reduced words change tau_w by a sign only", {{"n", n}}, ok,
                                  "", t.seconds()));
    }

    {  // preferred vs reversed factorization of tau_{w_0}
        Timed t;
        auto a = tau_word(n, interval_longest_word(1, n));
        auto b = tau_word(n, interval_longest_word_reversed(1, n));
        auto c = tau_word(n, longest_word_preferred(n));
        bool ok = (a == b || a == -b) && (a == c || a == -c) && !a.is_zero();
        out.push_back(make_record("onh", "longest-word factorizations agree up to sign",
                                  "reversed factorization of tau_{w_0}", {{"n", n}}, ok, "",
                                  t.seconds()));
    }

    {  // idempotents
        Timed t;
        bool ok = true;
        auto e = idempotent_e(n), ep = idempotent_e_prime(n);
        if (!(e * e == e) || !(ep * ep == ep)) ok = false;
        if (n >= 2) {
            auto e2 = idempotent_e(2), ep2 = idempotent_e_prime(2);
            if (!(e2 * ep2).is_zero()) ok = false;
        }
        for (int l = 1; l <= n; ++l)
            for (int m = l; m <= n; ++m) {
                auto el = interval_idempotent_e(n, l, m);
                auto epl = interval_idempotent_e_prime(n, l, m);
                if (!(el * el == el) || !(epl * epl == epl)) ok = false;
                for (int l2 = l; l2 <= m; ++l2)
                    for (int m2 = l2; m2 <= m; ++m2) {
                        auto f = interval_idempotent_e(n, l2, m2);
                        auto fp = interval_idempotent_e_prime(n, l2, m2);
                        if (!(el * f == el && f * el == el)) ok = false;
                        if (!(epl * fp == epl && fp * epl == epl)) ok = false;
                    }
            }
        out.push_back(make_record("onh", "e, e' and interval idempotents: squares and absorption",
                                  "interval idempotents and their absorption", {{"n", n}}, ok,
                                  "", t.seconds()));
    }

    {  // graded dimension of ONH_n
        Timed t;
        GradedSeries claim = GradedSeries(qpi_factorial(n).specialize_pi(1) *
                                          GradedScalar::q(-n * (n - 1) / 2));
        for (int i = 0; i < n; ++i) claim = claim * GradedSeries::geometric(1);
        // coefficientwise comparison against the PBW count
        GradedScalar expanded = claim.expand(D);
        bool ok = true;
        std::string witness;
        for (int d = -n * (n - 1); d <= D; ++d) {
            long long want = expanded.coeff(d, 0);
            long long got = onh_dim_in_degree(n, d);
            if (want != got) {
                ok = false;
                if (witness.empty())
                    witness = "degree " + std::to_string(d) + ": " + std::to_string(got) +
                              " vs " + std::to_string(want);
            }
        }
        out.push_back(make_record("onh", "PBW graded count matches grdim ONH_n",
                                  "grdim ONH_n = q^{-n(n-1)/2}[n]!(1-q^2)^{-n}",
                                  {{"n", n}, {"D", D}}, ok, witness, t.seconds()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suite: sym — odd symmetric calculus.
// ---------------------------------------------------------------------------
inline std::vector<VerificationRecord> suite_sym(const SuiteConfig& cfg) {
    std::vector<VerificationRecord> out;
    int n = cfg.n;
    int D = cfg.degree_bound > 0 ? cfg.degree_bound : 16;
    using detail::make_record;

    {  // divided difference operator properties on monomials
        Timed t;
        bool ok = true;
        auto monos = detail::monomials_up_to(n, std::min(D, 10));
        for (const auto& m : monos) {
            for (int i = 1; i <= n - 1; ++i) {
                if (!(divided_difference(i, m) == divided_difference_closed(i, m))) ok = false;
                if (!divided_difference(i, divided_difference(i, m)).is_zero()) ok = false;
                if (i + 1 <= n - 1) {
                    auto lhs = divided_difference(i, divided_difference(i + 1, divided_difference(i, m)));
                    auto rhs = divided_difference(i + 1, divided_difference(i, divided_difference(i + 1, m)));
                    if (!(lhs == rhs)) ok = false;
                }
                for (int j = i + 2; j <= n - 1; ++j) {
                    auto lhs = divided_difference(i, divided_difference(j, m));
                    auto rhs = divided_difference(j, divided_difference(i, m));
                    if (!(lhs == -rhs)) ok = false;
                }
            }
        }
        out.push_back(make_record("sym",
                                  "partial_i: Leibniz = closed form, squares vanish, braid, "
                                  "distant anticommutation",
                                  "odd divided difference operators", {{"n", n}}, ok, "",
                                  t.seconds()));
    }

    {  // elementary/complete are odd symmetric; elem-complete identity
        Timed t;
        bool ok = true;
        for (int k = 0; k <= n + 1; ++k) {
            if (!is_odd_symmetric(elementary(k, n))) ok = false;
            if (!is_odd_symmetric(complete(k, n))) ok = false;
        }
        for (int l = 1; l <= std::min(D / 2, 8); ++l)
            if (!elem_complete_check(l, n)) ok = false;
        out.push_back(make_record("sym", "eps_k, h_k odd symmetric; alternating elem-complete sum vanishes",
                                  "odd elementary vs complete relation", {{"n", n}}, ok, "",
                                  t.seconds()));
    }

    {  // e-relations
        Timed t;
        bool ok = true;
        for (int i = 1; i <= n; ++i)
            for (int m2 = 1; 2 * m2 - i <= n; ++m2) {
                int j = 2 * m2 - i;
                if (j >= 1 && i <= n && j <= n) {
                    auto a = elementary(i, n) * elementary(j, n);
                    auto b = elementary(j, n) * elementary(i, n);
                    if (!(a == b)) ok = false;
                }
                int j2 = 2 * m2 + 1 - i;
                if (i >= 1 && 2 * m2 - i >= 1 && i <= n - 1 && 2 * m2 - i <= n - 1) {
                    Int s = i % 2 == 0 ? 1 : -1;
                    auto lhs = elementary(i, n) * elementary(j2, n) +
                               elementary(j2, n) * elementary(i, n) * s;
                    auto rhs = elementary(i + 1, n) * elementary(2 * m2 - i, n) * s +
                               elementary(2 * m2 - i, n) * elementary(i + 1, n);
                    if (!(lhs == rhs)) ok = false;
                }
            }
        for (int m2 = 1; 2 * m2 <= n - 1; ++m2) {
            if (2 * m2 <= 1) continue;
            auto lhs = elementary(1, n) * elementary(2 * m2, n) +
                       elementary(2 * m2, n) * elementary(1, n);
            auto rhs = elementary(2 * m2 + 1, n) * 2;
            if (!(lhs == rhs)) ok = false;
        }
        out.push_back(make_record("sym", "odd elementary symmetric function relations",
                                  "relations among the eps_i", {{"n", n}}, ok, "", t.seconds()));
    }

    {  // Schur: odd symmetric, transition unitriangularity, independence, count
        Timed t;
        bool ok = true;
        std::string witness;
        int half = std::min(D, 16) / 2;
        for (int s = 0; s <= half && ok; ++s) {
            auto lambdas = Partition::all_of_size(s, n, s);
            std::sort(lambdas.begin(), lambdas.end());  // lex ascending
            // monomial row index over this degree
            std::map<Exponents, int> rows;
            auto vec_of = [&](const SkewPoly& p) {
                SparseVec<Int> v;
                for (const auto& [e, c] : p.terms()) {
                    auto it = rows.find(e);
                    int id = it == rows.end() ? static_cast<int>(rows.size()) : it->second;
                    if (it == rows.end()) rows.emplace(e, id);
                    v.emplace_back(id, c);
                }
                std::sort(v.begin(), v.end());
                return v;
            };
            std::vector<SparseVec<Int>> hcols, ecols, scols;
            std::vector<Word> hwords;
            for (const auto& lam : lambdas) {
                Word w(lam.parts().begin(), lam.parts().end());
                hcols.push_back(vec_of(h_word_poly(w, n)));
                hwords.push_back(w);
            }
            for (const auto& lam : lambdas) {
                // eps-words are indexed by dual partitions (parts <= n)
                Partition dual = lam.dual();
                SkewPoly p = SkewPoly::unit(n);
                for (int part : dual.parts()) p = p * elementary(part, n);
                ecols.push_back(vec_of(p));
            }
            for (const auto& lam : lambdas) {
                SkewPoly sp = schur(lam, n);
                if (!is_odd_symmetric(sp)) ok = false;
                scols.push_back(vec_of(sp));
            }
            // independence of Schur family + graded count vs grdim OL_n
            if (!independence_integer(scols, static_cast<int>(rows.size()))) {
                ok = false;
                witness = "Schur dependence in degree " + std::to_string(2 * s);
            }
            GradedSeries ol(GradedScalar::one());
            for (int i = 1; i <= n; ++i) ol = ol * GradedSeries::geometric(i);
            if (ol.expand(2 * half).coeff(2 * s, 0) != static_cast<Int>(lambdas.size())) {
                ok = false;
                witness = "Schur count vs grdim OL mismatch at degree " + std::to_string(2 * s);
            }
            // unitriangular transition s_lambda over h-words and eps-words
            IntSolver hsolve(hcols, static_cast<int>(rows.size()));
            IntSolver esolve(ecols, static_cast<int>(rows.size()));
            for (size_t li = 0; li < lambdas.size(); ++li) {
                auto hc = hsolve.solve(scols[li]);
                if (!hc) {
                    ok = false;
                    witness = "s not in h-word span";
                    continue;
                }
                for (size_t mj = 0; mj < lambdas.size(); ++mj) {
                    if (mj == li) {
                        if ((*hc)[mj] != 1) ok = false, witness = "h-transition diagonal != 1";
                    } else if ((*hc)[mj] != 0 && lambdas[mj] < lambdas[li]) {
                        ok = false;
                        witness = "h-transition not triangular";
                    }
                }
                auto ec = esolve.solve(scols[li]);
                if (!ec) {
                    ok = false;
                    witness = "s not in eps-word span";
                    continue;
                }
                // column mj carries the word dual(lambdas[mj]); triangularity
                // matches s_lambda = eps_{dual lambda} + larger terms
                for (size_t mj = 0; mj < lambdas.size(); ++mj) {
                    if (mj == li) {
                        if ((*ec)[mj] != 1) ok = false, witness = "eps-transition diagonal != 1";
                    } else if ((*ec)[mj] != 0 && lambdas[mj] < lambdas[li]) {
                        ok = false;
                        witness = "eps-transition not triangular";
                    }
                }
            }
        }
        out.push_back(make_record("sym",
                                  "odd Schur: kernel membership, unitriangular h- and "
                                  "eps-transitions, independence, graded count",
                                  "odd Schur basis and its triangularity", {{"n", n}, {"D", D}},
                                  ok, witness, t.seconds()));
    }

    {  // Schubert basis and the divided-difference recursion
        Timed t;
        bool ok = true;
        const auto& G = symmetric_group(n);
        for (const auto& w : G.elements()) {
            SkewPoly sw = schubert(w, n);
            if (sw.is_zero()) ok = false;
            for (int u = 1; u <= n - 1; ++u) {
                SkewPoly img = divided_difference(u, sw);
                Permutation target = w * Permutation::transposition(n, u);
                if (target.length() == w.length() - 1) {
                    SkewPoly st = schubert(target, n);
                    if (!(img == st || img == -st)) ok = false;
                } else if (!img.is_zero()) {
                    ok = false;
                }
            }
        }
        // free module coordinates: reassembly on random elements
        std::mt19937 rng(7);
        for (int trial = 0; trial < 6; ++trial) {
            SkewPoly f = detail::random_poly(n, 8, rng);
            auto coords = ol_coordinates(f, G);
            SkewPoly back(n);
            for (const auto& [wi, c] : coords) back = back + schubert(G.at(wi), n) * c;
            if (!(back == f)) ok = false;
        }
        out.push_back(make_record("sym",
                                  "odd Schubert polynomials: partial_u recursion and free "
                                  "OL-module coordinates",
                                  "Schubert basis of the polynomial ring", {{"n", n}}, ok, "",
                                  t.seconds()));
    }

    {  // straightening
        Timed t;
        bool ok = true;
        std::mt19937 rng(11);
        std::vector<Word> words = {{1, 2}, {2, 3}, {1, 1, 2}, {2, 2}, {1, 3}, {3, 1, 2}, {2, 4}};
        for (int trial = 0; trial < 10; ++trial) {
            Word w;
            int len = 2 + rng() % 3;
            for (int i = 0; i < len; ++i) w.push_back(1 + rng() % 4);
            words.push_back(w);
        }
        for (const auto& w : words) {
            auto st = straighten_h(w);
            SkewPoly lhs = h_word_poly(w, n);
            SkewPoly rhs(n);
            for (const auto& [sw, c] : st) {
                for (size_t i = 0; i + 1 < sw.size(); ++i)
                    if (sw[i] < sw[i + 1]) ok = false;  // must be decreasing
                rhs = rhs + h_word_poly(sw, n) * c;
            }
            if (!(lhs == rhs)) ok = false;
        }
        out.push_back(make_record("sym", "h-word straightening matches expansion in the polynomial ring",
                                  "h-shuffle straightening relation", {{"n", n}}, ok, "",
                                  t.seconds()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suite: schur-lr — odd Littlewood-Richardson vs the classical oracle mod 2.
// ---------------------------------------------------------------------------
inline std::vector<VerificationRecord> suite_schur_lr(const SuiteConfig& cfg) {
    std::vector<VerificationRecord> out;
    using detail::make_record;
    int vars = std::min(cfg.n, 3) >= 1 ? 3 : 3;  // k = 3 variables per the contract
    int total_bound = 6;

    Timed t;
    bool ok = true;
    std::string witness;
    for (int su = 0; su <= total_bound; ++su) {
        for (int sv = 0; su + sv <= total_bound; ++sv) {
            for (const auto& mu : Partition::all_of_size(su, vars, su))
                for (const auto& nu : Partition::all_of_size(sv, vars, sv)) {
                    auto odd = lr_coefficients(mu, nu, vars);
                    for (const auto& [lam, c] : odd)
                        if (lam.size() != mu.size() + nu.size()) {
                            ok = false;
                            witness = "degree-violating coefficient";
                        }
                    auto even = even_lr(mu, nu);
                    // compare mod 2 over partitions with <= vars rows
                    std::set<Partition> keys;
                    for (const auto& [lam, c] : odd) keys.insert(lam);
                    for (const auto& [lam, c] : even)
                        if (lam.fits_in_box(vars, total_bound)) keys.insert(lam);
                    for (const auto& lam : keys) {
                        if (lam.length() > vars) continue;
                        Int o = odd.count(lam) ? odd.at(lam) : 0;
                        Int e = even.count(lam) ? even.at(lam) : 0;
                        if (((o - e) % 2 + 2) % 2 != 0) {
                            ok = false;
                            if (witness.empty())
                                witness = "mu=" + mu.str() + " nu=" + nu.str() +
                                          " lambda=" + lam.str();
                        }
                    }
                    if (mu.length() == 0) {
                        // c^nu_{empty,nu} = 1 delta
                        if (!(odd.size() == 1 && odd.begin()->first == nu &&
                              odd.begin()->second == 1) &&
                            !(nu.length() == 0 && odd.size() == 1))
                            ok = false;
                    }
                }
        }
    }
    out.push_back(make_record("schur-lr",
                              "odd Littlewood-Richardson coefficients reduce mod 2 to the "
                              "classical tableau count",
                              "odd LR rule vs classical LR numbers mod 2",
                              {{"vars", vars}, {"size_bound", total_bound}}, ok, witness,
                              t.seconds()));
    return out;
}

}  // namespace oddcat

#include "suites_deform.hpp"
#include "suites_complex.hpp"
