// Contiguity machinery: the Pi product, the c/d coefficients of the
// lowering-operator expansion, the Y/h/X/Z coefficients of the three
// Gamma-series relations, and the hypergeometric operator calculus.
// Each closed form is certified by a symbolic identity suite; where the
// source formulas admit two readings, the adopted reading is the one the
// identity suites confirm and the literal one is kept for reporting.
#pragma once

#include "gamma_series.hpp"
#include "gl3_model.hpp"

#include <functional>
#include <map>

namespace cg3 {

// memoized F_gamma(1); the hot scalar of the whole engine
inline const Rational& f_one(const GammaParams& g) {
    thread_local std::map<GammaParams, Rational> memo;
    auto it = memo.find(g);
    if (it == memo.end()) it = memo.emplace(g, eval_at_one(g)).first;
    return it->second;
}

// Pi_{p,gamma} = prod_{t=1..p} ( t(t+1) + t(g1+g2+g13+g23) )
inline Rational pi_product(int p, const GammaParams& g) {
    long s = g.g1 + g.g2 + g.g13 + g.g23;
    Rational r(1);
    for (int t = 1; t <= p; ++t) r *= Rational(Int(t) * (t + 1) + Int(t) * s);
    return r;
}

namespace detail {
// all k-subsets of {1..n}, increasing
inline void for_subsets(int n, int k,
                        const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    if (k > n) return;
    while (true) {
        f(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}
}  // namespace detail

// c^h_{k,n-k} = (-1)^{n-k} sum_{S subset {1..n}, |S|=k} prod_l (h+2+l-2 i_l)
inline Rational c_coeff(int h, int n, int k) {
    Rational W(0);
    detail::for_subsets(n, k, [&](const std::vector<int>& S) {
        Rational t(1);
        for (int l = 1; l <= (int)S.size(); ++l)
            t *= Rational(h + 2 + l - 2 * S[l - 1]);
        W += t;
    });
    return ((n - k) % 2 ? -W : W);
}

// d^h_{k,n-k} for nabla31^n/n! = sum_k d (O1^k/k!)(O2^{n-k}/(n-k)!);
// h = alpha+beta+gamma+delta+omega, M1 = the E11-eigenvalue of the label
// function (h + phi + psi).  The denominator runs over M1, not h: fixed by
// the operator-identity oracle.
inline Rational d_coeff(int h, int M1, int n, int k) {
    Rational den(1);
    for (int j = 1; j <= n; ++j) {
        if (M1 + 2 - j == 0)
            throw SingularInverse("d_coeff: vanishing (M1+2-j) factor");
        den *= Rational(M1 + 2 - j);
    }
    return c_coeff(h, n, k) * Rational(factorial(k)) *
           Rational(factorial(n - k)) * rfact(n) / den;
}

// h coefficient: sum over ordered partitions {1..q}=I1|I2|I3, |I2|=q2,
// |I3|=q3, of prod_{j in I1} ((q-j) + (lam - #{i in I2: i<j})
//                                    + (mu - #{i in I3: i<j}) + om)
inline Rational h_coeff(int lam, int mu, int om, int q1, int q2, int q3) {
    struct Key {
        int a, b, c, d, e, f;
        auto operator<=>(const Key&) const = default;
    };
    thread_local std::map<Key, Rational> memo;
    Key key{lam, mu, om, q1, q2, q3};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int q = q1 + q2 + q3;
    Rational total(0);
    detail::for_subsets(q, q2, [&](const std::vector<int>& I2) {
        std::vector<int> rest;
        for (int i = 1; i <= q; ++i)
            if (std::find(I2.begin(), I2.end(), i) == I2.end())
                rest.push_back(i);
        detail::for_subsets((int)rest.size(), q3,
                            [&](const std::vector<int>& pos) {
            std::vector<int> I3;
            for (int p : pos) I3.push_back(rest[p - 1]);
            Rational t(1);
            for (int j : rest) {
                if (std::find(I3.begin(), I3.end(), j) != I3.end()) continue;
                int c2 = 0, c3 = 0;
                for (int i : I2) c2 += (i < j);
                for (int i : I3) c3 += (i < j);
                t *= Rational((q - j) + (lam - c2) + (mu - c3) + om);
            }
            total += t;
        });
    });
    return memo.emplace(key, total).first->second;
}

// one summand of a contiguity relation: a monomial prefactor in determinant
// variables, a Pluecker power (same power on the b-side for rel2), one or two
// Gamma-series parameters and the rational coefficient
struct RelationTerm {
    std::map<int, int> prefactor;  // DetVar -> exponent
    int plucker_power = 0;
    GammaParams gamma{};       // a-side series
    GammaParams gamma_b{};     // b-side series (rel2 only)
    bool has_b = false;
    Rational coeff;
};

// rel1, one p: a1^u F_g = sum_p Y_p Pl^p F_{g^p}.
// Adopted reading: falling-factorial Gamma ratio, numerator series shifted by
// p along (1,-1,-1,0), overall (-1)^p.  Zero F(1) anywhere kills the term.
inline std::pair<GammaParams, Rational> y_coeff(int u, const GammaParams& g,
                                                int p) {
    GammaParams gp{g.g1 + u, g.g2 - p, g.g13 - p, 0};
    Rational Fgp = f_one(gp);
    if (Fgp == 0) return {gp, Rational(0)};
    Rational num = f_one({g.g1 + p, g.g2 - p, g.g13 - p, 0});
    Rational Y = (p % 2 ? Rational(-1) : Rational(1)) * falling(u, p) * num /
                 (Fgp * pi_product(p, gp));
    return {gp, Y};
}

// literal reading of the same display (no sign, unshifted numerator)
inline std::pair<GammaParams, Rational> y_coeff_literal(int u,
                                                        const GammaParams& g,
                                                        int p) {
    GammaParams gp{g.g1 + u, g.g2 - p, g.g13 - p, 0};
    Rational Fgp = f_one(gp);
    if (Fgp == 0) return {gp, Rational(0)};
    return {gp, falling(u, p) * f_one(g) / (Fgp * pi_product(p, gp))};
}

// rel2, one split.  Splits: q=q1+q2+q3, f* of lam-q-q2, p* of mu-q-q3,
// o1+o2=om.  Returns (X, exponent deltas for a3,a12,b3,b12 beyond the
// Pluecker powers, series params theta, vartheta).
struct XTerm {
    Rational X;
    int da3, da12, db3, db12;  // prefactor exponents (Pluecker power excluded)
    int q;                     // Pluecker power, both sides
    GammaParams th, vt;
};

inline XTerm x_coeff(int lam, int mu, int om, int q1, int q2, int q3, int f1,
                     int f2, int f3, int p1, int p2, int p3, int o1, int o2) {
    int q = q1 + q2 + q3;
    if (f1 + f2 + f3 != lam - q - q2 || p1 + p2 + p3 != mu - q - q3 ||
        o1 + o2 != om || q1 < 0 || f3 < 0 || p3 < 0 ||
        std::min({f1, f2, p1, p2, o1, o2, q2, q3}) < 0)
        throw RejectSplit("x_coeff: split violates rel2 constraints");
    GammaParams th{f1 + o1 - p1, f2 + o2 + p1, p2 + p1, 0};
    GammaParams vt{p1 + o2 - f1, p2 + o1 + f1, f2 + f1, 0};
    XTerm t{Rational(0), f3 + q2, p3 + q3, p3 + q3, f3 + q2, q, th, vt};
    Rational Fth = f_one(th), Fvt = f_one(vt);
    if (Fth == 0 || Fvt == 0) return t;
    // the h factor enters at the depleted arguments (lam-q+1, mu-q+1): the
    // base relation is applied q times and h describes the final application.
    // The literal (lam, mu) reading breaks the rel2 identity from q = 2 on;
    // the shifted one restores it on the whole grid (q = 0, 1 are unaffected).
    Rational hcb = q == 0 ? Rational(1)
                          : h_coeff(lam - q + 1, mu - q + 1, om, q1, q2, q3);
    if (hcb == 0) return t;
    int sgn = (f2 + p2 + o2 + q2 + q3) % 2 ? -1 : 1;
    t.X = Rational(sgn) / (pi_product(q, th) * pi_product(q, vt)) * hcb /
          (Fth * Fvt) * Rational(factorial(q)) * rfact(f1) * rfact(f2) *
          rfact(f3) * rfact(p1) * rfact(p2) * rfact(p3) * rfact(o1) * rfact(o2);
    return t;
}

// rel3, one (n1,n2,r):  E32^n/n! (a3^{i0} a12^{j0} F_g)  [plain powers]
//   = sum C a3^{i0+n1} a12^{j0-n2} Pl^r F_eps.
// Adopted reading: numerator F at (g1, g2-n1-r, g13), denominator (n2-r)!.
inline std::pair<GammaParams, Rational> z_coeff(const GammaParams& g, int i0,
                                                int j0, int n1, int n2,
                                                int r) {
    GammaParams eps{g.g1, g.g2 - n1 - r, g.g13 + n2 - r, 0};
    if (j0 - n2 < 0 || r > n2) return {eps, Rational(0)};
    Rational Fe = f_one(eps);
    if (Fe == 0) return {eps, Rational(0)};
    Rational num = f_one({g.g1, g.g2 - n1 - r, g.g13, 0});
    if (num == 0) return {eps, Rational(0)};
    Rational C = num * Rational(factorial(j0)) /
                 (pi_product(r, eps) * Fe * Rational(factorial(n1)) *
                  Rational(factorial(j0 - n2)) * Rational(factorial(n2 - r)));
    return {eps, C};
}

// E21^H/H! F_g = binom(g2+H, H) F_{g-He1+He2}; empty support gives no term
inline std::optional<std::pair<GammaParams, Rational>> e21_coeff(
    const GammaParams& g, int H) {
    GammaParams gt{g.g1 - H, g.g2 + H, g.g13, 0};
    auto [lo, hi] = gamma_support(gt);
    if (lo > hi) return std::nullopt;
    return std::pair{gt, binomial(g.g2 + H, H)};
}

// ----------------------------------------------------------- full expansions

inline std::vector<RelationTerm> expand_rel1(int u, const GammaParams& g) {
    std::vector<RelationTerm> out;
    for (int p = 0; p <= u; ++p) {
        auto [gp, Y] = y_coeff(u, g, p);
        if (Y == 0) continue;
        RelationTerm t;
        t.plucker_power = p;
        t.gamma = gp;
        t.coeff = Y;
        out.push_back(t);
    }
    return out;
}

inline std::vector<RelationTerm> expand_rel2(int lam, int mu, int om) {
    std::vector<RelationTerm> out;
    for (int q = 0; q <= std::min(lam, mu) + om; ++q)
        for (int q2 = 0; q2 <= q; ++q2)
            for (int q3 = 0; q3 + q2 <= q; ++q3) {
                int q1 = q - q2 - q3;
                int fsum = lam - q - q2, psum = mu - q - q3;
                if (fsum < 0 || psum < 0) continue;
                if (q > 0 && h_coeff(lam - q + 1, mu - q + 1, om, q1, q2, q3) == 0)
                    continue;
                for (int f1 = 0; f1 <= fsum; ++f1)
                    for (int f2 = 0; f1 + f2 <= fsum; ++f2)
                        for (int p1 = 0; p1 <= psum; ++p1)
                            for (int p2 = 0; p1 + p2 <= psum; ++p2)
                                for (int o1 = 0; o1 <= om; ++o1) {
                                    auto t = x_coeff(lam, mu, om, q1, q2, q3,
                                                     f1, f2, fsum - f1 - f2,
                                                     p1, p2, psum - p1 - p2,
                                                     o1, om - o1);
                                    if (t.X == 0) continue;
                                    RelationTerm r;
                                    r.prefactor = {{vA3, t.da3},
                                                   {vA12, t.da12},
                                                   {vB3, t.db3},
                                                   {vB12, t.db12}};
                                    r.plucker_power = t.q;
                                    r.gamma = t.th;
                                    r.gamma_b = t.vt;
                                    r.has_b = true;
                                    r.coeff = t.X;
                                    out.push_back(r);
                                }
            }
    return out;
}

inline std::vector<RelationTerm> expand_rel3(int n, const GammaParams& g,
                                             int i0, int j0) {
    std::vector<RelationTerm> out;
    for (int n1 = 0; n1 <= n; ++n1) {
        int n2 = n - n1;
        if (j0 - n2 < 0) continue;
        for (int r = 0; r <= n2; ++r) {
            auto [eps, C] = z_coeff(g, i0, j0, n1, n2, r);
            if (C == 0) continue;
            RelationTerm t;
            t.prefactor = {{vA3, i0 + n1}, {vA12, j0 - n2}};
            t.plucker_power = r;
            t.gamma = eps;
            t.coeff = C;
            out.push_back(t);
        }
    }
    return out;
}

// ---------------------------------------------- symbolic helpers for the tests

// Gamma series as a DetPoly in the a- or b-side alphabet
inline DetPoly gamma_series_det(const GammaParams& g, int factor = 0) {
    int ofs = factor ? 6 : 0;
    DetPoly out(NDET);
    auto [lo, hi] = gamma_support(g);
    for (int k = lo; k <= hi; ++k) {
        Rational c = rfact(g.g1 + k) * rfact(g.g2 - k) * rfact(g.g13 - k) *
                     rfact(g.g23 + k);
        if (c == 0) continue;
        out.add_term(Expo{[&] {
                         Expo e(NDET, 0);
                         e[vA1 + ofs] = g.g1 + k;
                         e[vA2 + ofs] = g.g2 - k;
                         e[vA13 + ofs] = g.g13 - k;
                         e[vA23 + ofs] = g.g23 + k;
                         return e;
                     }()},
                     c);
    }
    return out;
}

// Pluecker-type combination a2 a13 - a1 a23 (equals a3 a12 in the embedding)
inline DetPoly plucker_pos(int factor = 0) {
    int ofs = factor ? 6 : 0;
    return padd(pmono(NDET, {{vA2 + ofs, 1}, {vA13 + ofs, 1}}),
                pmono(NDET, {{vA1 + ofs, 1}, {vA23 + ofs, 1}}, Rational(-1)));
}

inline DetPoly relation_term_poly(const RelationTerm& t) {
    DetPoly p = pconst(NDET, t.coeff);
    for (auto& [v, e] : t.prefactor)
        if (e) p = pmul(p, ppow(pmono(NDET, {{v, 1}}), e));
    if (t.plucker_power) {
        p = pmul(p, ppow(plucker_pos(0), t.plucker_power));
        if (t.has_b) p = pmul(p, ppow(plucker_pos(1), t.plucker_power));
    }
    p = pmul(p, gamma_series_det(t.gamma, 0));
    if (t.has_b) p = pmul(p, gamma_series_det(t.gamma_b, 1));
    return p;
}

// O_a = d^2/da1 da23 - d^2/da2 da13 (resp. O_b), variables treated as free
inline DetPoly hyper_operator_apply(int which, const DetPoly& p) {
    int ofs = which ? 6 : 0;
    return psub(pdiff(pdiff(p, vA1 + ofs), vA23 + ofs),
                pdiff(pdiff(p, vA2 + ofs), vA13 + ofs));
}

// a13 F_g = X1 F_{g+e13} + Pl X2 F_{(g1,g2-1,g13)}: exact 2-unknown solve in
// the embedding; throws NotInSpan when no decomposition exists
inline std::pair<Rational, Rational> f13_decompose(const GammaParams& g) {
    DetPoly lhs = pmul(pmono(NDET, {{vA13, 1}}), gamma_series_det(g));
    DetPoly b1 = gamma_series_det({g.g1, g.g2, g.g13 + 1, 0});
    DetPoly b2 =
        pmul(plucker_pos(0), gamma_series_det({g.g1, g.g2 - 1, g.g13, 0}));
    MxPoly L = embed_matrix_entries(lhs);
    MxPoly B1 = embed_matrix_entries(b1);
    MxPoly B2 = embed_matrix_entries(b2);
    // solve L = x1 B1 + x2 B2 by matching two independent monomials, then
    // verify on the whole polynomial
    std::map<Expo, std::array<Rational, 3>> rows;
    for (auto& [e, c] : B1.terms) rows[e][0] = c;
    for (auto& [e, c] : B2.terms) rows[e][1] = c;
    for (auto& [e, c] : L.terms) rows[e][2] = c;
    Rational x1(0), x2(0);
    bool solved = false;
    for (auto it1 = rows.begin(); it1 != rows.end() && !solved; ++it1)
        for (auto it2 = std::next(it1); it2 != rows.end() && !solved; ++it2) {
            auto& r1 = it1->second;
            auto& r2 = it2->second;
            Rational det = r1[0] * r2[1] - r1[1] * r2[0];
            if (det == 0) continue;
            x1 = (r1[2] * r2[1] - r1[1] * r2[2]) / det;
            x2 = (r1[0] * r2[2] - r1[2] * r2[0]) / det;
            solved = true;
        }
    if (!solved) {
        // degenerate: basis spans at most a line; try proportionality
        if (L.is_zero()) return {Rational(0), Rational(0)};
        for (auto* B : {&B1, &B2}) {
            if (B->is_zero()) continue;
            auto& [e, c] = *B->terms.begin();
            if (auto it = L.terms.find(e); it != L.terms.end()) {
                Rational x = it->second / c;
                if (psub(L, pscale(*B, x)).is_zero())
                    return B == &B1 ? std::pair{x, Rational(0)}
                                    : std::pair{Rational(0), x};
            }
        }
        throw RankDeficient("f13_decompose: basis rank < 2");
    }
    MxPoly res = psub(L, padd(pscale(B1, x1), pscale(B2, x2)));
    if (!res.is_zero()) throw NotInSpan("f13_decompose: nonzero residual");
    return {x1, x2};
}

}  // namespace cg3
