// Finite hypergeometric Gamma-series over the lattice B = Z*(1,-1,-1,1):
// expansion, evaluation at the all-ones point, GKZ residuals, restriction.
#pragma once

#include "exact_core.hpp"

#include <array>
#include <tuple>

namespace cg3 {

// gamma = (g1, g2, g13, g23); in representation-theoretic use g23 == 0
struct GammaParams {
    int g1 = 0, g2 = 0, g13 = 0, g23 = 0;
    auto operator<=>(const GammaParams&) const = default;
};

inline constexpr std::array<int, 4> LATTICE_B = {1, -1, -1, 1};

inline const VarSet GAMMA_VARS{{"z1", "z2", "z3", "z4"}};

// support of the summation index k: gamma + k*(1,-1,-1,1) must have all
// entries >= 0 for the reciprocal-Gamma factors to survive
inline std::pair<int, int> gamma_support(const GammaParams& g) {
    return {std::max(-g.g1, -g.g23), std::min(g.g2, g.g13)};
}

inline Poly expand_gamma_series(const GammaParams& g) {
    Poly p(4);
    auto [lo, hi] = gamma_support(g);
    for (int k = lo; k <= hi; ++k) {
        Rational c = rfact(g.g1 + k) * rfact(g.g2 - k) * rfact(g.g13 - k) *
                     rfact(g.g23 + k);
        if (c == 0) continue;
        p.add_term({g.g1 + k, g.g2 - k, g.g13 - k, g.g23 + k}, c);
    }
    return p;
}

// F_gamma(1,1,1,1) by direct finite summation (the defining path)
inline Rational eval_at_one(const GammaParams& g) {
    Rational s(0);
    auto [lo, hi] = gamma_support(g);
    for (int k = lo; k <= hi; ++k)
        s += rfact(g.g1 + k) * rfact(g.g2 - k) * rfact(g.g13 - k) *
             rfact(g.g23 + k);
    return s;
}

// closed form of the Gauss-summation identity, valid when g23 == 0 and all
// Gamma arguments below are positive; used only as a cross-check
inline Rational eval_at_one_closed(const GammaParams& g) {
    auto gpos = [](int n) -> Rational {
        if (n <= 0) throw SingularInverse("Gamma pole in closed form");
        return Rational(factorial(n - 1));
    };
    return gpos(g.g1 + 1) * gpos(g.g1 + g.g2 + g.g13 + 1) /
           (gpos(g.g1 + 1) * gpos(g.g2 + 1) * gpos(g.g13 + 1) *
            gpos(g.g1 + g.g2 + 1) * gpos(g.g1 + g.g13 + 1));
}

inline bool closed_form_applicable(const GammaParams& g) {
    return g.g23 == 0 && g.g1 + 1 >= 1 && g.g2 + 1 >= 1 && g.g13 + 1 >= 1 &&
           g.g1 + g.g2 + 1 >= 1 && g.g1 + g.g13 + 1 >= 1 &&
           g.g1 + g.g2 + g.g13 + 1 >= 1;
}

// residuals of the GKZ system: box operator d1 d4 - d2 d3 and the three
// Euler operators th1+th2, th1+th3, th1-th4 with eigenvalues g1+g2, g1+g13,
// g1-g23.  All four must vanish identically.
inline std::array<Poly, 4> gkz_residual(const GammaParams& g) {
    Poly F = expand_gamma_series(g);
    Poly box = psub(pdiff(pdiff(F, 0), 3), pdiff(pdiff(F, 1), 2));
    auto euler = [&](int va, int vb, int sgn, int eig) {
        Poly e(4);
        for (auto& [ex, c] : F.terms) {
            Rational k = Rational(ex[va] + sgn * ex[vb] - eig) * c;
            if (k != 0) e.add_term(ex, k);
        }
        return e;
    };
    return {box, euler(0, 1, +1, g.g1 + g.g2), euler(0, 2, +1, g.g1 + g.g13),
            euler(0, 3, -1, g.g1 - g.g23)};
}

// restriction to the toric surface z4 = z2 z3 / z1 collapses the series to
// the monomial z1^g1 z2^g2 z3^g13 times F_gamma(1)
inline bool restriction_check(const GammaParams& g, const Rational& z1,
                              const Rational& z2, const Rational& z3) {
    if (g.g23 != 0) throw RejectSplit("restriction_check requires g23 == 0");
    if (z1 == 0) throw RejectSplit("restriction_check requires z1 != 0");
    Poly F = expand_gamma_series(g);
    auto ipow = [](const Rational& b, int n) {
        Rational r(1);
        for (int i = 0; i < n; ++i) r *= b;
        return r;
    };
    Rational lhs(0);
    for (auto& [e, c] : F.terms)
        lhs += c * ipow(z1, e[0]) * ipow(z2, e[1]) * ipow(z3, e[2]) *
               ipow(z2 * z3 / z1, e[3]);
    Rational rhs = ipow(z1, g.g1) * ipow(z2, g.g2) * ipow(z3, g.g13) *
                   eval_at_one(g);
    return lhs == rhs;
}

inline GammaParams gamma_shift(const GammaParams& g, int k) {
    return {g.g1 + k, g.g2 - k, g.g13 - k, g.g23 + k};
}

}  // namespace cg3
