// Highest vectors of U (x) V: the two label types, their weights and
// multiplicities, a brute-force weight-space multiplicity oracle, and the
// symmetrization relation reducing general labels to the basis types.
#pragma once

#include "gl3_model.hpp"

#include <map>

namespace cg3 {

struct WeightPair {
    int m1 = 0, m2 = 0;    // U = irrep (m1, m2, 0)
    int mb1 = 0, mb2 = 0;  // V = irrep (mb1, mb2, 0)
    bool valid() const { return m1 >= m2 && m2 >= 0 && mb1 >= mb2 && mb2 >= 0; }
    auto operator<=>(const WeightPair&) const = default;
};

using Weight3 = std::array<int, 3>;

// exponent tuple selecting one irreducible summand.  type 1 lives on
// a1,b1,a12,b12,(ab)12,(aab),(abb); type 2 on a3,b3,a23,b23,(aabb)2313,
// (aab),(abb).  phi always multiplies (aab) for type 1 and (abb) for type 2;
// the defining constraints, not the variable name, are what is enforced.
struct HighestVectorLabel {
    int vtype = 1;
    int alpha = 0, beta = 0, gamma_e = 0, delta = 0;
    int omega = 0, phi = 0, psi = 0, theta = 0;
    auto operator<=>(const HighestVectorLabel&) const = default;

    bool valid(const WeightPair& wp) const {
        if (alpha < 0 || beta < 0 || gamma_e < 0 || delta < 0 || omega < 0 ||
            phi < 0 || psi < 0 || theta < 0)
            return false;
        if (vtype == 1)
            return theta == 0 && alpha + omega + psi == wp.m1 - wp.m2 &&
                   gamma_e + phi == wp.m2 && beta + omega + phi == wp.mb1 - wp.mb2 &&
                   delta + psi == wp.mb2;
        if (vtype == 2)
            return omega == 0 && alpha + phi == wp.m1 - wp.m2 &&
                   gamma_e + theta + psi == wp.m2 &&
                   beta + psi == wp.mb1 - wp.mb2 &&
                   delta + phi + theta == wp.mb2;
        return false;
    }
};

// type-1 labels carry the polynomial's own weight; type-2 vectors are highest
// with respect to the transported (dual) action, and the highest weight of the
// component they label is the reversal of the polynomial weight
inline Weight3 label_weight(const HighestVectorLabel& l) {
    if (l.vtype == 1) {
        int s = l.alpha + l.beta + l.gamma_e + l.delta + l.omega + l.phi + l.psi;
        return {s, l.gamma_e + l.delta + l.omega + l.phi + l.psi, l.phi + l.psi};
    }
    int s = l.alpha + l.beta + l.gamma_e + l.delta + 2 * l.theta + l.phi + l.psi;
    return {s, l.gamma_e + l.delta + l.theta + l.phi + l.psi,
            l.theta + l.phi + l.psi};
}

inline DetPoly label_function(const HighestVectorLabel& l) {
    Rational norm = rfact(l.alpha) * rfact(l.beta) * rfact(l.gamma_e) *
                    rfact(l.delta) * rfact(l.vtype == 1 ? l.omega : l.theta);
    if (l.vtype == 1)
        return pmono(NDET,
                     {{vA1, l.alpha},
                      {vB1, l.beta},
                      {vA12, l.gamma_e},
                      {vB12, l.delta},
                      {vAB12, l.omega},
                      {vAAB, l.phi},
                      {vABB, l.psi}},
                     norm);
    return pmono(NDET,
                 {{vA3, l.alpha},
                  {vB3, l.beta},
                  {vA23, l.gamma_e},
                  {vB23, l.delta},
                  {vAABB2313, l.theta},
                  {vAAB, l.psi},
                  {vABB, l.phi}},
                 norm);
}

// all basis labels; (omega, theta) = (0, 0) solutions appear once, as type 1
inline std::vector<HighestVectorLabel> enumerate_labels(const WeightPair& wp) {
    std::vector<HighestVectorLabel> out;
    for (int om = 0; om <= wp.m1 - wp.m2; ++om)
        for (int ph = 0; ph <= wp.m2; ++ph)
            for (int ps = 0; ps <= wp.mb2; ++ps) {
                HighestVectorLabel l;
                l.vtype = 1;
                l.omega = om, l.phi = ph, l.psi = ps;
                l.alpha = wp.m1 - wp.m2 - om - ps;
                l.gamma_e = wp.m2 - ph;
                l.beta = wp.mb1 - wp.mb2 - om - ph;
                l.delta = wp.mb2 - ps;
                if (l.valid(wp)) out.push_back(l);
            }
    for (int th = 1; th <= wp.m2 && th <= wp.mb2; ++th)
        for (int ph = 0; ph <= wp.m1 - wp.m2; ++ph)
            for (int ps = 0; ps <= wp.mb1 - wp.mb2; ++ps) {
                HighestVectorLabel l;
                l.vtype = 2;
                l.theta = th, l.phi = ph, l.psi = ps;
                l.alpha = wp.m1 - wp.m2 - ph;
                l.gamma_e = wp.m2 - th - ps;
                l.beta = wp.mb1 - wp.mb2 - ps;
                l.delta = wp.mb2 - ph - th;
                if (l.valid(wp)) out.push_back(l);
            }
    std::sort(out.begin(), out.end());
    return out;
}

inline int multiplicity(const WeightPair& wp, const Weight3& W) {
    int n = 0;
    for (auto& l : enumerate_labels(wp))
        if (label_weight(l) == W) ++n;
    return n;
}

// --------------------------------------------- brute-force multiplicity oracle

// number of GT patterns of irrep W with weight mu
inline int irrep_weight_count(const Weight3& W, const Weight3& mu) {
    int n = 0;
    for (int k1 = W[1]; k1 <= W[0]; ++k1)
        for (int k2 = W[2]; k2 <= W[1]; ++k2)
            for (int s = k2; s <= k1; ++s)
                if (Weight3{s, k1 + k2 - s, W[0] + W[1] + W[2] - k1 - k2} == mu)
                    ++n;
    return n;
}

inline Int weyl_dimension(const Weight3& W) {
    Int a = W[0] - W[1], b = W[1] - W[2];
    return (1 + a) * (1 + b) * (2 + a + b) / 2;
}

// weight multiplicity in U (x) V via GT-pattern pairs
inline int tensor_weight_count(const WeightPair& wp, const Weight3& mu) {
    int n = 0;
    for (auto& d : diagrams(wp.m1, wp.m2)) {
        auto w = gt_weight(d);
        Weight3 rest{mu[0] - w[0], mu[1] - w[1], mu[2] - w[2]};
        if (rest[0] < 0 || rest[1] < 0 || rest[2] < 0) continue;
        n += irrep_weight_count({wp.mb1, wp.mb2, 0}, rest);
    }
    return n;
}

// full decomposition by descending-lex peeling of dominant weight counts
inline std::map<Weight3, int> decompose_oracle(const WeightPair& wp) {
    int total = wp.m1 + wp.m2 + wp.mb1 + wp.mb2;
    std::vector<Weight3> dom;
    for (int w1 = total; w1 >= 0; --w1)
        for (int w2 = std::min(w1, total - w1); w2 >= 0; --w2) {
            int w3 = total - w1 - w2;
            if (w3 >= 0 && w3 <= w2) dom.push_back({w1, w2, w3});
        }
    std::sort(dom.rbegin(), dom.rend());
    std::map<Weight3, int> mult;
    for (auto& W : dom) {
        int n = tensor_weight_count(wp, W);
        for (auto& [Wp, m] : mult)
            if (m) n -= m * irrep_weight_count(Wp, W);
        if (n < 0) throw NotInSpan("negative multiplicity in peeling");
        if (n > 0) mult[W] = n;
    }
    return mult;
}

// ------------------------------------------------- general-label symmetrization

// unnormalized general vector a1^al b1^be a12^ga b12^de (ab)12^om (abb)^phg
// (aab)^psg (aabb)1213^th; exponents al..de are forced by the weights
struct GeneralLabel {
    int omega, phg, psg, theta;  // phg multiplies (abb), psg multiplies (aab)
};

inline DetPoly general_label_function(const GeneralLabel& g,
                                      const WeightPair& wp) {
    int al = wp.m1 - wp.m2 - g.omega - g.phg;
    int ga = wp.m2 - g.psg - g.theta;
    int be = wp.mb1 - wp.mb2 - g.omega - g.psg;
    int de = wp.mb2 - g.phg - g.theta;
    if (al < 0 || ga < 0 || be < 0 || de < 0 || g.omega < 0 || g.phg < 0 ||
        g.psg < 0 || g.theta < 0)
        throw RejectSplit("general label outside the constraint polytope");
    return pmono(NDET, {{vA1, al},
                        {vB1, be},
                        {vA12, ga},
                        {vB12, de},
                        {vAB12, g.omega},
                        {vABB, g.phg},
                        {vAAB, g.psg},
                        {vAABB1213, g.theta}});
}

// f(om,ph,ps,th) = f(om-1,ph+1,ps,th-1) + f(om-1,ph,ps+1,th-1), applied until
// omega or theta vanishes; result expressed over normalized basis labels
inline std::vector<std::pair<Rational, HighestVectorLabel>>
expand_general_label(int omega, int phg, int psg, int theta,
                     const WeightPair& wp) {
    (void)general_label_function({omega, phg, psg, theta}, wp);  // precondition
    std::map<std::array<int, 4>, Rational> acc;
    std::vector<std::pair<std::array<int, 4>, Rational>> stack{
        {{omega, phg, psg, theta}, Rational(1)}};
    while (!stack.empty()) {
        auto [g, c] = stack.back();
        stack.pop_back();
        if (g[0] > 0 && g[3] > 0) {
            stack.push_back({{g[0] - 1, g[1] + 1, g[2], g[3] - 1}, c});
            stack.push_back({{g[0] - 1, g[1], g[2] + 1, g[3] - 1}, c});
        } else {
            acc[g] += c;
        }
    }
    std::vector<std::pair<Rational, HighestVectorLabel>> out;
    for (auto& [g, c] : acc) {
        if (c == 0) continue;
        HighestVectorLabel l;
        int al = wp.m1 - wp.m2 - g[0] - g[1];
        int ga = wp.m2 - g[2] - g[3];
        int be = wp.mb1 - wp.mb2 - g[0] - g[2];
        int de = wp.mb2 - g[1] - g[3];
        if (al < 0 || ga < 0 || be < 0 || de < 0) continue;  // zero function
        if (g[3] == 0) {
            l.vtype = 1;
            l.omega = g[0];
            l.phi = g[2];  // (aab) exponent
            l.psi = g[1];  // (abb) exponent
        } else {
            // omega = 0 leftover: same-family terminal vector with (aabb)1213;
            // record it under the type-2 exponent pattern (sec. 2.3 case 1)
            l.vtype = 2;
            l.theta = g[3];
            l.phi = g[1];
            l.psi = g[2];
        }
        l.alpha = al, l.gamma_e = ga, l.beta = be, l.delta = de;
        // undo the 1/(al! be! ga! de! om!-or-th!) normalization of the basis
        Rational scale = Rational(factorial(al)) * Rational(factorial(be)) *
                         Rational(factorial(ga)) * Rational(factorial(de)) *
                         Rational(factorial(l.vtype == 1 ? l.omega : l.theta));
        out.push_back({c * scale, l});
    }
    return out;
}

}  // namespace cg3
