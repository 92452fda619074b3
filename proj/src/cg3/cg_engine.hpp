// The closed-form Clebsch-Gordan engine: descent triples, partition choices,
// the per-choice master coefficient (adopted and literal readings), the
// case-1 five-step assembly and the case-2 duality route, and the two
// printed sign-rule forms evaluated per choice.
#pragma once

#include "contiguity.hpp"
#include "tensor_space.hpp"

namespace cg3 {

struct DescentTriple {
    int T1 = 0, T2 = 0, S = 0;
    auto operator<=>(const DescentTriple&) const = default;
};

// GT diagram of the summand W reached by the descent (betweenness may fail:
// then the descent is infeasible and expansions are empty)
inline GTDiagram target_diagram(const Weight3& W, const DescentTriple& d) {
    return {W[0], W[1], W[2], W[0] - d.T1, W[1] - d.T2, W[0] - d.T1 - d.S};
}

inline std::vector<DescentTriple> valid_descents(const Weight3& W) {
    std::vector<DescentTriple> out;
    for (int T1 = 0; T1 <= W[0] - W[1]; ++T1)
        for (int T2 = 0; T2 <= W[1] - W[2]; ++T2)
            for (int S = 0; target_diagram(W, {T1, T2, S}).valid(); ++S)
                out.push_back({T1, T2, S});
    return out;
}

struct CGTerm {
    GTDiagram diagram_u, diagram_v;
    Rational coeff;
};

inline std::vector<CGTerm> collect_terms(std::vector<CGTerm> terms) {
    std::map<std::pair<GTDiagram, GTDiagram>, Rational> acc;
    for (auto& t : terms) acc[{t.diagram_u, t.diagram_v}] += t.coeff;
    std::vector<CGTerm> out;
    for (auto& [k, c] : acc)
        if (c != 0) out.push_back({k.first, k.second, c});
    return out;
}

// one choice of all partition indices of the five-step assembly
struct PartitionChoice {
    // step 1: nabla31^T1 split into O1^k O2^{T1-k}; O1 multinomial (k1,k3),
    // O2 multinomial (paab,pabb)
    int k = 0, k1 = 0, k3 = 0, paab = 0, pabb = 0;
    // step 2: rel2 split (q = Pluecker power, f* of the abb-total, p* of the
    // aab-total, o* of omega)
    int q = 0, q2 = 0, q3 = 0;
    int f1 = 0, f2 = 0, f3 = 0, p1 = 0, p2 = 0, p3 = 0, o1 = 0, o2 = 0;
    // step 3: rel1 Pluecker powers on the two sides
    int t = 0, s = 0;
    // step 4: E32^T2 Leibniz split and rel3 indices per side
    int N = 0, M = 0, n1a = 0, n2a = 0, ra = 0, n1b = 0, n2b = 0, rb = 0;
    // step 5: E21^S Leibniz split
    int H = 0, J = 0;

    auto operator<=>(const PartitionChoice&) const = default;

    // composite (primed) quantities of the partition displays
    int q1() const { return q - q2 - q3; }
    int tp1() const { return k1 + f3 + q + q2; }
    int tpp1() const { return k3 + p3 + q + q3; }
    int tppp1() const { return p1 + p2; }
    int tpppp1() const { return f1 + f2; }
    int tp2() const { return N; }
    int tpp2() const { return M; }
    int L1() const { return f2 + o2 + p1; }
    int L2() const { return p2 + o1 + f1; }
    int Sp() const { return H; }
    int Spp() const { return J; }
    int A() const { return t + ra + n1a; }
    int B() const { return s + rb + n1b; }

    // the two printed sign expressions of the case-2 theorem
    int sign_form1_parity(int theta) const {
        return (theta + (tp2() + tpp2() + Sp() + Spp()) +
                (tppp1() + tp2() + Sp() + L1()) +
                (tpppp1() + tpp2() + Spp() + L2())) % 2;
    }
    int sign_form2_parity(int omega, int theta) const {
        return (tppp1() + tpppp1() + tpp1() + tpp2() + omega + theta) % 2;
    }
};

// ------------------------------------------------------------ internal driver

namespace detail {

// label in assembly order; phb = (abb) exponent, psb = (aab) exponent
struct ProtoLabel {
    int al, be, ga, de, om, phb, psb;
};

inline ProtoLabel proto_of_type1(const HighestVectorLabel& l) {
    return {l.alpha, l.beta, l.gamma_e, l.delta, l.omega, l.psi, l.phi};
}

struct AssembledKey {
    int a3, a12, b3, b12;
    GammaParams ga, gb;
    auto operator<=>(const AssembledKey&) const = default;
};

// full pruned loop nest; cb(choice, key, coeff) per nonzero leaf
template <class CB>
inline void for_each_choice(const ProtoLabel& L, const DescentTriple& d,
                            CB&& cb) {
    const int al = L.al, be = L.be, ga0 = L.ga, de0 = L.de, om = L.om;
    const int h = al + be + ga0 + de0 + om;
    const int M1 = h + L.phb + L.psb;
    const Rational c0 = rfact(al) * rfact(be) * rfact(ga0) * rfact(de0) *
                        rfact(om);
    PartitionChoice ch;
    for (int k = 0; k <= d.T1; ++k) {
        Rational dcf = d_coeff(h, M1, d.T1, k);
        if (dcf == 0) continue;
        int m = d.T1 - k;
        for (int k1 = 0; k1 <= std::min(k, al); ++k1) {
            int k3 = k - k1;
            if (k3 > be) continue;
            for (int paab = 0; paab <= std::min({m, ga0, be - k3}); ++paab) {
                int pabb = m - paab;
                if (pabb > de0 || k1 + pabb > al) continue;
                Rational c1 = c0 * dcf * falling(al, k1) * falling(be, k3) *
                              rfact(k1) * rfact(k3) * falling(ga0, paab) *
                              falling(be - k3, paab) * falling(de0, pabb) *
                              falling(al - k1, pabb) * rfact(paab) *
                              rfact(pabb);
                if (c1 == 0) continue;
                int a1e = al - k1 - pabb, b1e = be - k3 - paab;
                int a12e = ga0 - paab, b12e = de0 - pabb;
                int lam = L.phb + pabb, mu = L.psb + paab;
                Rational c2base = c1 * Rational(factorial(lam)) *
                                  Rational(factorial(mu)) *
                                  Rational(factorial(om));
                ch.k = k, ch.k1 = k1, ch.k3 = k3;
                ch.paab = paab, ch.pabb = pabb;
                for (int q = 0; q <= std::min(lam, mu) + om; ++q)
                    for (int q2 = 0; q2 <= q; ++q2)
                        for (int q3 = 0; q3 + q2 <= q; ++q3) {
                            int fsum = lam - q - q2, psum = mu - q - q3;
                            if (fsum < 0 || psum < 0) continue;
                            if (q > 0 && h_coeff(lam - q + 1, mu - q + 1, om,
                                                 q - q2 - q3, q2, q3) == 0)
                                continue;
                            ch.q = q, ch.q2 = q2, ch.q3 = q3;
            for (int f1 = 0; f1 <= fsum; ++f1)
            for (int f2 = 0; f1 + f2 <= fsum; ++f2)
            for (int p1 = 0; p1 <= psum; ++p1)
            for (int p2 = 0; p1 + p2 <= psum; ++p2)
            for (int o1 = 0; o1 <= om; ++o1) {
                auto xt = x_coeff(lam, mu, om, q - q2 - q3, q2, q3, f1, f2,
                                  fsum - f1 - f2, p1, p2, psum - p1 - p2, o1,
                                  om - o1);
                if (xt.X == 0) continue;
                ch.f1 = f1, ch.f2 = f2, ch.f3 = fsum - f1 - f2;
                ch.p1 = p1, ch.p2 = p2, ch.p3 = psum - p1 - p2;
                ch.o1 = o1, ch.o2 = om - o1;
                Rational c2 = c2base * xt.X;
                int a3q = k1 + xt.da3 + q, a12q = a12e + xt.da12 + q;
                int b3q = k3 + xt.db3 + q, b12q = b12e + xt.db12 + q;
                for (int t = 0; t <= a1e; ++t) {
                    auto [tha, Ya] = y_coeff(a1e, xt.th, t);
                    if (Ya == 0) continue;
                    ch.t = t;
                    for (int s = 0; s <= b1e; ++s) {
                        auto [vtb, Yb] = y_coeff(b1e, xt.vt, s);
                        if (Yb == 0) continue;
                        ch.s = s;
                        Rational c3 = c2 * Ya * Yb;
                        int a3t = a3q + t, a12t = a12q + t;
                        int b3t = b3q + s, b12t = b12q + s;
                        for (int N = 0; N <= d.T2; ++N) {
                            int M = d.T2 - N;
                            ch.N = N, ch.M = M;
                            for (int n1a = 0; n1a <= N; ++n1a) {
                                int n2a = N - n1a;
                                if (a12t - n2a < 0) continue;
                                for (int rA = 0; rA <= n2a; ++rA) {
                                    auto [epa, Ca] =
                                        z_coeff(tha, a3t, a12t, n1a, n2a, rA);
                                    if (Ca == 0) continue;
                                    ch.n1a = n1a, ch.n2a = n2a, ch.ra = rA;
                                    int a3z = a3t + n1a + rA;
                                    int a12z = a12t - n2a + rA;
                            for (int n1b = 0; n1b <= M; ++n1b) {
                                int n2b = M - n1b;
                                if (b12t - n2b < 0) continue;
                                for (int rB = 0; rB <= n2b; ++rB) {
                                    auto [epb, Cb] =
                                        z_coeff(vtb, b3t, b12t, n1b, n2b, rB);
                                    if (Cb == 0) continue;
                                    ch.n1b = n1b, ch.n2b = n2b, ch.rb = rB;
                                    int b3z = b3t + n1b + rB;
                                    int b12z = b12t - n2b + rB;
                                    Rational c4 = c3 * Ca * Cb;
                                    for (int Hh = 0; Hh <= d.S; ++Hh) {
                                        int Jj = d.S - Hh;
                                        auto ea = e21_coeff(epa, Hh);
                                        if (!ea) continue;
                                        auto eb = e21_coeff(epb, Jj);
                                        if (!eb) continue;
                                        ch.H = Hh, ch.J = Jj;
                                        Rational cf =
                                            c4 * ea->second * eb->second;
                                        if (cf == 0) continue;
                                        cb(ch,
                                           AssembledKey{a3z, a12z, b3z, b12z,
                                                        ea->first, eb->first},
                                           cf);
                                    }
                                }
                            }
                                }
                            }
                        }
                    }
                }
            }
                        }
            }
        }
    }
}

// key -> GT diagram of the module (m1, m2); throws if the term does not have
// the shape of a GT basis vector (cannot happen for in-module input)
inline GTDiagram diagram_of_key(int e3, int e12, const GammaParams& g, int m1,
                                int m2) {
    GTDiagram dg{m1, m2, 0, m1 - e3, e12, g.g1 + m2};
    if (g.g23 != 0 || dg.k1 - dg.s != g.g2 || m2 - dg.k2 != g.g13 ||
        !dg.valid())
        throw NotInSpan("assembled term is not a GT basis vector");
    return dg;
}

inline std::map<AssembledKey, Rational> assemble(const ProtoLabel& L,
                                                 const DescentTriple& d) {
    std::map<AssembledKey, Rational> tot;
    for_each_choice(L, d, [&](const PartitionChoice&, const AssembledKey& k,
                              const Rational& c) { tot[k] += c; });
    std::erase_if(tot, [](auto& kv) { return kv.second == 0; });
    return tot;
}

}  // namespace detail

// weights are recoverable from any valid label
inline WeightPair wp_of_label(const HighestVectorLabel& l) {
    WeightPair wp;
    if (l.vtype == 1) {
        wp.m2 = l.gamma_e + l.phi;
        wp.m1 = l.alpha + l.omega + l.psi + wp.m2;
        wp.mb2 = l.delta + l.psi;
        wp.mb1 = l.beta + l.omega + l.phi + wp.mb2;
    } else {
        wp.m2 = l.gamma_e + l.theta + l.psi;
        wp.m1 = l.alpha + l.phi + wp.m2;
        wp.mb2 = l.delta + l.phi + l.theta;
        wp.mb1 = l.beta + l.psi + wp.mb2;
    }
    return wp;
}

// case-2 dualization: type-1 label in the dual weights whose assembly output
// maps back through the duality
inline HighestVectorLabel dualized_label(const HighestVectorLabel& l) {
    HighestVectorLabel s;
    s.vtype = 1;
    s.alpha = l.gamma_e, s.beta = l.delta;
    s.gamma_e = l.alpha, s.delta = l.beta;
    s.omega = l.theta;
    // duality swaps (aab) and (abb); the stored fields already swap roles
    // between the types (type-2 psi is its (aab) exponent), so the field
    // values carry over unchanged
    s.phi = l.phi;  // (aab) exponent of the dual label
    s.psi = l.psi;  // (abb) exponent
    return s;
}

inline std::vector<PartitionChoice> enumerate_partition_choices(
    const HighestVectorLabel& label, const DescentTriple& d) {
    HighestVectorLabel l1 = label.vtype == 1 ? label : dualized_label(label);
    Weight3 W = label_weight(l1);
    std::vector<PartitionChoice> out;
    if (!target_diagram(W, d).valid()) return out;
    detail::for_each_choice(detail::proto_of_type1(l1), d,
                            [&](const PartitionChoice& ch,
                                const detail::AssembledKey&, const Rational&) {
                                if (out.empty() || !(out.back() == ch))
                                    out.push_back(ch);
                            });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// single-choice evaluation: the product of the closed-form factors, with the
// output diagram pair; mirrors one leaf of the assembly driver
inline std::pair<std::pair<GTDiagram, GTDiagram>, Rational> coefcg_term(
    const PartitionChoice& want, const HighestVectorLabel& label,
    const DescentTriple& d) {
    HighestVectorLabel l1 = label.vtype == 1 ? label : dualized_label(label);
    WeightPair wp = wp_of_label(l1);
    std::optional<std::pair<std::pair<GTDiagram, GTDiagram>, Rational>> hit;
    detail::for_each_choice(
        detail::proto_of_type1(l1), d,
        [&](const PartitionChoice& ch, const detail::AssembledKey& k,
            const Rational& c) {
            if (!(ch == want)) return;
            GTDiagram du = detail::diagram_of_key(k.a3, k.a12, k.ga, wp.m1,
                                                  wp.m2);
            GTDiagram dv = detail::diagram_of_key(k.b3, k.b12, k.gb, wp.mb1,
                                                  wp.mb2);
            Rational cf = c * Rational(factorial(k.a3)) *
                          Rational(factorial(k.a12)) *
                          Rational(factorial(k.b3)) *
                          Rational(factorial(k.b12));
            if (hit)
                hit->second += cf;
            else
                hit = {{du, dv}, cf};
        });
    if (!hit) return {{GTDiagram{}, GTDiagram{}}, Rational(0)};
    return *hit;
}

inline std::vector<CGTerm> cg_expansion_case1(const HighestVectorLabel& label,
                                              const DescentTriple& d) {
    if (label.vtype != 1) throw RejectSplit("case 1 requires a type-1 label");
    WeightPair wp = wp_of_label(label);
    Weight3 W = label_weight(label);
    if (!target_diagram(W, d).valid()) return {};
    std::vector<CGTerm> terms;
    for (auto& [k, c] : detail::assemble(detail::proto_of_type1(label), d)) {
        GTDiagram du = detail::diagram_of_key(k.a3, k.a12, k.ga, wp.m1, wp.m2);
        GTDiagram dv =
            detail::diagram_of_key(k.b3, k.b12, k.gb, wp.mb1, wp.mb2);
        terms.push_back({du, dv,
                         c * Rational(factorial(k.a3)) *
                             Rational(factorial(k.a12)) *
                             Rational(factorial(k.b3)) *
                             Rational(factorial(k.b12))});
    }
    return collect_terms(std::move(terms));
}

// dual diagram -> original diagram plus the per-factor duality sign parity
inline std::pair<GTDiagram, int> sopd_inverse(const GTDiagram& ds, int m1,
                                              int m2) {
    int t2 = ds.k1 - (m1 - m2), t1 = ds.k2, s = ds.s - ds.k2;
    GTDiagram out{m1, m2, 0, m1 - t1, m2 - t2, m1 - t1 - s};
    if (!out.valid()) throw NotInSpan("sopd_inverse: invalid image diagram");
    return {out, ((ds.k1 - ds.s) + ((m1 - m2) - ds.k2)) % 2};
}

inline std::vector<CGTerm> cg_expansion_case2(const HighestVectorLabel& label,
                                              const DescentTriple& d) {
    if (label.vtype != 2) throw RejectSplit("case 2 requires a type-2 label");
    WeightPair wp = wp_of_label(label);
    HighestVectorLabel star = dualized_label(label);
    WeightPair wpd{wp.m1, wp.m1 - wp.m2, wp.mb1, wp.mb1 - wp.mb2};
    Weight3 Wd = label_weight(star);
    if (!target_diagram(Wd, d).valid()) return {};
    int base = (label.theta + d.S + d.T2) % 2;
    std::vector<CGTerm> terms;
    for (auto& [k, c] : detail::assemble(detail::proto_of_type1(star), d)) {
        GTDiagram dus =
            detail::diagram_of_key(k.a3, k.a12, k.ga, wpd.m1, wpd.m2);
        GTDiagram dvs =
            detail::diagram_of_key(k.b3, k.b12, k.gb, wpd.mb1, wpd.mb2);
        auto [du, su] = sopd_inverse(dus, wp.m1, wp.m2);
        auto [dv, sv] = sopd_inverse(dvs, wp.mb1, wp.mb2);
        Rational cf = c * Rational(factorial(k.a3)) *
                      Rational(factorial(k.a12)) * Rational(factorial(k.b3)) *
                      Rational(factorial(k.b12));
        if ((base + su + sv) % 2) cf = -cf;
        terms.push_back({du, dv, cf});
    }
    return collect_terms(std::move(terms));
}

inline std::vector<CGTerm> cg_expansion(const HighestVectorLabel& label,
                                        const DescentTriple& d) {
    return label.vtype == 1 ? cg_expansion_case1(label, d)
                            : cg_expansion_case2(label, d);
}

// -------------------------------------------------- literal coefficient path

// the master-coefficient display taken at face value: global sign
// (-1)^{t+s+r+l}, unprimed denominator factorials, doubled trailing
// factorial block, literal Y and Z readings, no step-5 binomial.
// Kept for reporting: the identity suites select the adopted reading.
inline Rational coefcg_literal_term(const PartitionChoice& ch,
                                    const HighestVectorLabel& label,
                                    const DescentTriple& d) {
    HighestVectorLabel l1 = label.vtype == 1 ? label : dualized_label(label);
    detail::ProtoLabel L = detail::proto_of_type1(l1);
    const int h = L.al + L.be + L.ga + L.de + L.om;
    const int M1 = h + L.phb + L.psb;
    auto nfact = [](int n) {
        return n < 0 ? Rational(0) : Rational(factorial(n));
    };
    Rational dcf = d_coeff(h, M1, d.T1, ch.k);
    int lam = L.phb + ch.pabb, mu = L.psb + ch.paab;
    Rational r = dcf * nfact(lam) * rfact(L.phb) * rfact(ch.pabb) * nfact(mu) *
                 rfact(L.psb) * rfact(ch.paab);
    if ((ch.t + ch.s + ch.ra + ch.rb) % 2) r = -r;
    // X as printed (the rel2 display is correct as literal text)
    auto xt = x_coeff(lam, mu, L.om, ch.q1(), ch.q2, ch.q3, ch.f1, ch.f2,
                      ch.f3, ch.p1, ch.p2, ch.p3, ch.o1, ch.o2);
    r *= xt.X;
    // literal Y on both sides (no sign, unshifted numerator)
    int a1e = L.al - ch.k1 - ch.pabb, b1e = L.be - ch.k3 - ch.paab;
    r *= y_coeff_literal(a1e, xt.th, ch.t).second;
    r *= y_coeff_literal(b1e, xt.vt, ch.s).second;
    // exponents entering step 4
    int a3t = ch.k1 + xt.da3 + ch.q + ch.t;
    int a12t = L.ga - ch.paab + xt.da12 + ch.q + ch.t;
    int b3t = ch.k3 + xt.db3 + ch.q + ch.s;
    int b12t = L.de - ch.pabb + xt.db12 + ch.q + ch.s;
    GammaParams tha{xt.th.g1 + a1e, xt.th.g2 - ch.t, xt.th.g13 - ch.t, 0};
    GammaParams vtb{xt.vt.g1 + b1e, xt.vt.g2 - ch.s, xt.vt.g13 - ch.s, 0};
    // literal Z: numerator second slot shifted by n2, denominator n2!
    auto zlit = [&](const GammaParams& g, int j0, int n1, int n2,
                    int rr) -> Rational {
        GammaParams eps{g.g1, g.g2 - n1 - rr, g.g13 + n2 - rr, 0};
        Rational Fe = f_one(eps);
        if (Fe == 0 || j0 - n2 < 0) return Rational(0);
        return f_one({g.g1, g.g2 - n2, g.g13, 0}) * nfact(j0) /
               (pi_product(rr, eps) * Fe) * rfact(n1) * rfact(j0 - n2) *
               rfact(n2);
    };
    r *= zlit(tha, a12t, ch.n1a, ch.n2a, ch.ra);
    r *= zlit(vtb, b12t, ch.n1b, ch.n2b, ch.rb);
    // no E21 binomial in the literal text; trailing factorials appear twice
    // (once as i!j!o!e!, once as the explicit block)
    int i = a3t + ch.n1a + ch.ra, j = a12t - ch.n2a + ch.ra;
    int g2 = b3t + ch.n1b + ch.rb, h2 = b12t - ch.n2b + ch.rb;
    r *= nfact(i) * nfact(j) * nfact(g2) * nfact(h2);
    r *= nfact(i) * nfact(j) * nfact(g2) * nfact(h2);
    // unprimed denominator block
    r *= rfact(L.al - ch.k1 - L.phb) * rfact(L.be - ch.k3 - L.psb) *
         rfact(L.ga - L.psb) * rfact(L.de - L.phb) * rfact(ch.k1) *
         rfact(ch.k3);
    return r;
}

inline std::vector<CGTerm> cg_expansion_case1_literal(
    const HighestVectorLabel& label, const DescentTriple& d) {
    WeightPair wp = wp_of_label(label);
    Weight3 W = label_weight(label);
    if (!target_diagram(W, d).valid()) return {};
    std::vector<CGTerm> terms;
    detail::for_each_choice(
        detail::proto_of_type1(label), d,
        [&](const PartitionChoice& ch, const detail::AssembledKey& k,
            const Rational&) {
            GTDiagram du =
                detail::diagram_of_key(k.a3, k.a12, k.ga, wp.m1, wp.m2);
            GTDiagram dv =
                detail::diagram_of_key(k.b3, k.b12, k.gb, wp.mb1, wp.mb2);
            terms.push_back({du, dv, coefcg_literal_term(ch, label, d)});
        });
    return collect_terms(std::move(terms));
}

// per-choice comparison of the two printed sign forms (case-2 theorem); the
// dualized label has omega* = theta
struct SignCounterexample {
    HighestVectorLabel label;
    DescentTriple descent;
    PartitionChoice choice;
    int form1, form2;
};

inline std::vector<SignCounterexample> sign_rule_check(
    const HighestVectorLabel& label, const DescentTriple& d) {
    std::vector<SignCounterexample> bad;
    int th = label.theta;
    for (auto& ch : enumerate_partition_choices(label, d)) {
        int f1 = ch.sign_form1_parity(th);
        int f2 = ch.sign_form2_parity(th, th);
        if (f1 != f2) bad.push_back({label, d, ch, f1, f2});
    }
    return bad;
}

}  // namespace cg3
