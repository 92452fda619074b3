// Verification suites shared by the CLI `verify` subcommand and the
// acceptance runner.  Each suite returns a structured pass/fail result with
// counterexample details; all comparisons are exact.
#pragma once

#include "json_io.hpp"
#include "oracle.hpp"

#include <mutex>
#include <sstream>

namespace cg3 {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long checks = 0;
    std::vector<std::string> failures;

    void fail(const std::string& msg) {
        pass = false;
        if (failures.size() < 20) failures.push_back(msg);
    }
};

// ------------------------------------------------------------- Gamma series

inline SuiteResult suite_gamma(int gmax = 4) {
    SuiteResult r{"gamma"};
    for (int g1 = 0; g1 <= gmax; ++g1)
        for (int g2 = 0; g2 <= gmax; ++g2)
            for (int g13 = 0; g13 <= gmax; ++g13)
                for (int g23 = 0; g23 <= 1; ++g23) {
                    GammaParams g{g1, g2, g13, g23};
                    Poly F = expand_gamma_series(g);
                    ++r.checks;
                    std::ostringstream tag;
                    tag << "gamma(" << g1 << "," << g2 << "," << g13 << ","
                        << g23 << ")";
                    // lattice shift invariance
                    if (!(expand_gamma_series(gamma_shift(g, 1)) == F) ||
                        !(expand_gamma_series(gamma_shift(g, -1)) == F))
                        r.fail(tag.str() + ": shift invariance");
                    // derivative contiguity d/dz_i F_g = F_{g-e_i}
                    const int d1[4] = {1, 0, 0, 0}, d2[4] = {0, 1, 0, 0},
                              d3[4] = {0, 0, 1, 0}, d4[4] = {0, 0, 0, 1};
                    const int* ds[4] = {d1, d2, d3, d4};
                    for (int i = 0; i < 4; ++i) {
                        GammaParams gm{g.g1 - ds[i][0], g.g2 - ds[i][1],
                                       g.g13 - ds[i][2], g.g23 - ds[i][3]};
                        if (!(pdiff(F, i) == expand_gamma_series(gm)))
                            r.fail(tag.str() + ": derivative contiguity");
                    }
                    // GKZ annihilation
                    for (auto& q : gkz_residual(g))
                        if (!q.is_zero())
                            r.fail(tag.str() + ": GKZ residual nonzero");
                    // evaluation at 1 vs direct substitution and closed form
                    if (eval_at_one(g) != peval_ones(F))
                        r.fail(tag.str() + ": eval_at_one vs substitution");
                    if (closed_form_applicable(g) &&
                        eval_at_one_closed(g) != eval_at_one(g))
                        r.fail(tag.str() + ": closed form mismatch");
                    // restriction identity (g23 = 0 branch only)
                    try {
                        if (!restriction_check(g, Rational(2), Rational(3),
                                               Rational(5)))
                            r.fail(tag.str() + ": restriction identity");
                        if (g23 != 0)
                            r.fail(tag.str() + ": restriction should reject");
                    } catch (const RejectSplit&) {
                        if (g23 == 0)
                            r.fail(tag.str() + ": restriction rejected");
                    }
                }
    return r;
}

// ------------------------------------------------------------------- model

inline SuiteResult suite_model(int mmax = 4) {
    SuiteResult r{"model"};
    // Pluecker soundness
    for (int f = 0; f < 2; ++f) {
        ++r.checks;
        if (!embed_matrix_entries(plucker(f)).is_zero())
            r.fail("Pluecker combination does not embed to zero");
    }
    // commutation relations on a spread of monomials
    std::vector<DetPoly> probes = {
        pmono(NDET, {{vA1, 1}}),
        pmono(NDET, {{vB2, 1}, {vA13, 1}}),
        pmono(NDET, {{vAB12, 1}, {vA3, 1}}),
        pmono(NDET, {{vAAB, 1}, {vB23, 1}}),
        pmono(NDET, {{vAABB1213, 1}, {vA2, 1}}),
        pmono(NDET, {{vAABB2313, 1}, {vABB, 1}}),
        pmono(NDET, {{vA12, 2}, {vB13, 1}, {vB1, 1}}),
    };
    for (auto& p : probes)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k)
                    for (int l = 1; l <= 3; ++l) {
                        ++r.checks;
                        DetPoly lhs =
                            psub(generator_action(i, j,
                                                  generator_action(k, l, p)),
                                 generator_action(k, l,
                                                  generator_action(i, j, p)));
                        DetPoly rhs(NDET);
                        if (j == k) rhs = padd(rhs, generator_action(i, l, p));
                        if (l == i)
                            rhs = psub(rhs, generator_action(k, j, p));
                        if (!det_eq(lhs, rhs)) {
                            std::ostringstream o;
                            o << "[E" << i << j << ",E" << k << l
                              << "] commutator";
                            r.fail(o.str());
                        }
                    }
    // top diagram closed form and GT-chain consistency
    for (int m1 = 0; m1 <= mmax; ++m1)
        for (int m2 = 0; m2 <= m1; ++m2) {
            GTDiagram top{m1, m2, 0, m1, m2, m1};
            DetPoly tv = gt_vector(top);
            ++r.checks;
            if (!(tv == pmono(NDET, {{vA1, m1 - m2}, {vA12, m2}},
                              rfact(m1 - m2) * rfact(m2))))
                r.fail("top GT vector closed form");
            for (auto& d : diagrams(m1, m2)) {
                int T1 = m1 - d.k1, T2 = m2 - d.k2, S = d.k1 - d.s;
                DetPoly p = tv;
                for (int k = 1; k <= T1; ++k)
                    p = pscale(nabla31_once(p), Rational(1, Int(k)));
                p = op_pow_over_fact(3, 2, p, T2);
                p = op_pow_over_fact(2, 1, p, S);
                ++r.checks;
                if (!det_eq(p, gt_vector(d))) {
                    std::ostringstream o;
                    o << "GT chain (" << m1 << "," << m2 << ") k1=" << d.k1
                      << " k2=" << d.k2 << " s=" << d.s;
                    r.fail(o.str());
                }
            }
        }
    // duality on GT vectors: D gt(d) = (-1)^{s+t2} gt(dual d) in (m1, m1-m2)
    for (int m1 = 0; m1 <= std::min(mmax, 3); ++m1)
        for (int m2 = 0; m2 <= m1; ++m2)
            for (auto& d : diagrams(m1, m2)) {
                int t1 = m1 - d.k1, t2 = m2 - d.k2, s = d.k1 - d.s;
                GTDiagram ds{m1, m1 - m2, 0, m1 - m2 + t2, t1, t1 + s};
                DetPoly lhs = dual_map(gt_vector(d));
                DetPoly rhs = pscale(gt_vector(ds),
                                     Rational((s + t2) % 2 ? -1 : 1));
                ++r.checks;
                if (!det_eq(lhs, rhs)) r.fail("duality on GT vector");
            }
    return r;
}

// --------------------------------------------------------- highest vectors

inline SuiteResult suite_highest(int mmax = 4) {
    SuiteResult r{"highest"};
    for (int m1 = 0; m1 <= mmax; ++m1)
        for (int m2 = 0; m2 <= m1; ++m2)
            for (int mb1 = 0; mb1 <= mmax; ++mb1)
                for (int mb2 = 0; mb2 <= mb1; ++mb2) {
                    WeightPair wp{m1, m2, mb1, mb2};
                    auto labels = enumerate_labels(wp);
                    std::ostringstream tag;
                    tag << "wp(" << m1 << "," << m2 << ")x(" << mb1 << ","
                        << mb2 << ")";
                    Int dimsum = 0;
                    std::map<Weight3, int> mult;
                    std::vector<MxPoly> embeds;
                    for (auto& l : labels) {
                        ++r.checks;
                        DetPoly f = label_function(l);
                        // type 1 is highest for the standard action; type 2
                        // is highest for the transported (dual) action, i.e.
                        // annihilated by the mirrored generator set
                        bool ok = true;
                        if (l.vtype == 1)
                            ok = det_eq(generator_action(1, 2, f),
                                        pzero(NDET)) &&
                                 det_eq(generator_action(1, 3, f),
                                        pzero(NDET)) &&
                                 det_eq(generator_action(2, 3, f),
                                        pzero(NDET));
                        else
                            ok = det_eq(generator_action(2, 1, f),
                                        pzero(NDET)) &&
                                 det_eq(generator_action(3, 1, f),
                                        pzero(NDET)) &&
                                 det_eq(generator_action(3, 2, f),
                                        pzero(NDET));
                        if (!ok) r.fail(tag.str() + ": annihilation");
                        dimsum += weyl_dimension(label_weight(l));
                        mult[label_weight(l)] += 1;
                        embeds.push_back(embed_matrix_entries(f));
                    }
                    ++r.checks;
                    if (dimsum != weyl_dimension({m1, m2, 0}) *
                                      weyl_dimension({mb1, mb2, 0}))
                        r.fail(tag.str() + ": completeness dimension sum");
                    ++r.checks;
                    if (mult != decompose_oracle(wp))
                        r.fail(tag.str() + ": multiplicity vs oracle");
                    // linear independence of the embedded label functions
                    size_t n = embeds.size(), rank = 0;
                    std::map<Expo, std::vector<Rational>> rows;
                    for (size_t j = 0; j < n; ++j)
                        for (auto& [e, c] : embeds[j].terms) {
                            auto& row = rows[e];
                            if (row.empty()) row.assign(n, Rational(0));
                            row[j] = c;
                        }
                    std::vector<std::vector<Rational>> red;
                    std::vector<size_t> lead;
                    for (auto& [e, row] : rows) {
                        if (rank == n) break;
                        std::vector<Rational> v = row;
                        for (size_t i = 0; i < red.size(); ++i)
                            if (v[lead[i]] != 0) {
                                Rational f0 = v[lead[i]] / red[i][lead[i]];
                                for (size_t j = 0; j < n; ++j)
                                    v[j] -= f0 * red[i][j];
                            }
                        size_t lc = n;
                        for (size_t j = 0; j < n; ++j)
                            if (v[j] != 0) {
                                lc = j;
                                break;
                            }
                        if (lc == n) continue;
                        red.push_back(std::move(v));
                        lead.push_back(lc);
                        ++rank;
                    }
                    ++r.checks;
                    if (rank != n)
                        r.fail(tag.str() + ": label functions dependent");
                }
    // general-label symmetrization against the embedding
    for (auto wp : {WeightPair{2, 1, 2, 1}, WeightPair{3, 2, 2, 2},
                    WeightPair{2, 2, 2, 2}}) {
        for (int om = 0; om <= wp.m1 - wp.m2; ++om)
            for (int ph = 0; ph + om <= wp.m1 - wp.m2; ++ph)
                for (int ps = 0; ps <= wp.m2; ++ps)
                    for (int th = 0; th + ps <= wp.m2; ++th) {
                        if (wp.mb1 - wp.mb2 - om - ps < 0 ||
                            wp.mb2 - ph - th < 0)
                            continue;
                        ++r.checks;
                        DetPoly want =
                            general_label_function({om, ph, ps, th}, wp);
                        DetPoly got(NDET);
                        for (auto& [c, l] :
                             expand_general_label(om, ph, ps, th, wp)) {
                            std::array<int, 4> g =
                                l.vtype == 1
                                    ? std::array<int, 4>{l.omega, l.psi,
                                                         l.phi, 0}
                                    : std::array<int, 4>{0, l.phi, l.psi,
                                                         l.theta};
                            Rational norm =
                                rfact(l.alpha) * rfact(l.beta) *
                                rfact(l.gamma_e) * rfact(l.delta) *
                                rfact(l.vtype == 1 ? l.omega : l.theta);
                            got = padd(got,
                                       pscale(general_label_function(
                                                  {g[0], g[1], g[2], g[3]},
                                                  wp),
                                              c * norm));
                        }
                        if (!det_eq(want, got))
                            r.fail("general-label symmetrization");
                    }
    }
    return r;
}

// ----------------------------------------------------------------- relations

namespace detail {
inline DetPoly op_o1(const DetPoly& p) {
    return padd(pmul(pmono(NDET, {{vA3, 1}}), pdiff(p, vA1)),
                pmul(pmono(NDET, {{vB3, 1}}), pdiff(p, vB1)));
}
inline DetPoly op_o2(const DetPoly& p) {
    return padd(
        pmul(pmono(NDET, {{vAAB, 1}}), pdiff(pdiff(p, vA12), vB1)),
        pmul(pmono(NDET, {{vABB, 1}}), pdiff(pdiff(p, vB12), vA1)));
}
}  // namespace detail

inline SuiteResult suite_relations(int gmax = 3) {
    SuiteResult r{"relations"};
    // rel1
    for (int u = 0; u <= 3; ++u)
        for (int g1 = 0; g1 <= gmax; ++g1)
            for (int g2 = 0; g2 <= gmax; ++g2)
                for (int g13 = 0; g13 <= gmax; ++g13) {
                    GammaParams g{g1, g2, g13, 0};
                    DetPoly lhs = pmul(ppow(pmono(NDET, {{vA1, 1}}), u),
                                       gamma_series_det(g));
                    DetPoly rhs(NDET);
                    for (auto& t : expand_rel1(u, g))
                        rhs = padd(rhs, relation_term_poly(t));
                    ++r.checks;
                    if (!det_eq(lhs, rhs)) r.fail("rel1 identity");
                }
    // rel2
    for (int lam = 0; lam <= 4; ++lam)
        for (int mu = 0; lam + mu <= 4; ++mu)
            for (int om = 0; lam + mu + om <= 4; ++om) {
                DetPoly lhs = pmono(NDET, {{vABB, lam}, {vAAB, mu},
                                           {vAB12, om}},
                                    rfact(lam) * rfact(mu) * rfact(om));
                DetPoly rhs(NDET);
                for (auto& t : expand_rel2(lam, mu, om))
                    rhs = padd(rhs, relation_term_poly(t));
                ++r.checks;
                if (!det_eq(lhs, rhs)) {
                    std::ostringstream o;
                    o << "rel2 identity (" << lam << "," << mu << "," << om
                      << ")";
                    r.fail(o.str());
                }
            }
    // rel3: left side by direct generator action
    for (int n = 0; n <= 3; ++n)
        for (int i0 = 0; i0 <= 1; ++i0)
            for (int j0 = 0; j0 <= 3; ++j0)
                for (int g1 = 0; g1 <= gmax; ++g1)
                    for (int g2 = 0; g2 <= gmax; ++g2)
                        for (int g13 = 0; g13 <= gmax; ++g13) {
                            GammaParams g{g1, g2, g13, 0};
                            DetPoly base =
                                pmul(pmono(NDET, {{vA3, i0}, {vA12, j0}}),
                                     gamma_series_det(g));
                            DetPoly lhs = op_pow_over_fact(3, 2, base, n);
                            DetPoly rhs(NDET);
                            for (auto& t : expand_rel3(n, g, i0, j0))
                                rhs = padd(rhs, relation_term_poly(t));
                            ++r.checks;
                            if (!det_eq(lhs, rhs)) r.fail("rel3 identity");
                        }
    // hypergeometric operator: O F = 0 and O(Pl^k F) = k(k+1+|g|) Pl^{k-1} F
    for (int k = 0; k <= 3; ++k)
        for (int g1 = 0; g1 <= gmax; ++g1)
            for (int g2 = 0; g2 <= gmax; ++g2)
                for (int g13 = 0; g13 <= gmax; ++g13) {
                    GammaParams g{g1, g2, g13, 0};
                    DetPoly F = gamma_series_det(g);
                    DetPoly lhs = hyper_operator_apply(
                        0, pmul(ppow(plucker_pos(0), k), F));
                    // O_a pairs with a1 a23 - a2 a13 = -plucker_pos
                    long s = g1 + g2 + g13;
                    DetPoly rhs =
                        k == 0 ? pzero(NDET)
                               : pscale(pmul(ppow(plucker_pos(0), k - 1), F),
                                        Rational(-Int(k) * (k + 1 + s)));
                    ++r.checks;
                    if (!(lhs == rhs)) r.fail("hypergeometric operator");
                }
    // f13 solvability
    for (int g1 = 0; g1 <= gmax; ++g1)
        for (int g2 = 0; g2 <= gmax; ++g2)
            for (int g13 = 0; g13 <= gmax; ++g13) {
                ++r.checks;
                try {
                    f13_decompose({g1, g2, g13, 0});
                } catch (const std::exception& e) {
                    r.fail(std::string("f13 decomposition: ") + e.what());
                }
            }
    // d-coefficient operator identity
    for (auto wp : {WeightPair{2, 1, 2, 1}, WeightPair{3, 1, 2, 2},
                    WeightPair{2, 2, 2, 2}}) {
        for (auto& l : enumerate_labels(wp)) {
            if (l.vtype != 1) continue;
            DetPoly f0 = label_function(l);
            int h = l.alpha + l.beta + l.gamma_e + l.delta + l.omega;
            int M1 = h + l.phi + l.psi;
            Weight3 W = label_weight(l);
            for (int n = 0; n <= std::min(3, W[0] - W[1]); ++n) {
                DetPoly lhs = f0;
                for (int k = 1; k <= n; ++k)
                    lhs = pscale(nabla31_once(lhs), Rational(1, Int(k)));
                DetPoly rhs(NDET);
                for (int k = 0; k <= n; ++k) {
                    DetPoly t = f0;
                    for (int i = 0; i < k; ++i) t = detail::op_o1(t);
                    for (int i = 0; i < n - k; ++i) t = detail::op_o2(t);
                    rhs = padd(rhs, pscale(t, d_coeff(h, M1, n, k) *
                                                  rfact(k) * rfact(n - k)));
                }
                ++r.checks;
                if (!det_eq(lhs, rhs)) r.fail("d-coefficient identity");
            }
        }
    }
    // range-widening: out-of-range indices vanish identically
    for (int u = 0; u <= 2; ++u)
        for (int p = u + 1; p <= u + 2; ++p) {
            ++r.checks;
            if (y_coeff(u, {1, 2, 2, 0}, p).second != 0)
                r.fail("rel1 widened index nonzero");
        }
    for (int n2 = 0; n2 <= 2; ++n2)
        for (int rr = n2 + 1; rr <= n2 + 2; ++rr) {
            ++r.checks;
            if (z_coeff({1, 2, 2, 0}, 1, 3, 0, n2, rr).second != 0)
                r.fail("rel3 widened index nonzero");
        }
    return r;
}

// -------------------------------------------------- end-to-end CG equivalence

inline SuiteResult suite_cg(int mmax = 3) {
    SuiteResult r{"cg"};
    std::vector<WeightPair> wps;
    for (int m1 = 0; m1 <= mmax; ++m1)
        for (int m2 = 0; m2 <= m1; ++m2)
            for (int mb1 = 0; mb1 <= mmax; ++mb1)
                for (int mb2 = 0; mb2 <= mb1; ++mb2)
                    wps.push_back({m1, m2, mb1, mb2});
    std::mutex mu;
    std::atomic<long> checks{0};
    parallel_for(wps.size(), [&](size_t i) {
        WeightPair wp = wps[i];
        for (auto& l : enumerate_labels(wp)) {
            Weight3 Wbox = l.vtype == 1 ? label_weight(l)
                                        : label_weight(dualized_label(l));
            for (auto& d : valid_descents(Wbox)) {
                auto formula = cg_expansion(l, d);
                auto oracle = oracle_expansion(l, d);
                auto diff = compare(formula, oracle);
                ++checks;
                if (!diff.empty()) {
                    std::ostringstream o;
                    o << "wp(" << wp.m1 << "," << wp.m2 << ")x(" << wp.mb1
                      << "," << wp.mb2 << ") label[" << l.vtype << ","
                      << l.omega << "," << l.phi << "," << l.psi << ","
                      << l.theta << "] descent(" << d.T1 << "," << d.T2 << ","
                      << d.S << "): " << diff.size() << " mismatches";
                    std::lock_guard lk(mu);
                    r.fail(o.str());
                }
                // weight bookkeeping
                DetPoly v = tensor_gt_vector(l, d);
                if (!v.is_zero()) {
                    Weight3 w = weight_of(v);
                    for (auto& t : oracle) {
                        auto wu = gt_weight(t.diagram_u);
                        auto wv = gt_weight(t.diagram_v);
                        if (Weight3{wu[0] + wv[0], wu[1] + wv[1],
                                    wu[2] + wv[2]} != w) {
                            std::lock_guard lk(mu);
                            r.fail("weight bookkeeping violation");
                        }
                    }
                }
            }
        }
    });
    r.checks = checks;
    return r;
}

// literal-vs-adopted reading report for the master coefficient
inline SuiteResult suite_literal(int mmax = 2) {
    SuiteResult r{"literal-reading"};
    long lit_ok = 0, lit_all = 0;
    for (int m1 = 0; m1 <= mmax; ++m1)
        for (int m2 = 0; m2 <= m1; ++m2)
            for (int mb1 = 0; mb1 <= mmax; ++mb1)
                for (int mb2 = 0; mb2 <= mb1; ++mb2) {
                    WeightPair wp{m1, m2, mb1, mb2};
                    for (auto& l : enumerate_labels(wp)) {
                        if (l.vtype != 1) continue;
                        for (auto& d : valid_descents(label_weight(l))) {
                            auto oracle = oracle_expansion(l, d);
                            ++r.checks;
                            if (!compare(cg_expansion_case1(l, d), oracle)
                                     .empty())
                                r.fail("adopted reading mismatch");
                            ++lit_all;
                            if (compare(cg_expansion_case1_literal(l, d),
                                        oracle)
                                    .empty())
                                ++lit_ok;
                        }
                    }
                }
    std::ostringstream o;
    o << "adopted reading: " << r.checks - (long)r.failures.size() << "/"
      << r.checks << " cells match the oracle; literal reading: " << lit_ok
      << "/" << lit_all << " cells match";
    r.failures.insert(r.failures.begin(), o.str());  // informational line
    return r;
}

// ------------------------------------------------------- sign-rule criterion

inline SuiteResult suite_signs(int mmax = 3) {
    SuiteResult r{"signs"};
    for (int m1 = 0; m1 <= mmax; ++m1)
        for (int m2 = 0; m2 <= m1; ++m2)
            for (int mb1 = 0; mb1 <= mmax; ++mb1)
                for (int mb2 = 0; mb2 <= mb1; ++mb2) {
                    WeightPair wp{m1, m2, mb1, mb2};
                    for (auto& l : enumerate_labels(wp)) {
                        if (l.vtype != 2) continue;
                        Weight3 Wd = label_weight(dualized_label(l));
                        for (auto& d : valid_descents(Wd)) {
                            auto bad = sign_rule_check(l, d);
                            r.checks +=
                                (long)enumerate_partition_choices(l, d).size();
                            for (auto& b : bad) {
                                std::ostringstream o;
                                o << "label[" << l.vtype << "," << l.omega
                                  << "," << l.phi << "," << l.psi << ","
                                  << l.theta << "] wp(" << wp.m1 << ","
                                  << wp.m2 << ")x(" << wp.mb1 << "," << wp.mb2
                                  << ") descent(" << d.T1 << "," << d.T2
                                  << "," << d.S << "): form1 parity "
                                  << b.form1 << " != form2 parity "
                                  << b.form2;
                                r.fail(o.str());
                            }
                        }
                    }
                }
    return r;
}

}  // namespace cg3
