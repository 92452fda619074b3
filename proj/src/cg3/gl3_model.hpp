// Polynomial realization of gl3 on GL3 x GL3: determinant variables, the
// matrix-entry embedding (canonical equality oracle), generator actions,
// Gelfand-Tsetlin vectors, lowering/raising operators, contragredient duality.
#pragma once

#include "exact_core.hpp"
#include "gamma_series.hpp"

#include <array>
#include <cassert>
#include <optional>

namespace cg3 {

// ---------------------------------------------------------- variable alphabets

// determinant alphabet (19 symbols); the alphabet is NOT free: it carries the
// Pluecker relation, so equality of DetPolynomials is decided via embedding
enum DetVar : int {
    vA1 = 0, vA2, vA3, vA12, vA13, vA23,
    vB1, vB2, vB3, vB12, vB13, vB23,
    vAB12, vAB13, vAB23,
    vAAB, vABB,
    vAABB1213, vAABB2313,
    NDET
};

inline const VarSet DET_VARS{{
    "a1", "a2", "a3", "a12", "a13", "a23",
    "b1", "b2", "b3", "b12", "b13", "b23",
    "ab12", "ab13", "ab23",
    "aab", "abb",
    "aabb1213", "aabb2313"}};

// free matrix-entry variables x^{(a)}_{r,i}, x^{(b)}_{r,i}
inline constexpr int NMX = 12;
inline int mx_idx(int block, int row, int col) {
    return block * 6 + (row - 1) * 3 + (col - 1);
}

inline const VarSet MATRIX_VARS{{
    "xa11", "xa12", "xa13", "xa21", "xa22", "xa23",
    "xb11", "xb12", "xb13", "xb21", "xb22", "xb23"}};

using DetPoly = Poly;  // arity NDET
using MxPoly = Poly;   // arity NMX

// column-degree weight of each determinant variable (degrees in cols 1,2,3);
// every variable is a weight vector, so weights add over monomials
inline constexpr int DET_WT[NDET][3] = {
    {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1},
    {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1},
    {1, 1, 0}, {1, 0, 1}, {0, 1, 1},
    {1, 1, 1}, {1, 1, 1},
    {2, 1, 1}, {1, 1, 2}};

// ---------------------------------------------------------------- model tables

namespace detail {

// minor of the stacked matrix: rows = list of (block,row), cols as given
inline MxPoly det_rows(const std::vector<std::pair<int, int>>& rows,
                       const std::vector<int>& cols) {
    int k = (int)cols.size();
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    MxPoly res(NMX);
    do {
        int sgn = 1;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) sgn = -sgn;
        Expo e(NMX, 0);
        for (int r = 0; r < k; ++r)
            e[mx_idx(rows[r].first, rows[r].second, cols[perm[r]])] += 1;
        res.add_term(e, Rational(sgn));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return res;
}

struct Model {
    std::array<MxPoly, NDET> embed_var;          // matrix-entry image of each var
    std::array<std::array<DetPoly, NDET>, 9> act;  // E_{i,j} on each var
    std::array<DetPoly, NDET> dual_var;          // duality image of each var

    static const Model& instance() {
        static const Model m;
        return m;
    }

  private:
    Model() {
        const int A = 0, B = 1;
        auto pairs = [](int blk) {
            return std::vector<std::pair<int, int>>{{blk, 1}, {blk, 2}};
        };
        embed_var[vA1] = det_rows({{A, 1}}, {1});
        embed_var[vA2] = det_rows({{A, 1}}, {2});
        embed_var[vA3] = det_rows({{A, 1}}, {3});
        embed_var[vA12] = det_rows(pairs(A), {1, 2});
        embed_var[vA13] = det_rows(pairs(A), {1, 3});
        embed_var[vA23] = det_rows(pairs(A), {2, 3});
        embed_var[vB1] = det_rows({{B, 1}}, {1});
        embed_var[vB2] = det_rows({{B, 1}}, {2});
        embed_var[vB3] = det_rows({{B, 1}}, {3});
        embed_var[vB12] = det_rows(pairs(B), {1, 2});
        embed_var[vB13] = det_rows(pairs(B), {1, 3});
        embed_var[vB23] = det_rows(pairs(B), {2, 3});
        embed_var[vAB12] = det_rows({{A, 1}, {B, 1}}, {1, 2});
        embed_var[vAB13] = det_rows({{A, 1}, {B, 1}}, {1, 3});
        embed_var[vAB23] = det_rows({{A, 1}, {B, 1}}, {2, 3});
        embed_var[vAAB] = det_rows({{A, 1}, {A, 2}, {B, 1}}, {1, 2, 3});
        embed_var[vABB] = det_rows({{A, 1}, {B, 1}, {B, 2}}, {1, 2, 3});
        // (aabb)_{i1,i2,j1,j2} = a_{i1,i2} b_{j1,j2} - a_{j1,j2} b_{i1,i2}
        embed_var[vAABB1213] =
            psub(pmul(embed_var[vA12], embed_var[vB13]),
                 pmul(embed_var[vA13], embed_var[vB12]));
        embed_var[vAABB2313] =
            psub(pmul(embed_var[vA23], embed_var[vB13]),
                 pmul(embed_var[vA13], embed_var[vB23]));

        build_actions();
        build_dual();
    }

    // family lookup: (family id, sorted cols) -> variable
    static int lookup(int fam, std::vector<int> cols) {
        static const struct { int fam; std::vector<int> cols; int var; } tab[] = {
            {0, {1}, vA1}, {0, {2}, vA2}, {0, {3}, vA3},
            {1, {1, 2}, vA12}, {1, {1, 3}, vA13}, {1, {2, 3}, vA23},
            {2, {1}, vB1}, {2, {2}, vB2}, {2, {3}, vB3},
            {3, {1, 2}, vB12}, {3, {1, 3}, vB13}, {3, {2, 3}, vB23},
            {4, {1, 2}, vAB12}, {4, {1, 3}, vAB13}, {4, {2, 3}, vAB23},
            {5, {1, 2, 3}, vAAB}, {6, {1, 2, 3}, vABB},
        };
        for (auto& t : tab)
            if (t.fam == fam && t.cols == cols) return t.var;
        return -1;
    }

    void build_actions() {
        static const int fam_of[NDET] = {0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3,
                                         4, 4, 4, 5, 6, -1, -1};
        static const std::vector<int> cols_of[NDET] = {
            {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3},
            {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3},
            {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}, {1, 2, 3}, {}, {}};

        auto unit = [](int v) { return pmono(NDET, {{v, 1}}); };

        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                auto& row = act[(i - 1) * 3 + (j - 1)];
                for (int v = 0; v < NDET; ++v) {
                    if (i == j) {  // Cartan: column-count eigenvalue
                        int c = DET_WT[v][i - 1];
                        row[v] = c ? pscale(unit(v), Rational(c)) : pzero(NDET);
                        continue;
                    }
                    if (fam_of[v] < 0) continue;  // aabb handled below
                    std::vector<int> cols = cols_of[v];
                    auto it = std::find(cols.begin(), cols.end(), j);
                    if (it == cols.end() ||
                        std::find(cols.begin(), cols.end(), i) != cols.end()) {
                        row[v] = pzero(NDET);
                        continue;
                    }
                    *it = i;  // replace column j by i, then sort with sign
                    int sgn = 1;
                    for (size_t x = 0; x < cols.size(); ++x)
                        for (size_t y = x + 1; y < cols.size(); ++y)
                            if (cols[x] > cols[y]) {
                                std::swap(cols[x], cols[y]);
                                sgn = -sgn;
                            }
                    int tv = lookup(fam_of[v], cols);
                    assert(tv >= 0);
                    row[v] = pscale(unit(tv), Rational(sgn));
                }
            }

        // aabb variables act through their pair-product expansion
        auto prodrule = [&](int va, int vb, int vc, int vd, int i, int j) {
            // E(va*vb - vc*vd) by Leibniz over the four factors
            auto& row = act[(i - 1) * 3 + (j - 1)];
            auto term = [&](const DetPoly& img, int other) {
                return pmul(img, pmono(NDET, {{other, 1}}));
            };
            DetPoly r = padd(term(row[va], vb), term(row[vb], va));
            r = psub(r, padd(term(row[vc], vd), term(row[vd], vc)));
            return r;
        };
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                if (i == j) continue;
                auto& row = act[(i - 1) * 3 + (j - 1)];
                row[vAABB1213] = prodrule(vA12, vB13, vA13, vB12, i, j);
                row[vAABB2313] = prodrule(vA23, vB13, vA13, vB23, i, j);
            }
    }

    void build_dual() {
        auto u = [](int v, int s = 1) {
            return pmono(NDET, {{v, 1}}, Rational(s));
        };
        dual_var[vA1] = u(vA23);
        dual_var[vA2] = u(vA13, -1);
        dual_var[vA3] = u(vA12);
        dual_var[vA12] = u(vA3);
        dual_var[vA13] = u(vA2, -1);
        dual_var[vA23] = u(vA1);
        dual_var[vB1] = u(vB23);
        dual_var[vB2] = u(vB13, -1);
        dual_var[vB3] = u(vB12);
        dual_var[vB12] = u(vB3);
        dual_var[vB13] = u(vB2, -1);
        dual_var[vB23] = u(vB1);
        dual_var[vAB12] = u(vAABB2313, -1);
        dual_var[vAB23] = u(vAABB1213);
        // D(ab13) leaves the alphabet's aabb pair; keep the pair-product form
        dual_var[vAB13] = psub(pmul(u(vA23), u(vB12)), pmul(u(vA12), u(vB23)));
        dual_var[vAAB] = u(vABB);
        dual_var[vABB] = u(vAAB);
        dual_var[vAABB1213] = u(vAB23);
        dual_var[vAABB2313] = u(vAB12, -1);
    }
};

}  // namespace detail

// ------------------------------------------------------------------ operations

inline MxPoly embed_matrix_entries(const DetPoly& p) {
    const auto& M = detail::Model::instance();
    MxPoly out(NMX);
    for (auto& [e, c] : p.terms) {
        MxPoly t = pconst(NMX, c);
        for (int v = 0; v < NDET; ++v)
            for (int k = 0; k < e[v]; ++k) t = pmul(t, M.embed_var[v]);
        out = padd(out, t);
    }
    return out;
}

inline bool det_eq(const DetPoly& p, const DetPoly& q) {
    return embed_matrix_entries(p) == embed_matrix_entries(q);
}

// derivation: Leibniz over monomial factors, column replacement on each var
inline DetPoly generator_action(int i, int j, const DetPoly& p) {
    const auto& M = detail::Model::instance();
    const auto& row = M.act[(i - 1) * 3 + (j - 1)];
    DetPoly out(NDET);
    for (auto& [e, c] : p.terms)
        for (int v = 0; v < NDET; ++v) {
            if (e[v] == 0 || row[v].is_zero()) continue;
            Expo base = e;
            base[v] -= 1;
            for (auto& [ee, cc] : row[v].terms) {
                Expo t = base;
                for (int w = 0; w < NDET; ++w) t[w] += ee[w];
                out.add_term(t, c * Rational(e[v]) * cc);
            }
        }
    return out;
}

inline std::array<int, 3> mono_weight(const Expo& e) {
    std::array<int, 3> w{0, 0, 0};
    for (int v = 0; v < NDET; ++v)
        for (int c = 0; c < 3; ++c) w[c] += e[v] * DET_WT[v][c];
    return w;
}

inline std::array<int, 3> weight_of(const DetPoly& p) {
    if (p.is_zero()) throw NotAWeightVector("zero polynomial");
    std::optional<std::array<int, 3>> w;
    for (auto& [e, c] : p.terms) {
        auto mw = mono_weight(e);
        if (!w)
            w = mw;
        else if (*w != mw)
            throw NotAWeightVector("mixed weight components");
    }
    return *w;
}

// ------------------------------------------------------------------ GT vectors

struct GTDiagram {
    int m1 = 0, m2 = 0, m3 = 0, k1 = 0, k2 = 0, s = 0;
    bool valid() const {
        return m1 >= k1 && k1 >= m2 && m2 >= k2 && k2 >= m3 && k1 >= s &&
               s >= k2;
    }
    auto operator<=>(const GTDiagram&) const = default;
};

inline std::vector<GTDiagram> diagrams(int m1, int m2, int m3 = 0) {
    std::vector<GTDiagram> out;
    for (int k1 = m2; k1 <= m1; ++k1)
        for (int k2 = m3; k2 <= m2; ++k2)
            for (int s = k2; s <= k1; ++s) out.push_back({m1, m2, m3, k1, k2, s});
    return out;
}

// weight from pattern row sums
inline std::array<int, 3> gt_weight(const GTDiagram& d) {
    return {d.s, d.k1 + d.k2 - d.s, d.m1 + d.m2 + d.m3 - d.k1 - d.k2};
}

// closed form: a3^{m1-k1}/(m1-k1)! a12^{k2}/k2! F_gamma(a1,a2,a13,a23),
// gamma = (s-m2, k1-s, m2-k2, 0); factor selects the a- or b-side alphabet
inline DetPoly gt_vector(const GTDiagram& d, int factor = 0) {
    if (!d.valid() || d.m3 != 0) throw RejectSplit("invalid GT diagram");
    int ofs = factor ? 6 : 0;
    GammaParams g{d.s - d.m2, d.k1 - d.s, d.m2 - d.k2, 0};
    DetPoly out(NDET);
    auto [lo, hi] = gamma_support(g);
    Rational pre = rfact(d.m1 - d.k1) * rfact(d.k2);
    for (int k = lo; k <= hi; ++k) {
        Rational c = pre * rfact(g.g1 + k) * rfact(g.g2 - k) *
                     rfact(g.g13 - k) * rfact(g.g23 + k);
        if (c == 0) continue;
        Expo e(NDET, 0);
        e[vA3 + ofs] = d.m1 - d.k1;
        e[vA12 + ofs] = d.k2;
        e[vA1 + ofs] = g.g1 + k;
        e[vA2 + ofs] = g.g2 - k;
        e[vA13 + ofs] = g.g13 - k;
        e[vA23 + ofs] = g.g23 + k;
        out.add_term(e, c);
    }
    return out;
}

// ------------------------------------------------------- lowering and raising

namespace detail {
template <class Eig>
inline std::map<long, DetPoly> split_by(const DetPoly& p, Eig eig) {
    std::map<long, DetPoly> out;
    for (auto& [e, c] : p.terms) {
        auto it = out.find(eig(e));
        if (it == out.end()) it = out.emplace(eig(e), DetPoly(NDET)).first;
        it->second.add_term(e, c);
    }
    return out;
}
}  // namespace detail

// nabla31 = (E11+2)^{-1} ((E11-E22+1) E31 + E32 E21), spectrally:
// the paper's (E11-E22+1)^{-1}-normalized form fails the GT chain test, this
// normalization passes it (see README on operator normalization)
inline DetPoly nabla31_once(const DetPoly& p) {
    DetPoly t1 = generator_action(3, 1, p);
    DetPoly acc(NDET);
    for (auto& [e, comp] : detail::split_by(t1, [](const Expo& m) {
             auto w = mono_weight(m);
             return (long)(w[0] - w[1]);
         }))
        acc = padd(acc, pscale(comp, Rational(e + 1)));
    DetPoly num = padd(acc, generator_action(3, 2, generator_action(2, 1, p)));
    DetPoly out(NDET);
    for (auto& [e, comp] : detail::split_by(num, [](const Expo& m) {
             return (long)mono_weight(m)[0];
         })) {
        if (e + 2 == 0) throw SingularInverse("nabla31: E11+2 not invertible");
        out = padd(out, pscale(comp, Rational(1, Int(e + 2))));
    }
    return out;
}

// raising counterpart under duality (kappa = m1, or m1+mbar1 on the tensor):
// nabla13 = (kappa+2-E11)^{-1} (-(E22-E11+1) E13 + E23 E12)
inline DetPoly nabla13_once(const DetPoly& p, int kappa) {
    DetPoly t1 = generator_action(1, 3, p);
    DetPoly acc(NDET);
    for (auto& [e, comp] : detail::split_by(t1, [](const Expo& m) {
             auto w = mono_weight(m);
             return (long)(w[1] - w[0]);
         }))
        acc = padd(acc, pscale(comp, Rational(-(e + 1))));
    DetPoly num = padd(acc, generator_action(2, 3, generator_action(1, 2, p)));
    DetPoly out(NDET);
    for (auto& [e, comp] : detail::split_by(num, [](const Expo& m) {
             return (long)mono_weight(m)[0];
         })) {
        if (kappa + 2 - e == 0)
            throw SingularInverse("nabla13: kappa+2-E11 not invertible");
        out = padd(out, pscale(comp, Rational(1, Int(kappa + 2 - e))));
    }
    return out;
}

enum class LowerOp { Nabla31, E32, E21 };
enum class RaiseOp { Nabla13, E23, E12 };

inline DetPoly lowering_apply(LowerOp op, int power, const DetPoly& p) {
    DetPoly r = p;
    for (int k = 0; k < power; ++k) {
        switch (op) {
            case LowerOp::Nabla31: r = nabla31_once(r); break;
            case LowerOp::E32: r = generator_action(3, 2, r); break;
            case LowerOp::E21: r = generator_action(2, 1, r); break;
        }
    }
    return r;
}

inline DetPoly raising_apply(RaiseOp op, int power, const DetPoly& p,
                             int kappa) {
    DetPoly r = p;
    for (int k = 0; k < power; ++k) {
        switch (op) {
            case RaiseOp::Nabla13: r = nabla13_once(r, kappa); break;
            case RaiseOp::E23: r = generator_action(2, 3, r); break;
            case RaiseOp::E12: r = generator_action(1, 2, r); break;
        }
    }
    return r;
}

inline DetPoly op_pow_over_fact(int i, int j, const DetPoly& p, int n) {
    DetPoly r = p;
    for (int k = 0; k < n; ++k) r = generator_action(i, j, r);
    return pscale(r, Rational(1, factorial(n)));
}

// ----------------------------------------------------------------- duality map

// a1 <-> a23, a2 <-> -a13, a3 <-> a12 (b likewise), extended to the mixed
// determinants; an involution up to the recorded signs
inline DetPoly dual_map(const DetPoly& p) {
    const auto& M = detail::Model::instance();
    DetPoly out(NDET);
    for (auto& [e, c] : p.terms) {
        DetPoly t = pconst(NDET, c);
        for (int v = 0; v < NDET; ++v)
            for (int k = 0; k < e[v]; ++k) t = pmul(t, M.dual_var[v]);
        out = padd(out, t);
    }
    return out;
}

// Pluecker combination (identically zero in the embedding)
inline DetPoly plucker(int factor = 0) {
    int ofs = factor ? 6 : 0;
    DetPoly p(NDET);
    p = padd(p, pmono(NDET, {{vA1 + ofs, 1}, {vA23 + ofs, 1}}));
    p = padd(p, pmono(NDET, {{vA2 + ofs, 1}, {vA13 + ofs, 1}}, Rational(-1)));
    p = padd(p, pmono(NDET, {{vA3 + ofs, 1}, {vA12 + ofs, 1}}));
    return p;
}

}  // namespace cg3
