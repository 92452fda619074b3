// Ground truth for the engine: direct operator chains on the polynomial
// realization, plus exact expansion in the product GT basis via cached
// linear solves in the matrix-entry embedding.
#pragma once

#include "cg_engine.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace cg3 {

// E21^S/S! E32^T2/T2! nabla31^T1/T1! f0 (type 1), or the mirrored raising
// chain E12^S/S! E23^T2/T2! nabla13^T1/T1! with kappa = m1+mbar1 (type 2,
// whose label function is a lowest vector)
inline DetPoly tensor_gt_vector(const HighestVectorLabel& label,
                                const DescentTriple& d) {
    DetPoly p = label_function(label);
    if (label.vtype == 1) {
        for (int k = 1; k <= d.T1; ++k)
            p = pscale(nabla31_once(p), Rational(1, Int(k)));
        p = op_pow_over_fact(3, 2, p, d.T2);
        p = op_pow_over_fact(2, 1, p, d.S);
    } else {
        WeightPair wp = wp_of_label(label);
        int kappa = wp.m1 + wp.mb1;
        for (int k = 1; k <= d.T1; ++k)
            p = pscale(nabla13_once(p, kappa), Rational(1, Int(k)));
        p = op_pow_over_fact(2, 3, p, d.T2);
        p = op_pow_over_fact(1, 2, p, d.S);
    }
    return p;
}

struct ExpansionReport {
    std::vector<CGTerm> terms;
    bool residual_zero = true;
    int candidates = 0;
    int rank = 0;
};

namespace detail {

struct BasisCell {
    std::vector<std::pair<GTDiagram, GTDiagram>> cands;
    std::vector<MxPoly> embeds;
    std::vector<Expo> pivots;              // n chosen monomials
    std::vector<std::vector<Rational>> inv;  // inverse of the pivot submatrix
};

inline const MxPoly& embedded_gt(const GTDiagram& dg, int factor) {
    struct Key {
        GTDiagram d;
        int f;
        auto operator<=>(const Key&) const = default;
    };
    static std::map<Key, MxPoly> cache;
    static std::mutex mu;
    std::lock_guard lk(mu);
    Key key{dg, factor};
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, embed_matrix_entries(gt_vector(dg, factor)))
                 .first;
    return it->second;
}

inline const BasisCell& basis_cell(const WeightPair& wp, const Weight3& w) {
    struct Key {
        WeightPair wp;
        Weight3 w;
        auto operator<=>(const Key&) const = default;
    };
    static std::map<Key, BasisCell> cache;
    static std::mutex mu;
    {
        std::lock_guard lk(mu);
        if (auto it = cache.find(Key{wp, w}); it != cache.end())
            return it->second;
    }
    BasisCell cell;
    for (auto& du : diagrams(wp.m1, wp.m2)) {
        auto wu = gt_weight(du);
        for (auto& dv : diagrams(wp.mb1, wp.mb2)) {
            auto wv = gt_weight(dv);
            if (Weight3{wu[0] + wv[0], wu[1] + wv[1], wu[2] + wv[2]} != w)
                continue;
            cell.cands.push_back({du, dv});
            cell.embeds.push_back(
                pmul(embedded_gt(du, 0), embedded_gt(dv, 1)));
        }
    }
    size_t n = cell.cands.size();
    // greedy pivot-monomial selection: reduce each candidate monomial row
    // against the pivots found so far until n independent rows are in hand
    std::map<Expo, std::vector<Rational>> rows;
    for (size_t j = 0; j < n; ++j)
        for (auto& [e, c] : cell.embeds[j].terms) {
            auto& r = rows[e];
            if (r.empty()) r.assign(n, Rational(0));
            r[j] = c;
        }
    std::vector<std::vector<Rational>> red;  // reduced pivot rows
    std::vector<size_t> lead;                // leading column of each
    for (auto& [e, row] : rows) {
        if (red.size() == n) break;
        std::vector<Rational> v = row;
        for (size_t i = 0; i < red.size(); ++i)
            if (v[lead[i]] != 0) {
                Rational f = v[lead[i]] / red[i][lead[i]];
                for (size_t j = 0; j < n; ++j) v[j] -= f * red[i][j];
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
        cell.pivots.push_back(e);
    }
    if (cell.pivots.size() != n)
        throw RankDeficient("product GT vectors are linearly dependent");
    // invert the n x n pivot submatrix by Gauss-Jordan
    std::vector<std::vector<Rational>> a(n), id(n);
    for (size_t i = 0; i < n; ++i) {
        a[i] = rows[cell.pivots[i]];
        id[i].assign(n, Rational(0));
        id[i][i] = Rational(1);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw RankDeficient("pivot submatrix singular");
        std::swap(a[piv], a[col]);
        std::swap(id[piv], id[col]);
        Rational f = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= f;
            id[col][j] /= f;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational g = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= g * a[col][j];
                id[i][j] -= g * id[col][j];
            }
        }
    }
    cell.inv = std::move(id);
    std::lock_guard lk(mu);
    return cache.emplace(Key{wp, w}, std::move(cell)).first->second;
}

}  // namespace detail

inline ExpansionReport expand_in_product_basis(const DetPoly& p,
                                               const WeightPair& wp) {
    ExpansionReport rep;
    if (p.is_zero()) return rep;
    Weight3 w = weight_of(p);
    const auto& cell = detail::basis_cell(wp, w);
    size_t n = cell.cands.size();
    rep.candidates = (int)n;
    rep.rank = (int)n;
    if (n == 0) throw NotInSpan("no product basis vector of this weight");
    MxPoly pe = embed_matrix_entries(p);
    std::vector<Rational> rhs(n, Rational(0));
    for (size_t i = 0; i < n; ++i)
        if (auto it = pe.terms.find(cell.pivots[i]); it != pe.terms.end())
            rhs[i] = it->second;
    std::vector<Rational> c(n, Rational(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) c[i] += cell.inv[i][j] * rhs[j];
    MxPoly res = pe;
    for (size_t j = 0; j < n; ++j)
        if (c[j] != 0) res = psub(res, pscale(cell.embeds[j], c[j]));
    if (!res.is_zero()) {
        rep.residual_zero = false;
        throw NotInSpan("expansion residual is nonzero");
    }
    for (size_t j = 0; j < n; ++j)
        if (c[j] != 0)
            rep.terms.push_back({cell.cands[j].first, cell.cands[j].second,
                                 c[j]});
    rep.terms = collect_terms(std::move(rep.terms));
    return rep;
}

// oracle expansion of one (label, descent) cell
inline std::vector<CGTerm> oracle_expansion(const HighestVectorLabel& label,
                                            const DescentTriple& d) {
    DetPoly v = tensor_gt_vector(label, d);
    if (v.is_zero()) return {};
    return expand_in_product_basis(v, wp_of_label(label)).terms;
}

// ---------------------------------------------------------------- comparison

struct DiffEntry {
    GTDiagram diagram_u, diagram_v;
    std::optional<Rational> formula, oracle;
};

inline std::vector<DiffEntry> compare(const std::vector<CGTerm>& formula,
                                      const std::vector<CGTerm>& oracle) {
    std::map<std::pair<GTDiagram, GTDiagram>,
             std::pair<std::optional<Rational>, std::optional<Rational>>>
        all;
    for (auto& t : formula) all[{t.diagram_u, t.diagram_v}].first = t.coeff;
    for (auto& t : oracle) all[{t.diagram_u, t.diagram_v}].second = t.coeff;
    std::vector<DiffEntry> out;
    for (auto& [k, v] : all)
        if (v.first != v.second)
            out.push_back({k.first, k.second, v.first, v.second});
    return out;
}

// ---------------------------------------------------------------- parallelism

inline int worker_cap() {
    int hw = (int)std::thread::hardware_concurrency();
    if (hw <= 0) hw = 1;
    if (const char* s = std::getenv("CG3_MAX_PARALLELISM")) {
        int v = std::atoi(s);
        if (v >= 1) hw = std::min(hw, v);
    }
    return hw;
}

// index-parallel loop with deterministic work items; f must be thread-safe
inline void parallel_for(size_t n, const std::function<void(size_t)>& f) {
    size_t workers = std::min<size_t>(worker_cap(), n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex emu;
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next++; i < n; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lk(emu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace cg3
