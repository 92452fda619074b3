// Exact rational arithmetic, reciprocal-Gamma on integers, sparse
// multivariate polynomials with dense exponent vectors, composition
// enumeration.  Substrate for everything else; no floats anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cg3 {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct SingularInverse : std::runtime_error {
    explicit SingularInverse(const std::string& m) : std::runtime_error(m) {}
};
struct NotAWeightVector : std::runtime_error {
    explicit NotAWeightVector(const std::string& m) : std::runtime_error(m) {}
};
struct NotInSpan : std::runtime_error {
    explicit NotInSpan(const std::string& m) : std::runtime_error(m) {}
};
struct RankDeficient : std::runtime_error {
    explicit RankDeficient(const std::string& m) : std::runtime_error(m) {}
};
struct RejectSplit : std::runtime_error {
    explicit RejectSplit(const std::string& m) : std::runtime_error(m) {}
};

// factorials memoized up to FACT_MAX; all exponents in this project are tiny
inline constexpr int FACT_MAX = 256;

inline const Int& factorial(int n) {
    static const std::vector<Int> tab = [] {
        std::vector<Int> t(FACT_MAX + 1);
        t[0] = 1;
        for (int i = 1; i <= FACT_MAX; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    if (n < 0 || n > FACT_MAX) throw std::out_of_range("factorial");
    return tab[n];
}

// 1/Gamma(n): zero at poles (n <= 0); this is what truncates every series
inline Rational reciprocal_gamma_int(int n) {
    if (n <= 0) return Rational(0);
    return Rational(1, factorial(n - 1));
}

// 1/n! extended by zero to negative n, i.e. 1/Gamma(n+1)
inline Rational rfact(int n) { return reciprocal_gamma_int(n + 1); }

// falling factorial u(u-1)...(u-p+1); vanishes for integer 0 <= u < p
inline Rational falling(long u, int p) {
    Rational r(1);
    for (int i = 0; i < p; ++i) r *= Rational(u - i);
    return r;
}

// generalized binomial via falling factorial (agrees with C(n,k) for n >= 0)
inline Rational binomial(long n, int k) {
    if (k < 0) return Rational(0);
    return falling(n, k) * rfact(k);
}

// ---------------------------------------------------------------- polynomials

using Expo = std::vector<int>;

// Sparse polynomial over a fixed-arity variable set.  Normal form: no zero
// coefficients stored, lexicographic key order from std::map.
struct Poly {
    int nvars = 0;
    std::map<Expo, Rational> terms;

    Poly() = default;
    explicit Poly(int nv) : nvars(nv) {}

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Poly& o) const {
        return nvars == o.nvars && terms == o.terms;
    }

    void add_term(const Expo& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
};

inline Poly pzero(int nv) { return Poly(nv); }

inline Poly pconst(int nv, const Rational& c) {
    Poly p(nv);
    p.add_term(Expo(nv, 0), c);
    return p;
}

inline Poly pmono(int nv, std::initializer_list<std::pair<int, int>> ve,
                  const Rational& c = Rational(1)) {
    Poly p(nv);
    Expo e(nv, 0);
    for (auto& [v, k] : ve) e[v] += k;
    p.add_term(e, c);
    return p;
}

inline Poly padd(const Poly& a, const Poly& b) {
    Poly r = a;
    for (auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

inline Poly pscale(const Poly& a, const Rational& c) {
    Poly r(a.nvars);
    if (c == 0) return r;
    for (auto& [e, k] : a.terms) r.terms.emplace(e, k * c);
    return r;
}

inline Poly psub(const Poly& a, const Poly& b) {
    return padd(a, pscale(b, Rational(-1)));
}

inline Poly pmul(const Poly& a, const Poly& b) {
    Poly r(a.nvars);
    for (auto& [ea, ca] : a.terms)
        for (auto& [eb, cb] : b.terms) {
            Expo e = ea;
            for (int i = 0; i < r.nvars; ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

inline Poly ppow(const Poly& a, int n) {
    Poly r = pconst(a.nvars, 1);
    for (int i = 0; i < n; ++i) r = pmul(r, a);
    return r;
}

inline Poly pdiff(const Poly& a, int var) {
    Poly r(a.nvars);
    for (auto& [e, c] : a.terms) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

inline Rational psubstitute(const Poly& a, const std::vector<Rational>& vals) {
    Rational s(0);
    for (auto& [e, c] : a.terms) {
        Rational t = c;
        for (int i = 0; i < a.nvars; ++i)
            for (int k = 0; k < e[i]; ++k) t *= vals[i];
        s += t;
    }
    return s;
}

inline Rational peval_ones(const Poly& a) {
    Rational s(0);
    for (auto& [e, c] : a.terms) s += c;
    return s;
}

// named variable sets, for printing and for the module contracts
struct VarSet {
    std::vector<std::string> names;
    int size() const { return (int)names.size(); }
};

inline std::string poly_to_string(const Poly& p, const VarSet& vs) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto& [e, c] : p.terms) {
        if (!out.empty()) out += " + ";
        out += c.str();
        for (int i = 0; i < p.nvars; ++i) {
            if (e[i] == 0) continue;
            out += "*" + vs.names[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

// ---------------------------------------------------------------- compositions

struct Composition {
    std::vector<int> parts;
    int total = 0;
};

// all tuples of `parts` nonnegative integers summing to `total`, lex order
inline std::vector<Composition> enumerate_compositions(int total, int parts) {
    std::vector<Composition> out;
    std::vector<int> cur(parts, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == parts - 1) {
            cur[pos] = left;
            out.push_back({cur, total});
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (parts > 0)
        rec(rec, 0, total);
    else if (total == 0)
        out.push_back({{}, 0});
    return out;
}

}  // namespace cg3
