#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cg3/exact_core.hpp"

using namespace cg3;

TEST_CASE("factorials and reciprocal gamma") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(rfact(4) == Rational(1, 24));
    // 1/Gamma(n+1) vanishes at nonpositive integer arguments of Gamma
    CHECK(reciprocal_gamma_int(0) == 0);
    CHECK(reciprocal_gamma_int(-3) == 0);
    CHECK(reciprocal_gamma_int(1) == 1);
    CHECK(reciprocal_gamma_int(4) == Rational(1, 6));
}

TEST_CASE("falling factorial and binomial") {
    CHECK(falling(5, 2) == 20);
    CHECK(falling(5, 0) == 1);
    CHECK(falling(2, 3) == 0);  // crosses zero
    CHECK(falling(-2, 2) == 6);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("polynomial ring basics") {
    Poly x = pmono(2, {{0, 1}});
    Poly y = pmono(2, {{1, 1}});
    Poly p = padd(pmul(x, x), pscale(y, Rational(3)));
    CHECK(p.terms.size() == 2);
    CHECK(pdiff(p, 0) == pscale(x, Rational(2)));
    CHECK(psub(p, p).is_zero());
    CHECK(peval_ones(p) == 4);
    Poly q = ppow(padd(x, y), 3);
    CHECK(q.terms.size() == 4);
    CHECK(peval_ones(q) == 8);
}

TEST_CASE("point evaluation is multiplicative") {
    Poly x = pmono(2, {{0, 1}});
    Poly y = pmono(2, {{1, 1}});
    Poly p = padd(pmul(x, x), y);
    Poly q = pmul(x, y);
    std::vector<Rational> at{Rational(2), Rational(-3, 2)};
    CHECK(psubstitute(pmul(p, q), at) ==
          psubstitute(p, at) * psubstitute(q, at));
    CHECK(psubstitute(p, at) == Rational(5, 2));
}

TEST_CASE("composition enumeration") {
    auto cs = enumerate_compositions(3, 2);
    CHECK(cs.size() == 4);
    for (auto& c : cs) CHECK(c.parts[0] + c.parts[1] == 3);
}
