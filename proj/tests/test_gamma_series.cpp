#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cg3/gamma_series.hpp"

using namespace cg3;

TEST_CASE("support interval and empty series") {
    auto [lo, hi] = gamma_support({1, 2, 3, 0});
    CHECK(lo == 0);
    CHECK(hi == 2);
    CHECK(expand_gamma_series({-1, -1, 2, 0}).is_zero());
}

TEST_CASE("series is a polynomial with the right exponents") {
    GammaParams g{1, 1, 1, 0};
    Poly F = expand_gamma_series(g);
    CHECK(F.terms.size() == 2);  // k = 0, 1
    for (auto& [e, c] : F.terms) {
        CHECK(e[0] - g.g1 == e[3] - g.g23);  // exponent on the lattice line
        CHECK(e[0] + e[1] == g.g1 + g.g2);
        CHECK(e[2] + e[3] == g.g13 + g.g23);
    }
}

TEST_CASE("evaluation at z = 1") {
    CHECK(eval_at_one({1, 1, 1, 0}) == Rational(3, 2));
    CHECK(eval_at_one({2, 1, 0, 0}) == Rational(1, 2));
    CHECK(eval_at_one({0, 0, 0, 0}) == 1);
}

TEST_CASE("closed form agrees where applicable") {
    for (int g1 = 0; g1 <= 3; ++g1)
        for (int g2 = 0; g2 <= 3; ++g2)
            for (int g13 = 0; g13 <= 3; ++g13) {
                GammaParams g{g1, g2, g13, 0};
                if (closed_form_applicable(g))
                    CHECK(eval_at_one_closed(g) == eval_at_one(g));
            }
}

TEST_CASE("GKZ system annihilates the series") {
    for (auto& q : gkz_residual({2, 1, 2, 1})) CHECK(q.is_zero());
}

TEST_CASE("lattice shifts preserve the series") {
    GammaParams g{2, 2, 1, 0};
    CHECK(expand_gamma_series(gamma_shift(g, 2)) == expand_gamma_series(g));
}

TEST_CASE("restriction identity at rational points") {
    CHECK(restriction_check({2, 1, 1, 0}, Rational(2), Rational(3),
                            Rational(5)));
    CHECK(restriction_check({1, 1, 2, 0}, Rational(-1, 2), Rational(7),
                            Rational(1, 3)));
    CHECK_THROWS_AS(restriction_check({1, 1, 1, 1}, Rational(1), Rational(1),
                                      Rational(1)),
                    RejectSplit);
}
