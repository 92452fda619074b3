#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cg3/oracle.hpp"

using namespace cg3;

TEST_CASE("product basis expansion round trip") {
    // a1 (x) b1 is itself a basis vector of 3 x 3
    WeightPair wp{1, 0, 1, 0};
    DetPoly p = pmul(pmono(NDET, {{vA1, 1}}), pmono(NDET, {{vB1, 1}}));
    auto rep = expand_in_product_basis(p, wp);
    CHECK(rep.residual_zero);
    REQUIRE(rep.terms.size() == 1);
    CHECK(rep.terms[0].coeff == 1);
    CHECK(rep.terms[0].diagram_u.s == 1);
    CHECK(rep.terms[0].diagram_v.s == 1);
}

TEST_CASE("vectors outside the span are rejected") {
    WeightPair wp{1, 0, 1, 0};
    DetPoly p = pmono(NDET, {{vA1, 1}});  // pure first factor, wrong space
    CHECK_THROWS_AS(expand_in_product_basis(p, wp), NotInSpan);
}

TEST_CASE("oracle agrees with the formula on a small cell") {
    WeightPair wp{1, 0, 1, 1};
    for (auto& l : enumerate_labels(wp)) {
        Weight3 W = l.vtype == 1 ? label_weight(l)
                                 : label_weight(dualized_label(l));
        for (auto& d : valid_descents(W))
            CHECK(compare(cg_expansion(l, d), oracle_expansion(l, d)).empty());
    }
}

TEST_CASE("compare reports coefficient mismatches") {
    GTDiagram a{1, 0, 0, 1, 0, 1};
    std::vector<CGTerm> f = {{a, a, Rational(1)}};
    std::vector<CGTerm> g = {{a, a, Rational(2)}};
    auto diff = compare(f, g);
    REQUIRE(diff.size() == 1);
    CHECK(*diff[0].formula == 1);
    CHECK(*diff[0].oracle == 2);
    CHECK(compare(f, f).empty());
}

TEST_CASE("worker cap honors the environment variable") {
    CHECK(worker_cap() >= 1);
}
