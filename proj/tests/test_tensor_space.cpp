#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cg3/tensor_space.hpp"

using namespace cg3;

TEST_CASE("fundamental times fundamental") {
    WeightPair wp{1, 0, 1, 0};
    auto ls = enumerate_labels(wp);
    REQUIRE(ls.size() == 2);
    std::set<Weight3> ws;
    for (auto& l : ls) ws.insert(label_weight(l));
    CHECK(ws == std::set<Weight3>{{2, 0, 0}, {1, 1, 0}});
}

TEST_CASE("3 times 3bar contains the adjoint and the trivial") {
    WeightPair wp{1, 0, 1, 1};
    auto mult = decompose_oracle(wp);
    CHECK(mult == std::map<Weight3, int>{{{2, 1, 0}, 1}, {{1, 1, 1}, 1}});
    CHECK(multiplicity(wp, {1, 1, 1}) == 1);
    CHECK(multiplicity(wp, {2, 1, 0}) == 1);
}

TEST_CASE("type-2 labels carry the reversed polynomial weight") {
    WeightPair wp{1, 1, 1, 1};  // 3bar x 3bar
    auto ls = enumerate_labels(wp);
    REQUIRE(ls.size() == 2);
    for (auto& l : ls) {
        if (l.vtype == 2) {
            CHECK(l.theta == 1);
            CHECK(label_weight(l) == Weight3{2, 1, 1});
            CHECK(weight_of(label_function(l)) == Weight3{1, 1, 2});
        }
    }
}

TEST_CASE("dimension bookkeeping via the Weyl formula") {
    CHECK(weyl_dimension({1, 0, 0}) == 3);
    CHECK(weyl_dimension({2, 1, 0}) == 8);
    CHECK(weyl_dimension({3, 1, 0}) == 15);
    for (auto wp : {WeightPair{2, 1, 1, 0}, WeightPair{2, 0, 2, 1}}) {
        Int total = 0;
        for (auto& [W, n] : decompose_oracle(wp)) total += n * weyl_dimension(W);
        CHECK(total == weyl_dimension({wp.m1, wp.m2, 0}) *
                           weyl_dimension({wp.mb1, wp.mb2, 0}));
    }
}

TEST_CASE("general label recursion base case") {
    WeightPair wp{2, 1, 2, 1};
    // f(1,0,0,1) = f(0,1,0,0) + f(0,0,1,0)
    auto out = expand_general_label(1, 0, 0, 1, wp);
    REQUIRE(out.size() == 2);
    for (auto& [c, l] : out) {
        CHECK(l.vtype == 1);
        CHECK(l.omega == 0);
        CHECK(l.theta == 0);
        CHECK(c == 1);  // unnormalized monomials, all exponents 0 or 1
        CHECK(l.phi + l.psi == 1);
    }
}

TEST_CASE("general labels outside the polytope are rejected") {
    CHECK_THROWS_AS(general_label_function({3, 0, 0, 0}, {1, 0, 1, 0}),
                    RejectSplit);
}
