#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "parbias/maps.hpp"

using namespace parbias;
using testutil::P;

TEST_CASE("split-chain fixtures (lone odd, second even = 2)") {
    MappingOutcome a = detail::thm2_natural(P({24, 5, 2}));
    CHECK(a.image == P({13, 11, 6, 1}));
    CHECK(a.tag.label == "H0_e,1");
    MappingOutcome b = detail::thm2_natural(P({22, 7, 2}));
    CHECK(b.image == P({11, 9, 8, 3}));
}

TEST_CASE("five-part chain fixtures (lone odd, second even >= 6)") {
    CHECK(detail::thm2_natural(P({10, 6, 3})).image == P({7, 5, 4, 2, 1}));
    CHECK(detail::thm2_natural(P({12, 9, 6})).image == P({9, 7, 5, 4, 2}));
    CHECK(detail::thm2_natural(P({12, 11, 8})).image == P({9, 7, 6, 5, 4}));
    CHECK(detail::thm2_natural(P({10, 9, 6})).image == P({7, 6, 5, 4, 3}));
    // generic branch: no special coincidence between the parts
    MappingOutcome g = detail::thm2_natural(P({12, 8, 5}));
    CHECK(g.image == P({9, 6, 5, 3, 2}));
    CHECK(g.tag.label == "H0_e,2");
}

TEST_CASE("largest-part rule for the single-part partition") {
    CHECK(detail::thm2_natural(P({4})).image == P({3, 1}));
    CHECK(detail::thm2_natural(P({6})).image == P({3, 2, 1}));
    CHECK(detail::thm2_natural(P({8})).image == P({5, 3}));
    MappingOutcome two = detail::thm2_natural(P({2}));
    CHECK_FALSE(two.has_image);
    CHECK(two.tag.residual);
}

TEST_CASE("fold transform when at least two odd parts remain") {
    MappingOutcome r = detail::thm2_natural(P({8, 6, 5, 3, 2}));
    CHECK(r.tag.label == "Hbar0_e");
    CHECK(r.image == P({13, 9, 2}));
}

TEST_CASE("parity-flip cores handle the remaining shapes") {
    CHECK(detail::thm2_natural(P({8, 4, 2, 1})).tag.label == "H_e,0");
    CHECK(detail::thm2_natural(P({5, 4, 2})).tag.label == "H_e,1");
}

TEST_CASE("residual subcase: lone odd with second even = 4") {
    MappingOutcome r = detail::thm2_natural(P({8, 4, 1}));
    CHECK_FALSE(r.has_image);
    CHECK(r.tag.label == "H0_e,3");
}

TEST_CASE("rejects inputs outside the domain") {
    CHECK_THROWS_AS(detail::thm2_natural(P({3, 3, 2})), std::invalid_argument);
    CHECK_THROWS_AS(detail::thm2_natural(P({5, 4, 3})), std::invalid_argument);
    CHECK_THROWS_AS(thm2_map(P({3, 3, 2})), std::invalid_argument);
}

TEST_CASE("final images are distinct, odd-heavy, weight-preserving") {
    for (long n = 1; n <= 22; ++n) {
        for (const Partition& p :
             enumerate_all(n, ClassSpec::Pd().with_bias(Bias::EvenHeavy))) {
            MappingOutcome o = thm2_map(p);
            if (!o.has_image) {
                CHECK(o.tag.residual);
                continue;
            }
            CHECK(o.image.n() == n);
            CHECK(o.image.distinct());
            CHECK(bias_class(o.image) == Bias::OddHeavy);
        }
    }
}

TEST_CASE("exhaustive audit is clean and residuals match") {
    for (long n = 1; n <= 24; ++n) {
        InjectionReport rep = audit_family(n, Family::T2);
        CHECK(rep.clean());
        CHECK(rep.residual_count == expected_residual(n, Family::T2));
    }
}
