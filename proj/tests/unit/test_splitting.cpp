#include <doctest.h>

#include "modsplit/splitting.hpp"

using namespace modsplit;

namespace {

CanonicalClass K(long p, int ell, int t, long a) { return CanonicalClass{p, ell, t, a}; }

}  // namespace

TEST_SUITE("splitting") {

TEST_CASE("classify_prime") {
    CHECK(classify_prime(5, 2) == SplitBehavior::inert);
    CHECK(classify_prime(-1, 13) == SplitBehavior::split);
    CHECK(classify_prime(7, 7) == SplitBehavior::ramified);
    CHECK(classify_prime(-7, 2) == SplitBehavior::split);
    CHECK(classify_prime(3, 2) == SplitBehavior::ramified);
    CHECK(classify_prime(2, 2) == SplitBehavior::ramified);
    CHECK(classify_prime(-3, 5) == SplitBehavior::inert);
    for (long D : {0L, 1L}) {
        try {
            classify_prime(D, 3);
            FAIL("accepted D = " << D);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotAField);
        }
    }
}

TEST_CASE("canonical classes") {
    auto c = canonicalize(4 * 13, 13, 2);
    REQUIRE(c.has_value());
    CHECK(c->t == 1);
    CHECK(c->a == 4);
    CHECK_FALSE(canonicalize(0, 13, 2).has_value());
    auto d = canonicalize(96, 2, 9);
    REQUIRE(d.has_value());
    CHECK(d->t == 5);
    CHECK(d->a == 3);
}

TEST_CASE("deduce at odd p") {
    auto a = deduce_D_constraints({K(3, 1, 0, 1)});
    CHECK(a.residues == std::set<long>{1});
    CHECK_FALSE(a.ramified_possible);
    auto b = deduce_D_constraints({K(13, 2, 1, 4), K(13, 2, 1, 9)});
    CHECK(b.residues == std::set<long>{0});
    CHECK(b.ramified_possible);
    // Closed under multiplication by squares.
    auto c = deduce_D_constraints({K(7, 1, 0, 3)});
    CHECK(c.residues == std::set<long>{3, 5, 6});
}

TEST_CASE("deduce at 2 over three classes mod 2^9") {
    // t = 0, 6 force D = 1 mod 8; t = 5 forces D/2 = 1 mod 8, so D = 2 mod 8.
    auto d = deduce_D_constraints({K(2, 9, 0, 1), K(2, 9, 5, 1), K(2, 9, 6, 1)}, true);
    CHECK(d.residues == std::set<long>{1, 2});
    CHECK(summarize_behaviour(d) == std::set<SplitExpectation>{SplitExpectation::not_inert});
}

TEST_CASE("insufficient 2-adic precision is reported") {
    try {
        deduce_D_constraints({K(2, 2, 0, 1)}, true);
        FAIL("mod 4 accepted as a mod 8 statement");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InsufficientPrecision);
    }
    CHECK_FALSE(deduce_D_constraints({K(2, 2, 0, 1)}).precise);
}

TEST_CASE("summaries") {
    DResidueSet s3{3, 3, {1}, false, true};
    CHECK(summarize_behaviour(s3) ==
          std::set<SplitExpectation>{SplitExpectation::splits, SplitExpectation::not_inert, SplitExpectation::unramified});
    DResidueSet s5{5, 5, {0, 1, 4}, true, true};
    CHECK(summarize_behaviour(s5) == std::set<SplitExpectation>{SplitExpectation::not_inert});
    DResidueSet s3b{3, 3, {1, 2}, false, true};
    CHECK(summarize_behaviour(s3b) == std::set<SplitExpectation>{SplitExpectation::unramified});
    DResidueSet s2{2, 8, {1, 5}, false, true};
    CHECK(summarize_behaviour(s2) == std::set<SplitExpectation>{SplitExpectation::unramified});
}

}
