#include <doctest.h>

#include <algorithm>

#include "modsplit/cubic.hpp"

using namespace modsplit;

namespace {

const ResultantIdentity& by_name(const std::vector<ResultantIdentity>& v, const std::string& name) {
    auto it = std::find_if(v.begin(), v.end(), [&](const ResultantIdentity& r) { return r.name == name; });
    REQUIRE(it != v.end());
    return *it;
}

ExactInt seven30() {
    ExactInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 7, 30);
    return r;
}

}  // namespace

TEST_SUITE("cubic") {

TEST_CASE("reduction examples") {
    auto a = classify_reduction(2, 2);
    CHECK(a.multiplicative);
    CHECK(a.n == 14);
    CHECK(a.branch == ReductionBranch::u_positive);
    CHECK(a.to_string() == "I_14");

    auto b = classify_reduction(ExactRat(1, 3), 3);
    CHECK(b.n == 14);
    CHECK(b.branch == ReductionBranch::u_negative);

    auto c = classify_reduction(7, 13);
    CHECK(c.multiplicative);
    CHECK(c.n == 2);
    CHECK(c.branch == ReductionBranch::cubic_factor);
    CHECK(c.hypothesis_ok);

    auto d = classify_reduction(1, 5);
    CHECK_FALSE(d.multiplicative);
    CHECK(d.to_string() == "non-multiplicative");

    // u = 2 mod 7 with k = 1: the special bullet.
    auto e = classify_reduction(2, 7);
    CHECK(e.branch == ReductionBranch::seven_special);
    CHECK_FALSE(e.multiplicative);
    CHECK(e.hypothesis_ok);

    auto f = classify_reduction(ExactRat(-9, 8), 2);
    CHECK(f.n == 42);
}

TEST_CASE("argument errors") {
    for (const ExactRat& u : {ExactRat(0), ExactRat(-1)}) {
        try {
            classify_reduction(u, 5);
            FAIL("cusp accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::CuspParameter);
        }
    }
    try {
        classify_reduction(3, 9);
        FAIL("9 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrime);
    }
}

TEST_CASE("j valuations") {
    CHECK(j_valuation(2, 2) == -14);
    CHECK(j_valuation(7, 13) == -2);
    CHECK(j_valuation(1, 5) == 0);
    CHECK(c4_form_valuation(2, 2) == 0);
    auto b = classify_by_j(7, 13);
    CHECK(b.multiplicative);
    CHECK(b.n == 2);
}

TEST_CASE("resultant identities as computed") {
    const auto ids = verify_resultant_identities();
    CHECK(format_factored(by_name(ids, "res(c, g2*g6*g12)").computed.get_num()) == "7^4");
    CHECK(by_name(ids, "res(c, (g2*g6*g12)^3)").match);
    CHECK(by_name(ids, "res(u, c4)").match);
    CHECK(by_name(ids, "res(u+1, c4)").match);
    CHECK(by_name(ids, "res(v, c4(v))").match);
    CHECK(by_name(ids, "res(v, delta(v)/v^14)").match);
    CHECK(by_name(ids, "delta(v) vanishing order at v = 0").match);
    CHECK(by_name(ids, "res(c, delta/c^2) rational corrected").computed == ExactRat(1, seven30()));
}

TEST_CASE("degree-1 rule") {
    const auto& cu = Registry::builtin().cubic();
    CHECK(resultant_linear(0, cu.g2) == 1);
    CHECK(resultant_linear(2, cu.c) == 7);
    CHECK(abs(resultant(IntPoly({-2, 1}), cu.c)) == resultant_linear(2, cu.c));
}

TEST_CASE("residue degree in the cubic subfield") {
    CHECK(residue_degree_zeta7_plus(13) == ResidueDegree::one);
    CHECK(residue_degree_zeta7_plus(3) == ResidueDegree::three);
    CHECK(residue_degree_zeta7_plus(7) == ResidueDegree::ramified);
    CHECK(residue_degree_zeta7_plus(29) == ResidueDegree::one);
    for (long q : primes_up_to(100)) CHECK(residue_degree_zeta7_plus(q) == residue_degree_by_roots(q));
}

TEST_CASE("mod 2 structure") {
    auto m = verify_mod2_structure();
    CHECK(m.pass());
    CHECK(m.factors.size() == 3);
    CHECK_FALSE(m.printed_product_matches);
    CHECK(m.swap_closed);
    CHECK(m.f4_closed);
    CHECK_FALSE(m.f2_solutions.empty());
}

}
