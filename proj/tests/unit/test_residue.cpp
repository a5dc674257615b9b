#include <doctest.h>

#include "modsplit/residue.hpp"

using namespace modsplit;

namespace {

EnumerationSpec S(int N, long p, int ell, PairConstraint c = {}) {
    EnumerationSpec s;
    s.N = N;
    s.p = p;
    s.ell = ell;
    s.constraint = c;
    return s;
}

}  // namespace

TEST_SUITE("residue") {

TEST_CASE("level 28 mod 3") {
    auto r = enumerate_classes(S(28, 3, 1));
    CHECK(r.attained == std::vector<long>{1});
    CHECK_FALSE(r.saturated_zero);
}

TEST_CASE("level 26 mod 169") {
    auto r = enumerate_classes(S(26, 13, 2));
    std::set<long> units, ram;
    for (const auto& c : r.canonical) {
        if (c.t == 0) units.insert(c.a % 13);
        if (c.t == 1) ram.insert(c.a);
        CHECK(c.t < 2);
    }
    CHECK(units == std::set<long>{1, 3, 4, 9, 10, 12});
    CHECK(ram == std::set<long>{4, 9});
}

TEST_CASE("level 22 mod 512") {
    auto r = enumerate_classes(S(22, 2, 9));
    std::set<int> ts;
    for (const auto& c : r.canonical) {
        ts.insert(c.t);
        if (c.t == 0 || c.t == 6) CHECK(c.a % 8 == 1);
    }
    CHECK(ts == std::set<int>{0, 5, 6});
}

TEST_CASE("constant form") {
    auto r = enumerate_form(IntPoly({1}), 0, 5, 2, {});
    CHECK(r.attained == std::vector<long>{1});
}

TEST_CASE("partition does not change the result") {
    auto a = enumerate_form(IntPoly({1, 3, 1}), 2, 2, 7, {}, 1);
    auto b = enumerate_form(IntPoly({1, 3, 1}), 2, 2, 7, {}, 5);
    CHECK(a.attained == b.attained);
    CHECK(a.canonical == b.canonical);
}

TEST_CASE("escalation when zero is attained") {
    // x^2 is 0 at (0, 1) for every exponent, so escalation must give up.
    Registry reg = Registry::builtin();
    reg.mutable_curve(22).f = IntPoly({0, 0, 1});
    try {
        enumerate_classes(S(22, 3, 1), 1, reg);
        FAIL("escalation did not stop");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EscalationExceeded);
    }
}

TEST_CASE("stored deductions") {
    auto d30 = run_paper_deduction(30, 2);
    CHECK(d30.D.residues == std::set<long>{1});
    CHECK(d30.verdict.count(SplitExpectation::splits));
    auto d40 = run_paper_deduction(40, 5);
    CHECK(d40.D.residues == std::set<long>{1, 4});
    CHECK(d40.verdict.count(SplitExpectation::splits));
    auto d39 = run_paper_deduction(39, 3);
    CHECK(d39.D.residues.count(0));
    CHECK_FALSE(d39.D.residues.count(2));
    try {
        run_paper_deduction(23, 2);
        FAIL("level 23 has no specs");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoEnumerationSpec);
    }
}

}
