#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modsplit/curvedb.hpp"

namespace modsplit {

enum class ReductionBranch { u_positive, u_negative, u_plus_one, cubic_factor, seven_special, h12_zero, good_or_additive };
const char* branch_name(ReductionBranch b);

struct ReductionVerdict {
    long p = 0;
    bool multiplicative = false;
    long n = 0;  // I_n when multiplicative
    ReductionBranch branch = ReductionBranch::good_or_additive;
    long k = 0;                  // valuation that selected the branch
    bool hypothesis_ok = true;   // p = +-1 mod 7 on the cubic branch; u = 2 mod 7 and k = 1 on the p = 7 branch
    std::string to_string() const;  // "I_14", "non-multiplicative"
};

// Case split on valuations of u, u + 1, u^3 + u^2 - 2u - 1 and h12.  CuspParameter for u in {0, -1}.
ReductionVerdict classify_reduction(const ExactRat& u, long p, const Registry& reg = Registry::builtin());

// Sum of factor multiplicities times factor valuations.  CuspParameter, Undefined if a factor vanishes.
long rational_function_valuation(const RationalFunctionData& rf, const ExactRat& u, long p);
long j_valuation(const ExactRat& u, long p, const Registry& reg = Registry::builtin());
// Valuation of the c4 numerator g2*g6*g12 as a binary form at (m, n).
long c4_form_valuation(const ExactRat& u, long p, const Registry& reg = Registry::builtin());

// Independent route: multiplicative iff v_p(j) < 0 and the c4 form is a unit.
ReductionVerdict classify_by_j(const ExactRat& u, long p, const Registry& reg = Registry::builtin());

struct ResultantIdentity {
    std::string name;
    std::string claimed;  // as stated, "1", "7^12"
    ExactRat computed;    // rational for rational-function readings
    bool match = false;
    bool literal = false;  // the reading that the statement spells out
    std::string note;
};
std::vector<ResultantIdentity> verify_resultant_identities(const Registry& reg = Registry::builtin());
// |res(x - c, g)| = |g(c)|, the degree-1 rule.
ExactInt resultant_linear(const ExactInt& c, const IntPoly& g);

enum class ResidueDegree { one = 1, three = 3, ramified = 0 };
ResidueDegree residue_degree_zeta7_plus(long q);
// From the number of roots of u^3 + u^2 - 2u - 1 mod q.
ResidueDegree residue_degree_by_roots(long q);

struct Mod2Report {
    std::vector<BivarPolyModP> factors;
    bool product_matches = false;
    bool printed_product_matches = false;
    std::vector<std::string> printed;
    std::vector<std::pair<std::string, std::string>> f2_solutions;  // P^1(F_2) x P^1(F_2)
    bool swap_closed = false;
    bool f4_closed = false;        // every F_4 solution with one F_2 coordinate has both
    bool closure_closed = false;   // the fibres over P^1(F_2) split into P^1(F_2) points
    bool pass() const { return product_matches && swap_closed && f4_closed && closure_closed && !f2_solutions.empty(); }
};
Mod2Report verify_mod2_structure(const Registry& reg = Registry::builtin());

}  // namespace modsplit
