#pragma once

#include <set>
#include <vector>

#include "modsplit/curvedb.hpp"
#include "modsplit/splitting.hpp"

namespace modsplit {

constexpr long kMaxEnumerationModulus = 10000;

struct ResidueClassSet {
    EnumerationSpec spec;  // as finally run, after any escalation
    std::vector<int> exponents_tried;
    std::vector<long> attained;  // sorted residues of F(m, n) mod p^ell
    std::set<CanonicalClass> canonical;
    bool saturated_zero = false;
};

// One pass over the (m, n) grid mod p^ell for the form n^d f(m/n), d = form_degree.
// jobs = 0 uses the hardware concurrency.
ResidueClassSet enumerate_form(const IntPoly& f, int form_degree, long p, int ell, const PairConstraint& constraint,
                               unsigned jobs = 0);

// Runs the spec against the curve's f_N and escalates while 0 is attained.
ResidueClassSet enumerate_classes(const EnumerationSpec& spec, unsigned jobs = 0,
                                  const Registry& reg = Registry::builtin());

struct Deduction {
    int N = 0;
    long p = 0;
    std::vector<ResidueClassSet> runs;  // one per registry spec for p
    DResidueSet D;
    std::set<SplitExpectation> verdict;
};

// enumerate_classes -> deduce_D_constraints -> summarize_behaviour over every stored spec for (N, p).
Deduction run_paper_deduction(int N, long p, unsigned jobs = 0, const Registry& reg = Registry::builtin());

}  // namespace modsplit
