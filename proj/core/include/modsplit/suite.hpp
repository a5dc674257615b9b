#pragma once

#include <string>
#include <vector>

#include "modsplit/check.hpp"
#include "modsplit/curvedb.hpp"

namespace modsplit {

struct SuiteOptions {
    long height = 200;
    int only_N = -1;  // -1 runs every level and the cubic checks
    unsigned jobs = 0;
    std::string fault;  // "", "registry", "table4"
};

// Every registered check, sorted by id.  UnsupportedLevel when only_N is not in the registry.
std::vector<CheckReport> run_verify_all(const SuiteOptions& opt);

// The individual groups, exposed for the acceptance binary.
std::vector<CheckReport> registry_checks(const Registry& reg);
std::vector<CheckReport> identity_checks(int only_N = -1);
CheckReport table4_check(int N, const Registry& expected, unsigned jobs = 0);
CheckReport thm2_1b_check(int N);
std::vector<CheckReport> witness_checks(int N, std::size_t count = 5);
std::vector<CheckReport> resultant_checks();
CheckReport mod2_check();
CheckReport classifier_coherence_check(std::size_t cases = 200, unsigned seed = 14);

// Registry copy with one deliberate corruption; InvalidArgument for an unknown target.
Registry faulted_registry(const std::string& target);

}  // namespace modsplit
