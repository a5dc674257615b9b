#pragma once

#include <string>
#include <vector>

namespace modsplit {

enum class CheckStatus { pass, fail, skipped };
const char* status_name(CheckStatus s);

// One verification outcome.  id is "<module>.<op>.<N>.<p>" with "-" for unused slots.
struct CheckReport {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::vector<std::string> witnesses;  // every failure carries at least one
    std::string detail;
    double runtime_ms = 0;

    bool ok() const { return status != CheckStatus::fail; }
};

std::string check_id(const std::string& module, const std::string& op, long N = -1, long p = -1);

// Sets status from a condition; failures without a witness get the detail as one.
void finish(CheckReport& r, bool pass);

}  // namespace modsplit
