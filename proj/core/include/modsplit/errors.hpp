#pragma once

#include <stdexcept>
#include <string>

namespace modsplit {

enum class ErrorCode {
    NotPrime,
    NotOddPrime,
    ZeroInput,
    ZeroPolynomial,
    ConstantPolynomial,
    RadicalResidue,
    NonIntegralResult,
    UnsupportedLevel,
    RegistryLoad,
    NotAField,
    InsufficientPrecision,
    EscalationExceeded,
    NoEnumerationSpec,
    MissingFactorization,
    HypothesisViolated,
    NoRoot,
    Exhausted,
    CuspParameter,
    Undefined,
    UnknownTable,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace modsplit
