#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modsplit/exactmath.hpp"
#include "modsplit/poly.hpp"

namespace modsplit {

enum class SplitExpectation { splits, not_inert, unramified };
const char* expectation_name(SplitExpectation e);

struct DConstraints {
    bool positive = false;  // D > 0
    bool odd = false;
    bool mod8_126 = false;  // D mod 8 in {1, 2, 6}
    bool mod5_01 = false;   // D mod 5 in {0, 1}
    bool any() const { return positive || odd || mod8_126 || mod5_01; }
};

// Linear congruence condition on (m, n) modulo a small prime q.
struct PairConstraint {
    enum class Kind { none, congruent, incongruent };
    Kind kind = Kind::none;
    long q = 0;
    bool admits(long m, long n) const;
    std::string to_string() const;  // "", "~c3", "~i3"
};

struct EnumerationSpec {
    int N = 0;
    long p = 0;
    int ell = 0;
    PairConstraint constraint;
    int escalation_limit = 0;  // max exponent; 0 means ell + 8
    long modulus() const;
    std::string key() const;  // "2^9", "3^4~c3"
};

// A residue class statement "v = r (mod M)" from a proof, or "v has odd valuation".
struct QuotedClass {
    bool odd_valuation = false;
    long r = 0;
    long M = 1;
    std::string to_string() const;
};

struct QuotedEnumeration {
    long p = 0;
    int ell = 0;
    PairConstraint constraint;
    std::vector<QuotedClass> classes;
    std::string key() const;
};

struct QuadFactorization {
    ExactInt radicand;
    ExactInt content = 1;
    std::vector<QuadExtPoly> factors;
};

struct CurveModel {
    int N = 0;
    IntPoly f;
    std::vector<IntPoly> factors_Z;
    std::vector<ExactInt> published_discriminants;  // parallel to factors_Z when present
    std::vector<QuadFactorization> quad_factorizations;
    std::vector<QuadFactorization> printed_quad_variants;  // literal printings known to be wrong
    std::map<long, std::set<SplitExpectation>> expected;   // prime -> claims
    DConstraints expected_D;
    std::vector<long> unramified_primes_le_100;
    std::vector<EnumerationSpec> enumeration_specs;
    std::vector<QuotedEnumeration> quoted;
    std::vector<ExactInt> table3_radicands;
    std::optional<ExactInt> witness_radicand;
    bool skip_prime_two = false;  // radicand statement excludes p = 2
    std::vector<std::string> notes;

    bool has_table2() const { return !expected.empty() || expected_D.any(); }
    int degree() const { return f.degree(); }
};

// Integer bivariate polynomial, c[i][j] the coefficient of u^i v^j.
struct IntBivarPoly {
    std::vector<std::vector<ExactInt>> c;
    ExactInt eval(const ExactInt& u, const ExactInt& v) const;
    BivarPolyModP reduce(long p) const;
};

struct RationalFunctionData {
    struct Factor {
        std::string name;
        IntPoly poly;
        unsigned multiplicity = 1;
    };
    std::vector<Factor> numerator;
    std::vector<Factor> denominator;

    IntPoly numerator_poly() const;
    IntPoly denominator_poly() const;
    std::string to_string() const;
};

struct CubicFamilyData {
    IntBivarPoly f_uv;
    IntPoly c;  // u^3 + u^2 - 2u - 1
    IntPoly g2, g6, g12, f12, h12, g24;
    RationalFunctionData j, delta, delta_printed, c4;
    std::vector<std::vector<BivarPolyModP>> printed_mod2;  // one printed factor list
    std::vector<std::string> notes;
};

class Registry {
public:
    static Registry parse(const std::string& text);
    static Registry load_file(const std::string& path);
    // The registry compiled into the library.
    static const Registry& builtin();
    static const std::string& builtin_text();

    const CurveModel& curve(int N) const;  // UnsupportedLevel
    bool has_curve(int N) const { return curves_.count(N) != 0; }
    std::vector<int> levels() const;
    const CubicFamilyData& cubic() const { return cubic_; }
    const std::string& text() const { return text_; }
    // FNV-1a 64-bit over the source text.
    std::uint64_t checksum() const;

    CurveModel& mutable_curve(int N);  // fault injection in tests and the CLI

private:
    std::map<int, CurveModel> curves_;
    CubicFamilyData cubic_;
    std::string text_;
};

const CurveModel& get_curve(int N);

struct RegistryEntryReport {
    std::string entry;  // "curve.22", "cubic"
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> passed;
};

std::vector<RegistryEntryReport> validate_registry(const Registry& reg);

}  // namespace modsplit
