#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modsplit/check.hpp"
#include "modsplit/curvedb.hpp"
#include "modsplit/residue.hpp"
#include "modsplit/sampling.hpp"
#include "modsplit/splitting.hpp"

namespace modsplit {

// Homogeneous form n^d f(m/n) of degree d.
struct BinaryForm {
    IntPoly f;
    int degree = 0;

    static BinaryForm from_descending(const std::vector<long>& coeffs_m_first);  // a0 m^d + a1 m^(d-1) n + ...
    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm operator+(const BinaryForm& o) const;  // same degree
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm scaled(const ExactInt& k) const;
    ExactInt eval(const ExactInt& m, const ExactInt& n) const;
    std::string to_string() const;
};

// lhs == rhs coefficient-wise, or modulo `modulus` when it is nonzero.
struct PolyIdentity {
    std::string name;
    int N = 0;
    BinaryForm lhs, rhs;
    long modulus = 0;
    bool as_printed_misprint = false;  // recorded printing that is not an identity
};

struct IdentityResult {
    std::string name;
    bool holds = false;
    bool expected = true;
    std::string difference;  // lhs - rhs when it does not hold
};

std::vector<PolyIdentity> registered_identities();
IdentityResult check_identity(const PolyIdentity& id);
std::vector<IdentityResult> check_identities();
std::vector<IdentityResult> check_identities(const std::vector<PolyIdentity>& ids);

// mult * factor = X^2 - r Y^2, used to forbid primes with (r/p) = -1 from dividing factor(m, n).
struct NormCertificate {
    std::string identity;  // name in registered_identities()
    BinaryForm factor;
    ExactInt mult;
    BinaryForm X, Y;
    long r = 0;
};
// Certificates grouped per Z-factor; each group's radicands multiply to 5 times a square.
std::vector<std::vector<NormCertificate>> norm_certificates(int N);

// The mod-5 refinement of D for levels with norm-form certificates.
struct ModFiveElimination {
    int N = 0;
    std::set<long> engine_residues;  // D mod 5 from the enumeration alone
    std::set<long> residues;         // after elimination
    std::set<long> bad_primes;       // primes the certificates do not control
    std::vector<std::string> trace;
    bool complete = false;           // every step verified
};
ModFiveElimination eliminate_mod5(int N, unsigned jobs = 0);

// The full Table 2 pipeline for one level.
struct Table2Derivation {
    int N = 0;
    std::map<long, std::set<SplitExpectation>> facts;
    std::map<long, std::string> source;
    DConstraints D;
    std::set<long> D_mod8;  // empty when not determined
    std::set<long> D_mod5;
    std::vector<Deduction> deductions;
    std::vector<std::string> trace;
};
Table2Derivation derive_table2(int N, unsigned jobs = 0);
// Derived facts must contain every Table 2 expectation.
CheckReport check_table2_derivation(int N, unsigned jobs = 0);

// Quoted residue classes against the enumeration: coverage decides the check, tightness is reported.
struct QuoteComparison {
    std::string key;
    bool covered = false;
    bool tight = false;
    std::vector<long> uncovered;      // attained residues outside every quoted class
    std::vector<std::string> unused;  // quoted classes with no attained residue
    ResidueClassSet run;
};
std::vector<QuoteComparison> compare_quotes(int N, unsigned jobs = 0);
CheckReport check_quoted(int N, unsigned jobs = 0);

// Sampling checks of every Table 2 claim and every deduced residue set.
struct ClaimResult {
    std::string claim;
    bool pass = true;
    std::size_t checked = 0;
    std::vector<std::string> witnesses;
};
std::vector<ClaimResult> check_table2(int N, long H, unsigned jobs = 0);
CheckReport check_table2_report(int N, long H, unsigned jobs = 0);

struct RadicandTrace {
    int N = 0;
    ExactInt a;
    bool expansion_ok = false;
    bool discriminants_ok = false;
    bool reducible_ok = false;
    std::vector<long> primes_checked;
    std::vector<long> primes_failed;
    bool skipped_two = false;
    std::vector<std::string> lines;
    bool pass() const { return expansion_ok && discriminants_ok && reducible_ok && primes_failed.empty(); }
};
std::vector<RadicandTrace> check_thm2_1b(int N);  // MissingFactorization
bool check_lemma_referee(int N, long p);         // HypothesisViolated

struct RamificationWitness {
    int N = 0;
    ExactInt a;
    long p = 0;
    ExactInt x0;  // f(x0) = 0 mod p, != 0 mod p^2
    std::vector<ExactInt> u_values;
    std::vector<ExactInt> D_values;  // distinct, squarefree, exactly divisible by p
};
constexpr long kWitnessScanBound = 100000;
RamificationWitness find_ramification_witnesses(int N, const ExactInt& a, long p, std::size_t count);

// Primes p <= 100 that cannot ramify in any field from a non-exceptional point.
std::vector<long> table4_unramified(int N, unsigned jobs = 0);
// The 2-adic part: nullopt when undecided up to the escalation limit.
std::optional<bool> two_is_unramified(const CurveModel& c, int max_ell = 9, unsigned jobs = 0);

// Reciprocity chain on samples; also checks the symbolic preconditions.
CheckReport check_reciprocity_chain(int N, long H, unsigned jobs = 0);

}  // namespace modsplit
