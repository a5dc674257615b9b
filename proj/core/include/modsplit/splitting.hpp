#pragma once

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "modsplit/curvedb.hpp"
#include "modsplit/exactmath.hpp"

namespace modsplit {

enum class SplitBehavior { split, inert, ramified };
const char* behavior_name(SplitBehavior b);

// D s^2 = a p^t (mod p^ell), p not dividing a; a is reduced mod p^(ell - t).
struct CanonicalClass {
    long p = 0;
    int ell = 0;
    int t = 0;
    long a = 0;

    bool operator<(const CanonicalClass& o) const {
        return std::tie(p, ell, t, a) < std::tie(o.p, o.ell, o.t, o.a);
    }
    bool operator==(const CanonicalClass& o) const { return p == o.p && ell == o.ell && t == o.t && a == o.a; }
    std::string to_string() const;  // "a*p^t mod p^ell"
};

// The class of a nonzero residue v mod p^ell; nullopt for v = 0.
std::optional<CanonicalClass> canonicalize(long v, long p, int ell);

// Admissible residues of D: mod p for odd p, mod 8 for p = 2.
struct DResidueSet {
    long p = 0;
    long modulus = 0;
    std::set<long> residues;
    bool ramified_possible = false;
    bool precise = true;  // every class carried enough 2-adic precision for a mod-8 statement
};

SplitBehavior classify_prime(const ExactInt& D, const ExactInt& p);

// require_full: for p = 2, throw InsufficientPrecision unless every class pins D mod 8.
DResidueSet deduce_D_constraints(const std::vector<CanonicalClass>& classes, bool require_full = false);

std::set<SplitExpectation> summarize_behaviour(const DResidueSet& d);

bool is_nonzero_square_mod(long a, long p);

}  // namespace modsplit
