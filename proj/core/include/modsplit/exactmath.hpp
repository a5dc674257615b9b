#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "modsplit/errors.hpp"

namespace modsplit {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

// p-adic valuation; `infinite` is set for the input 0.
struct PAdicVal {
    ExactInt prime;
    long value = 0;
    bool infinite = false;

    bool operator==(const PAdicVal& o) const {
        return prime == o.prime && infinite == o.infinite && (infinite || value == o.value);
    }
};

// d = D * s^2 with D squarefree and s > 0.
struct SquarefreeDecomp {
    ExactInt D;
    ExactRat s;
};

struct PrimePower {
    ExactInt prime;
    unsigned exponent = 0;
};

ExactInt gcd(const ExactInt& a, const ExactInt& b);

// Deterministic below 3.3e24 (Miller-Rabin on the first 13 prime bases),
// Baillie-PSW through GMP above that.
bool is_prime(const ExactInt& n);
bool is_prime_u64(std::uint64_t n);

PAdicVal valuation(const ExactRat& x, const ExactInt& p);
// Valuation of a nonzero integer, p assumed prime (no check). Returns -1 for x = 0.
long valuation_unchecked(const ExactInt& x, const ExactInt& p);

// Prime factorization of |n| in increasing prime order; n != 0.  factorize(1) is empty.
std::vector<PrimePower> factorize(const ExactInt& n);

SquarefreeDecomp squarefree_part(const ExactRat& d);
// Squarefree part of a nonzero integer, also returning its prime divisors.
ExactInt squarefree_kernel(const ExactInt& n, std::vector<ExactInt>* primes_of_result = nullptr);

int legendre(const ExactInt& a, const ExactInt& p);
int kronecker(const ExactInt& a, const ExactInt& n);

// Nonnegative residue of a modulo m (m > 0).
long mod_long(const ExactInt& a, long m);

std::vector<long> primes_up_to(long bound);

// "2^20*13^3" style rendering, with a leading "-" for negative input.
std::string format_factored(const ExactInt& n);
// Parses the format above (also plain decimal); throws InvalidArgument.
ExactInt parse_factored(const std::string& text);

ExactRat parse_rational(const std::string& text);

}  // namespace modsplit
