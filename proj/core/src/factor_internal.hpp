#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace modsplit::detail {

using u128 = unsigned __int128;

bool is_prime_u128(u128 n);
bool is_prime_big(const mpz_class& n);

// Appends the prime factors of n (with repetition, unsorted) to out.  n >= 1.
void factor_into(const mpz_class& n, std::vector<mpz_class>& out);

const std::vector<std::uint32_t>& small_primes();  // primes below 2^16

mpz_class from_u128(u128 v);
bool fits_u128(const mpz_class& v);
u128 to_u128(const mpz_class& v);

}  // namespace modsplit::detail
