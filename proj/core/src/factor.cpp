#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "factor_internal.hpp"

namespace modsplit::detail {

namespace {

using u64 = std::uint64_t;

constexpr u64 kTrialBound = 1024;

template <class W>
W binary_gcd(W a, W b) {
    if (a == 0) return b;
    if (b == 0) return a;
    int shift = 0;
    while (((a | b) & 1) == 0) {
        a >>= 1;
        b >>= 1;
        ++shift;
    }
    while ((a & 1) == 0) a >>= 1;
    do {
        while ((b & 1) == 0) b >>= 1;
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

// Montgomery arithmetic modulo an odd n < 2^64.
struct Mont64 {
    using word = u64;
    u64 n, inv, r1, r2;

    explicit Mont64(u64 modulus) : n(modulus) {
        inv = n;
        for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
        r1 = static_cast<u64>((static_cast<u128>(1) << 64) % n);
        r2 = static_cast<u64>(static_cast<u128>(r1) * r1 % n);
    }
    u64 reduce(u128 t) const {
        u64 m = static_cast<u64>(t) * inv;
        u64 hi = static_cast<u64>(t >> 64);
        u64 mh = static_cast<u64>((static_cast<u128>(m) * n) >> 64);
        return hi >= mh ? hi - mh : hi + (n - mh);
    }
    u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
    u64 to(u64 a) const { return mul(a % n, r2); }
    u64 one() const { return r1; }
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return (s >= n || s < a) ? s - n : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (n - b); }
};

inline void mul_wide(u128 a, u128 b, u128& hi, u128& lo) {
    u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
    u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
    u128 p00 = static_cast<u128>(a0) * b0;
    u128 p01 = static_cast<u128>(a0) * b1;
    u128 p10 = static_cast<u128>(a1) * b0;
    u128 p11 = static_cast<u128>(a1) * b1;
    u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
    lo = (mid << 64) | static_cast<u64>(p00);
    hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
}

// Montgomery arithmetic modulo an odd n < 2^127.
struct Mont128 {
    using word = u128;
    u128 n, inv, r1, r2;

    explicit Mont128(u128 modulus) : n(modulus) {
        inv = n;
        for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
        r1 = (static_cast<u128>(0) - n) % n;
        r2 = r1;
        for (int i = 0; i < 128; ++i) {
            r2 <<= 1;
            if (r2 >= n) r2 -= n;
        }
    }
    u128 reduce(u128 hi, u128 lo) const {
        u128 m = lo * inv;
        u128 mh, ml;
        mul_wide(m, n, mh, ml);
        return hi >= mh ? hi - mh : hi + (n - mh);
    }
    u128 mul(u128 a, u128 b) const {
        u128 hi, lo;
        mul_wide(a, b, hi, lo);
        return reduce(hi, lo);
    }
    u128 to(u128 a) const { return mul(a % n, r2); }
    u128 one() const { return r1; }
    u128 add(u128 a, u128 b) const {
        u128 s = a + b;
        return s >= n ? s - n : s;
    }
    u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a + (n - b); }
};

template <class M>
typename M::word mont_pow(const M& mo, typename M::word base, typename M::word e) {
    typename M::word result = mo.one();
    while (e) {
        if (e & 1) result = mo.mul(result, base);
        base = mo.mul(base, base);
        e >>= 1;
    }
    return result;
}

template <class M>
bool miller_rabin(typename M::word n) {
    using W = typename M::word;
    static const unsigned bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    M mo(n);
    W d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    const W one = mo.one();
    const W minus_one = mo.sub(0, one);
    for (unsigned b : bases) {
        if (static_cast<W>(b) % n == 0) continue;
        W x = mont_pow(mo, mo.to(static_cast<W>(b)), d);
        if (x == one || x == minus_one) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mo.mul(x, x);
            if (x == minus_one) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard rho.  Returns a nontrivial divisor or n on failure.
template <class M>
typename M::word brent_rho(typename M::word n, typename M::word c_raw) {
    using W = typename M::word;
    M mo(n);
    const W c = mo.to(c_raw);
    auto f = [&](W x) { return mo.add(mo.mul(x, x), c); };
    const std::size_t batch = 128;
    W y = mo.to(2), x = y, ys = y, q = mo.one();
    W g = 1;
    std::size_t r = 1;
    const std::size_t limit = std::size_t{1} << 26;
    while (g == 1 && r <= limit) {
        x = y;
        for (std::size_t i = 0; i < r; ++i) y = f(y);
        std::size_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::size_t steps = std::min(batch, r - k);
            for (std::size_t i = 0; i < steps; ++i) {
                y = f(y);
                W diff = x > y ? x - y : y - x;
                q = mo.mul(q, diff);
            }
            g = binary_gcd<W>(q, n);
            k += steps;
        }
        r <<= 1;
    }
    if (g == n || g == 0) {
        g = 1;
        std::size_t guard = 0;
        while (g == 1 && guard++ < (std::size_t{1} << 27)) {
            ys = f(ys);
            W diff = x > ys ? x - ys : ys - x;
            g = binary_gcd<W>(diff, n);
        }
    }
    if (g == 0) return n;
    return g;
}

mpz_class brent_rho_big(const mpz_class& n, unsigned long c) {
    mpz_class y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
    auto f = [&](mpz_class& v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    const std::size_t batch = 128;
    std::size_t r = 1;
    while (g == 1) {
        x = y;
        for (std::size_t i = 0; i < r; ++i) f(y);
        std::size_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::size_t steps = std::min(batch, r - k);
            for (std::size_t i = 0; i < steps; ++i) {
                f(y);
                diff = x - y;
                q = q * diff;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            g = gcd(q, n);
            k += steps;
        }
        r <<= 1;
    }
    if (g == n || g == 0) {
        g = 1;
        while (g == 1) {
            f(ys);
            diff = x - ys;
            g = gcd(diff, n);
        }
    }
    if (g == 0) return n;
    return abs(g);
}

void push_prime(std::vector<mpz_class>& out, u128 p) { out.push_back(from_u128(p)); }

void split_u128(u128 n, std::vector<mpz_class>& out);

void split_big(const mpz_class& n, std::vector<mpz_class>& out) {
    if (n == 1) return;
    if (fits_u128(n) && to_u128(n) < (static_cast<u128>(1) << 127)) {
        split_u128(to_u128(n), out);
        return;
    }
    if (is_prime_big(n)) {
        out.push_back(n);
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        split_big(root, out);
        split_big(root, out);
        return;
    }
    for (unsigned long c = 1;; ++c) {
        mpz_class d = brent_rho_big(n, c);
        if (d != 1 && d != n) {
            split_big(d, out);
            split_big(n / d, out);
            return;
        }
    }
}

void split_u128(u128 n, std::vector<mpz_class>& out) {
    if (n == 1) return;
    if (n < kTrialBound * kTrialBound) {
        // All prime factors below kTrialBound have been removed by the caller.
        push_prime(out, n);
        return;
    }
    if (is_prime_u128(n)) {
        push_prime(out, n);
        return;
    }
    mpz_class big = from_u128(n);
    if (mpz_perfect_square_p(big.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), big.get_mpz_t());
        split_u128(to_u128(root), out);
        split_u128(to_u128(root), out);
        return;
    }
    for (u128 c = 1;; ++c) {
        u128 d = n < (static_cast<u128>(1) << 64)
                     ? brent_rho<Mont64>(static_cast<u64>(n), static_cast<u64>(c))
                     : brent_rho<Mont128>(n, c);
        if (d != 1 && d != n) {
            split_u128(d, out);
            split_u128(n / d, out);
            return;
        }
    }
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        const std::uint32_t bound = 1u << 16;
        std::vector<bool> composite(bound, false);
        std::vector<std::uint32_t> ps;
        for (std::uint32_t i = 2; i < bound; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j < bound; j += i) composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

mpz_class from_u128(u128 v) {
    mpz_class hi = static_cast<unsigned long>(static_cast<u64>(v >> 64));
    mpz_class lo = static_cast<unsigned long>(static_cast<u64>(v));
    return (hi << 64) + lo;
}

bool fits_u128(const mpz_class& v) { return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 128; }

u128 to_u128(const mpz_class& v) {
    mpz_class lo_part = v & mpz_class("18446744073709551615");
    mpz_class hi_part = v >> 64;
    return (static_cast<u128>(hi_part.get_ui()) << 64) | lo_part.get_ui();
}

bool is_prime_u128(u128 n) {
    if (n < 2) return false;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 43 * 43) return true;
    if (n < (static_cast<u128>(1) << 64)) return miller_rabin<Mont64>(static_cast<u64>(n));
    if (n < (static_cast<u128>(1) << 127)) {
        // The 13 bases are a proof of primality only below 3.317e24.
        static const u128 det_bound = to_u128(mpz_class("3317044064679887385961981"));
        if (n < det_bound) return miller_rabin<Mont128>(n);
    }
    return is_prime_big(from_u128(n));
}

bool is_prime_big(const mpz_class& n) {
    if (fits_u128(n)) {
        u128 v = to_u128(n);
        static const u128 det_bound = to_u128(mpz_class("3317044064679887385961981"));
        if (v < det_bound) return is_prime_u128(v);
    }
    // GMP runs Baillie-PSW followed by extra Miller-Rabin rounds.
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

void factor_into(const mpz_class& n_in, std::vector<mpz_class>& out) {
    mpz_class n = abs(n_in);
    if (n <= 1) return;
    if (fits_u128(n)) {
        u128 v = to_u128(n);
        if (v < (static_cast<u128>(1) << 64)) {
            u64 w = static_cast<u64>(v);
            while ((w & 1) == 0) {
                out.push_back(2);
                w >>= 1;
            }
            for (std::uint32_t p : small_primes()) {
                if (p >= kTrialBound) break;
                if (p == 2) continue;
                if (static_cast<u64>(p) * p > w) break;
                while (w % p == 0) {
                    out.push_back(p);
                    w /= p;
                }
            }
            v = w;
        } else {
            for (std::uint32_t p : small_primes()) {
                if (p >= kTrialBound) break;
                while (v % p == 0) {
                    out.push_back(p);
                    v /= p;
                }
            }
        }
        if (v < (static_cast<u128>(1) << 127)) {
            split_u128(v, out);
            return;
        }
        n = from_u128(v);
    } else {
        for (std::uint32_t p : small_primes()) {
            if (p >= kTrialBound) break;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                out.push_back(p);
                n /= p;
            }
        }
    }
    split_big(n, out);
}

}  // namespace modsplit::detail
