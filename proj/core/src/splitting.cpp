#include "modsplit/splitting.hpp"

#include <tuple>

namespace modsplit {

const char* behavior_name(SplitBehavior b) {
    switch (b) {
        case SplitBehavior::split: return "split";
        case SplitBehavior::inert: return "inert";
        case SplitBehavior::ramified: return "ramified";
    }
    return "?";
}

std::string CanonicalClass::to_string() const {
    std::string s = std::to_string(a);
    if (t > 0) s += "*" + std::to_string(p) + (t > 1 ? "^" + std::to_string(t) : "");
    return s + " mod " + std::to_string(p) + "^" + std::to_string(ell);
}

std::optional<CanonicalClass> canonicalize(long v, long p, int ell) {
    long M = 1;
    for (int i = 0; i < ell; ++i) M *= p;
    v %= M;
    if (v < 0) v += M;
    if (v == 0) return std::nullopt;
    CanonicalClass c{p, ell, 0, v};
    while (c.a % p == 0) {
        c.a /= p;
        ++c.t;
    }
    long rest = 1;
    for (int i = 0; i < ell - c.t; ++i) rest *= p;
    c.a %= rest;
    return c;
}

bool is_nonzero_square_mod(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return false;
    if (p == 2) return true;
    return legendre(a, p) == 1;
}

SplitBehavior classify_prime(const ExactInt& D, const ExactInt& p) {
    if (D == 0 || D == 1) throw Error(ErrorCode::NotAField, "Q(sqrt " + D.get_str() + ") is not a quadratic field");
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, p.get_str() + " is not prime");
    if (p == 2) {
        long r = mod_long(D, 8);
        if (r % 4 != 1) return SplitBehavior::ramified;
        return r == 1 ? SplitBehavior::split : SplitBehavior::inert;
    }
    int s = legendre(D, p);
    if (s == 0) return SplitBehavior::ramified;
    return s == 1 ? SplitBehavior::split : SplitBehavior::inert;
}

DResidueSet deduce_D_constraints(const std::vector<CanonicalClass>& classes, bool require_full) {
    DResidueSet out;
    if (classes.empty()) return out;
    out.p = classes.front().p;
    const long p = out.p;
    out.modulus = p == 2 ? 8 : p;
    for (const auto& c : classes) {
        if (c.p != p) throw Error(ErrorCode::InvalidArgument, "classes for mixed primes");
        if (c.t >= c.ell || c.t < 0) throw Error(ErrorCode::InvalidArgument, "class with t >= ell");
        const int room = c.ell - c.t;
        if (p != 2) {
            if (c.t % 2 == 1) {
                out.residues.insert(0);
            } else {
                // D = a (p^k / s)^2 mod p^(ell - t): a times the unit squares.
                for (long s = 1; s < p; ++s) out.residues.insert(c.a * s % p * s % p);
            }
            continue;
        }
        // p = 2: odd squares are 1 mod 8.
        if (c.t % 2 == 0) {
            int bits = std::min(room, 3);
            if (bits < 3) out.precise = false;
            long mask = (1L << bits) - 1;
            for (long r = 1; r < 8; r += 2) {
                if ((r & mask) == (c.a & mask)) out.residues.insert(r);
            }
        } else {
            // D = 2 D', D' s'^2 = a (mod 2^(ell - t)), so D' = a mod 2^min(ell - t, 2).
            int bits = std::min(room, 2);
            if (bits < 2) out.precise = false;
            long mask = (1L << bits) - 1;
            for (long r = 1; r < 4; r += 2) {
                if ((r & mask) == (c.a & mask)) out.residues.insert(2 * r);
            }
        }
    }
    if (require_full && !out.precise) {
        throw Error(ErrorCode::InsufficientPrecision, "2-adic classes do not determine D mod 8; raise the exponent");
    }
    if (p == 2) {
        for (long r : out.residues) {
            if (r % 4 != 1) out.ramified_possible = true;
        }
    } else {
        out.ramified_possible = out.residues.count(0) > 0;
    }
    return out;
}

std::set<SplitExpectation> summarize_behaviour(const DResidueSet& d) {
    bool splits = true, unramified = true, not_inert = true;
    for (long r : d.residues) {
        if (d.p == 2) {
            if (r != 1) splits = false;
            if (r % 4 != 1) unramified = false;
            if (r == 5) not_inert = false;
        } else {
            if (!is_nonzero_square_mod(r, d.p)) splits = false;
            if (r == 0) unramified = false;
            if (r != 0 && !is_nonzero_square_mod(r, d.p)) not_inert = false;
        }
    }
    std::set<SplitExpectation> out;
    if (splits) out.insert(SplitExpectation::splits);
    if (unramified) out.insert(SplitExpectation::unramified);
    if (not_inert) out.insert(SplitExpectation::not_inert);
    return out;
}

}  // namespace modsplit
