#include "modsplit/exactmath.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "factor_internal.hpp"

namespace modsplit {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotOddPrime: return "NotOddPrime";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
        case ErrorCode::RadicalResidue: return "RadicalResidue";
        case ErrorCode::NonIntegralResult: return "NonIntegralResult";
        case ErrorCode::UnsupportedLevel: return "UnsupportedLevel";
        case ErrorCode::RegistryLoad: return "RegistryLoad";
        case ErrorCode::NotAField: return "NotAField";
        case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
        case ErrorCode::EscalationExceeded: return "EscalationExceeded";
        case ErrorCode::NoEnumerationSpec: return "NoEnumerationSpec";
        case ErrorCode::MissingFactorization: return "MissingFactorization";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::NoRoot: return "NoRoot";
        case ErrorCode::Exhausted: return "Exhausted";
        case ErrorCode::CuspParameter: return "CuspParameter";
        case ErrorCode::Undefined: return "Undefined";
        case ErrorCode::UnknownTable: return "UnknownTable";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
    ExactInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool is_prime_u64(std::uint64_t n) { return detail::is_prime_u128(n); }

bool is_prime(const ExactInt& n) {
    if (n < 2) return false;
    return detail::is_prime_big(n);
}

long valuation_unchecked(const ExactInt& x, const ExactInt& p) {
    if (x == 0) return -1;
    if (p == 2) return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
    ExactInt rest = x;
    long v = 0;
    if (p.fits_ulong_p()) {
        unsigned long pp = p.get_ui();
        while (mpz_divisible_ui_p(rest.get_mpz_t(), pp)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), pp);
            ++v;
        }
        return v;
    }
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

PAdicVal valuation(const ExactRat& x, const ExactInt& p) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, p.get_str() + " is not prime");
    PAdicVal out;
    out.prime = p;
    if (x == 0) {
        out.infinite = true;
        return out;
    }
    out.value = valuation_unchecked(x.get_num(), p) - valuation_unchecked(x.get_den(), p);
    return out;
}

std::vector<PrimePower> factorize(const ExactInt& n) {
    if (n == 0) throw Error(ErrorCode::ZeroInput, "cannot factor 0");
    std::vector<ExactInt> primes;
    detail::factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().prime == p) {
            ++out.back().exponent;
        } else {
            out.push_back({p, 1});
        }
    }
    return out;
}

ExactInt squarefree_kernel(const ExactInt& n, std::vector<ExactInt>* primes_of_result) {
    if (n == 0) throw Error(ErrorCode::ZeroInput, "squarefree part of 0");
    ExactInt D = sgn(n) < 0 ? -1 : 1;
    for (const auto& pp : factorize(n)) {
        if (pp.exponent % 2 == 1) {
            D *= pp.prime;
            if (primes_of_result) primes_of_result->push_back(pp.prime);
        }
    }
    return D;
}

SquarefreeDecomp squarefree_part(const ExactRat& d) {
    if (d == 0) throw Error(ErrorCode::ZeroInput, "d = 0 has no squarefree part");
    // d = a/b = a*b / b^2, so the squarefree part of a*b is D.
    ExactInt a = d.get_num();
    ExactInt b = d.get_den();
    ExactInt D = squarefree_kernel(a * b);
    ExactRat ratio = d / D;  // a positive rational square
    ExactInt num_root, den_root;
    mpz_sqrt(num_root.get_mpz_t(), ratio.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), ratio.get_den().get_mpz_t());
    SquarefreeDecomp out;
    out.D = D;
    out.s = ExactRat(num_root, den_root);
    out.s.canonicalize();
    return out;
}

int legendre(const ExactInt& a, const ExactInt& p) {
    if (p == 2 || !is_prime(p)) throw Error(ErrorCode::NotOddPrime, p.get_str() + " is not an odd prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

int kronecker(const ExactInt& a, const ExactInt& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

long mod_long(const ExactInt& a, long m) {
    return static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m)));
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    for (std::uint32_t p : detail::small_primes()) {
        if (p > bound) return out;
        out.push_back(p);
    }
    for (long q = (1L << 16) + 1; q <= bound; q += 2) {
        if (is_prime_u64(static_cast<std::uint64_t>(q))) out.push_back(q);
    }
    return out;
}

std::string format_factored(const ExactInt& n) {
    if (n == 0) return "0";
    std::ostringstream os;
    if (sgn(n) < 0) os << "-";
    auto fac = factorize(n);
    if (fac.empty()) {
        os << "1";
        return os.str();
    }
    for (std::size_t i = 0; i < fac.size(); ++i) {
        if (i) os << "*";
        os << fac[i].prime.get_str();
        if (fac[i].exponent > 1) os << "^" << fac[i].exponent;
    }
    return os.str();
}

ExactInt parse_factored(const std::string& text_in) {
    std::string text;
    for (char c : text_in) {
        if (c != ' ' && c != '\t') text.push_back(c);
    }
    if (text.empty()) throw Error(ErrorCode::InvalidArgument, "empty integer expression");
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    ExactInt value = 1;
    std::string rest = text.substr(pos);
    std::stringstream ss(rest);
    std::string term;
    bool any = false;
    while (std::getline(ss, term, '*')) {
        any = true;
        auto caret = term.find('^');
        std::string base = term.substr(0, caret);
        unsigned long exp = 1;
        if (caret != std::string::npos) {
            try {
                exp = std::stoul(term.substr(caret + 1));
            } catch (...) {
                throw Error(ErrorCode::InvalidArgument, "bad exponent in '" + text_in + "'");
            }
        }
        ExactInt b;
        if (base.empty() || b.set_str(base, 10) != 0) {
            throw Error(ErrorCode::InvalidArgument, "bad integer '" + text_in + "'");
        }
        ExactInt powered;
        mpz_pow_ui(powered.get_mpz_t(), b.get_mpz_t(), exp);
        value *= powered;
    }
    if (!any) throw Error(ErrorCode::InvalidArgument, "bad integer '" + text_in + "'");
    return negative ? ExactInt(-value) : value;
}

ExactRat parse_rational(const std::string& text) {
    ExactRat q;
    std::string t;
    for (char c : text) {
        if (c != ' ') t.push_back(c);
    }
    if (t.empty() || t[0] == '+') t = t.empty() ? t : t.substr(1);
    if (t.empty() || q.set_str(t, 10) != 0 || q.get_den() == 0) {
        throw Error(ErrorCode::InvalidArgument, "bad rational '" + text + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace modsplit
