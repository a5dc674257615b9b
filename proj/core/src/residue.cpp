#include "modsplit/residue.hpp"

#include <algorithm>
#include <thread>

namespace modsplit {

namespace {

unsigned resolve_jobs(unsigned jobs) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    return jobs;
}

long power(long p, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

}  // namespace

ResidueClassSet enumerate_form(const IntPoly& f, int form_degree, long p, int ell, const PairConstraint& constraint,
                               unsigned jobs) {
    if (!is_prime_u64(static_cast<std::uint64_t>(p))) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (ell < 1) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
    if (f.degree() > form_degree) throw Error(ErrorCode::InvalidArgument, "form degree below polynomial degree");
    const long M = power(p, ell);
    if (M > kMaxEnumerationModulus) {
        throw Error(ErrorCode::EscalationExceeded, "modulus " + std::to_string(M) + " exceeds " + std::to_string(kMaxEnumerationModulus));
    }
    if (constraint.kind != PairConstraint::Kind::none && (constraint.q <= 0 || M % constraint.q != 0)) {
        throw Error(ErrorCode::InvalidArgument, "constraint modulus must divide p^ell");
    }
    const int d = form_degree;
    std::vector<long> a(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) a[static_cast<std::size_t>(i)] = mod_long(f.coeff(static_cast<std::size_t>(i)), M);

    jobs = std::min<unsigned>(resolve_jobs(jobs), static_cast<unsigned>(M));
    std::vector<std::vector<char>> hits(jobs, std::vector<char>(static_cast<std::size_t>(M), 0));
    auto work = [&](unsigned w) {
        auto& hit = hits[w];
        std::vector<long> npow(static_cast<std::size_t>(d + 1));
        // Worker w takes n = w, w + jobs, ...; any partition gives the same union.
        for (long n = w; n < M; n += jobs) {
            npow[0] = 1;
            for (int k = 1; k <= d; ++k) npow[static_cast<std::size_t>(k)] = npow[static_cast<std::size_t>(k - 1)] * n % M;
            const bool n_div = n % p == 0;
            for (long m = 0; m < M; ++m) {
                if (n_div && m % p == 0) continue;
                if (!constraint.admits(m, n)) continue;
                long acc = 0;
                for (int i = d; i >= 0; --i) {
                    acc = (acc * m + a[static_cast<std::size_t>(i)] * npow[static_cast<std::size_t>(d - i)]) % M;
                }
                hit[static_cast<std::size_t>(acc)] = 1;
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    ResidueClassSet out;
    out.spec.p = p;
    out.spec.ell = ell;
    out.spec.constraint = constraint;
    out.exponents_tried.push_back(ell);
    for (long v = 0; v < M; ++v) {
        bool any = false;
        for (const auto& h : hits) any = any || h[static_cast<std::size_t>(v)];
        if (!any) continue;
        out.attained.push_back(v);
        if (v == 0) {
            out.saturated_zero = true;
        } else {
            out.canonical.insert(*canonicalize(v, p, ell));
        }
    }
    return out;
}

ResidueClassSet enumerate_classes(const EnumerationSpec& spec, unsigned jobs, const Registry& reg) {
    const CurveModel& cm = reg.curve(spec.N);
    const int limit = spec.escalation_limit > 0 ? spec.escalation_limit : spec.ell + 8;
    std::vector<int> tried;
    int ell = spec.ell;
    while (true) {
        if (power(spec.p, ell) > kMaxEnumerationModulus) {
            throw Error(ErrorCode::EscalationExceeded, "N=" + std::to_string(spec.N) + " p=" + std::to_string(spec.p) +
                                                           ": 0 still attained below the modulus cap");
        }
        ResidueClassSet r = enumerate_form(cm.f, cm.degree(), spec.p, ell, spec.constraint, jobs);
        tried.push_back(ell);
        if (!r.saturated_zero) {
            r.spec = spec;
            r.spec.ell = ell;
            r.exponents_tried = tried;
            return r;
        }
        ell += spec.p == 2 ? 1 : 2;
        if (ell > limit) {
            throw Error(ErrorCode::EscalationExceeded, "N=" + std::to_string(spec.N) + " p=" + std::to_string(spec.p) +
                                                           ": 0 still attained at exponent limit " + std::to_string(limit));
        }
    }
}

Deduction run_paper_deduction(int N, long p, unsigned jobs, const Registry& reg) {
    const CurveModel& cm = reg.curve(N);
    Deduction out;
    out.N = N;
    out.p = p;
    std::vector<CanonicalClass> all;
    for (const auto& spec : cm.enumeration_specs) {
        if (spec.p != p) continue;
        out.runs.push_back(enumerate_classes(spec, jobs, reg));
        all.insert(all.end(), out.runs.back().canonical.begin(), out.runs.back().canonical.end());
    }
    if (out.runs.empty()) {
        throw Error(ErrorCode::NoEnumerationSpec, "no enumeration stored for N=" + std::to_string(N) + ", p=" + std::to_string(p));
    }
    out.D = deduce_D_constraints(all);
    out.D.p = p;
    out.D.modulus = p == 2 ? 8 : p;
    out.verdict = summarize_behaviour(out.D);
    return out;
}

}  // namespace modsplit
