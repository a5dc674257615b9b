#include "modsplit/sampling.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace modsplit {

const char* point_kind_name(PointKind k) {
    switch (k) {
        case PointKind::quadratic: return "quadratic";
        case PointKind::rational: return "rational";
        case PointKind::model_ramification: return "model_ramification";
    }
    return "?";
}

ExactRat SampledPoint::d() const {
    ExactInt nd;
    mpz_ui_pow_ui(nd.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(form_degree));
    ExactRat out(F, nd);
    out.canonicalize();
    return out;
}

namespace {

// Squarefree part of F = prod F_i, factoring the (smaller) factor values separately.
void decompose(const std::vector<ExactInt>& parts, SampledPoint& pt) {
    std::map<ExactInt, unsigned long> exps;
    int sign = 1;
    for (const auto& v : parts) {
        if (sgn(v) < 0) sign = -sign;
        for (const auto& pp : factorize(v)) exps[pp.prime] += pp.exponent;
    }
    ExactInt D = sign, s = 1;
    for (const auto& [p, e] : exps) {
        if (e % 2) {
            D *= p;
            pt.D_primes.push_back(p);
        }
        ExactInt pw;
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), e / 2);
        s *= pw;
    }
    pt.D = D;
    pt.s = s;
}

}  // namespace

SampledPoint sample_point(const CurveModel& curve, long m, long n) {
    if (n <= 0 || std::gcd(m, n) != 1) throw Error(ErrorCode::InvalidArgument, "need n > 0 and gcd(m, n) = 1");
    SampledPoint pt;
    pt.N = curve.N;
    pt.m = m;
    pt.n = n;
    pt.form_degree = curve.degree();
    const ExactInt M = m, Nn = n;
    std::vector<ExactInt> parts;
    ExactInt F = 1;
    for (const auto& g : curve.factors_Z) {
        parts.push_back(eval_homogeneous(g, M, Nn, g.degree()));
        F *= parts.back();
    }
    pt.F = F;
    if (F == 0) {
        pt.kind = PointKind::model_ramification;
        pt.D = 0;
        pt.s = 0;
        return pt;
    }
    decompose(parts, pt);
    pt.kind = pt.D == 1 ? PointKind::rational : PointKind::quadratic;
    return pt;
}

std::vector<SampledPoint> sample_points(const CurveModel& curve, long H, unsigned jobs) {
    if (H < 1) throw Error(ErrorCode::InvalidArgument, "height must be at least 1");
    std::vector<std::pair<long, long>> pairs;
    for (long h = 0; h <= H; ++h) {
        // height exactly h: max(|m|, n) = h, ordered by m then n
        for (long m = -h; m <= h; ++m) {
            for (long n = 1; n <= h; ++n) {
                if (std::max(std::labs(m), n) != h) continue;
                if (std::gcd(m, n) != 1) continue;
                pairs.emplace_back(m, n);
            }
        }
    }
    std::vector<SampledPoint> out(pairs.size());
    jobs = std::max(1u, std::min<unsigned>(jobs == 0 ? std::thread::hardware_concurrency() : jobs, 64));
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < pairs.size(); i += jobs) out[i] = sample_point(curve, pairs[i].first, pairs[i].second);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    return out;
}

std::shared_ptr<const std::vector<SampledPoint>> sample_points_cached(int N, long H, unsigned jobs) {
    static std::mutex mu;
    static std::map<std::pair<int, long>, std::shared_ptr<const std::vector<SampledPoint>>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({N, H});
        if (it != cache.end()) return it->second;
    }
    auto pts = std::make_shared<const std::vector<SampledPoint>>(sample_points(get_curve(N), H, jobs));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(std::make_pair(N, H), pts);
    return it->second;
}

}  // namespace modsplit
