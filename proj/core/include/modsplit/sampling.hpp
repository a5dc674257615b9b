#pragma once

#include <memory>
#include <vector>

#include "modsplit/curvedb.hpp"

namespace modsplit {

enum class PointKind { quadratic, rational, model_ramification };
const char* point_kind_name(PointKind k);

// x0 = m/n in lowest terms, F = n^deg f(m/n) = D s^2.
struct SampledPoint {
    int N = 0;
    long m = 0;
    long n = 1;
    int form_degree = 0;
    ExactInt F;
    PointKind kind = PointKind::quadratic;
    ExactInt D;  // squarefree part of F (0 for model ramification)
    ExactInt s;  // s >= 0 with F = D s^2
    std::vector<ExactInt> D_primes;  // prime divisors of |D|, increasing

    ExactRat x0() const { return ExactRat(m, n); }
    ExactRat d() const;  // f(x0)
};

// All x0 = m/n with |m| <= H, 1 <= n <= H, gcd(m, n) = 1, ordered by max(|m|, n), then m, then n.
std::vector<SampledPoint> sample_points(const CurveModel& curve, long H, unsigned jobs = 1);
// Cached per (N, H) for the builtin registry; safe to call concurrently.
std::shared_ptr<const std::vector<SampledPoint>> sample_points_cached(int N, long H, unsigned jobs = 1);

// One point, classified.
SampledPoint sample_point(const CurveModel& curve, long m, long n);

}  // namespace modsplit
