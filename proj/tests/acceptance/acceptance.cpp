// One PASS/FAIL line per acceptance criterion.  Exit status is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "modsplit/cubic.hpp"
#include "modsplit/residue.hpp"
#include "modsplit/splitting.hpp"
#include "modsplit/suite.hpp"
#include "modsplit/verifiers.hpp"

using namespace modsplit;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void fail(const std::string& why) {
        pass = false;
        note << (note.tellp() > 0 ? "; " : "") << why;
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failed = 0;

void criterion(int k, const char* what, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("threw: ") + e.what());
    }
    double s = seconds_since(t0);
    if (!o.pass) ++failed;
    std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", k, o.pass ? "PASS" : "FAIL", what, s, o.note.tellp() > 0 ? "  -- " : "",
                o.note.str().c_str());
    std::fflush(stdout);
}

const Registry& reg() { return Registry::builtin(); }

void table4(Outcome& o) {
    auto t0 = Clock::now();
    int rows = 0;
    for (int N : reg().levels()) {
        ++rows;
        if (table4_unramified(N) != reg().curve(N).unramified_primes_le_100) o.fail("row " + std::to_string(N) + " differs");
    }
    if (rows != 18) o.fail(std::to_string(rows) + " levels, expected 18");
    if (seconds_since(t0) >= 5) o.fail("slower than 5 s");
}

void enumerations(Outcome& o) {
    int quotes = 0;
    std::vector<std::string> loose;
    for (int N : reg().levels()) {
        const auto& c = reg().curve(N);
        if (c.quoted.empty()) continue;
        auto t0 = Clock::now();
        for (const auto& q : compare_quotes(N)) {
            ++quotes;
            if (!q.covered) o.fail(std::to_string(N) + " " + q.key + ": attained residues outside the quoted classes");
            if (!q.tight) loose.push_back(std::to_string(N) + " " + q.key);
        }
        if (seconds_since(t0) >= 2) o.fail(std::to_string(N) + " slower than 2 s");
    }
    // Level 41 carries no enumeration of its own; the reciprocity chain stands in for it.
    if (!reg().curve(41).quoted.empty() || reg().curve(41).notes.empty()) o.fail("41 should be registry-noted only");
    o.note << quotes << " quoted enumerations covered";
    if (!loose.empty()) {
        o.note << ", quote wider than the attained set at";
        for (const auto& l : loose) o.note << " [" << l << "]";
    }
}

void table2_deduction(Outcome& o) {
    std::vector<std::string> chained;
    for (int N : reg().levels()) {
        const auto& c = reg().curve(N);
        if (!c.has_table2()) continue;
        auto r = check_table2_derivation(N);
        if (!r.ok()) o.fail(r.id + ": " + r.detail);
    }
    if (derive_table2(22).D_mod8 != std::set<long>{1, 2, 6}) o.fail("N=22 D mod 8");
    for (int N : {30, 35}) {
        if (derive_table2(N).D_mod5 != std::set<long>{0, 1}) o.fail("N=" + std::to_string(N) + " D mod 5");
    }
    for (int N : reg().levels()) {
        const auto& c = reg().curve(N);
        std::set<long> enumerated;
        for (const auto& s : c.enumeration_specs) enumerated.insert(s.p);
        bool chain = false;
        for (const auto& [p, claims] : c.expected) chain |= !enumerated.count(p);
        if (!chain) continue;
        auto r = check_reciprocity_chain(N, 200);
        if (!r.ok()) o.fail(r.id + ": " + r.detail);
        chained.push_back(std::to_string(N));
    }
    if (!chained.empty()) {
        o.note << "reciprocity chain at";
        for (const auto& n : chained) o.note << " " << n;
    }
}

void discriminants(Outcome& o) {
    int discs = 0, expansions = 0;
    for (int N : reg().levels()) {
        const auto& c = reg().curve(N);
        for (std::size_t i = 0; i < c.published_discriminants.size() && i < c.factors_Z.size(); ++i, ++discs) {
            if (discriminant(c.factors_Z[i]) != c.published_discriminants[i]) o.fail("disc of factor " + std::to_string(i) + " at " + std::to_string(N));
        }
        if (c.quad_factorizations.empty()) continue;
        std::set<ExactInt> seen;
        for (const auto& t : check_thm2_1b(N)) {
            seen.insert(t.a);
            ++expansions;
            if (!t.expansion_ok) o.fail("Q(sqrt " + t.a.get_str() + ") factorization at " + std::to_string(N));
        }
        for (const auto& q : c.quad_factorizations) {
            if (!seen.count(q.radicand)) o.fail("factorization over radicand " + q.radicand.get_str() + " at " + std::to_string(N) + " unchecked");
        }
    }
    if (discriminant(get_curve(26).factors_Z[0]) != ExactInt("1048576") * 2197) o.fail("f_26 discriminant is not 2^20*13^3");
    o.note << discs << " discriminants, " << expansions << " factorizations";
}

void witnesses(Outcome& o) {
    for (auto [N, a] : std::vector<std::pair<int, long>>{{28, -7}, {30, 5}, {33, -11}, {35, 5}}) {
        int found = 0;
        for (long p = 3; found < 3; p += 2) {
            if (!is_prime_u64(static_cast<std::uint64_t>(p)) || legendre(a, p) != 1) continue;
            ++found;
            auto t0 = Clock::now();
            auto w = find_ramification_witnesses(N, a, p, 5);
            std::set<ExactInt> distinct(w.D_values.begin(), w.D_values.end());
            bool ok = distinct.size() >= 5;
            for (const auto& D : w.D_values) {
                auto v = valuation(ExactRat(D), p);
                ok = ok && v.value == 1 && squarefree_part(ExactRat(D)).D == D;
            }
            std::string tag = "(" + std::to_string(N) + "," + std::to_string(a) + "," + std::to_string(p) + ")";
            if (!ok) o.fail(tag);
            if (seconds_since(t0) >= 10) o.fail(tag + " slower than 10 s");
        }
    }
}

void sampling(Outcome& o) {
    for (int N : reg().levels()) {
        if (!reg().curve(N).has_table2()) continue;
        auto t0 = Clock::now();
        auto r = check_table2_report(N, 200);
        if (!r.ok()) o.fail(r.id + ": " + (r.witnesses.empty() ? r.detail : r.witnesses.front()));
        if (seconds_since(t0) >= 10) o.fail(std::to_string(N) + " slower than 10 s");
    }
}

void resultants(Outcome& o) {
    for (const auto& r : resultant_checks()) {
        if (r.status == CheckStatus::fail) o.fail(r.id + " " + r.detail);
        if (r.status == CheckStatus::skipped) o.note << (o.note.tellp() > 0 ? "; " : "") << "recorded " << r.id << " " << r.detail;
    }
}

void classifier(Outcome& o) {
    auto r = classifier_coherence_check(200);
    if (!r.ok()) o.fail(r.detail);
    else o.note << r.detail;
}

void properties(Outcome& o) {
    constexpr int kCases = 1000;
    std::mt19937_64 rng(271828);
    auto range = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    const auto primes = primes_up_to(1000);
    auto prime = [&] { return primes[static_cast<std::size_t>(range(1, static_cast<long>(primes.size()) - 1))]; };
    auto poly = [&] {
        std::vector<ExactInt> c(static_cast<std::size_t>(range(2, 6)));
        for (auto& x : c) x = range(-9, 9);
        c.back() = range(1, 9);
        return IntPoly(c);
    };
    int bad = 0;
    for (int i = 0; i < kCases; ++i) {
        long p = prime();
        ExactInt a = range(-1000000, 1000000), b = range(-1000000, 1000000);
        if (legendre(a * b, p) != legendre(a, p) * legendre(b, p)) ++bad;
    }
    if (bad) o.fail(std::to_string(bad) + " symbol multiplicativity");
    bad = 0;
    for (int i = 0; i < kCases; ++i) {
        IntPoly f = poly(), g = poly(), h = poly();
        if (resultant(f, g * h) != resultant(f, g) * resultant(f, h)) ++bad;
    }
    if (bad) o.fail(std::to_string(bad) + " resultant multiplicativity");
    bad = 0;
    const auto& c30 = get_curve(30);
    for (int i = 0; i < kCases; ++i) {
        const long M = 128;
        long m = range(-500, 500), n = range(1, 500), k = range(-20, 20), j = range(-20, 20);
        if (mod_long(eval_homogeneous(c30.f, m, n), M) != mod_long(eval_homogeneous(c30.f, m + k * M, n + j * M), M)) ++bad;
    }
    if (bad) o.fail(std::to_string(bad) + " homogeneity");
    bad = 0;
    const auto levels = reg().levels();
    for (int i = 0; i < kCases; ++i) {
        const auto& c = reg().curve(levels[static_cast<std::size_t>(range(0, static_cast<long>(levels.size()) - 1))]);
        long p = std::array<long, 4>{2, 3, 5, 7}[static_cast<std::size_t>(range(0, 3))];
        int ell = p == 2 ? static_cast<int>(range(1, 4)) : 1;
        auto x = enumerate_form(c.f, c.degree(), p, ell, {}, 1);
        auto y = enumerate_form(c.f, c.degree(), p, ell, {}, static_cast<unsigned>(range(2, 5)));
        if (x.attained != y.attained || x.canonical != y.canonical) ++bad;
    }
    if (bad) o.fail(std::to_string(bad) + " partition determinism");
    bad = 0;
    for (int i = 0; i < kCases; ++i) {
        long p = prime();
        ExactInt D = squarefree_part(ExactRat(ExactInt(range(-1000000, 1000000)) + 0)).D;
        if (D == 0 || D == 1 || mod_long(D, p) == 0) {
            --i;
            continue;
        }
        long d = mod_long(D, p), roots = 0;
        for (long x = 0; x < p; ++x) roots += (x * x - d) % p == 0;
        if (classify_prime(D, p) != (roots == 2 ? SplitBehavior::split : SplitBehavior::inert)) ++bad;
    }
    if (bad) o.fail(std::to_string(bad) + " classify_prime vs root count");
    o.note << "5 properties x " << kCases << " cases, seed 271828";
}

}  // namespace

int main() {
    criterion(1, "Table 4 unramified primes, 18 levels", table4);
    criterion(2, "quoted residue enumerations", enumerations);
    criterion(3, "Table 2 deduction with footnotes and reciprocity chain", table2_deduction);
    criterion(4, "factor discriminants and quadratic factorizations", discriminants);
    criterion(5, "ramification witnesses", witnesses);
    criterion(6, "sampling soundness at height 200", sampling);
    criterion(7, "resultant identities of the cubic family", resultants);
    criterion(8, "reduction classifier coherence", classifier);
    criterion(9, "property suites", properties);
    std::printf("%d of 9 criteria failed\n", failed);
    return failed;
}
