#include "modsplit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "modsplit/cubic.hpp"
#include "modsplit/verifiers.hpp"

namespace modsplit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

// Runs body and turns library errors into failures with the message as witness.
CheckReport guarded(const std::string& id, const std::function<void(CheckReport&)>& body) {
    auto t0 = Clock::now();
    CheckReport r;
    r.id = id;
    try {
        body(r);
    } catch (const Error& e) {
        r.witnesses.push_back(e.what());
        finish(r, false);
    }
    r.runtime_ms = ms_since(t0);
    return r;
}

std::string slug(const std::string& s) {
    std::string out;
    for (char ch : s) {
        bool alnum = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9');
        if (alnum) {
            out += ch;
        } else if (!out.empty() && out.back() != '_') {
            out += '_';
        }
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

std::string join_longs(const std::vector<long>& v) {
    std::string s;
    for (long x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

std::string show(const ExactRat& q) {
    if (q.get_den() == 1) return format_factored(q.get_num());
    return format_factored(q.get_num()) + "/" + format_factored(q.get_den());
}

// Levels whose Table 2 row relies on the reciprocity chain: a claimed prime with no enumeration.
bool uses_chain(const CurveModel& c) {
    std::set<long> enumerated;
    for (const auto& s : c.enumeration_specs) enumerated.insert(s.p);
    for (const auto& [p, claims] : c.expected) {
        if (!enumerated.count(p)) return true;
    }
    return false;
}

}  // namespace

Registry faulted_registry(const std::string& target) {
    Registry reg = Registry::builtin();
    if (target == "registry") {
        // One coefficient of f_22 off by one; the factor product no longer matches.
        auto& c = reg.mutable_curve(22);
        auto co = c.f.coeffs();
        co[0] += 1;
        c.f = IntPoly(co);
    } else if (target == "table4") {
        auto& c = reg.mutable_curve(23);
        c.unramified_primes_le_100.pop_back();
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown fault target '" + target + "'");
    }
    return reg;
}

std::vector<CheckReport> registry_checks(const Registry& reg) {
    std::vector<CheckReport> out;
    auto t0 = Clock::now();
    for (const auto& e : validate_registry(reg)) {
        CheckReport r;
        std::string op = "validate_registry";
        if (e.entry.rfind("curve.", 0) == 0) {
            r.id = check_id("curvedb", op, std::stol(e.entry.substr(6)));
        } else {
            r.id = check_id("curvedb", op + "_" + slug(e.entry));
        }
        r.detail = std::to_string(e.passed.size()) + " field checks passed";
        for (const auto& f : e.failures) r.witnesses.push_back("failed: " + f);
        finish(r, e.pass);
        out.push_back(std::move(r));
    }
    double each = out.empty() ? 0 : ms_since(t0) / static_cast<double>(out.size());
    for (auto& r : out) r.runtime_ms = each;
    return out;
}

std::vector<CheckReport> identity_checks(int only_N) {
    auto t0 = Clock::now();
    std::map<int, CheckReport> by_level;
    for (const auto& id : registered_identities()) {
        if (only_N >= 0 && id.N != only_N) continue;
        auto res = check_identity(id);
        auto& r = by_level[id.N];
        if (r.id.empty()) {
            r.id = check_id("verifiers", "check_identities", id.N);
            r.status = CheckStatus::pass;
        }
        if (res.holds != res.expected) {
            r.witnesses.push_back(res.name + (res.holds ? " holds but is recorded as a misprint" : " fails: lhs - rhs = " + res.difference));
            r.status = CheckStatus::fail;
        }
        r.detail += (r.detail.empty() ? "" : ", ") + res.name + (res.holds ? " holds" : " misprint confirmed");
    }
    std::vector<CheckReport> out;
    for (auto& [N, r] : by_level) {
        r.runtime_ms = ms_since(t0) / static_cast<double>(by_level.size());
        out.push_back(std::move(r));
    }
    return out;
}

CheckReport table4_check(int N, const Registry& expected, unsigned jobs) {
    return guarded(check_id("verifiers", "table4_unramified", N), [&](CheckReport& r) {
        auto got = table4_unramified(N, jobs);
        const auto& want = expected.curve(N).unramified_primes_le_100;
        r.detail = "computed " + join_longs(got);
        if (got != want) {
            std::vector<long> extra, missing;
            std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
            std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
            if (!extra.empty()) r.witnesses.push_back("computed but not listed: " + join_longs(extra));
            if (!missing.empty()) r.witnesses.push_back("listed but not computed: " + join_longs(missing));
        }
        finish(r, got == want);
    });
}

CheckReport thm2_1b_check(int N) {
    return guarded(check_id("verifiers", "check_thm2_1b", N), [&](CheckReport& r) {
        bool ok = true;
        for (const auto& t : check_thm2_1b(N)) {
            r.detail += (r.detail.empty() ? "" : "; ") + std::string("a = ") + t.a.get_str() + ": primes " +
                        (t.primes_checked.empty() ? "none" : join_longs(t.primes_checked)) + (t.skipped_two ? ", 2 skipped" : "");
            if (!t.pass()) {
                ok = false;
                for (const auto& l : t.lines) r.witnesses.push_back("a = " + t.a.get_str() + ": " + l);
            }
        }
        finish(r, ok);
    });
}

std::vector<CheckReport> witness_checks(int N, std::size_t count) {
    std::vector<CheckReport> out;
    const auto& c = get_curve(N);
    if (!c.witness_radicand) return out;
    const ExactInt a = *c.witness_radicand;
    int found = 0;
    for (long p = 3; found < 3; p += 2) {
        if (!is_prime_u64(static_cast<std::uint64_t>(p)) || legendre(a, p) != 1) continue;
        ++found;
        out.push_back(guarded(check_id("verifiers", "find_ramification_witnesses", N, p), [&](CheckReport& r) {
            auto w = find_ramification_witnesses(N, a, p, count);
            std::set<ExactInt> distinct;
            bool ok = true;
            for (const auto& D : w.D_values) {
                distinct.insert(D);
                if (squarefree_part(ExactRat(D)).D != D || valuation_unchecked(D, p) != 1) {
                    ok = false;
                    r.witnesses.push_back("D = " + D.get_str());
                }
            }
            ok = ok && distinct.size() >= count;
            std::string ds;
            for (std::size_t i = 0; i < w.D_values.size(); ++i) ds += (i ? " " : "") + w.D_values[i].get_str();
            r.detail = "a = " + a.get_str() + ", x0 = " + w.x0.get_str() + ", D = " + ds;
            finish(r, ok);
        }));
    }
    return out;
}

std::vector<CheckReport> resultant_checks() {
    auto t0 = Clock::now();
    auto ids = verify_resultant_identities();
    std::vector<CheckReport> out;
    // Alternative readings of a claim: same stated value, and for the unit claims the same name stem.
    auto related = [](const ResultantIdentity& lit, const ResultantIdentity& other) {
        if (other.literal || other.claimed != lit.claimed) return false;
        return lit.claimed != "1" || other.name.rfind(lit.name, 0) == 0;
    };
    for (const auto& lit : ids) {
        if (!lit.literal) continue;
        CheckReport r;
        r.id = check_id("cubic", "resultant_" + slug(lit.name));
        r.detail = "claimed " + lit.claimed + ", computed " + show(lit.computed) + " (" + lit.note + ")";
        for (const auto& other : ids) {
            if (!related(lit, other)) continue;
            r.detail += "; reading " + other.name + ": " + show(other.computed) + (other.match ? " matches" : "");
        }
        if (lit.claimed == "7^30") {
            // No reading of the printed data gives this value; the outcome is recorded, not asserted.
            r.status = CheckStatus::skipped;
            r.witnesses.push_back("no reading reproduces 7^30 exactly, see detail");
        } else {
            if (!lit.match) r.witnesses.push_back(lit.name + " = " + show(lit.computed) + ", claimed " + lit.claimed);
            finish(r, lit.match);
        }
        out.push_back(std::move(r));
    }
    for (auto& r : out) r.runtime_ms = ms_since(t0) / static_cast<double>(out.size());
    return out;
}

CheckReport mod2_check() {
    return guarded(check_id("cubic", "verify_mod2_structure", -1, 2), [&](CheckReport& r) {
        auto m = verify_mod2_structure();
        std::string fs;
        for (const auto& f : m.factors) fs += "(" + f.to_string() + ")";
        r.detail = "f = " + fs + " mod 2, " + std::to_string(m.f2_solutions.size()) + " points over P1(F2) x P1(F2)" +
                   (m.printed_product_matches ? "" : "; the printed factor list does not multiply back to f");
        if (!m.product_matches) r.witnesses.push_back("factor product differs from f mod 2");
        if (!m.swap_closed) r.witnesses.push_back("solution set not closed under u <-> v");
        if (!m.f4_closed) r.witnesses.push_back("an F4 point has one F2 coordinate only");
        if (!m.closure_closed) r.witnesses.push_back("a fibre over P1(F2) leaves P1(F2)");
        finish(r, m.pass());
    });
}

CheckReport classifier_coherence_check(std::size_t cases, unsigned seed) {
    return guarded(check_id("cubic", "classify_reduction"), [&](CheckReport& r) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<long> num(-60, 60), den(1, 60);
        const auto primes = primes_up_to(60);
        std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
        std::size_t done = 0, multiplicative = 0, at_two = 0;
        while (done < cases) {
            ExactRat u(num(rng), den(rng));
            u.canonicalize();
            if (u == 0 || u == -1) continue;
            long p = done % 4 == 0 ? 2 : primes[pick(rng)];
            ++done;
            auto a = classify_reduction(u, p);
            auto b = classify_by_j(u, p);
            if (a.multiplicative != b.multiplicative || (a.multiplicative && a.n != b.n)) {
                r.witnesses.push_back("u = " + u.get_str() + ", p = " + std::to_string(p) + ": " + a.to_string() + " vs " + b.to_string());
            }
            if (a.multiplicative) ++multiplicative;
            if (p == 2) {
                ++at_two;
                if (!a.multiplicative || a.n % 14 != 0) {
                    r.witnesses.push_back("u = " + u.get_str() + " at 2: " + a.to_string());
                }
            }
        }
        r.detail = std::to_string(done) + " cases, " + std::to_string(multiplicative) + " multiplicative, " + std::to_string(at_two) + " at p = 2";
        finish(r, r.witnesses.empty());
    });
}

std::vector<CheckReport> run_verify_all(const SuiteOptions& opt) {
    const Registry& builtin = Registry::builtin();
    if (opt.only_N >= 0) builtin.curve(opt.only_N);  // UnsupportedLevel
    Registry expected = opt.fault.empty() ? builtin : faulted_registry(opt.fault);
    std::vector<CheckReport> out;
    auto add = [&](CheckReport r) { out.push_back(std::move(r)); };
    auto add_all = [&](std::vector<CheckReport> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };

    for (auto& r : registry_checks(expected)) {
        if (opt.only_N < 0 || r.id == check_id("curvedb", "validate_registry", opt.only_N)) add(std::move(r));
    }
    add_all(identity_checks(opt.only_N));
    for (int N : builtin.levels()) {
        if (opt.only_N >= 0 && N != opt.only_N) continue;
        const auto& c = builtin.curve(N);
        add(table4_check(N, expected, opt.jobs));
        if (c.has_table2()) {
            add(guarded(check_id("verifiers", "derive_table2", N), [&](CheckReport& r) { r = check_table2_derivation(N, opt.jobs); }));
            add(guarded(check_id("verifiers", "check_table2", N), [&](CheckReport& r) { r = check_table2_report(N, opt.height, opt.jobs); }));
        }
        if (!c.quoted.empty()) {
            add(guarded(check_id("verifiers", "check_quoted", N), [&](CheckReport& r) { r = check_quoted(N, opt.jobs); }));
        }
        if (!c.table3_radicands.empty()) add(thm2_1b_check(N));
        add_all(witness_checks(N));
        if (uses_chain(c)) {
            add(guarded(check_id("verifiers", "check_reciprocity_chain", N), [&](CheckReport& r) {
                r = check_reciprocity_chain(N, opt.height, opt.jobs);
            }));
        }
    }
    if (opt.only_N < 0) {
        add_all(resultant_checks());
        add(mod2_check());
        add(classifier_coherence_check());
    }
    std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
    return out;
}

}  // namespace modsplit
