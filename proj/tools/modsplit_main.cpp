// modsplit: verification suites, table reproduction and single queries.
//
// Exit codes: 0 success, 1 a check failed, 2 registry or level problem, 64 usage.
// Negative arguments parse as numbers ("split -7 2"); "--" also ends option parsing.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modsplit/cubic.hpp"
#include "modsplit/report.hpp"
#include "modsplit/residue.hpp"
#include "modsplit/sampling.hpp"
#include "modsplit/splitting.hpp"
#include "modsplit/suite.hpp"
#include "modsplit/verifiers.hpp"

using namespace modsplit;

namespace {

constexpr int kExitCheck = 1;
constexpr int kExitRegistry = 2;
constexpr int kExitUsage = 64;

int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::UnsupportedLevel:
        case ErrorCode::RegistryLoad: return kExitRegistry;
        case ErrorCode::InvalidArgument:
        case ErrorCode::NotPrime:
        case ErrorCode::NotOddPrime:
        case ErrorCode::ZeroInput:
        case ErrorCode::CuspParameter:
        case ErrorCode::UnknownTable:
        case ErrorCode::HypothesisViolated:
        case ErrorCode::NoEnumerationSpec: return kExitUsage;
        default: return kExitCheck;
    }
}

std::string set_string(const std::vector<long>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

// Key/value query results share one renderer so every subcommand honours --format.
void emit_record(const std::string& name, const std::vector<std::pair<std::string, std::string>>& kv, OutputFormat f) {
    Table t;
    t.name = name;
    t.header = {"key", "value"};
    for (const auto& [k, v] : kv) t.rows.push_back({k, v});
    if (f == OutputFormat::md) {
        for (const auto& [k, v] : kv) std::cout << k << ": " << v << "\n";
    } else {
        std::cout << render(t, f);
    }
}

struct Globals {
    std::string format = "md";
    unsigned jobs = 0;
};

int cmd_verify_all(const Globals& g, long height, int only_N, const std::string& fault, const std::string& registry_path,
                   bool timings) {
    SuiteOptions opt;
    opt.height = height;
    opt.only_N = only_N;
    opt.jobs = g.jobs;
    opt.fault = fault;
    std::vector<CheckReport> checks;
    if (!registry_path.empty()) {
        // An external registry only feeds the validation checks.
        Registry ext = Registry::load_file(registry_path);
        checks = registry_checks(ext);
    } else {
        checks = run_verify_all(opt);
    }
    const OutputFormat f = parse_format(g.format);
    std::size_t pass = 0, fail = 0, skipped = 0;
    for (const auto& c : checks) {
        if (c.status == CheckStatus::pass) ++pass;
        if (c.status == CheckStatus::fail) ++fail;
        if (c.status == CheckStatus::skipped) ++skipped;
    }
    std::ostringstream summary;
    summary << checks.size() << " checks: " << pass << " pass, " << fail << " fail, " << skipped << " skipped\n";
    if (f == OutputFormat::md) {
        std::cout << render_checks_md(checks, timings) << "\n" << summary.str();
    } else if (f == OutputFormat::csv) {
        std::cout << render_checks_csv(checks, timings);
        std::cerr << summary.str();
    } else {
        std::cout << render_json({}, checks, timings);
        std::cerr << summary.str();
    }
    return fail == 0 ? 0 : kExitCheck;
}

int cmd_table(const Globals& g, const std::string& which) {
    const OutputFormat f = parse_format(g.format);
    std::cout << render(build_table(which, g.jobs), f);
    return 0;
}

int cmd_split(const Globals& g, const std::string& D, const std::string& p) {
    ExactInt d, q;
    if (d.set_str(D, 10) != 0 || q.set_str(p, 10) != 0) throw Error(ErrorCode::InvalidArgument, "split expects two integers");
    emit_record("split", {{"D", d.get_str()}, {"p", q.get_str()}, {"behaviour", behavior_name(classify_prime(d, q))}},
                parse_format(g.format));
    return 0;
}

int cmd_sample(const Globals& g, int N, long H) {
    if (H < 1) throw Error(ErrorCode::InvalidArgument, "height must be positive");
    const auto& c = get_curve(N);
    auto pts = sample_points(c, H, g.jobs == 0 ? 1 : g.jobs);
    Table t;
    t.name = "sample";
    t.header = {"x0", "kind", "D", "s"};
    for (const auto& pt : pts) {
        t.rows.push_back({pt.x0().get_str(), point_kind_name(pt.kind), pt.D.get_str(), pt.s.get_str()});
    }
    std::cout << render(t, parse_format(g.format));
    return 0;
}

int cmd_witness(const Globals& g, int N, const std::string& a, long p, long count) {
    ExactInt av;
    if (av.set_str(a, 10) != 0) throw Error(ErrorCode::InvalidArgument, "radicand must be an integer");
    if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be positive");
    auto w = find_ramification_witnesses(N, av, p, static_cast<std::size_t>(count));
    Table t;
    t.name = "witness";
    t.header = {"u", "D"};
    for (std::size_t i = 0; i < w.D_values.size(); ++i) t.rows.push_back({w.u_values[i].get_str(), w.D_values[i].get_str()});
    const OutputFormat f = parse_format(g.format);
    if (f == OutputFormat::md) std::cout << "x0 = " << w.x0.get_str() << " mod " << p << "\n";
    std::cout << render(t, f);
    return 0;
}

int cmd_reduce(const Globals& g, const std::string& u, long p) {
    ExactRat uv = parse_rational(u);
    auto v = classify_reduction(uv, p);
    std::vector<std::pair<std::string, std::string>> kv = {{"u", uv.get_str()},
                                                           {"p", std::to_string(p)},
                                                           {"reduction", v.to_string()},
                                                           {"branch", branch_name(v.branch)},
                                                           {"k", std::to_string(v.k)},
                                                           {"hypothesis", v.hypothesis_ok ? "ok" : "violated"}};
    emit_record("reduce", kv, parse_format(g.format));
    return 0;
}

int cmd_enumerate(const Globals& g, int N, long p, int ell, const std::string& constraint) {
    if (ell < 1) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    EnumerationSpec spec;
    spec.N = N;
    spec.p = p;
    spec.ell = ell;
    if (constraint == "c3") spec.constraint = {PairConstraint::Kind::congruent, 3};
    else if (constraint == "i3") spec.constraint = {PairConstraint::Kind::incongruent, 3};
    else if (!constraint.empty()) throw Error(ErrorCode::InvalidArgument, "constraint must be c3 or i3");
    auto r = enumerate_classes(spec, g.jobs);
    std::string classes;
    for (const auto& c : r.canonical) classes += (classes.empty() ? "" : "; ") + c.to_string();
    std::vector<long> tried(r.exponents_tried.begin(), r.exponents_tried.end());
    emit_record("enumerate",
                {{"N", std::to_string(N)},
                 {"modulus", std::to_string(r.spec.modulus())},
                 {"exponents", set_string(tried)},
                 {"attained", set_string(r.attained)},
                 {"classes", classes.empty() ? "-" : classes}},
                parse_format(g.format));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime splitting in quadratic fields from hyperelliptic X0(N), and the X1(2,14) reduction types"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
    app.add_option("--jobs", g.jobs, "worker threads, 0 for all cores");

    long height = 200;
    int only_N = -1;
    std::string fault, registry_path;
    bool timings = false;
    auto* va = app.add_subcommand("verify-all", "run every registered check");
    va->add_option("--height", height, "sampling height")->check(CLI::PositiveNumber);
    va->add_option("--n", only_N, "restrict to one level");
    va->add_option("--fault-inject", fault, "corrupt a registry copy (test only)")->check(CLI::IsMember({"registry", "table4"}));
    va->add_option("--registry", registry_path, "validate an external registry file");
    va->add_flag("--timings", timings, "include runtimes; output is then not byte-stable");

    std::string which;
    auto* tb = app.add_subcommand("table", "recompute a table");
    tb->add_option("which", which, "2, 3, 4 or disc")->required();

    std::string D, p_str;
    auto* sp = app.add_subcommand("split", "behaviour of p in Q(sqrt D)");
    sp->add_option("D", D)->required();
    sp->add_option("p", p_str)->required();

    int N = 0;
    long H = 0;
    auto* sa = app.add_subcommand("sample", "rational x0 of height <= H and their fields");
    sa->add_option("N", N)->required();
    sa->add_option("H", H)->required();

    std::string a;
    long p = 0, count = 0;
    auto* wi = app.add_subcommand("witness", "fields in which p ramifies");
    wi->add_option("N", N)->required();
    wi->add_option("a", a)->required();
    wi->add_option("p", p)->required();
    wi->add_option("count", count)->required();

    std::string u;
    auto* re = app.add_subcommand("reduce", "reduction type of E_u at p");
    re->add_option("u", u, "integer or fraction")->required();
    re->add_option("p", p)->required();

    int ell = 0;
    std::string constraint;
    auto* en = app.add_subcommand("enumerate", "values of n^d f(m/n) mod p^l");
    en->add_option("N", N)->required();
    en->add_option("p", p)->required();
    en->add_option("l", ell)->required();
    en->add_option("--constraint", constraint, "c3: m = n mod 3, i3: m != n mod 3");

    for (auto* sub : {va, tb, sp, sa, wi, re, en}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*va) return cmd_verify_all(g, height, only_N, fault, registry_path, timings);
        if (*tb) return cmd_table(g, which);
        if (*sp) return cmd_split(g, D, p_str);
        if (*sa) return cmd_sample(g, N, H);
        if (*wi) return cmd_witness(g, N, a, p, count);
        if (*re) return cmd_reduce(g, u, p);
        if (*en) return cmd_enumerate(g, N, p, ell, constraint);
    } catch (const Error& e) {
        std::cerr << "modsplit: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return kExitUsage;
}
