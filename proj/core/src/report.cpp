#include "modsplit/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "modsplit/curvedb.hpp"
#include "modsplit/verifiers.hpp"

namespace modsplit {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

std::string check_id(const std::string& module, const std::string& op, long N, long p) {
    return module + "." + op + "." + (N < 0 ? "-" : std::to_string(N)) + "." + (p < 0 ? "-" : std::to_string(p));
}

void finish(CheckReport& r, bool pass) {
    r.status = pass ? CheckStatus::pass : CheckStatus::fail;
    if (!pass && r.witnesses.empty()) r.witnesses.push_back(r.detail.empty() ? "unspecified" : r.detail);
}

OutputFormat parse_format(const std::string& s) {
    if (s == "md") return OutputFormat::md;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + s + "'");
}

const char* format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::md: return "md";
        case OutputFormat::csv: return "csv";
        case OutputFormat::json: return "json";
    }
    return "?";
}

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string join_longs(const std::vector<long>& v, const std::string& sep) {
    std::vector<std::string> s;
    for (long x : v) s.push_back(std::to_string(x));
    return join(s, sep);
}

std::string set_string(const std::set<long>& s) {
    return "{" + join_longs(std::vector<long>(s.begin(), s.end()), ",") + "}";
}

std::string ms_string(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", ms);
    return buf;
}

}  // namespace

Table table2(unsigned jobs) {
    Table t;
    t.name = "2";
    t.title = "Behaviour of small primes in Q(sqrt D) for non-exceptional quadratic points";
    t.header = {"N", "p", "verdict"};
    const auto& reg = Registry::builtin();
    for (int N : reg.levels()) {
        if (!reg.curve(N).has_table2()) continue;
        auto d = derive_table2(N, jobs);
        for (const auto& [p, facts] : d.facts) {
            for (auto e : facts) t.rows.push_back({std::to_string(N), std::to_string(p), expectation_name(e)});
        }
        if (d.D.positive) t.rows.push_back({std::to_string(N), "-", "D>0"});
        if (d.D.odd) t.rows.push_back({std::to_string(N), "-", "D odd"});
        if (d.D.mod8_126) t.rows.push_back({std::to_string(N), "-", "D mod 8 in " + set_string(d.D_mod8)});
        if (d.D.mod5_01) t.rows.push_back({std::to_string(N), "-", "D mod 5 in " + set_string(d.D_mod5)});
    }
    return t;
}

Table table3() {
    Table t;
    t.name = "3";
    t.title = "Radicands a with p ramified only if (a/p) != -1";
    t.header = {"N", "a", "expands", "discriminants", "primes", "status"};
    const auto& reg = Registry::builtin();
    for (int N : reg.levels()) {
        if (reg.curve(N).table3_radicands.empty()) continue;
        for (const auto& tr : check_thm2_1b(N)) {
            std::string primes = join_longs(tr.primes_checked, " ");
            if (tr.skipped_two) primes = primes.empty() ? "2 skipped" : "2 skipped, " + primes;
            t.rows.push_back({std::to_string(N), tr.a.get_str(), tr.expansion_ok ? "yes" : "no",
                              tr.discriminants_ok ? "match" : "differ", primes.empty() ? "-" : primes,
                              tr.pass() ? "pass" : "fail"});
        }
    }
    return t;
}

Table table4(unsigned jobs) {
    Table t;
    t.name = "4";
    t.title = "Primes up to 100 that do not ramify";
    t.header = {"N", "primes"};
    for (int N : Registry::builtin().levels()) t.rows.push_back({std::to_string(N), join_longs(table4_unramified(N, jobs), " ")});
    return t;
}

Table table_disc() {
    Table t;
    t.name = "disc";
    t.title = "Discriminants of the irreducible factors of f_N";
    t.header = {"N", "factor", "discriminant", "printed", "match"};
    const auto& reg = Registry::builtin();
    for (int N : reg.levels()) {
        const auto& c = reg.curve(N);
        if (c.published_discriminants.empty()) continue;
        for (std::size_t i = 0; i < c.factors_Z.size(); ++i) {
            ExactInt d = discriminant(c.factors_Z[i]);
            bool printed = i < c.published_discriminants.size();
            t.rows.push_back({std::to_string(N), c.factors_Z[i].to_string(), format_factored(d),
                              printed ? format_factored(c.published_discriminants[i]) : "-",
                              printed ? (d == c.published_discriminants[i] ? "yes" : "no") : "-"});
        }
    }
    return t;
}

Table build_table(const std::string& which, unsigned jobs) {
    if (which == "2") return table2(jobs);
    if (which == "3") return table3();
    if (which == "4") return table4(jobs);
    if (which == "disc") return table_disc();
    throw Error(ErrorCode::UnknownTable, "no table named '" + which + "'");
}

std::string render_md(const Table& t) {
    std::ostringstream os;
    os << "| " << join(t.header, " | ") << " |\n|";
    for (std::size_t i = 0; i < t.header.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& r : t.rows) os << "| " << join(r, " | ") << " |\n";
    return os.str();
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::vector<std::string> q;
    for (const auto& c : cells) q.push_back(csv_cell(c));
    return join(q, ",") + "\n";
}

std::vector<std::string> check_row(const CheckReport& c, bool with_timing) {
    std::vector<std::string> row = {c.id, status_name(c.status), c.detail, join(c.witnesses, "; ")};
    if (with_timing) row.push_back(ms_string(c.runtime_ms));
    return row;
}

std::vector<std::string> check_header(bool with_timing) {
    std::vector<std::string> h = {"id", "status", "detail", "witnesses"};
    if (with_timing) h.push_back("runtime_ms");
    return h;
}

}  // namespace

std::string render_csv(const Table& t) {
    std::string s = csv_line(t.header);
    for (const auto& r : t.rows) s += csv_line(r);
    return s;
}

std::string render_json(const std::vector<Table>& tables, const std::vector<CheckReport>& checks, bool with_timing) {
    nlohmann::ordered_json root;
    root["paper_tables"] = nlohmann::ordered_json::object();
    for (const auto& t : tables) {
        nlohmann::ordered_json jt;
        jt["title"] = t.title;
        jt["header"] = t.header;
        jt["rows"] = t.rows;
        root["paper_tables"][t.name] = jt;
    }
    root["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["status"] = status_name(c.status);
        jc["witnesses"] = c.witnesses;
        jc["detail"] = c.detail;
        if (with_timing) jc["runtime_ms"] = ms_string(c.runtime_ms);
        root["checks"].push_back(jc);
    }
    root["meta"] = {{"version", kVersion}, {"seed_free", true}};
    return root.dump(2) + "\n";
}

std::string render_checks_md(const std::vector<CheckReport>& checks, bool with_timing) {
    Table t;
    t.header = check_header(with_timing);
    for (const auto& c : checks) t.rows.push_back(check_row(c, with_timing));
    return render_md(t);
}

std::string render_checks_csv(const std::vector<CheckReport>& checks, bool with_timing) {
    Table t;
    t.header = check_header(with_timing);
    for (const auto& c : checks) t.rows.push_back(check_row(c, with_timing));
    return render_csv(t);
}

std::string render(const Table& t, OutputFormat f) {
    switch (f) {
        case OutputFormat::md: return render_md(t);
        case OutputFormat::csv: return render_csv(t);
        case OutputFormat::json: return render_json({t}, {});
    }
    return {};
}

}  // namespace modsplit
