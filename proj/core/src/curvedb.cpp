#include "modsplit/curvedb.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace modsplit {

namespace detail {
const char* embedded_registry_text();
}

const char* expectation_name(SplitExpectation e) {
    switch (e) {
        case SplitExpectation::splits: return "splits";
        case SplitExpectation::not_inert: return "not_inert";
        case SplitExpectation::unramified: return "unramified";
    }
    return "?";
}

bool PairConstraint::admits(long m, long n) const {
    switch (kind) {
        case Kind::none: return true;
        case Kind::congruent: return (m - n) % q == 0;
        case Kind::incongruent: return (m - n) % q != 0;
    }
    return true;
}

std::string PairConstraint::to_string() const {
    switch (kind) {
        case Kind::none: return "";
        case Kind::congruent: return "~c" + std::to_string(q);
        case Kind::incongruent: return "~i" + std::to_string(q);
    }
    return "";
}

long EnumerationSpec::modulus() const {
    long M = 1;
    for (int i = 0; i < ell; ++i) M *= p;
    return M;
}

std::string EnumerationSpec::key() const { return std::to_string(p) + "^" + std::to_string(ell) + constraint.to_string(); }

std::string QuotedClass::to_string() const {
    if (odd_valuation) return "oddval";
    return std::to_string(r) + "/" + std::to_string(M);
}

std::string QuotedEnumeration::key() const { return std::to_string(p) + "^" + std::to_string(ell) + constraint.to_string(); }

ExactInt IntBivarPoly::eval(const ExactInt& u, const ExactInt& v) const {
    ExactInt acc = 0, upow = 1;
    for (const auto& row : c) {
        ExactInt inner = 0;
        for (auto it = row.rbegin(); it != row.rend(); ++it) inner = inner * v + *it;
        acc += inner * upow;
        upow *= u;
    }
    return acc;
}

BivarPolyModP IntBivarPoly::reduce(long p) const {
    std::vector<std::vector<long>> m;
    for (const auto& row : c) {
        std::vector<long> r;
        for (const auto& x : row) r.push_back(mod_long(x, p));
        m.push_back(std::move(r));
    }
    return BivarPolyModP(p, std::move(m));
}

IntPoly RationalFunctionData::numerator_poly() const {
    IntPoly acc({1});
    for (const auto& f : numerator) acc = acc * f.poly.pow(f.multiplicity);
    return acc;
}

IntPoly RationalFunctionData::denominator_poly() const {
    IntPoly acc({1});
    for (const auto& f : denominator) acc = acc * f.poly.pow(f.multiplicity);
    return acc;
}

std::string RationalFunctionData::to_string() const {
    auto side = [](const std::vector<Factor>& fs) {
        std::string s;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (i) s += "*";
            s += fs[i].name;
            if (fs[i].multiplicity != 1) s += "^" + std::to_string(fs[i].multiplicity);
        }
        return s.empty() ? std::string("1") : s;
    };
    return "(" + side(numerator) + ")/(" + side(denominator) + ")";
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

struct ParseError {
    std::string what;
};

ExactInt parse_int(const std::string& s) {
    ExactInt v;
    std::string t = trim(s);
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    if (t.empty() || v.set_str(t, 10) != 0) throw ParseError{"bad integer '" + s + "'"};
    return v;
}

long parse_long(const std::string& s) {
    ExactInt v = parse_int(s);
    if (!v.fits_slong_p()) throw ParseError{"integer out of range '" + s + "'"};
    return v.get_si();
}

ExactRat parse_rat(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const Error&) {
        throw ParseError{"bad rational '" + s + "'"};
    }
}

IntPoly parse_poly(const std::string& s) {
    std::vector<ExactInt> c;
    for (const auto& t : split(s, ',')) c.push_back(parse_int(t));
    IntPoly p(std::move(c));
    if (p.is_zero()) throw ParseError{"zero polynomial '" + s + "'"};
    return p;
}

std::vector<IntPoly> parse_poly_list(const std::string& s) {
    std::vector<IntPoly> out;
    for (const auto& t : split(s, '|')) out.push_back(parse_poly(t));
    return out;
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    if (trim(s).empty()) return out;
    for (const auto& t : split(s, ',')) out.push_back(parse_long(t));
    return out;
}

QuadFactorization parse_quad(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError{"quad field needs '<a>/<content>:'"};
    auto head = split(s.substr(0, colon), '/');
    if (head.size() != 2) throw ParseError{"quad header must be <a>/<content>"};
    QuadFactorization q;
    q.radicand = parse_int(head[0]);
    q.content = parse_int(head[1]);
    for (const auto& fac : split(s.substr(colon + 1), '|')) {
        std::vector<QuadExtElem> coeffs;
        for (const auto& term : split(fac, ',')) {
            auto at = term.find('@');
            ExactRat x = parse_rat(term.substr(0, at));
            ExactRat y = at == std::string::npos ? ExactRat(0) : parse_rat(term.substr(at + 1));
            coeffs.emplace_back(x, y, q.radicand);
        }
        q.factors.emplace_back(std::move(coeffs), q.radicand);
    }
    return q;
}

// "2^9" or "3^4~c3"
void parse_prime_power(const std::string& s, long& p, int& ell, PairConstraint& con) {
    std::string t = trim(s);
    auto tilde = t.find('~');
    std::string pp = t.substr(0, tilde);
    auto caret = pp.find('^');
    if (caret == std::string::npos) throw ParseError{"expected p^l in '" + s + "'"};
    p = parse_long(pp.substr(0, caret));
    ell = static_cast<int>(parse_long(pp.substr(caret + 1)));
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)) || ell < 1) throw ParseError{"bad prime power '" + s + "'"};
    con = PairConstraint{};
    if (tilde != std::string::npos) {
        std::string c = t.substr(tilde + 1);
        if (c.size() < 2 || (c[0] != 'c' && c[0] != 'i')) throw ParseError{"bad constraint '" + s + "'"};
        con.kind = c[0] == 'c' ? PairConstraint::Kind::congruent : PairConstraint::Kind::incongruent;
        con.q = parse_long(c.substr(1));
    }
}

std::vector<QuotedEnumeration> parse_quotes(int N, const std::string& s) {
    (void)N;
    std::vector<QuotedEnumeration> out;
    for (const auto& part : split(s, '&')) {
        auto colon = part.find(':');
        if (colon == std::string::npos) throw ParseError{"quote needs '<p^l>:'"};
        QuotedEnumeration q;
        parse_prime_power(part.substr(0, colon), q.p, q.ell, q.constraint);
        for (const auto& tok : split(part.substr(colon + 1), ',')) {
            QuotedClass c;
            if (tok == "oddval") {
                c.odd_valuation = true;
            } else {
                auto slash = tok.find('/');
                if (slash == std::string::npos) throw ParseError{"bad class token '" + tok + "'"};
                c.r = parse_long(tok.substr(0, slash));
                c.M = parse_long(tok.substr(slash + 1));
                if (c.M < 1) throw ParseError{"bad class modulus '" + tok + "'"};
            }
            q.classes.push_back(c);
        }
        out.push_back(std::move(q));
    }
    return out;
}

BivarPolyModP parse_mod2_expr(const std::string& s) {
    std::vector<std::vector<long>> c(4, std::vector<long>(4, 0));
    for (const auto& mono : split(s, '+')) {
        int i = 0, j = 0;
        if (mono != "1") {
            for (const auto& var : split(mono, '*')) {
                int e = 1;
                auto caret = var.find('^');
                if (caret != std::string::npos) e = static_cast<int>(parse_long(var.substr(caret + 1)));
                std::string name = var.substr(0, caret);
                if (name == "u") i += e;
                else if (name == "v") j += e;
                else throw ParseError{"bad monomial '" + mono + "'"};
            }
        }
        if (i > 3 || j > 3) throw ParseError{"monomial degree too large '" + mono + "'"};
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ^= 1;
    }
    return BivarPolyModP(2, std::move(c));
}

void parse_expectations(CurveModel& cm, const std::string& key, const std::string& value) {
    SplitExpectation e = key == "splits" ? SplitExpectation::splits
                       : key == "unramified" ? SplitExpectation::unramified
                                             : SplitExpectation::not_inert;
    for (long p : parse_long_list(value)) cm.expected[p].insert(e);
}

void parse_dprops(CurveModel& cm, const std::string& value) {
    for (const auto& t : split(value, ',')) {
        if (t == "pos") cm.expected_D.positive = true;
        else if (t == "odd") cm.expected_D.odd = true;
        else if (t == "mod8_126") cm.expected_D.mod8_126 = true;
        else if (t == "mod5_01") cm.expected_D.mod5_01 = true;
        else throw ParseError{"unknown D property '" + t + "'"};
    }
}

CurveModel parse_curve(const std::string& body) {
    CurveModel cm;
    bool have_f = false;
    for (const auto& field : split(body, ';')) {
        if (field.empty()) continue;
        auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError{"field without '=': '" + field + "'"};
        std::string key = trim(field.substr(0, eq));
        std::string value = trim(field.substr(eq + 1));
        if (key == "N") {
            cm.N = static_cast<int>(parse_long(value));
        } else if (key == "f") {
            cm.f = parse_poly(value);
            have_f = true;
        } else if (key == "factors") {
            cm.factors_Z = parse_poly_list(value);
        } else if (key == "disc") {
            for (const auto& t : split(value, '|')) {
                try {
                    cm.published_discriminants.push_back(parse_factored(t));
                } catch (const Error&) {
                    throw ParseError{"bad discriminant '" + t + "'"};
                }
            }
        } else if (key == "quad") {
            cm.quad_factorizations.push_back(parse_quad(value));
        } else if (key == "quad_printed") {
            cm.printed_quad_variants.push_back(parse_quad(value));
        } else if (key == "table3") {
            for (const auto& t : split(value, ',')) cm.table3_radicands.push_back(parse_int(t));
        } else if (key == "witness") {
            cm.witness_radicand = parse_int(value);
        } else if (key == "skip2") {
            cm.skip_prime_two = value == "1";
        } else if (key == "unram") {
            cm.unramified_primes_le_100 = parse_long_list(value);
        } else if (key == "not_inert" || key == "unramified" || key == "splits") {
            parse_expectations(cm, key, value);
        } else if (key == "dprops") {
            parse_dprops(cm, value);
        } else if (key == "enum") {
            for (const auto& t : split(value, ',')) {
                EnumerationSpec spec;
                parse_prime_power(t, spec.p, spec.ell, spec.constraint);
                cm.enumeration_specs.push_back(spec);
            }
        } else if (key == "quote") {
            cm.quoted = parse_quotes(cm.N, value);
        } else if (key == "note") {
            cm.notes.push_back(value);
        } else {
            throw ParseError{"unknown field '" + key + "'"};
        }
    }
    if (cm.N <= 0 || !have_f) throw ParseError{"curve record needs N and f"};
    if (cm.factors_Z.empty()) cm.factors_Z.push_back(cm.f);
    for (auto& spec : cm.enumeration_specs) spec.N = cm.N;
    // A splitting prime is also unramified and not inert.
    for (auto& [p, claims] : cm.expected) {
        if (claims.count(SplitExpectation::splits)) {
            claims.insert(SplitExpectation::not_inert);
            claims.insert(SplitExpectation::unramified);
        }
    }
    return cm;
}

std::map<std::string, std::string> parse_fields(const std::string& body) {
    std::map<std::string, std::string> out;
    for (const auto& field : split(body, ';')) {
        if (field.empty()) continue;
        auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError{"field without '=': '" + field + "'"};
        out[trim(field.substr(0, eq))] = trim(field.substr(eq + 1));
    }
    return out;
}

RationalFunctionData parse_rational_function(const std::map<std::string, std::string>& fields,
                                             const std::map<std::string, IntPoly>& named) {
    auto side = [&](const std::string& s) {
        std::vector<RationalFunctionData::Factor> out;
        for (const auto& t : split(s, '*')) {
            auto caret = t.find('^');
            std::string name = t.substr(0, caret);
            unsigned mult = caret == std::string::npos ? 1u : static_cast<unsigned>(parse_long(t.substr(caret + 1)));
            auto it = named.find(name);
            if (it == named.end()) throw ParseError{"unknown factor '" + name + "'"};
            out.push_back({name, it->second, mult});
        }
        return out;
    };
    RationalFunctionData r;
    auto num = fields.find("num"), den = fields.find("den");
    if (num == fields.end() || den == fields.end()) throw ParseError{"rational function needs num and den"};
    r.numerator = side(num->second);
    r.denominator = side(den->second);
    return r;
}

}  // namespace

Registry Registry::parse(const std::string& text) {
    Registry reg;
    reg.text_ = text;
    std::map<std::string, IntPoly> named{{"u", IntPoly::x()}, {"u1", IntPoly({1, 1})}};
    std::vector<std::pair<std::string, std::map<std::string, std::string>>> rationals;
    bool have_fuv = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    try {
        while (std::getline(in, line)) {
            ++lineno;
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            auto sp = line.find(' ');
            std::string kind = line.substr(0, sp);
            std::string body = sp == std::string::npos ? "" : line.substr(sp + 1);
            if (kind == "curve") {
                CurveModel cm = parse_curve(body);
                if (reg.curves_.count(cm.N)) throw ParseError{"duplicate level " + std::to_string(cm.N)};
                reg.curves_[cm.N] = std::move(cm);
            } else if (kind == "cubic") {
                auto fields = parse_fields(body);
                if (fields.count("note")) reg.cubic_.notes.push_back(fields["note"]);
                if (fields.count("rational")) {
                    rationals.emplace_back(fields["rational"], fields);
                    continue;
                }
                const std::string name = fields["name"];
                if (fields.count("biv")) {
                    IntBivarPoly b;
                    for (const auto& row : split(fields["biv"], '|')) {
                        std::vector<ExactInt> r;
                        for (const auto& t : split(row, ',')) r.push_back(parse_int(t));
                        b.c.push_back(std::move(r));
                    }
                    if (name != "f_uv") throw ParseError{"unknown bivariate '" + name + "'"};
                    reg.cubic_.f_uv = std::move(b);
                    have_fuv = true;
                } else if (fields.count("poly")) {
                    named[name] = parse_poly(fields["poly"]);
                } else {
                    throw ParseError{"cubic record without data"};
                }
            } else if (kind == "expected") {
                auto fields = parse_fields(body);
                auto it = fields.find("mod2_printed");
                if (it == fields.end()) throw ParseError{"unknown expected record"};
                std::vector<BivarPolyModP> fs;
                for (const auto& t : split(it->second, '|')) fs.push_back(parse_mod2_expr(t));
                reg.cubic_.printed_mod2.push_back(std::move(fs));
            } else {
                throw ParseError{"unknown record kind '" + kind + "'"};
            }
        }
        for (const char* need : {"c", "g2", "g6", "g12", "f12", "h12", "g24"}) {
            if (!named.count(need)) throw ParseError{std::string("missing cubic polynomial ") + need};
        }
        if (!have_fuv) throw ParseError{"missing f_uv"};
        auto& cu = reg.cubic_;
        cu.c = named["c"];
        cu.g2 = named["g2"];
        cu.g6 = named["g6"];
        cu.g12 = named["g12"];
        cu.f12 = named["f12"];
        cu.h12 = named["h12"];
        cu.g24 = named["g24"];
        for (auto& [rname, fields] : rationals) {
            RationalFunctionData r = parse_rational_function(fields, named);
            if (rname == "j") cu.j = r;
            else if (rname == "delta") cu.delta = r;
            else if (rname == "delta_printed") cu.delta_printed = r;
            else if (rname == "c4") cu.c4 = r;
            else throw ParseError{"unknown rational function '" + rname + "'"};
        }
        if (cu.j.numerator.empty() || cu.delta.numerator.empty() || cu.c4.numerator.empty()) {
            throw ParseError{"missing j, delta or c4"};
        }
    } catch (const ParseError& e) {
        throw Error(ErrorCode::RegistryLoad, "line " + std::to_string(lineno) + ": " + e.what);
    }
    if (reg.curves_.empty()) throw Error(ErrorCode::RegistryLoad, "no curve records");
    return reg;
}

Registry Registry::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::RegistryLoad, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

const std::string& Registry::builtin_text() {
    static const std::string text = detail::embedded_registry_text();
    return text;
}

const Registry& Registry::builtin() {
    static const Registry reg = parse(builtin_text());
    return reg;
}

const CurveModel& Registry::curve(int N) const {
    auto it = curves_.find(N);
    if (it == curves_.end()) {
        std::string why = N == 37 ? " (level 37 is excluded)" : " (not in the registry)";
        throw Error(ErrorCode::UnsupportedLevel, "level " + std::to_string(N) + why);
    }
    return it->second;
}

CurveModel& Registry::mutable_curve(int N) {
    auto it = curves_.find(N);
    if (it == curves_.end()) throw Error(ErrorCode::UnsupportedLevel, "level " + std::to_string(N));
    return it->second;
}

std::vector<int> Registry::levels() const {
    std::vector<int> out;
    for (const auto& [N, cm] : curves_) out.push_back(N);
    return out;
}

std::uint64_t Registry::checksum() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text_) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

const CurveModel& get_curve(int N) { return Registry::builtin().curve(N); }

namespace {

void record(RegistryEntryReport& r, bool ok, const std::string& what) {
    if (ok) {
        r.passed.push_back(what);
    } else {
        r.pass = false;
        r.failures.push_back(what);
    }
}

RegistryEntryReport validate_curve(const CurveModel& cm) {
    RegistryEntryReport r;
    r.entry = "curve." + std::to_string(cm.N);
    record(r, cm.f.degree() >= 2 && cm.f.degree() % 2 == 0, "f has even degree");
    record(r, product(cm.factors_Z) == cm.f, "product of Z-factors equals f");
    if (!cm.published_discriminants.empty()) {
        bool same_len = cm.published_discriminants.size() == cm.factors_Z.size();
        record(r, same_len, "one published discriminant per factor");
        for (std::size_t i = 0; same_len && i < cm.factors_Z.size(); ++i) {
            ExactInt d = discriminant(cm.factors_Z[i]);
            record(r, d == cm.published_discriminants[i],
                   "disc(factor " + std::to_string(i) + ") = " + format_factored(d) + " vs " +
                       format_factored(cm.published_discriminants[i]));
        }
    }
    for (const auto& q : cm.quad_factorizations) {
        std::string what = "Q(sqrt " + q.radicand.get_str() + ") factorization expands to f";
        try {
            record(r, expand_product(q.factors, q.content) == cm.f, what);
        } catch (const Error& e) {
            record(r, false, what + ": " + e.what());
        }
    }
    for (const auto& q : cm.printed_quad_variants) {
        std::string what = "printed Q(sqrt " + q.radicand.get_str() + ") variant does not expand to f";
        bool rejected = false;
        try {
            rejected = expand_product(q.factors, q.content) != cm.f;
        } catch (const Error&) {
            rejected = true;
        }
        record(r, rejected, what);
    }
    bool sorted_primes = std::is_sorted(cm.unramified_primes_le_100.begin(), cm.unramified_primes_le_100.end());
    for (long p : cm.unramified_primes_le_100) {
        sorted_primes = sorted_primes && p <= 100 && is_prime_u64(static_cast<std::uint64_t>(p));
    }
    record(r, sorted_primes, "unramified list is sorted primes <= 100");
    bool closed = true;
    for (const auto& [p, claims] : cm.expected) {
        if (claims.count(SplitExpectation::splits) &&
            (!claims.count(SplitExpectation::not_inert) || !claims.count(SplitExpectation::unramified))) {
            closed = false;
        }
    }
    record(r, closed, "splits implies not_inert and unramified");
    return r;
}

// a/b == c/d as rational functions, via cross multiplication.
bool same_rational(const IntPoly& a, const IntPoly& b, const IntPoly& c, const IntPoly& d) { return a * d == b * c; }

RegistryEntryReport validate_cubic(const CubicFamilyData& cu) {
    RegistryEntryReport r;
    r.entry = "cubic";
    record(r, cu.g12 == cu.f12, "g12 equals f12");
    IntPoly u = IntPoly::x(), u1({1, 1});
    IntPoly jn = cu.g2.pow(3) * cu.g6 * cu.f12.pow(3);
    IntPoly jd = u.pow(14) * u1.pow(14) * cu.c.pow(2);
    record(r, cu.j.numerator_poly() == jn && cu.j.denominator_poly() == jd, "j matches its displayed factors");
    record(r, cu.c4.numerator_poly() == cu.g2 * cu.g6 * cu.g12 && cu.c4.denominator_poly() == cu.h12.pow(4),
           "c4 matches its displayed factors");
    // j * delta = c4^3  <=>  jn * dn * c4d^3 = jd * dd * c4n^3
    auto identity = [&](const RationalFunctionData& delta) {
        return same_rational(cu.j.numerator_poly() * delta.numerator_poly(),
                             cu.j.denominator_poly() * delta.denominator_poly(), cu.c4.numerator_poly().pow(3),
                             cu.c4.denominator_poly().pow(3));
    };
    record(r, identity(cu.delta), "j * delta = c4^3 with the stored delta");
    record(r, cu.delta_printed.numerator.empty() || !identity(cu.delta_printed),
           "printed delta numerator is inconsistent with j and c4");
    // f(u,v) = c(u) v (v+1) + c(v) u (u+1)
    bool model_ok = true, symmetric = true;
    for (long a = -4; a <= 4; ++a) {
        for (long b = -4; b <= 4; ++b) {
            ExactInt ua = a, vb = b;
            ExactInt expect = cu.c.eval(ua) * vb * (vb + 1) + cu.c.eval(vb) * ua * (ua + 1);
            if (cu.f_uv.eval(ua, vb) != expect) model_ok = false;
            if (cu.f_uv.eval(ua, vb) != cu.f_uv.eval(vb, ua)) symmetric = false;
        }
    }
    record(r, model_ok, "f(u,v) = c(u)v(v+1) + c(v)u(u+1)");
    record(r, symmetric, "f(u,v) is symmetric");
    return r;
}

}  // namespace

std::vector<RegistryEntryReport> validate_registry(const Registry& reg) {
    std::vector<RegistryEntryReport> out;
    for (int N : reg.levels()) out.push_back(validate_curve(reg.curve(N)));
    out.push_back(validate_cubic(reg.cubic()));
    return out;
}

}  // namespace modsplit
