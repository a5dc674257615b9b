#include <algorithm>
#include <sstream>

#include "modsplit/poly.hpp"

namespace modsplit {

IntPoly::IntPoly(std::vector<ExactInt> ascending) : c_(std::move(ascending)) { normalize(); }

IntPoly IntPoly::monomial(const ExactInt& c, std::size_t degree) {
    std::vector<ExactInt> v(degree + 1, 0);
    v[degree] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::from_descending(const std::vector<long>& coeffs) {
    std::vector<ExactInt> v;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v.emplace_back(*it);
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const ExactInt& IntPoly::lc() const {
    static const ExactInt zero = 0;
    return c_.empty() ? zero : c_.back();
}

ExactInt IntPoly::content() const {
    ExactInt g = 0;
    for (const auto& c : c_) g = gcd(g, c);
    return g;
}

ExactInt IntPoly::eval(const ExactInt& x) const {
    ExactInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ExactRat IntPoly::eval(const ExactRat& x) const {
    ExactRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + ExactRat(*it);
    return acc;
}

long IntPoly::eval_mod(long x, long m) const {
    long acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = static_cast<long>((static_cast<__int128>(acc) * x + mod_long(*it, m)) % m);
    }
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<ExactInt> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed(std::size_t as_degree) const {
    std::vector<ExactInt> v(as_degree + 1, 0);
    for (std::size_t i = 0; i < c_.size() && i <= as_degree; ++i) v[as_degree - i] = c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly result({1});
    IntPoly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

IntPoly IntPoly::compose_linear(const ExactInt& a, const ExactInt& b) const {
    IntPoly lin({b, a});
    IntPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + IntPoly({*it});
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<ExactInt> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<ExactInt> v(c_);
    for (auto& c : v) c = -c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<ExactInt> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const ExactInt& k) const {
    std::vector<ExactInt> v(c_);
    for (auto& c : v) c *= k;
    return IntPoly(std::move(v));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const ExactInt& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        ExactInt mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::string IntPoly::to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].get_str();
    }
    if (c_.empty()) os << "0";
    return os.str();
}

IntPoly product(const std::vector<IntPoly>& factors) {
    IntPoly acc({1});
    for (const auto& f : factors) acc = acc * f;
    return acc;
}

ExactInt eval_homogeneous(const IntPoly& f, const ExactInt& m, const ExactInt& n) {
    return eval_homogeneous(f, m, n, std::max(f.degree(), 0));
}

ExactInt eval_homogeneous(const IntPoly& f, const ExactInt& m, const ExactInt& n, int form_degree) {
    if (f.degree() > form_degree) throw Error(ErrorCode::InvalidArgument, "form degree below polynomial degree");
    // Horner in m with n-powers: sum a_i m^i n^(d-i).
    ExactInt acc = 0;
    ExactInt npow = 1;
    const auto& c = f.coeffs();
    for (int i = form_degree; i >= 0; --i) {
        ExactInt ai = static_cast<std::size_t>(i) < c.size() ? c[static_cast<std::size_t>(i)] : ExactInt(0);
        acc = acc * m + ai * npow;
        npow *= n;
    }
    return acc;
}

namespace {

ExactInt bareiss_determinant(std::vector<std::vector<ExactInt>> M) {
    const std::size_t N = M.size();
    if (N == 0) return 1;
    int sign = 1;
    ExactInt prev = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (M[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < N && M[swap_row][k] == 0) ++swap_row;
            if (swap_row == N) return 0;
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j) {
                M[i][j] = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign * M[N - 1][N - 1];
}

}  // namespace

namespace {

ExactInt sylvester_with_degrees(const IntPoly& f, int m, const IntPoly& g, int n) {
    const std::size_t N = static_cast<std::size_t>(m + n);
    std::vector<std::vector<ExactInt>> M(N, std::vector<ExactInt>(N, 0));
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i <= m; ++i) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f.coeff(static_cast<std::size_t>(m - i));
    }
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i <= n; ++i) M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = g.coeff(static_cast<std::size_t>(n - i));
    }
    return bareiss_determinant(std::move(M));
}

}  // namespace

ExactInt sylvester_determinant(const IntPoly& f, const IntPoly& g) {
    return sylvester_with_degrees(f, f.degree(), g, g.degree());
}

ExactInt form_resultant(const IntPoly& f, int d, const IntPoly& g, int e) {
    if (f.degree() > d || g.degree() > e || d < 0 || e < 0) throw Error(ErrorCode::InvalidArgument, "form degree below polynomial degree");
    if (f.is_zero() || g.is_zero()) return 0;
    if (d == 0 && e == 0) return 1;
    return sylvester_with_degrees(f, d, g, e);
}

ExactInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant with the zero polynomial");
    if (f.degree() == 0 && g.degree() == 0) return 1;
    if (f.degree() == 0) {
        ExactInt r;
        mpz_pow_ui(r.get_mpz_t(), f.lc().get_mpz_t(), static_cast<unsigned long>(g.degree()));
        return r;
    }
    if (g.degree() == 0) {
        ExactInt r;
        mpz_pow_ui(r.get_mpz_t(), g.lc().get_mpz_t(), static_cast<unsigned long>(f.degree()));
        return r;
    }
    return sylvester_determinant(f, g);
}

ExactInt discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "discriminant needs degree >= 1");
    const long n = f.degree();
    ExactInt r = resultant(f, f.derivative());
    ExactInt q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), f.lc().get_mpz_t());
    if ((n * (n - 1) / 2) % 2 == 1) q = -q;
    return q;
}

RootsModP roots_mod_p(const IntPoly& f, long p) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    RootsModP out;
    bool all_zero = true;
    for (const auto& c : f.coeffs()) {
        if (mod_long(c, p) != 0) all_zero = false;
    }
    out.identically_zero = all_zero;
    out.infinity = f.is_zero() || mod_long(f.lc(), p) == 0;
    for (long r = 0; r < p; ++r) {
        if (f.eval_mod(r, p) == 0) out.roots.push_back(r);
    }
    return out;
}

namespace {

using RatPoly = std::vector<ExactRat>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
    trim(a);
    while (!a.empty() && a.size() >= b.size()) {
        ExactRat factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int count_real_roots(const IntPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "real roots of the zero polynomial");
    if (f.degree() == 0) return 0;
    std::vector<RatPoly> chain;
    RatPoly p0, p1;
    for (const auto& c : f.coeffs()) p0.emplace_back(c);
    const IntPoly df = f.derivative();
    for (const auto& c : df.coeffs()) p1.emplace_back(c);
    chain.push_back(p0);
    chain.push_back(p1);
    while (true) {
        RatPoly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(r);
    }
    std::vector<int> at_pos, at_neg;
    for (const auto& p : chain) {
        int s = sgn(p.back());
        at_pos.push_back(s);
        at_neg.push_back((p.size() - 1) % 2 == 0 ? s : -s);
    }
    return sign_changes(at_neg) - sign_changes(at_pos);
}

bool positive_everywhere(const IntPoly& f) {
    if (f.is_zero()) return false;
    return sgn(f.lc()) > 0 && count_real_roots(f) == 0;
}

}  // namespace modsplit
