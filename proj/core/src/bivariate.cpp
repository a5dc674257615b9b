#include <algorithm>
#include <sstream>

#include "modsplit/poly.hpp"

namespace modsplit {

namespace {

long mod_pos(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

long inverse_mod(long a, long p) {
    long result = 1, base = mod_pos(a, p), e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

}  // namespace

BivarPolyModP::BivarPolyModP(long p, std::vector<std::vector<long>> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    normalize();
}

void BivarPolyModP::normalize() {
    for (auto& row : c_) {
        for (auto& x : row) x = mod_pos(x, p_);
        while (!row.empty() && row.back() == 0) row.pop_back();
    }
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

long BivarPolyModP::coeff(int i, int j) const {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= c_.size()) return 0;
    const auto& row = c_[static_cast<std::size_t>(i)];
    return static_cast<std::size_t>(j) < row.size() ? row[static_cast<std::size_t>(j)] : 0;
}

int BivarPolyModP::deg_u() const { return static_cast<int>(c_.size()) - 1; }

int BivarPolyModP::deg_v() const {
    int d = -1;
    for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

int BivarPolyModP::total_degree() const {
    int d = -1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < c_[i].size(); ++j) {
            if (c_[i][j] != 0) d = std::max(d, static_cast<int>(i + j));
        }
    }
    return d;
}

BivarPolyModP BivarPolyModP::operator*(const BivarPolyModP& o) const {
    if (is_zero() || o.is_zero()) return zero(p_);
    std::vector<std::vector<long>> v(c_.size() + o.c_.size() - 1,
                                     std::vector<long>(static_cast<std::size_t>(deg_v() + o.deg_v() + 1), 0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < c_[i].size(); ++j) {
            if (c_[i][j] == 0) continue;
            for (std::size_t k = 0; k < o.c_.size(); ++k) {
                for (std::size_t l = 0; l < o.c_[k].size(); ++l) {
                    v[i + k][j + l] = (v[i + k][j + l] + c_[i][j] * o.c_[k][l]) % p_;
                }
            }
        }
    }
    return BivarPolyModP(p_, std::move(v));
}

BivarPolyModP BivarPolyModP::operator+(const BivarPolyModP& o) const {
    std::size_t rows = std::max(c_.size(), o.c_.size());
    std::size_t cols = static_cast<std::size_t>(std::max(deg_v(), o.deg_v()) + 1);
    std::vector<std::vector<long>> v(rows, std::vector<long>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            v[i][j] = coeff(static_cast<int>(i), static_cast<int>(j)) + o.coeff(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return BivarPolyModP(p_, std::move(v));
}

bool BivarPolyModP::operator==(const BivarPolyModP& o) const { return p_ == o.p_ && c_ == o.c_; }

bool BivarPolyModP::operator<(const BivarPolyModP& o) const {
    if (total_degree() != o.total_degree()) return total_degree() < o.total_degree();
    if (deg_u() != o.deg_u()) return deg_u() < o.deg_u();
    return c_ < o.c_;
}

std::optional<BivarPolyModP> BivarPolyModP::exact_divide(const BivarPolyModP& d) const {
    if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    // Lex order with u > v.  The ideal (d) is principal, so every multiple of d
    // has a leading term divisible by LT(d); a non-divisible leading term means no.
    auto leading = [](const BivarPolyModP& f) {
        int i = f.deg_u();
        const auto& row = f.c_[static_cast<std::size_t>(i)];
        return std::pair<int, int>(i, static_cast<int>(row.size()) - 1);
    };
    if (is_zero()) return zero(p_);
    auto [du, dv] = leading(d);
    long inv = inverse_mod(d.coeff(du, dv), p_);
    std::vector<std::vector<long>> rem = c_;
    int rows = deg_u() + 1, cols = deg_v() + d.deg_v() + 1;
    for (auto& row : rem) row.resize(static_cast<std::size_t>(cols), 0);
    std::vector<std::vector<long>> quo(static_cast<std::size_t>(std::max(rows - du, 1)),
                                       std::vector<long>(static_cast<std::size_t>(std::max(cols - dv, 1)), 0));
    for (int i = rows - 1; i >= 0; --i) {
        for (int j = cols - 1; j >= 0; --j) {
            long c = rem[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c == 0) continue;
            if (i < du || j < dv) return std::nullopt;
            // Lower rows of d may reach past dv; a quotient term that high cannot
            // come from an exact quotient, whose v-degree is deg_v - d.deg_v.
            if (j - dv > deg_v() - d.deg_v()) return std::nullopt;
            long f = c * inv % p_;
            quo[static_cast<std::size_t>(i - du)][static_cast<std::size_t>(j - dv)] = f;
            for (std::size_t k = 0; k < d.c_.size(); ++k) {
                for (std::size_t l = 0; l < d.c_[k].size(); ++l) {
                    auto& cell = rem[static_cast<std::size_t>(i - du) + k][static_cast<std::size_t>(j - dv) + l];
                    cell = mod_pos(cell - f * d.c_[k][l], p_);
                }
            }
        }
    }
    return BivarPolyModP(p_, std::move(quo));
}

long BivarPolyModP::eval(long u, long v) const {
    long acc = 0, upow = 1;
    u = mod_pos(u, p_);
    v = mod_pos(v, p_);
    for (const auto& row : c_) {
        long inner = 0;
        for (auto it = row.rbegin(); it != row.rend(); ++it) inner = (inner * v + *it) % p_;
        acc = (acc + inner * upow) % p_;
        upow = upow * u % p_;
    }
    return acc;
}

std::string BivarPolyModP::to_string() const {
    if (is_zero()) return "0";
    struct Term {
        int i, j;
        long c;
    };
    std::vector<Term> terms;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < c_[i].size(); ++j) {
            if (c_[i][j]) terms.push_back({static_cast<int>(i), static_cast<int>(j), c_[i][j]});
        }
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.i + a.j != b.i + b.j) return a.i + a.j > b.i + b.j;
        return a.i > b.i;
    });
    std::ostringstream os;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& t = terms[k];
        if (k) os << " + ";
        std::vector<std::string> parts;
        if (t.c != 1 || (t.i == 0 && t.j == 0)) parts.push_back(std::to_string(t.c));
        if (t.i == 1) parts.emplace_back("u");
        if (t.i > 1) parts.push_back("u^" + std::to_string(t.i));
        if (t.j == 1) parts.emplace_back("v");
        if (t.j > 1) parts.push_back("v^" + std::to_string(t.j));
        for (std::size_t q = 0; q < parts.size(); ++q) os << (q ? "*" : "") << parts[q];
    }
    return os.str();
}

std::vector<BivarPolyModP> factor_bivariate_mod2(const BivarPolyModP& f_in) {
    if (f_in.prime() != 2) throw Error(ErrorCode::InvalidArgument, "factor_bivariate_mod2 needs p = 2");
    if (f_in.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factoring the zero polynomial");
    std::vector<BivarPolyModP> out;
    BivarPolyModP f = f_in;
    while (!f.is_constant()) {
        const int bu = std::min(f.deg_u(), 3), bv = std::min(f.deg_v(), 3);
        const int cells = (bu + 1) * (bv + 1);
        std::vector<BivarPolyModP> candidates;
        for (unsigned mask = 2; mask < (1u << cells); ++mask) {
            std::vector<std::vector<long>> c(static_cast<std::size_t>(bu + 1), std::vector<long>(static_cast<std::size_t>(bv + 1), 0));
            for (int k = 0; k < cells; ++k) {
                if (mask & (1u << k)) c[static_cast<std::size_t>(k / (bv + 1))][static_cast<std::size_t>(k % (bv + 1))] = 1;
            }
            BivarPolyModP g(2, std::move(c));
            if (!g.is_constant()) candidates.push_back(std::move(g));
        }
        std::sort(candidates.begin(), candidates.end());
        bool split = false;
        for (const auto& g : candidates) {
            if (g.total_degree() >= f.total_degree()) break;
            if (auto q = f.exact_divide(g)) {
                out.push_back(g);
                f = *q;
                split = true;
                break;
            }
        }
        if (!split) {
            out.push_back(f);
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace modsplit
