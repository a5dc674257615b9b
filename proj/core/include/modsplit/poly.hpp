#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modsplit/exactmath.hpp"

namespace modsplit {

// Dense univariate polynomial over Z, coefficients in ascending degree.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<ExactInt> ascending);
    static IntPoly monomial(const ExactInt& c, std::size_t degree);
    static IntPoly x() { return monomial(1, 1); }
    // Highest degree first, the way polynomials are usually printed.
    static IntPoly from_descending(const std::vector<long>& coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const ExactInt& lc() const;
    const std::vector<ExactInt>& coeffs() const { return c_; }
    ExactInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ExactInt(0); }
    ExactInt content() const;

    ExactInt eval(const ExactInt& x) const;
    ExactRat eval(const ExactRat& x) const;
    long eval_mod(long x, long m) const;
    IntPoly derivative() const;
    IntPoly reversed(std::size_t as_degree) const;  // x^d f(1/x)
    IntPoly pow(unsigned e) const;
    IntPoly compose_linear(const ExactInt& a, const ExactInt& b) const;  // f(a x + b)

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const ExactInt& k) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "x") const;
    std::string to_csv() const;  // ascending, comma separated

private:
    void normalize();
    std::vector<ExactInt> c_;
};

IntPoly product(const std::vector<IntPoly>& factors);

// F(m, n) = n^d f(m/n) with d = deg f (or the supplied form degree).
ExactInt eval_homogeneous(const IntPoly& f, const ExactInt& m, const ExactInt& n);
ExactInt eval_homogeneous(const IntPoly& f, const ExactInt& m, const ExactInt& n, int form_degree);

ExactInt sylvester_determinant(const IntPoly& f, const IntPoly& g);
ExactInt resultant(const IntPoly& f, const IntPoly& g);
ExactInt discriminant(const IntPoly& f);
// Resultant of the binary forms n^d f(m/n) and n^e g(m/n); vanishes iff they share a factor.
ExactInt form_resultant(const IntPoly& f, int d, const IntPoly& g, int e);

struct RootsModP {
    std::vector<long> roots;
    bool infinity = false;          // p | lc(f): root at infinity of the degree-deg(f) form
    bool identically_zero = false;  // every coefficient divisible by p
};
RootsModP roots_mod_p(const IntPoly& f, long p);

// Number of distinct real roots by a Sturm sequence.
int count_real_roots(const IntPoly& f);
// f(x) > 0 for every real x.
bool positive_everywhere(const IntPoly& f);

// x + y*sqrt(a) with a fixed squarefree radicand.
struct QuadExtElem {
    ExactRat x;
    ExactRat y;
    ExactInt a;

    QuadExtElem() = default;
    QuadExtElem(ExactRat x_, ExactRat y_, ExactInt a_) : x(std::move(x_)), y(std::move(y_)), a(std::move(a_)) {}

    QuadExtElem operator+(const QuadExtElem& o) const;
    QuadExtElem operator-(const QuadExtElem& o) const;
    QuadExtElem operator*(const QuadExtElem& o) const;
    QuadExtElem operator/(const QuadExtElem& o) const;
    QuadExtElem conj() const { return {x, -y, a}; }
    ExactRat norm() const { return x * x - a * y * y; }
    bool is_zero() const { return x == 0 && y == 0; }
    bool operator==(const QuadExtElem& o) const { return x == o.x && y == o.y && a == o.a; }
    std::string to_string() const;
};

class QuadExtPoly {
public:
    QuadExtPoly() = default;
    QuadExtPoly(std::vector<QuadExtElem> ascending, ExactInt radicand);
    static QuadExtPoly from_int(const IntPoly& f, const ExactInt& radicand);

    const ExactInt& radicand() const { return a_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<QuadExtElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const;

    QuadExtPoly operator*(const QuadExtPoly& o) const;
    QuadExtPoly operator-(const QuadExtPoly& o) const;
    QuadExtPoly conj() const;
    // Division with remainder over Q(sqrt a).
    void divmod(const QuadExtPoly& d, QuadExtPoly& q, QuadExtPoly& r) const;
    bool operator==(const QuadExtPoly& o) const { return a_ == o.a_ && c_ == o.c_; }
    std::string to_string() const;

private:
    void normalize();
    std::vector<QuadExtElem> c_;
    ExactInt a_;
};

// Product of the factors times `content`; must be rational with integer coefficients.
IntPoly expand_product(const std::vector<QuadExtPoly>& factors, const ExactInt& content = 1);

// Bivariate polynomial over a small prime field: c[i][j] is the coefficient of u^i v^j.
class BivarPolyModP {
public:
    BivarPolyModP() = default;
    BivarPolyModP(long p, std::vector<std::vector<long>> coeffs);
    static BivarPolyModP zero(long p) { return BivarPolyModP(p, {}); }

    long prime() const { return p_; }
    const std::vector<std::vector<long>>& coeffs() const { return c_; }
    long coeff(int i, int j) const;
    int deg_u() const;
    int deg_v() const;
    int total_degree() const;
    bool is_zero() const { return deg_u() < 0; }
    bool is_constant() const { return deg_u() <= 0 && deg_v() <= 0; }

    BivarPolyModP operator*(const BivarPolyModP& o) const;
    BivarPolyModP operator+(const BivarPolyModP& o) const;
    bool operator==(const BivarPolyModP& o) const;
    bool operator<(const BivarPolyModP& o) const;  // canonical ordering for factor lists
    // Exact division test; returns the quotient when d divides *this.
    std::optional<BivarPolyModP> exact_divide(const BivarPolyModP& d) const;
    long eval(long u, long v) const;
    std::string to_string() const;

private:
    void normalize();
    long p_ = 2;
    std::vector<std::vector<long>> c_;
};

// Complete factorization over F_2 by exhaustive divisor search (bidegree <= (3,3)).
std::vector<BivarPolyModP> factor_bivariate_mod2(const BivarPolyModP& f);

}  // namespace modsplit
