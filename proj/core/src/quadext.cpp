#include <sstream>

#include "modsplit/poly.hpp"

namespace modsplit {

namespace {

const ExactInt& common_radicand(const QuadExtElem& a, const QuadExtElem& b) {
    if (a.a != b.a) throw Error(ErrorCode::InvalidArgument, "mixed radicands");
    return a.a;
}

}  // namespace

QuadExtElem QuadExtElem::operator+(const QuadExtElem& o) const { return {x + o.x, y + o.y, common_radicand(*this, o)}; }

QuadExtElem QuadExtElem::operator-(const QuadExtElem& o) const { return {x - o.x, y - o.y, common_radicand(*this, o)}; }

QuadExtElem QuadExtElem::operator*(const QuadExtElem& o) const {
    const ExactInt& r = common_radicand(*this, o);
    return {x * o.x + ExactRat(r) * y * o.y, x * o.y + y * o.x, r};
}

QuadExtElem QuadExtElem::operator/(const QuadExtElem& o) const {
    ExactRat n = o.norm();
    if (n == 0) {
        if (o.is_zero()) throw Error(ErrorCode::ZeroInput, "division by zero");
        throw Error(ErrorCode::NotAField, "radicand " + a.get_str() + " is a square");
    }
    QuadExtElem t = *this * o.conj();
    return {t.x / n, t.y / n, t.a};
}

std::string QuadExtElem::to_string() const {
    std::ostringstream os;
    if (y == 0) {
        os << x.get_str();
        return os.str();
    }
    if (x != 0) os << x.get_str() << (sgn(y) < 0 ? " - " : " + ");
    else if (sgn(y) < 0) os << "-";
    ExactRat ay = abs(y);
    if (ay != 1) os << ay.get_str() << "*";
    os << "sqrt(" << a.get_str() << ")";
    return os.str();
}

QuadExtPoly::QuadExtPoly(std::vector<QuadExtElem> ascending, ExactInt radicand)
    : c_(std::move(ascending)), a_(std::move(radicand)) {
    for (auto& c : c_) c.a = a_;
    normalize();
}

QuadExtPoly QuadExtPoly::from_int(const IntPoly& f, const ExactInt& radicand) {
    std::vector<QuadExtElem> c;
    for (const auto& k : f.coeffs()) c.emplace_back(ExactRat(k), ExactRat(0), radicand);
    return QuadExtPoly(std::move(c), radicand);
}

void QuadExtPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool QuadExtPoly::is_rational() const {
    for (const auto& c : c_) {
        if (c.y != 0) return false;
    }
    return true;
}

QuadExtPoly QuadExtPoly::operator*(const QuadExtPoly& o) const {
    if (a_ != o.a_) throw Error(ErrorCode::InvalidArgument, "mixed radicands");
    if (is_zero() || o.is_zero()) return QuadExtPoly({}, a_);
    std::vector<QuadExtElem> v(c_.size() + o.c_.size() - 1, QuadExtElem(0, 0, a_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
    }
    return QuadExtPoly(std::move(v), a_);
}

QuadExtPoly QuadExtPoly::operator-(const QuadExtPoly& o) const {
    if (a_ != o.a_) throw Error(ErrorCode::InvalidArgument, "mixed radicands");
    std::vector<QuadExtElem> v(std::max(c_.size(), o.c_.size()), QuadExtElem(0, 0, a_));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = v[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] - o.c_[i];
    return QuadExtPoly(std::move(v), a_);
}

QuadExtPoly QuadExtPoly::conj() const {
    std::vector<QuadExtElem> v;
    for (const auto& c : c_) v.push_back(c.conj());
    return QuadExtPoly(std::move(v), a_);
}

void QuadExtPoly::divmod(const QuadExtPoly& d, QuadExtPoly& q, QuadExtPoly& r) const {
    if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    if (a_ != d.a_) throw Error(ErrorCode::InvalidArgument, "mixed radicands");
    std::vector<QuadExtElem> rem = c_;
    const std::size_t dn = d.c_.size();
    std::vector<QuadExtElem> quo(rem.size() >= dn ? rem.size() - dn + 1 : 0, QuadExtElem(0, 0, a_));
    while (!rem.empty() && rem.size() >= dn) {
        QuadExtElem factor = rem.back() / d.c_.back();
        std::size_t shift = rem.size() - dn;
        quo[shift] = factor;
        for (std::size_t i = 0; i < dn; ++i) rem[shift + i] = rem[shift + i] - factor * d.c_[i];
        rem.pop_back();
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
    q = QuadExtPoly(std::move(quo), a_);
    r = QuadExtPoly(std::move(rem), a_);
}

std::string QuadExtPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const auto& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

IntPoly expand_product(const std::vector<QuadExtPoly>& factors, const ExactInt& content) {
    if (factors.empty()) return IntPoly({content});
    QuadExtPoly acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = acc * factors[i];
    std::vector<ExactInt> out;
    for (const auto& c : acc.coeffs()) {
        if (c.y != 0) throw Error(ErrorCode::RadicalResidue, "product keeps a sqrt(" + acc.radicand().get_str() + ") term");
        ExactRat v = c.x * ExactRat(content);
        if (v.get_den() != 1) throw Error(ErrorCode::NonIntegralResult, "coefficient " + v.get_str() + " is not an integer");
        out.push_back(v.get_num());
    }
    return IntPoly(std::move(out));
}

}  // namespace modsplit
