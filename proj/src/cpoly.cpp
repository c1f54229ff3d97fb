#include "cameral/cpoly.hpp"

#include <algorithm>
#include <cmath>

#include "cameral/ratpoly.hpp"

namespace cameral {

CPoly1 CPoly1::from_roots(const std::vector<Complex>& roots, Complex lead) {
    std::vector<Complex> c{lead};
    for (Complex r : roots) {
        std::vector<Complex> next(c.size() + 1, Complex(0, 0));
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return CPoly1(std::move(c));
}

Complex CPoly1::eval(Complex z) const {
    Complex acc(0, 0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
    return acc;
}

CPoly1 CPoly1::derivative() const {
    if (c_.size() <= 1) return CPoly1();
    std::vector<Complex> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Complex(double(k), 0);
    return CPoly1(std::move(d));
}

CPoly1 CPoly1::operator+(const CPoly1& o) const {
    std::vector<Complex> r(std::max(c_.size(), o.c_.size()), Complex(0, 0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return CPoly1(std::move(r));
}

CPoly1 CPoly1::operator-(const CPoly1& o) const {
    std::vector<Complex> r(std::max(c_.size(), o.c_.size()), Complex(0, 0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return CPoly1(std::move(r));
}

CPoly1 CPoly1::operator*(const CPoly1& o) const {
    if (c_.empty() || o.c_.empty()) return CPoly1();
    std::vector<Complex> r(c_.size() + o.c_.size() - 1, Complex(0, 0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return CPoly1(std::move(r));
}

CPoly1 CPoly1::operator*(Complex s) const {
    std::vector<Complex> r = c_;
    for (auto& x : r) x *= s;
    return CPoly1(std::move(r));
}

CPoly1 CPoly1::pow(unsigned n) const {
    CPoly1 r = CPoly1::constant(1.0);
    CPoly1 base = *this;
    while (n) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

double CPoly1::scale_at(double abs_z) const {
    double s = 0.0, p = 1.0;
    const double b = std::max(1.0, abs_z);
    for (const Complex& ck : c_) {
        s += std::abs(ck) * p;
        p *= b;
    }
    return s;
}

CPoly1 trim_relative(const CPoly1& p, double rel_eps) {
    double maxc = 0.0;
    for (const Complex& c : p.coeffs()) maxc = std::max(maxc, std::abs(c));
    std::vector<Complex> out = p.coeffs();
    while (!out.empty() && std::abs(out.back()) <= rel_eps * maxc) out.pop_back();
    return CPoly1(std::move(out));
}

CPoly1 compose_with_charts(const RatPoly2& f, const CPoly1& b1, const CPoly1& b2) {
    const int d1 = std::max(f.degree_in(Var::x1), 0);
    const int d2 = std::max(f.degree_in(Var::x2), 0);
    std::vector<CPoly1> p1(d1 + 1), p2(d2 + 1);
    p1[0] = CPoly1::constant(1.0);
    p2[0] = CPoly1::constant(1.0);
    for (int i = 1; i <= d1; ++i) p1[i] = p1[i - 1] * b1;
    for (int j = 1; j <= d2; ++j) p2[j] = p2[j - 1] * b2;
    CPoly1 out;
    for (const auto& [k, c] : f.terms())
        out = out + p1[k.first] * p2[k.second] * to_complex(c);
    return out;
}

} // namespace cameral
