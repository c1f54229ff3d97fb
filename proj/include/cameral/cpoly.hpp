#pragma once

#include <complex>
#include <vector>

#include "cameral/rational.hpp"

namespace cameral {

/// Univariate polynomial with complex double coefficients, ascending
/// degree. The leading coefficient is nonzero unless the polynomial is
/// identically zero.
class CPoly1 {
public:
    CPoly1() = default;
    explicit CPoly1(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }
    CPoly1(std::initializer_list<Complex> coeffs) : c_(coeffs) { trim(); }
    static CPoly1 constant(Complex v) { return CPoly1({v}); }
    static CPoly1 from_roots(const std::vector<Complex>& roots, Complex lead = 1.0);

    const std::vector<Complex>& coeffs() const { return c_; }
    Complex coeff(size_t k) const { return k < c_.size() ? c_[k] : Complex(0, 0); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }

    Complex eval(Complex z) const; // Horner
    CPoly1 derivative() const;

    CPoly1 operator+(const CPoly1& o) const;
    CPoly1 operator-(const CPoly1& o) const;
    CPoly1 operator*(const CPoly1& o) const;
    CPoly1 operator*(Complex s) const;
    CPoly1 pow(unsigned n) const;

    /// Coefficient magnitude scale at |z|: sum_k |c_k| max(1,|z|)^k; the
    /// natural backward-error unit for residuals.
    double scale_at(double abs_z) const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == Complex(0, 0)) c_.pop_back();
    }
    std::vector<Complex> c_;
};

class RatPoly2;

/// Substitute two chart polynomials into a bivariate polynomial:
/// z -> f(b1(z), b2(z)).
CPoly1 compose_with_charts(const RatPoly2& f, const CPoly1& b1, const CPoly1& b2);

/// Drop leading coefficients at roundoff scale relative to the largest one
/// (composed polynomials can cancel exactly in theory and to ~1e-16 junk in
/// floating arithmetic).
CPoly1 trim_relative(const CPoly1& p, double rel_eps = 1e-12);

} // namespace cameral
