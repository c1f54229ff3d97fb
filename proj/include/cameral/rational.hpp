#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace cameral {

/// Exact rational scalar. GMP keeps the value canonical: lowest terms,
/// positive denominator.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

using Complex = std::complex<double>;

inline Complex to_complex(const Rational& q) { return Complex(q.get_d(), 0.0); }

/// 2x2 matrix and 2-vector over an exact scalar; used for Weyl generators,
/// the Killing form and the hyperplane data.
struct RatMat2 {
    Rational a, b, c, d; // [[a, b], [c, d]]

    RatMat2 operator*(const RatMat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const RatMat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    RatMat2 transposed() const { return {a, c, b, d}; }
    static RatMat2 identity() { return {1, 0, 0, 1}; }
};

struct RatVec2 {
    Rational x, y;
    bool operator==(const RatVec2& o) const { return x == o.x && y == o.y; }
};

inline RatVec2 operator*(const RatMat2& m, const RatVec2& v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

/// v^T M w
inline Rational bilinear(const RatMat2& m, const RatVec2& v, const RatVec2& w) {
    return v.x * (m.a * w.x + m.b * w.y) + v.y * (m.c * w.x + m.d * w.y);
}

} // namespace cameral
