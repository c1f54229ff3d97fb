#include "cameral/ratpoly.hpp"

#include <algorithm>
#include <sstream>

#include "cameral/errors.hpp"

namespace cameral {

void RatPoly2::add_term(int i, int j, const Rational& c) {
    if (is_zero(c)) return;
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
        terms_.emplace(Key{i, j}, c);
        return;
    }
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
}

int RatPoly2::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

int RatPoly2::degree_in(Var v) const {
    int d = v == Var::x1 ? 0 : 1;
    int out = -1;
    for (const auto& [k, c] : terms_)
        out = std::max(out, d == 0 ? k.first : k.second);
    return out;
}

RatPoly2 RatPoly2::operator-() const {
    RatPoly2 r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

RatPoly2 RatPoly2::operator+(const RatPoly2& o) const {
    RatPoly2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

RatPoly2 RatPoly2::operator-(const RatPoly2& o) const {
    RatPoly2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

RatPoly2 RatPoly2::operator*(const RatPoly2& o) const {
    RatPoly2 r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

RatPoly2 RatPoly2::operator*(const Rational& c) const {
    RatPoly2 r;
    if (is_zero(c)) return r;
    for (const auto& [k, q] : terms_) r.terms_.emplace(k, q * c);
    return r;
}

RatPoly2 RatPoly2::pow(unsigned n) const {
    RatPoly2 r(Rational(1));
    RatPoly2 base = *this;
    while (n) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

Rational RatPoly2::eval(const Rational& x1, const Rational& x2) const {
    Rational out(0);
    for (const auto& [k, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < k.first; ++i) t *= x1;
        for (int j = 0; j < k.second; ++j) t *= x2;
        out += t;
    }
    return out;
}

Complex RatPoly2::eval(const Complex& x1, const Complex& x2) const {
    Complex out(0.0, 0.0);
    for (const auto& [k, c] : terms_) {
        Complex t = to_complex(c);
        for (int i = 0; i < k.first; ++i) t *= x1;
        for (int j = 0; j < k.second; ++j) t *= x2;
        out += t;
    }
    return out;
}

RatPoly2 RatPoly2::coeff_of(Var v, int k) const {
    RatPoly2 r;
    for (const auto& [key, c] : terms_) {
        if (v == Var::x1 && key.first == k) r.set(0, key.second, c);
        if (v == Var::x2 && key.second == k) r.set(key.first, 0, c);
    }
    return r;
}

std::string RatPoly2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (k.first) os << "*x1^" << k.first;
        if (k.second) os << "*x2^" << k.second;
    }
    return os.str();
}

RatPoly2 poly2_partial(const RatPoly2& p, Var v) {
    RatPoly2 r;
    for (const auto& [k, c] : p.terms()) {
        if (v == Var::x1 && k.first > 0) r.add_term(k.first - 1, k.second, c * k.first);
        if (v == Var::x2 && k.second > 0) r.add_term(k.first, k.second - 1, c * k.second);
    }
    return r;
}

RatPoly2 poly2_compose_linear(const RatPoly2& p, const RatMat2& m) {
    const RatPoly2 y1 = RatPoly2::linear_form(m.a, m.b);
    const RatPoly2 y2 = RatPoly2::linear_form(m.c, m.d);
    // cache powers up to the needed degrees
    const int d1 = std::max(p.degree_in(Var::x1), 0);
    const int d2 = std::max(p.degree_in(Var::x2), 0);
    std::vector<RatPoly2> p1(d1 + 1), p2(d2 + 1);
    p1[0] = RatPoly2(Rational(1));
    p2[0] = RatPoly2(Rational(1));
    for (int i = 1; i <= d1; ++i) p1[i] = p1[i - 1] * y1;
    for (int j = 1; j <= d2; ++j) p2[j] = p2[j - 1] * y2;
    RatPoly2 out;
    for (const auto& [k, c] : p.terms()) out = out + p1[k.first] * p2[k.second] * c;
    return out;
}

RatPoly2 poly2_substitute(const RatPoly2& f, const RatPoly2& g1, const RatPoly2& g2) {
    const int d1 = std::max(f.degree_in(Var::x1), 0);
    const int d2 = std::max(f.degree_in(Var::x2), 0);
    std::vector<RatPoly2> p1(d1 + 1), p2(d2 + 1);
    p1[0] = RatPoly2(Rational(1));
    p2[0] = RatPoly2(Rational(1));
    for (int i = 1; i <= d1; ++i) p1[i] = p1[i - 1] * g1;
    for (int j = 1; j <= d2; ++j) p2[j] = p2[j - 1] * g2;
    RatPoly2 out;
    for (const auto& [k, c] : f.terms()) out = out + p1[k.first] * p2[k.second] * c;
    return out;
}

RatPoly2 poly2_reduce_mod_linear(const RatPoly2& p, const RatPoly2& form) {
    Rational a = form.coeff(1, 0), b = form.coeff(0, 1);
    RatPoly2 check = RatPoly2::linear_form(a, b);
    if (form.is_zero() || form != check)
        throw InvalidArgument("not a hyperplane");
    RatPoly2 out;
    if (sgn(a) != 0) {
        // x1 = -(b/a) x2
        const Rational s = -b / a;
        for (const auto& [k, c] : p.terms()) {
            Rational coef = c;
            for (int i = 0; i < k.first; ++i) coef *= s;
            out.add_term(0, k.first + k.second, coef);
        }
    } else {
        // x2 = 0
        for (const auto& [k, c] : p.terms())
            if (k.second == 0) out.add_term(k.first, 0, c);
    }
    return out;
}

namespace {

// Division-free determinant: Laplace expansion memoized over column
// subsets. f[mask] is the minor of the first popcount(mask) rows on the
// column set mask; extending by row k, column c picks up the cofactor sign
// (-1)^(k + position of c within sorted(mask | {c})).
template <class Ring>
Ring subset_determinant(const std::vector<std::vector<Ring>>& m, const Ring& zero,
                        const Ring& one) {
    const int n = static_cast<int>(m.size());
    std::vector<Ring> f(size_t(1) << n, zero);
    std::vector<bool> seen(size_t(1) << n, false);
    f[0] = one;
    seen[0] = true;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!seen[mask]) continue;
        const int row = __builtin_popcount(mask);
        if (row == n) continue;
        int used_before = 0;
        for (int col = 0; col < n; ++col) {
            if (mask & (1u << col)) {
                ++used_before;
                continue;
            }
            const Ring& entry = m[row][col];
            if (entry.is_zero()) continue;
            const unsigned next = mask | (1u << col);
            Ring term = f[mask] * entry;
            if ((row + used_before) % 2 != 0) term = -term;
            if (!seen[next]) {
                f[next] = term;
                seen[next] = true;
            } else {
                f[next] = f[next] + term;
            }
        }
    }
    return f[(1u << n) - 1];
}

// Ascending coefficient sequences in the eliminated variable; entries in Ring.
template <class Ring>
Ring sylvester_resultant(std::vector<Ring> p, std::vector<Ring> q, const Ring& zero,
                         const Ring& one) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    while (!q.empty() && q.back().is_zero()) q.pop_back();
    if (p.empty() || q.empty())
        throw InvalidArgument("resultant of the zero polynomial");
    const int dp = static_cast<int>(p.size()) - 1;
    const int dq = static_cast<int>(q.size()) - 1;
    if (dp == 0 && dq == 0)
        throw InvalidArgument("resultant: both arguments constant in the variable");
    if (dq == 0) {
        Ring r = one;
        for (int i = 0; i < dp; ++i) r = r * q[0];
        return r;
    }
    if (dp == 0) {
        Ring r = one;
        for (int i = 0; i < dq; ++i) r = r * p[0];
        return r;
    }
    const int n = dp + dq;
    std::vector<std::vector<Ring>> m(n, std::vector<Ring>(n, zero));
    for (int i = 0; i < dq; ++i)
        for (int k = 0; k <= dp; ++k) m[i][i + k] = p[dp - k];
    for (int i = 0; i < dp; ++i)
        for (int k = 0; k <= dq; ++k) m[dq + i][i + k] = q[dq - k];
    return subset_determinant(m, zero, one);
}

std::vector<RatPoly2> coeff_list(const RatPoly2& p, Var elim) {
    const int d = std::max(p.degree_in(elim), 0);
    std::vector<RatPoly2> out(d + 1);
    for (int k = 0; k <= d; ++k) out[k] = p.coeff_of(elim, k);
    return out;
}

// ParamPoly ring shim for the parametric Sylvester determinant.
struct PP {
    std::vector<RatPoly2> c; // c[k] multiplies kept^k; entries in Q[c1, c2]

    bool is_zero() const {
        for (const auto& q : c)
            if (!q.is_zero()) return false;
        return true;
    }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    PP operator-() const {
        PP r = *this;
        for (auto& q : r.c) q = -q;
        return r;
    }
    PP operator+(const PP& o) const {
        PP r;
        r.c.resize(std::max(c.size(), o.c.size()));
        for (size_t i = 0; i < r.c.size(); ++i) {
            if (i < c.size()) r.c[i] = r.c[i] + c[i];
            if (i < o.c.size()) r.c[i] = r.c[i] + o.c[i];
        }
        r.trim();
        return r;
    }
    PP operator*(const PP& o) const {
        PP r;
        if (c.empty() || o.c.empty()) return r;
        r.c.resize(c.size() + o.c.size() - 1);
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            for (size_t j = 0; j < o.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        }
        r.trim();
        return r;
    }
};

} // namespace

RatPoly2 poly2_resultant(const RatPoly2& p, const RatPoly2& q, Var elim) {
    if (p.is_zero() || q.is_zero())
        throw InvalidArgument("resultant of the zero polynomial");
    const RatPoly2 zero, one{Rational(1)};
    return sylvester_resultant(coeff_list(p, elim), coeff_list(q, elim), zero, one);
}

std::vector<Complex> ParamPoly::specialize(const Complex& c1, const Complex& c2) const {
    std::vector<Complex> out(coeffs.size(), Complex(0, 0));
    for (size_t k = 0; k < coeffs.size(); ++k) out[k] = coeffs[k].eval(c1, c2);
    return out;
}

ParamPoly poly2_eliminate(const RatPoly2& p, const RatPoly2& q, Var elim) {
    if (p.is_zero() || q.is_zero())
        throw InvalidArgument("eliminate: zero polynomial");
    if (p.degree_in(elim) <= 0 && q.degree_in(elim) <= 0)
        throw InvalidArgument("eliminate: both polynomials constant in the variable");
    const Var kept = elim == Var::x1 ? Var::x2 : Var::x1;

    // Coefficient of elim^k in (p - c1): polynomial in kept with entries in
    // Q[c1, c2]; the parameter ring reuses RatPoly2 with (x1, x2) = (c1, c2).
    auto lift = [&](const RatPoly2& poly, int which_param) {
        const int d = std::max(poly.degree_in(elim), 0);
        std::vector<PP> out(d + 1);
        for (int k = 0; k <= d; ++k) {
            RatPoly2 ck = poly.coeff_of(elim, k); // univariate in kept
            PP entry;
            const int dk = std::max(ck.degree_in(kept), 0);
            entry.c.assign(dk + 1, RatPoly2());
            for (const auto& [key, c] : ck.terms()) {
                const int kp = kept == Var::x1 ? key.first : key.second;
                entry.c[kp] = entry.c[kp] + RatPoly2(c);
            }
            if (k == 0) {
                // subtract the symbolic parameter
                RatPoly2 param = which_param == 1 ? RatPoly2::monomial(1, 0, Rational(-1))
                                                  : RatPoly2::monomial(0, 1, Rational(-1));
                if (entry.c.empty()) entry.c.resize(1);
                entry.c[0] = entry.c[0] + param;
            }
            entry.trim();
            out[k] = entry;
        }
        return out;
    };

    const PP zero{}, one{{RatPoly2(Rational(1))}};
    PP det = sylvester_resultant(lift(p, 1), lift(q, 2), zero, one);
    ParamPoly out;
    out.kept = kept;
    out.coeffs = det.c;
    if (out.coeffs.empty()) out.coeffs.push_back(RatPoly2());
    return out;
}

} // namespace cameral
