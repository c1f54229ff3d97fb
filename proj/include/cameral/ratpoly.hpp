#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cameral/rational.hpp"

namespace cameral {

enum class Var { x1 = 1, x2 = 2 };

/// Sparse bivariate polynomial over Q: term map (i, j) -> coefficient of
/// x1^i x2^j. Zero coefficients are never stored.
class RatPoly2 {
public:
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, Rational>;

    RatPoly2() = default;
    RatPoly2(const Rational& c) { set(0, 0, c); }
    RatPoly2(long c) { set(0, 0, Rational(c)); }

    static RatPoly2 monomial(int i, int j, const Rational& c) {
        RatPoly2 p;
        p.set(i, j, c);
        return p;
    }
    static RatPoly2 variable(Var v) {
        return v == Var::x1 ? monomial(1, 0, 1) : monomial(0, 1, 1);
    }
    /// a*x1 + b*x2
    static RatPoly2 linear_form(const Rational& a, const Rational& b) {
        RatPoly2 p;
        p.set(1, 0, a);
        p.set(0, 1, b);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
    }
    Rational coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void set(int i, int j, const Rational& c) {
        if (is_zero(c))
            terms_.erase({i, j});
        else
            terms_[{i, j}] = c;
    }
    void add_term(int i, int j, const Rational& c);

    int total_degree() const; // -1 for the zero polynomial
    int degree_in(Var v) const;

    RatPoly2 operator-() const;
    RatPoly2 operator+(const RatPoly2& o) const;
    RatPoly2 operator-(const RatPoly2& o) const;
    RatPoly2 operator*(const RatPoly2& o) const;
    RatPoly2 operator*(const Rational& c) const;
    RatPoly2 pow(unsigned n) const;
    bool operator==(const RatPoly2& o) const { return terms_ == o.terms_; }
    bool operator!=(const RatPoly2& o) const { return !(*this == o); }

    Rational eval(const Rational& x1, const Rational& x2) const;
    Complex eval(const Complex& x1, const Complex& x2) const;

    /// Coefficient of v^k, a polynomial in the other variable.
    RatPoly2 coeff_of(Var v, int k) const;

    std::string str() const;

private:
    static bool is_zero(const Rational& q) { return sgn(q) == 0; }
    TermMap terms_;
};

inline RatPoly2 operator*(const Rational& c, const RatPoly2& p) { return p * c; }

/// Formal partial derivative with respect to x1 or x2.
RatPoly2 poly2_partial(const RatPoly2& p, Var v);

/// p(m * (x1, x2)^T): pullback under the linear map m.
RatPoly2 poly2_compose_linear(const RatPoly2& p, const RatMat2& m);

/// Restriction of p to the hyperplane {form = 0}, where form = a*x1 + b*x2
/// is a nonzero homogeneous linear polynomial. When a != 0 the substitution
/// is x1 = -(b/a)*x2 (result lives in x2); otherwise x2 = 0 (result in x1).
/// Throws InvalidArgument("not a hyperplane") otherwise.
RatPoly2 poly2_reduce_mod_linear(const RatPoly2& p, const RatPoly2& form);

/// f(g1(x1,x2), g2(x1,x2)): substitute polynomials for both variables.
RatPoly2 poly2_substitute(const RatPoly2& f, const RatPoly2& g1, const RatPoly2& g2);

/// Resultant of p and q with respect to `elim`, exact. Sign convention:
/// the determinant of the Sylvester matrix whose first deg_elim(q) rows
/// carry p's coefficients in descending powers of `elim` (then deg_elim(p)
/// rows of q); e.g. Res_{x2}(x2 - x1, x2 + x1) = +2*x1 here.
RatPoly2 poly2_resultant(const RatPoly2& p, const RatPoly2& q, Var elim);

/// Polynomial in one surviving variable whose coefficients are themselves
/// exact polynomials in two parameters (c1, c2); the parameter polynomials
/// reuse RatPoly2 with (x1, x2) read as (c1, c2).
struct ParamPoly {
    Var kept = Var::x1;
    std::vector<RatPoly2> coeffs; // coeffs[k] multiplies kept^k

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    /// Numeric specialization at (c1, c2): ascending coefficient list.
    std::vector<Complex> specialize(const Complex& c1, const Complex& c2) const;
};

/// Res_elim(p - c1, q - c2) with c1, c2 kept symbolic: the fiber-solving
/// resolvent. Throws if p and q are both constant in `elim`.
ParamPoly poly2_eliminate(const RatPoly2& p, const RatPoly2& q, Var elim);

} // namespace cameral
