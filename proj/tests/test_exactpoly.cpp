#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cameral/cpoly.hpp"
#include "cameral/errors.hpp"
#include "cameral/ratpoly.hpp"
#include "cameral/rng.hpp"
#include "cameral/rootsys.hpp"

using namespace cameral;

namespace {

RatPoly2 random_poly(Xoshiro256& rng, int max_deg = 3, int max_terms = 6) {
    RatPoly2 p;
    const int terms = 1 + int(rng.next() % max_terms);
    for (int t = 0; t < terms; ++t) {
        const int i = int(rng.next() % (max_deg + 1));
        const int j = int(rng.next() % (max_deg + 1));
        const long num = long(rng.next() % 19) - 9;
        const long den = 1 + long(rng.next() % 7);
        p.add_term(i, j, rat(num, den));
    }
    return p;
}

const RatPoly2 X1 = RatPoly2::variable(Var::x1);
const RatPoly2 X2 = RatPoly2::variable(Var::x2);

} // namespace

TEST_CASE("arithmetic basics") {
    CHECK((X1 + X2) == RatPoly2::linear_form(rat(1), rat(1)));
    CHECK((X1 + X2) * (X1 - X2) == X1 * X1 - X2 * X2);
    const RatPoly2& i1 = root_system(AlgebraId::G2).inv1;
    CHECK((i1 - i1).is_zero());
}

TEST_CASE("ring axioms on random triples") {
    Xoshiro256 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        RatPoly2 a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("compose_linear") {
    CHECK(poly2_compose_linear(X1, RatMat2::identity()) == X1);
    RatMat2 neg{rat(-1), rat(0), rat(0), rat(-1)};
    CHECK(poly2_compose_linear(X1 * X1, neg) == X1 * X1);

    // ring homomorphism on random samples
    Xoshiro256 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        RatPoly2 p = random_poly(rng), q = random_poly(rng);
        RatMat2 m{rat(long(rng.next() % 7) - 3), rat(long(rng.next() % 7) - 3),
                  rat(long(rng.next() % 7) - 3), rat(long(rng.next() % 7) - 3)};
        CHECK(poly2_compose_linear(p * q, m) ==
              poly2_compose_linear(p, m) * poly2_compose_linear(q, m));
    }
}

TEST_CASE("G2 tau pullback of the invariants") {
    const RootSystemData& g2 = root_system(AlgebraId::G2);
    REQUIRE(g2.tau.has_value());
    const RatMat2& m = g2.tau->cartan_action;
    CHECK(poly2_compose_linear(g2.inv1, m) * Rational(3) == g2.inv1);
    RatPoly2 expect = -g2.inv2 + g2.inv1.pow(3) * rat(4, 27);
    CHECK(poly2_compose_linear(g2.inv2, m) * Rational(27) == expect);
}

TEST_CASE("partial derivatives") {
    RatPoly2 p = X1 * X1 * X2; // x1^2 x2
    CHECK(poly2_partial(p, Var::x1) == RatPoly2::monomial(1, 1, 2));
    // dI1/dx1 for G2: differentiate 3x1^2 + 3x1x2 + x2^2 by hand
    const RatPoly2& i1 = root_system(AlgebraId::G2).inv1;
    RatPoly2 expect = RatPoly2::monomial(1, 0, 6) + RatPoly2::monomial(0, 1, 3);
    CHECK(poly2_partial(i1, Var::x1) == expect);
    CHECK(poly2_partial(RatPoly2(Rational(5)), Var::x2).is_zero());
}

TEST_CASE("reduce_mod_linear") {
    const RootSystemData& g2 = root_system(AlgebraId::G2);
    // on the alpha1 hyperplane dI2/dx1 vanishes and dI1/dx1 = 3 x2
    CHECK(poly2_reduce_mod_linear(g2.jacobian[1][0], X1).is_zero());
    CHECK(poly2_reduce_mod_linear(g2.jacobian[0][0], X1) == RatPoly2::monomial(0, 1, 3));
    CHECK(poly2_reduce_mod_linear(X1 + X2, X1 + X2).is_zero());

    // L | p  =>  restriction vanishes
    Xoshiro256 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        RatPoly2 q = random_poly(rng);
        RatPoly2 l = RatPoly2::linear_form(rat(long(rng.next() % 5) - 2),
                                           rat(1 + long(rng.next() % 4)));
        CHECK(poly2_reduce_mod_linear(l * q, l).is_zero());
    }

    CHECK_THROWS_AS(poly2_reduce_mod_linear(X1, X1 * X2), InvalidArgument);
    CHECK_THROWS_AS(poly2_reduce_mod_linear(X1, RatPoly2(Rational(3))), InvalidArgument);
    CHECK_THROWS_AS(poly2_reduce_mod_linear(X1, RatPoly2()), InvalidArgument);
}

TEST_CASE("resultant sign convention and units") {
    // documented convention gives +2 x1 here
    CHECK(poly2_resultant(X2 - X1, X2 + X1, Var::x2) == RatPoly2::monomial(1, 0, 2));
    CHECK(poly2_resultant(X2 * X2 - X1, RatPoly2(Rational(1)), Var::x2) ==
          RatPoly2(Rational(1)));
    CHECK_THROWS_AS(poly2_resultant(X1, X1 + RatPoly2(Rational(1)), Var::x2),
                    InvalidArgument);
    CHECK_THROWS_AS(poly2_resultant(RatPoly2(), X1, Var::x2), InvalidArgument);
}

TEST_CASE("A2 fiber resolvent: degree 6 and roots match the Weyl orbit") {
    const RootSystemData& a2 = root_system(AlgebraId::A2);
    ParamPoly res = poly2_eliminate(a2.inv1, a2.inv2, Var::x2);
    CHECK(res.kept == Var::x1);
    CHECK(res.degree() == 6);

    // plant a point, read off its invariants, and compare the specialized
    // resultant's roots with the orbit's first coordinates
    Xoshiro256 rng(11);
    for (int trial = 0; trial < 4; ++trial) {
        const Complex a1 = rng.unit_disk() + Complex(0.3, 0.1);
        const Complex a2v = rng.unit_disk() - Complex(0.1, 0.4);
        const Complex c1 = a2.inv1.eval(a1, a2v);
        const Complex c2 = a2.inv2.eval(a1, a2v);
        std::vector<Complex> coeffs = res.specialize(c1, c2);

        // Weyl orbit of the planted point
        std::vector<std::pair<Complex, Complex>> orbit{{a1, a2v}};
        for (size_t i = 0; i < orbit.size(); ++i) {
            for (const RatMat2& g : a2.weyl_generators) {
                const Complex y1 = to_complex(g.a) * orbit[i].first +
                                   to_complex(g.b) * orbit[i].second;
                const Complex y2 = to_complex(g.c) * orbit[i].first +
                                   to_complex(g.d) * orbit[i].second;
                bool seen = false;
                for (auto& p : orbit)
                    if (std::abs(p.first - y1) + std::abs(p.second - y2) < 1e-9) seen = true;
                if (!seen) orbit.emplace_back(y1, y2);
            }
        }
        REQUIRE(orbit.size() == 6);

        for (const auto& p : orbit) {
            // p.first must be a root of the specialized resolvent
            Complex acc(0, 0), pw(1, 0);
            for (const Complex& ck : coeffs) {
                acc += ck * pw;
                pw *= p.first;
            }
            double scale = 0.0;
            pw = Complex(1, 0);
            for (const Complex& ck : coeffs) {
                scale += std::abs(ck) * std::abs(pw);
                pw *= p.first;
            }
            CHECK(std::abs(acc) <= 1e-8 * std::max(scale, 1.0));
        }
    }

    CHECK_THROWS_AS(poly2_eliminate(RatPoly2(Rational(1)), RatPoly2(Rational(2)), Var::x2),
                    InvalidArgument);
}

TEST_CASE("substitute") {
    // f(x1, x2) = x1^2 - x2, substitute (x2, x1): x2^2 - x1
    RatPoly2 f = X1 * X1 - X2;
    CHECK(poly2_substitute(f, X2, X1) == X2 * X2 - X1);
}

TEST_CASE("complex univariate polynomials") {
    CPoly1 p({-1.0, 0.0, 1.0}); // z^2 - 1
    CHECK(std::abs(p.eval(Complex(2, 0)) - Complex(3, 0)) < 1e-15);

    CPoly1 cube({0.0, 0.0, 0.0, 1.0}); // z^3
    CPoly1 d = cube.derivative();
    REQUIRE(d.degree() == 2);
    CHECK(std::abs(d.coeff(2) - Complex(3, 0)) < 1e-15);

    CPoly1 zero;
    CHECK(std::abs(zero.eval(Complex(5, 7))) == 0.0);
    CHECK(zero.derivative().is_zero());
}
