#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cameral/surface.hpp"

using namespace cameral;

namespace {

LocalHitchinData make(AlgebraId id, double radius, std::vector<Complex> b1,
                      std::vector<Complex> b2) {
    LocalHitchinData d;
    d.algebra = id;
    d.chart.radius = radius;
    d.beta1 = CPoly1{std::move(b1)};
    d.beta2 = CPoly1{std::move(b2)};
    return d;
}

} // namespace

TEST_CASE("discriminant factors in the chart coordinate") {
    // G2, beta1 = 1, beta2 = z: factors z and 4 - 27 z
    auto g = make(AlgebraId::G2, 1.0, {1.0}, {0.0, 1.0});
    auto factors = discriminant_in_z(g);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].degree() == 1);
    CHECK(std::abs(factors[0].coeff(1) - 1.0) < 1e-15);
    CHECK(std::abs(factors[1].coeff(0) - 4.0) < 1e-15);
    CHECK(std::abs(factors[1].coeff(1) + 27.0) < 1e-15);

    // B2, beta1 = 0, beta2 = z: factors z and -4 z
    auto b = make(AlgebraId::B2, 1.0, {0.0}, {0.0, 1.0});
    factors = discriminant_in_z(b);
    REQUIRE(factors.size() == 2);
    CHECK(std::abs(factors[0].coeff(1) - 1.0) < 1e-15);
    CHECK(std::abs(factors[1].coeff(1) + 4.0) < 1e-15);

    // A2 single factor -(1/27)(4 beta1^3 - beta2^2)
    auto a = make(AlgebraId::A2, 1.0, {1.0}, {0.0, 1.0});
    factors = discriminant_in_z(a);
    REQUIRE(factors.size() == 1);
    CHECK(std::abs(factors[0].coeff(0) + 4.0 / 27.0) < 1e-15);
    CHECK(std::abs(factors[0].coeff(2) - 1.0 / 27.0) < 1e-15);
}

TEST_CASE("certify: branch points of a linear G2 instance") {
    // beta2 = z - 1/2 vanishes at 1/2; 4 - 27(z - 1/2) vanishes at 1/2 + 4/27
    auto g = make(AlgebraId::G2, 1.0, {1.0}, {-0.5, 1.0});
    GenericityCertificate cert = certify_generic(g);
    REQUIRE(cert.points.size() == 2);
    CHECK(cert.all_zeros_in_disk);
    const BranchPoint& s = cert.points[0];
    const BranchPoint& l = cert.points[1];
    CHECK(s.class_index == 0);
    CHECK(std::abs(s.z0 - Complex(0.5, 0)) < 1e-12);
    CHECK(std::abs(s.jet1 - 1.0) < 1e-12);
    CHECK(l.class_index == 1);
    CHECK(std::abs(l.z0 - Complex(0.5 + 4.0 / 27.0, 0)) < 1e-12);
    CHECK(std::abs(l.jet1 + 27.0) < 1e-12);
}

TEST_CASE("certify error clauses") {
    // double zero of beta2 -> simplicity
    auto dbl = make(AlgebraId::G2, 1.0, {1.0}, {0.25, -1.0, 1.0}); // (z - 1/2)^2
    CHECK_THROWS_WITH_AS(certify_generic(dbl), doctest::Contains("simplicity"),
                         GenericityError);

    // beta1 vanishing at a branch point
    auto b1z = make(AlgebraId::G2, 1.0, {-0.5, 1.0}, {-0.5, 1.0});
    CHECK_THROWS_AS(certify_generic(b1z), GenericityError);
    try {
        certify_generic(b1z);
    } catch (const GenericityError& e) {
        CHECK(e.clause() == "b1 vanishes");
    }

    // identically zero factor
    auto zf = make(AlgebraId::G2, 1.0, {1.0}, {0.0});
    try {
        certify_generic(zf);
        CHECK(false);
    } catch (const GenericityError& e) {
        CHECK(e.clause() == "zero factor");
    }

    // A2: common zero of beta1 and beta2
    auto a = make(AlgebraId::A2, 1.0, {-0.25, 1.0}, {-0.25, 1.0});
    try {
        certify_generic(a);
        CHECK(false);
    } catch (const GenericityError& e) {
        CHECK((e.clause() == "b1 b2 zeros not disjoint" || e.clause() == "b1 vanishes"));
    }
}

TEST_CASE("tau involution on instances") {
    auto g = make(AlgebraId::G2, 2.0, {1.0, 0.3}, {-0.5, 1.0, Complex(0.0, 0.2)});
    LocalHitchinData gt = tau_apply(g);
    LocalHitchinData gtt = tau_apply(gt);
    REQUIRE(gtt.beta2.degree() == g.beta2.degree());
    for (int k = 0; k <= g.beta2.degree(); ++k)
        CHECK(std::abs(gtt.beta2.coeff(k) - g.beta2.coeff(k)) < 1e-14);
    for (int k = 0; k <= g.beta1.degree(); ++k)
        CHECK(std::abs(gtt.beta1.coeff(k) - g.beta1.coeff(k)) < 1e-14);

    // beta1 = 0: image is (0, -beta2)
    auto z = make(AlgebraId::G2, 1.0, {0.0}, {1.0, 2.0});
    LocalHitchinData zt = tau_apply(z);
    CHECK(std::abs(zt.beta2.coeff(0) + 1.0) < 1e-15);
    CHECK(std::abs(zt.beta2.coeff(1) + 2.0) < 1e-15);

    // constant example matching the base involution: (3, 4) -> (3, 0)
    auto c = make(AlgebraId::G2, 1.0, {3.0}, {4.0});
    LocalHitchinData ct = tau_apply(c);
    CHECK(std::abs(ct.beta1.coeff(0) - 3.0) < 1e-15);
    CHECK(ct.beta2.is_zero());

    CHECK_THROWS_AS(tau_apply(make(AlgebraId::A2, 1.0, {1.0}, {1.0})), InvalidArgument);
}

TEST_CASE("tau swaps the discriminant factors (G2)") {
    auto g = make(AlgebraId::G2, 2.0, {1.0, 0.3}, {-0.5, 1.0, Complex(0.0, 0.2)});
    auto f = discriminant_in_z(g);
    auto ft = discriminant_in_z(tau_apply(g));
    // factor1 of tau(b) = factor2(b)/27, factor2 of tau(b) = 27 factor1(b)
    REQUIRE(ft[0].degree() == f[1].degree());
    for (int k = 0; k <= f[1].degree(); ++k)
        CHECK(std::abs(ft[0].coeff(k) - f[1].coeff(k) / 27.0) < 1e-12);
    REQUIRE(ft[1].degree() == f[0].degree());
    for (int k = 0; k <= f[0].degree(); ++k)
        CHECK(std::abs(ft[1].coeff(k) - 27.0 * f[0].coeff(k)) < 1e-12);
}

TEST_CASE("tau pushforward of tangents") {
    auto g = make(AlgebraId::G2, 1.0, {2.0}, {1.0});
    TangentData t{CPoly1({1.0}), CPoly1({1.0})};
    TangentData pushed = tau_push_tangent(g, t);
    // (u1, -u2 + 4/9 b1^2 u1) = (1, -1 + 16/9)
    CHECK(std::abs(pushed.comp1.coeff(0) - 1.0) < 1e-15);
    CHECK(std::abs(pushed.comp2.coeff(0) - (16.0 / 9.0 - 1.0)) < 1e-14);
}

TEST_CASE("zero counts match factor degrees when all zeros are inside") {
    auto g = make(AlgebraId::G2, 10.0, {1.0}, {-0.5, 1.0});
    GenericityCertificate cert = certify_generic(g);
    int total = 0;
    for (int c : cert.in_disk_count) total += c;
    int deg = 0;
    for (int dg : cert.factor_degree) deg += dg;
    CHECK(total == deg);
    CHECK(cert.all_zeros_in_disk);
}
