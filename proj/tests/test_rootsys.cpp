#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cameral/rootsys.hpp"

using namespace cameral;

namespace {

bool clause_pass(const VerificationReport& rep, const std::string& id) {
    for (const auto& c : rep.clauses)
        if (c.id == id) return c.pass;
    return false;
}

bool clause_present(const VerificationReport& rep, const std::string& id) {
    for (const auto& c : rep.clauses)
        if (c.id == id) return true;
    return false;
}

} // namespace

TEST_CASE("build: invariant values at sample points") {
    const RootSystemData& g2 = root_system(AlgebraId::G2);
    CHECK(g2.inv1.eval(Rational(1), Rational(0)) == Rational(3));
    CHECK(g2.inv2.eval(Rational(1), Rational(0)) == Rational(4));

    const RootSystemData& a2 = root_system(AlgebraId::A2);
    CHECK(a2.inv1.eval(Rational(1), Rational(1)) == Rational(3));
    CHECK(a2.inv2.eval(Rational(1), Rational(1)) == Rational(0));

    const RootSystemData& b2 = root_system(AlgebraId::B2);
    CHECK(b2.inv1.eval(Rational(1), Rational(1)) == Rational(5));
    CHECK(b2.inv2.eval(Rational(1), Rational(1)) == Rational(4));
}

TEST_CASE("root counts and classes") {
    CHECK(root_system(AlgebraId::G2).positive_roots.size() == 6);
    CHECK(root_system(AlgebraId::A2).positive_roots.size() == 3);
    CHECK(root_system(AlgebraId::B2).positive_roots.size() == 4);
    CHECK(root_system(AlgebraId::G2).class_count() == 2);
    CHECK(root_system(AlgebraId::A2).class_count() == 1);
    CHECK(root_system(AlgebraId::B2).class_count() == 2);
}

TEST_CASE("verify_algebra passes every clause exactly") {
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::B2, AlgebraId::G2}) {
        const VerificationReport rep = verify_algebra(root_system(id));
        for (const auto& c : rep.clauses) {
            INFO(algebra_name(id) << " clause " << c.id << ": " << c.detail);
            CHECK(c.pass);
        }
        CHECK(clause_present(rep, "weyl_invariance"));
        CHECK(clause_present(rep, "discriminant_factorization"));
        CHECK(clause_present(rep, "jacobian_hyperplane_tables"));
        CHECK(clause_present(rep, "killing_squares"));
        CHECK(clause_present(rep, "coefficient_consistency"));
        CHECK(clause_present(rep, "counting_identity"));
        CHECK(clause_present(rep, "tau_pullback") == (id == AlgebraId::G2));
    }
}

TEST_CASE("discriminant values at (1,1)") {
    // G2: product of squared roots = 14400 = I2 (4 I1^3 - 27 I2) at (1,1)
    const RootSystemData& g2 = root_system(AlgebraId::G2);
    Rational via_roots(1);
    for (const auto& r : g2.positive_roots) {
        Rational v = r.coords.x + r.coords.y; // root value at (1,1)
        via_roots *= v * v;
    }
    CHECK(via_roots == Rational(14400));
    const Rational i1 = g2.inv1.eval(Rational(1), Rational(1));
    const Rational i2 = g2.inv2.eval(Rational(1), Rational(1));
    CHECK(i2 * (4 * i1 * i1 * i1 - 27 * i2) == Rational(36 * 400));

    // A2: -(1/27)(4 I1^3 - I2^2) = -4 at (1,1)
    const RootSystemData& a2 = root_system(AlgebraId::A2);
    const Rational j1 = a2.inv1.eval(Rational(1), Rational(1));
    const Rational j2 = a2.inv2.eval(Rational(1), Rational(1));
    CHECK(rat(-1, 27) * (4 * j1 * j1 * j1 - j2 * j2) == Rational(-4));
    Rational a2_roots(-1);
    for (const auto& r : a2.positive_roots) {
        Rational v = r.coords.x + r.coords.y;
        a2_roots *= v * v;
    }
    CHECK(a2_roots == Rational(-4));
}

TEST_CASE("Killing square of the halved short G2 vector is 12") {
    const RootSystemData& g2 = root_system(AlgebraId::G2);
    RatVec2 v{rat(1), rat(-3, 2)};
    CHECK(bilinear(g2.killing, v, v) == Rational(12));
}

TEST_CASE("corrupted tables fail the named clause") {
    RootSystemData bad = build(AlgebraId::G2);
    bad.jacobian[0][0] = bad.jacobian[0][0] + RatPoly2(Rational(1));
    VerificationReport rep = verify_algebra(bad);
    CHECK_FALSE(clause_pass(rep, "jacobian_is_gradient"));
    CHECK_FALSE(clause_pass(rep, "jacobian_hyperplane_tables"));
    CHECK_FALSE(rep.all_pass());

    RootSystemData bad2 = build(AlgebraId::B2);
    bad2.classes[0].disc_b = bad2.classes[0].disc_b * Rational(2);
    rep = verify_algebra(bad2);
    CHECK_FALSE(clause_pass(rep, "discriminant_factorization"));

    RootSystemData bad3 = build(AlgebraId::A2);
    bad3.nabla_table[1] = {rat(5), rat(5)};
    rep = verify_algebra(bad3);
    CHECK_FALSE(clause_pass(rep, "killing_squares"));
}

TEST_CASE("langlands involution") {
    const RootSystemData& g2 = root_system(AlgebraId::G2);
    auto [t1, t2] = langlands_tau(g2, Rational(3), Rational(4));
    CHECK(t1 == Rational(3));
    CHECK(t2 == Rational(0));

    // involution squares to the identity
    auto [s1, s2] = langlands_tau(g2, t1, t2);
    CHECK(s1 == Rational(3));
    CHECK(s2 == Rational(4));

    // differential at b1 = 0 is (u1, -u2)
    auto [d1, d2] = langlands_dtau(g2, Rational(0), Rational(7), Rational(5));
    CHECK(d1 == Rational(7));
    CHECK(d2 == Rational(-5));

    CHECK_THROWS_AS(langlands_tau(root_system(AlgebraId::A2), Rational(1), Rational(1)),
                    InvalidArgument);
    CHECK_THROWS_AS(langlands_tau(root_system(AlgebraId::B2), Rational(1), Rational(1)),
                    InvalidArgument);
}

TEST_CASE("counting identities reproduce the theorem coefficients") {
    // pinned aggregate coefficients per algebra and class
    const RootSystemData& g2 = root_system(AlgebraId::G2);
    CHECK(g2.classes[0].aggregate_coeff_explicit == Rational(36));
    CHECK(g2.classes[1].aggregate_coeff_explicit == Rational(36));
    CHECK(g2.classes[0].aggregate_coeff_fancy == Rational(36));
    CHECK(g2.classes[1].aggregate_coeff_fancy == rat(4, 3));

    // A2 signs are oracle-pinned: see README on conventions
    const RootSystemData& a2 = root_system(AlgebraId::A2);
    CHECK(a2.classes[0].aggregate_coeff_explicit == rat(1, 6));
    CHECK(a2.classes[0].aggregate_coeff_fancy == rat(-9, 2));
    CHECK(a2.classes[0].per_point_residue_coeff *
              Rational(long(a2.positive_roots.size())) / Rational(2) ==
          a2.classes[0].aggregate_coeff_explicit);

    const RootSystemData& b2 = root_system(AlgebraId::B2);
    CHECK(b2.classes[0].aggregate_coeff_explicit == Rational(12));
    CHECK(b2.classes[1].aggregate_coeff_explicit == Rational(24));
    CHECK(b2.classes[1].aggregate_coeff_fancy == Rational(3));
}
