#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cameral/cameral_cover.hpp"
#include "cameral/rng.hpp"

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

bool fiber_contains(const std::vector<FiberPoint>& pts, Complex a1, Complex a2,
                    double tol = 1e-8) {
    for (const auto& p : pts)
        if (std::abs(p.a1 - a1) < tol && std::abs(p.a2 - a2) < tol) return true;
    return false;
}

// orbit of a point under the group generated by the coordinate actions
std::vector<std::pair<Complex, Complex>> weyl_orbit(const RootSystemData& rs, Complex a1,
                                                    Complex a2) {
    std::vector<std::pair<Complex, Complex>> orbit{{a1, a2}};
    for (size_t i = 0; i < orbit.size(); ++i) {
        for (const RatMat2& g : rs.weyl_generators) {
            const Complex y1 =
                to_complex(g.a) * orbit[i].first + to_complex(g.b) * orbit[i].second;
            const Complex y2 =
                to_complex(g.c) * orbit[i].first + to_complex(g.d) * orbit[i].second;
            bool seen = false;
            for (auto& p : orbit)
                if (std::abs(p.first - y1) + std::abs(p.second - y2) < 1e-9) seen = true;
            if (!seen) orbit.emplace_back(y1, y2);
        }
    }
    return orbit;
}

} // namespace

TEST_CASE("fiber contains planted points and equals the Weyl orbit") {
    // G2 with (beta1, beta2)(0) = (7, 36) = I(1, 1)
    auto g = make(AlgebraId::G2, 1.0, {7.0}, {36.0});
    auto pts = fiber(g, Complex(0, 0));
    REQUIRE(pts.size() == 12);
    CHECK(fiber_contains(pts, Complex(1, 0), Complex(1, 0)));
    int mult = 0;
    for (const auto& p : pts) mult += p.multiplicity;
    CHECK(mult == 12);

    auto orbit = weyl_orbit(g.roots(), Complex(1, 0), Complex(1, 0));
    REQUIRE(orbit.size() == 12);
    for (const auto& o : orbit) CHECK(fiber_contains(pts, o.first, o.second));

    // A2 with (3, 0) = I(1, 1)
    auto a = make(AlgebraId::A2, 1.0, {3.0}, {0.0});
    pts = fiber(a, Complex(0, 0));
    REQUIRE(pts.size() == 6);
    CHECK(fiber_contains(pts, Complex(1, 0), Complex(1, 0)));
    for (const auto& o : weyl_orbit(a.roots(), Complex(1, 0), Complex(1, 0)))
        CHECK(fiber_contains(pts, o.first, o.second));

    // B2 with (5, 4) = I(1, 1)
    auto b = make(AlgebraId::B2, 1.0, {5.0}, {4.0});
    pts = fiber(b, Complex(0, 0));
    REQUIRE(pts.size() == 8);
    CHECK(fiber_contains(pts, Complex(1, 0), Complex(1, 0)));
    for (const auto& o : weyl_orbit(b.roots(), Complex(1, 0), Complex(1, 0)))
        CHECK(fiber_contains(pts, o.first, o.second));
}

TEST_CASE("fiber over random generic points has |W| simple points") {
    Xoshiro256 rng(9);
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::B2, AlgebraId::G2}) {
        auto d = make(id, 1.5, {rng.unit_disk() + 1.0, 0.4 * rng.unit_disk()},
                      {rng.unit_disk() + Complex(0, 1), 0.3 * rng.unit_disk()});
        auto pts = fiber(d, 0.2 * rng.unit_disk());
        CHECK(static_cast<int>(pts.size()) == d.roots().weyl_order);
        for (const auto& p : pts) CHECK(p.multiplicity == 1);
    }
}

TEST_CASE("ramification points: closed-form G2 short") {
    auto g = make(AlgebraId::G2, 1.0, {1.0}, {-0.5, 1.0}); // beta1 = 1, branch z0 = 1/2
    GenericityCertificate cert = certify_generic(g);
    const BranchPoint& bs = cert.points[0];
    REQUIRE(bs.class_index == 0);
    auto rams = ramification_points(g, bs);
    CHECK(rams.size() == 6);
    // the alpha1 root (index 0) gives (0, +-sqrt(beta1)) = (0, +-1)
    int hits = 0;
    for (const auto& rp : rams) {
        if (rp.root_index != 0) continue;
        ++hits;
        CHECK(std::abs(rp.a1) < 1e-10);
        CHECK(std::abs(std::abs(rp.a2) - 1.0) < 1e-10);
    }
    CHECK(hits == 2);

    // every ramification point lies in the fiber over its branch point
    auto pts = fiber(g, bs.z0);
    for (const auto& rp : rams) CHECK(fiber_contains(pts, rp.a1, rp.a2));

    // fiber over a branch point: |W|/2 distinct double points
    CHECK(pts.size() == 6);
    for (const auto& p : pts) CHECK(p.multiplicity == 2);
}

TEST_CASE("ramification counts per branch point: 6 / 3 / 4") {
    auto g = make(AlgebraId::G2, 1.0, {1.0}, {-0.5, 1.0});
    auto a = make(AlgebraId::A2, 2.0, {1.0}, {-0.7, 1.0});
    auto b = make(AlgebraId::B2, 2.0, {1.0}, {-0.4, 1.0});
    for (auto* d : {&g, &a, &b}) {
        GenericityCertificate cert = certify_generic(*d);
        const int expect = d->roots().weyl_order / 2;
        for (const auto& bp : cert.points) {
            auto rams = ramification_points(*d, bp);
            CHECK(static_cast<int>(rams.size()) == expect);
            auto pts = fiber(*d, bp.z0);
            CHECK(static_cast<int>(pts.size()) == expect);
            for (const auto& rp : rams) CHECK(fiber_contains(pts, rp.a1, rp.a2));
        }
    }
}

TEST_CASE("A2 closed-form sign: alpha2 = beta2 / (2 beta1) on the alpha1 divisor") {
    auto a = make(AlgebraId::A2, 3.0, {1.0}, {-0.7, 1.0});
    GenericityCertificate cert = certify_generic(a);
    REQUIRE(cert.points.size() == 2); // zeros of 4 - (z - 0.7)^2
    const BranchPoint& bp = cert.points[0];
    const Complex b1 = a.beta1.eval(bp.z0);
    const Complex b2 = a.beta2.eval(bp.z0);
    auto rams = ramification_points(a, bp);
    REQUIRE(rams.size() == 3);
    bool found = false;
    for (const auto& rp : rams) {
        if (rp.root_index != 0) continue;
        found = true;
        CHECK(std::abs(rp.a1) < 1e-10);
        CHECK(std::abs(rp.a2 - b2 / (2.0 * b1)) < 1e-9);
    }
    CHECK(found);
}

TEST_CASE("local_param: curve samples, uniformizer and sheet symmetry") {
    auto g = make(AlgebraId::G2, 1.0, {1.0}, {-0.5, 1.0});
    GenericityCertificate cert = certify_generic(g);
    auto rams = ramification_points(g, cert.points[0]);
    const RamPoint& rp = rams[0];
    const RootSystemData& rs = g.roots();

    const int n = 64;
    LocalParam lp = local_param(g, rp, 0.05, n);

    // samples satisfy the curve equations
    for (int m = 0; m < n; ++m) {
        const Complex r1 = rs.n_inv1.eval(lp.a1[m], lp.a2[m]) - g.beta1.eval(lp.z[m]);
        const Complex r2 = rs.n_inv2.eval(lp.a1[m], lp.a2[m]) - g.beta2.eval(lp.z[m]);
        CHECK(std::abs(r1) < 1e-10);
        CHECK(std::abs(r2) < 1e-10);
        // the vanishing root evaluated along the parametrization equals t
        const auto& root = rs.positive_roots[rp.root_index];
        const Complex lv =
            to_complex(root.coords.x) * lp.a1[m] + to_complex(root.coords.y) * lp.a2[m];
        CHECK(std::abs(lv - lp.t[m]) < 1e-10);
    }

    // z(t) - z0 starts at t^2
    LaurentData ld = laurent_extract(lp.z, lp.radius);
    const double scale = std::abs(ld.coeff(2)) * lp.radius * lp.radius;
    REQUIRE(scale > 0);
    CHECK(std::abs(ld.coeff(0) - rp.branch.z0) < 1e-8 * std::max(1.0, std::abs(rp.branch.z0)));
    CHECK(std::abs(ld.coeff(1)) * lp.radius < 1e-8 * scale);

    // dz/dt has a simple zero at t = 0
    std::vector<Complex> dz = spectral_derivative(lp.z, lp.radius);
    LaurentData dld = laurent_extract(dz, lp.radius);
    CHECK(std::abs(dld.coeff(0)) < 1e-8 * std::abs(dld.coeff(1)) * lp.radius);

    // alpha(-t) is the partner sheet: the root's reflection of alpha(t)
    const auto& root = rs.positive_roots[rp.root_index];
    const int half = n / 2;
    for (int m : {0, 3, 17}) {
        const Complex x1 = lp.a1[m], x2 = lp.a2[m];
        const Complex y1 = to_complex(root.reflection.a) * x1 +
                           to_complex(root.reflection.b) * x2;
        const Complex y2 = to_complex(root.reflection.c) * x1 +
                           to_complex(root.reflection.d) * x2;
        CHECK(std::abs(y1 - lp.a1[(m + half) % n]) < 1e-9);
        CHECK(std::abs(y2 - lp.a2[(m + half) % n]) < 1e-9);
    }

    // a radius reaching past the nearest branch point must fail
    CHECK_THROWS_AS(local_param(g, rp, 2.0, 64), NumericError);
    // and sample counts must be powers of two
    CHECK_THROWS_AS(local_param(g, rp, 0.05, 48), InvalidArgument);
}

TEST_CASE("fiber rejects points outside the chart") {
    auto g = make(AlgebraId::G2, 1.0, {7.0}, {36.0});
    CHECK_THROWS_AS(fiber(g, Complex(2.0, 0)), InvalidArgument);
}
