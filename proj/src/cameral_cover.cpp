#include "cameral/cameral_cover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cameral {

namespace {

constexpr double kPi = std::numbers::pi;

double eval_abs_scale(const RootSystemData::NumPoly2& p, double x1, double x2) {
    double out = 0.0;
    for (const auto& [i, j, c] : p.terms)
        out += std::abs(c) * std::pow(x1, i) * std::pow(x2, j);
    return out;
}

struct Mat2c {
    Complex a, b, c, d;
    Complex det() const { return a * d - b * c; }
};

Mat2c jacobian_at(const RootSystemData& rs, Complex a1, Complex a2) {
    return {rs.n_jac[0][0].eval(a1, a2), rs.n_jac[0][1].eval(a1, a2),
            rs.n_jac[1][0].eval(a1, a2), rs.n_jac[1][1].eval(a1, a2)};
}

Complex to_c(const Rational& q) { return to_complex(q); }

// stable quadratic roots of A y^2 + B y + C
std::pair<Complex, Complex> solve_quadratic(Complex A, Complex B, Complex C) {
    Complex sq = std::sqrt(B * B - 4.0 * A * C);
    Complex q = (std::real(std::conj(B) * sq) >= 0.0) ? -0.5 * (B + sq) : -0.5 * (B - sq);
    if (q == Complex(0, 0)) return {Complex(0, 0), Complex(0, 0)};
    return {q / A, C / q};
}

} // namespace

Complex jacobian_determinant(const RootSystemData& rs, Complex a1, Complex a2) {
    return jacobian_at(rs, a1, a2).det();
}

std::vector<FiberPoint> fiber(const LocalHitchinData& data, Complex z, double tol) {
    const RootSystemData& rs = data.roots();
    if (std::abs(z) > data.chart.radius)
        throw InvalidArgument("fiber: z outside the chart");
    const Complex c1 = data.beta1.eval(z);
    const Complex c2 = data.beta2.eval(z);

    std::vector<Complex> res_coeffs = rs.fiber_resolvent.specialize(c1, c2);
    CPoly1 resolvent{std::move(res_coeffs)};
    if (resolvent.degree() != rs.weyl_order)
        throw NumericError("fiber: resolvent degenerated");
    RootSet rr = find_roots(resolvent, 1e-12);

    const Var kept = rs.fiber_resolvent.kept;
    double vscale = 1.0;
    for (const Complex& r : rr.roots) vscale = std::max(vscale, std::abs(r));

    // distinct kept-coordinate values
    std::vector<Complex> values;
    for (const Complex& r : rr.roots) {
        bool found = false;
        for (const Complex& v : values)
            if (std::abs(v - r) <= 1e-5 * vscale) {
                found = true;
                break;
            }
        if (!found) values.push_back(r);
    }

    const double scale1 = eval_abs_scale(rs.n_inv1, vscale, vscale) + std::abs(c1);
    const double scale2 = eval_abs_scale(rs.n_inv2, vscale, vscale) + std::abs(c2);

    auto system = [&](Complex a1, Complex a2) {
        Jet2 j;
        j.f1 = rs.n_inv1.eval(a1, a2) - c1;
        j.f2 = rs.n_inv2.eval(a1, a2) - c2;
        Mat2c m = jacobian_at(rs, a1, a2);
        j.j11 = m.a;
        j.j12 = m.b;
        j.j21 = m.c;
        j.j22 = m.d;
        return j;
    };

    // candidates: back-substitute each distinct value into the quadratic I1
    std::vector<FiberPoint> points;
    auto rel_residual = [&](Complex a1, Complex a2) {
        return std::max(std::abs(rs.n_inv1.eval(a1, a2) - c1) / scale1,
                        std::abs(rs.n_inv2.eval(a1, a2) - c2) / scale2);
    };
    auto vanish_measure = [&](Complex a1, Complex a2, const PositiveRoot** which) {
        const double lscale = std::max({std::abs(a1), std::abs(a2), 1e-12});
        double vmin = 1e300;
        for (const auto& r : rs.positive_roots) {
            Complex lv = to_c(r.coords.x) * a1 + to_c(r.coords.y) * a2;
            if (std::abs(lv) / lscale < vmin) {
                vmin = std::abs(lv) / lscale;
                if (which) *which = &r;
            }
        }
        return vmin;
    };
    auto try_candidate = [&](Complex a1, Complex a2) {
        if (rel_residual(a1, a2) > 1e-4) return; // not a fiber point
        Complex b1 = a1, b2 = a2;
        try {
            auto [p, q] = newton2([&](Complex x, Complex y) { return system(x, y); }, a1, a2,
                                  1e-13 * std::max(scale1, scale2), 40);
            b1 = p;
            b2 = q;
        } catch (const NumericError&) {
            // near-singular stall: keep the best iterate path below
        }
        // ramification points solve the system only to ~sqrt(eps) through
        // the singular Newton; pin the vanishing hyperplane and re-polish
        // on the nonsingular pair (L, I1 - c1), keeping the better point
        const PositiveRoot* broot = nullptr;
        if (vanish_measure(b1, b2, &broot) < 1e-4 && broot) {
            auto pinned = [&](Complex x, Complex y) {
                Jet2 j;
                j.f1 = to_c(broot->coords.x) * x + to_c(broot->coords.y) * y;
                j.f2 = rs.n_inv1.eval(x, y) - c1;
                Mat2c m = jacobian_at(rs, x, y);
                j.j11 = to_c(broot->coords.x);
                j.j12 = to_c(broot->coords.y);
                j.j21 = m.a;
                j.j22 = m.b;
                return j;
            };
            try {
                auto [p, q] = newton2(pinned, b1, b2, 1e-14 * scale1, 40);
                if (rel_residual(p, q) <= rel_residual(b1, b2)) {
                    b1 = p;
                    b2 = q;
                }
            } catch (const NumericError&) {
            }
        }
        FiberPoint fp;
        fp.z = z;
        fp.a1 = b1;
        fp.a2 = b2;
        fp.residual = std::max(std::abs(rs.n_inv1.eval(b1, b2) - c1),
                               std::abs(rs.n_inv2.eval(b1, b2) - c2));
        for (const auto& other : points)
            if (std::abs(other.a1 - fp.a1) <= 1e-6 * vscale &&
                std::abs(other.a2 - fp.a2) <= 1e-6 * vscale)
                return; // duplicate
        points.push_back(fp);
    };

    for (const Complex& val : values) {
        // I1 restricted to the known coordinate is a quadratic in the other
        Complex A, B, C;
        if (kept == Var::x2) {
            // solve I1(a1, val) = c1 in a1
            A = to_c(rs.inv1.coeff(2, 0));
            B = to_c(rs.inv1.coeff(1, 1)) * val + to_c(rs.inv1.coeff(1, 0));
            C = to_c(rs.inv1.coeff(0, 2)) * val * val + to_c(rs.inv1.coeff(0, 1)) * val +
                to_c(rs.inv1.coeff(0, 0)) - c1;
        } else {
            A = to_c(rs.inv1.coeff(0, 2));
            B = to_c(rs.inv1.coeff(1, 1)) * val + to_c(rs.inv1.coeff(0, 1));
            C = to_c(rs.inv1.coeff(2, 0)) * val * val + to_c(rs.inv1.coeff(1, 0)) * val +
                to_c(rs.inv1.coeff(0, 0)) - c1;
        }
        auto [y0, y1] = solve_quadratic(A, B, C);
        for (Complex other : {y0, y1}) {
            if (kept == Var::x2)
                try_candidate(other, val);
            else
                try_candidate(val, other);
        }
    }

    // multiplicity: 2 where some root functional vanishes
    int total = 0;
    double worst = 0.0;
    for (auto& fp : points) {
        fp.multiplicity = vanish_measure(fp.a1, fp.a2, nullptr) < 1e-6 ? 2 : 1;
        total += fp.multiplicity;
        worst = std::max(worst, fp.residual / std::max(scale1, scale2));
    }

    if (total != rs.weyl_order) {
        std::ostringstream os;
        os << "got " << total << " (distinct " << points.size() << "), expected "
           << rs.weyl_order;
        throw NumericError("fiber: count mismatch", os.str());
    }
    if (worst > tol) {
        std::ostringstream os;
        os << "worst relative residual " << worst;
        throw NumericError("fiber: residual failure", os.str());
    }

    std::sort(points.begin(), points.end(), [](const FiberPoint& p, const FiberPoint& q) {
        if (p.a1.real() != q.a1.real()) return p.a1.real() < q.a1.real();
        if (p.a1.imag() != q.a1.imag()) return p.a1.imag() < q.a1.imag();
        if (p.a2.real() != q.a2.real()) return p.a2.real() < q.a2.real();
        return p.a2.imag() < q.a2.imag();
    });
    return points;
}

std::vector<RamPoint> ramification_points(const LocalHitchinData& data, const BranchPoint& bp,
                                          double tol) {
    const RootSystemData& rs = data.roots();
    const Complex b1 = data.beta1.eval(bp.z0);
    const Complex b2 = data.beta2.eval(bp.z0);
    const ClassData& cls = rs.class_data(bp.class_index);

    std::vector<RamPoint> out;
    for (size_t ri = 0; ri < rs.positive_roots.size(); ++ri) {
        if (rs.class_of_root(static_cast<int>(ri)) != bp.class_index) continue;
        const PositiveRoot& root = rs.positive_roots[ri];
        const Complex k1 = to_c(root.kernel_dir.x);
        const Complex k2 = to_c(root.kernel_dir.y);
        const Complex q1 = to_c(root.inv1_on_kernel);
        const Complex q2 = to_c(root.inv2_on_kernel);

        std::vector<Complex> svals;
        if (cls.points_per_root == 2) {
            Complex s = std::sqrt(b1 / q1);
            svals = {s, -s};
        } else {
            // odd-degree second invariant pins the sign: s = b2 q1 / (b1 q2)
            svals = {b2 * q1 / (b1 * q2)};
        }

        for (Complex s : svals) {
            RamPoint rp;
            rp.branch = bp;
            rp.root_index = static_cast<int>(ri);
            rp.class_index = bp.class_index;
            rp.a1 = s * k1;
            rp.a2 = s * k2;
            // scale at the overall alpha magnitude: exact zeros in one
            // coordinate must not collapse the yardstick
            const double am = std::max({std::abs(rp.a1), std::abs(rp.a2), 1e-150});
            const double s1 = eval_abs_scale(rs.n_inv1, am, am) + std::abs(b1) + 1e-300;
            const double s2 = eval_abs_scale(rs.n_inv2, am, am) + std::abs(b2) + 1e-300;
            const double r1 = std::abs(rs.n_inv1.eval(rp.a1, rp.a2) - b1) / s1;
            const double r2 = std::abs(rs.n_inv2.eval(rp.a1, rp.a2) - b2) / s2;
            rp.residual = std::max(r1, r2);
            if (rp.residual > tol) {
                std::ostringstream os;
                os << "root " << ri << " over z0 = " << bp.z0 << ": compatibility residual "
                   << rp.residual;
                throw NumericError("ramification compatibility failure", os.str());
            }
            out.push_back(rp);
        }
    }
    return out;
}

double nearest_feature_distance(const LocalHitchinData& data, Complex z0) {
    const double R = data.chart.radius;
    double dist = std::max(R - std::abs(z0), 1e-12 * R);
    for (const CPoly1& f : discriminant_in_z(data)) {
        if (f.degree() < 1) continue;
        RootSet roots = find_roots(f, 1e-12);
        for (const Complex& r : roots.roots) {
            const double dd = std::abs(r - z0);
            if (dd > 1e-9 * std::max(1.0, std::abs(z0))) dist = std::min(dist, dd);
        }
    }
    return dist;
}

LocalParam local_param(const LocalHitchinData& data, const RamPoint& ram, double radius,
                       int n_samples, double z_guard) {
    const RootSystemData& rs = data.roots();
    if (n_samples < 4 || (n_samples & (n_samples - 1)) != 0)
        throw InvalidArgument("local_param: sample count must be a power of two >= 4");
    if (!(radius > 0)) throw InvalidArgument("local_param: radius must be positive");
    if (z_guard <= 0) z_guard = nearest_feature_distance(data, ram.branch.z0);

    const PositiveRoot& root = rs.positive_roots.at(ram.root_index);
    const Complex k1 = to_c(root.kernel_dir.x), k2 = to_c(root.kernel_dir.y);
    const Complex w1 = to_c(root.unit_preimage.x), w2 = to_c(root.unit_preimage.y);
    const Complex z0 = ram.branch.z0;

    const CPoly1 d_beta1 = data.beta1.derivative();
    const CPoly1 d_beta2 = data.beta2.derivative();

    const double eq_scale =
        std::max({1.0, std::abs(data.beta1.eval(z0)), std::abs(data.beta2.eval(z0)),
                  eval_abs_scale(rs.n_inv2, std::abs(ram.a1) + std::abs(k1),
                                 std::abs(ram.a2) + std::abs(k2))});
    const double newton_tol = 1e-14 * eq_scale;

    auto solve_at = [&](Complex t, Complex s_seed, Complex z_seed) {
        auto f = [&](Complex s, Complex z) {
            const Complex a1 = ram.a1 + t * w1 + s * k1;
            const Complex a2 = ram.a2 + t * w2 + s * k2;
            Jet2 j;
            j.f1 = rs.n_inv1.eval(a1, a2) - data.beta1.eval(z);
            j.f2 = rs.n_inv2.eval(a1, a2) - data.beta2.eval(z);
            Mat2c m = jacobian_at(rs, a1, a2);
            j.j11 = m.a * k1 + m.b * k2;
            j.j21 = m.c * k1 + m.d * k2;
            j.j12 = -d_beta1.eval(z);
            j.j22 = -d_beta2.eval(z);
            return j;
        };
        return newton2(f, s_seed, z_seed, newton_tol, 60);
    };

    LocalParam lp;
    lp.ram = ram;
    lp.radius = radius;

    // ramp from the center to t = radius, then walk the circle
    Complex s_cur(0, 0), z_cur = z0;
    const int ramp_steps = 8;
    for (int j = 1; j <= ramp_steps; ++j) {
        const Complex t = Complex(radius * double(j) / ramp_steps, 0.0);
        try {
            std::tie(s_cur, z_cur) = solve_at(t, s_cur, z_cur);
        } catch (const NumericError& e) {
            throw NumericError("local_param: continuation failed; use a smaller radius",
                               e.detail());
        }
    }

    lp.t.resize(n_samples);
    lp.z.resize(n_samples);
    lp.a1.resize(n_samples);
    lp.a2.resize(n_samples);
    Complex s_prev = s_cur, z_prev = z_cur;
    for (int m = 0; m < n_samples; ++m) {
        const double th = 2.0 * kPi * m / n_samples;
        const Complex t = radius * Complex(std::cos(th), std::sin(th));
        Complex s, zz;
        try {
            std::tie(s, zz) = solve_at(t, s_prev, z_prev);
        } catch (const NumericError& e) {
            throw NumericError("local_param: continuation failed; use a smaller radius",
                               e.detail());
        }
        if (std::abs(zz - z0) > 0.95 * z_guard)
            throw NumericError("local_param: radius reaches the nearest branch point; "
                               "use a smaller radius");
        if (m > 0 && std::abs(zz - z_prev) > 0.45 * z_guard)
            throw NumericError("local_param: sheet jump detected; use a smaller radius");
        lp.t[m] = t;
        lp.z[m] = zz;
        lp.a1[m] = ram.a1 + t * w1 + s * k1;
        lp.a2[m] = ram.a2 + t * w2 + s * k2;
        s_prev = s;
        z_prev = zz;
    }

    // closure: continuing one more step must land back on sample 0
    {
        auto [s, zz] = solve_at(lp.t[0], s_prev, z_prev);
        const double ascale = std::max({std::abs(lp.a1[0]), std::abs(lp.a2[0]), 1e-12});
        if (std::abs(zz - lp.z[0]) > 1e-7 * std::max(std::abs(z0), 1.0) ||
            std::abs((ram.a1 + lp.t[0] * w1 + s * k1) - lp.a1[0]) > 1e-7 * ascale)
            throw NumericError("local_param: sheet jump around the contour; "
                               "use a smaller radius");
    }
    return lp;
}

} // namespace cameral
