#include "cameral/residue_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cameral/parallel.hpp"

namespace cameral {

namespace {

constexpr double kPi = std::numbers::pi;

struct Mat2c {
    Complex a, b, c, d;
    Complex det() const { return a * d - b * c; }
};

Mat2c jacobian_at(const RootSystemData& rs, Complex a1, Complex a2) {
    return {rs.n_jac[0][0].eval(a1, a2), rs.n_jac[0][1].eval(a1, a2),
            rs.n_jac[1][0].eval(a1, a2), rs.n_jac[1][1].eval(a1, a2)};
}

NablaValue solve_nabla(const Mat2c& j, Complex r1, Complex r2) {
    const Complex det = j.det();
    return {-(r1 * j.d - r2 * j.b) / det, -(j.a * r2 - j.c * r1) / det};
}

/// Chart polynomials of each class factor and of its directional
/// derivative along a fixed tangent; built once per oracle call.
struct DiscPack {
    std::vector<CPoly1> factor_z;
    std::vector<CPoly1> dfactor_z; // d(factor)(tangent) as a polynomial in z
};

DiscPack build_disc_pack(const LocalHitchinData& data, const TangentData& u) {
    const RootSystemData& rs = data.roots();
    DiscPack pack;
    for (const auto& cls : rs.classes) {
        pack.factor_z.push_back(
            trim_relative(compose_with_charts(cls.disc_b, data.beta1, data.beta2)));
        CPoly1 d1 = compose_with_charts(poly2_partial(cls.disc_b, Var::x1), data.beta1,
                                        data.beta2);
        CPoly1 d2 = compose_with_charts(poly2_partial(cls.disc_b, Var::x2), data.beta1,
                                        data.beta2);
        pack.dfactor_z.push_back(d1 * u.comp1 + d2 * u.comp2);
    }
    return pack;
}

Complex kappa_pair(const RootSystemData& rs, const NablaValue& a, const NablaValue& b) {
    return a.n1 * (rs.n_killing[0][0] * b.n1 + rs.n_killing[0][1] * b.n2) +
           a.n2 * (rs.n_killing[1][0] * b.n1 + rs.n_killing[1][1] * b.n2);
}

Complex cpow(Complex z, int n) {
    Complex out(1, 0);
    for (int i = 0; i < n; ++i) out *= z;
    return out;
}

double feature_distance(const LocalHitchinData& data, const GenericityCertificate& cert,
                        Complex z0) {
    double dist = std::max(data.chart.radius - std::abs(z0), 1e-12 * data.chart.radius);
    for (const BranchPoint& bp : cert.points) {
        const double d = std::abs(bp.z0 - z0);
        if (d > 1e-9 * std::max(1.0, std::abs(z0))) dist = std::min(dist, d);
    }
    return dist;
}

double alpha_scale(const LocalHitchinData& data, const RamPoint& ram) {
    return std::max({std::abs(ram.a1), std::abs(ram.a2),
                     std::sqrt(std::abs(data.beta1.eval(ram.branch.z0))), 1e-8});
}

/// Contour radius in t for a target z-excursion: pilots the t^2
/// coefficient of z(t) and shrinks until the excursion stays within range.
double contour_radius(const LocalHitchinData& data, const RamPoint& ram, double z_target,
                      double z_guard) {
    const double ascale = alpha_scale(data, ram);
    double t_pilot = 1e-3 * ascale;
    Complex c(0, 0);
    for (int attempt = 0; attempt < 8; ++attempt) {
        LocalParam lp = local_param(data, ram, t_pilot, 4, z_guard);
        c = (lp.z[0] - ram.branch.z0) / (lp.t[0] * lp.t[0]);
        if (std::abs(c) * t_pilot * t_pilot > 1e-14 * std::abs(lp.z[0] - ram.branch.z0) &&
            std::abs(c) > 0)
            break;
        t_pilot *= 10.0;
    }
    if (!(std::abs(c) > 0))
        throw NumericError("contour_radius: flat parametrization");
    double t_rad = std::sqrt(z_target / std::abs(c));
    for (int attempt = 0; attempt < 12; ++attempt) {
        try {
            LocalParam lp = local_param(data, ram, t_rad, 8, z_guard);
            double exc = 0.0;
            for (const Complex& z : lp.z) exc = std::max(exc, std::abs(z - ram.branch.z0));
            if (exc <= 1.3 * z_target) return t_rad;
        } catch (const NumericError&) {
        }
        t_rad *= 0.7;
    }
    throw NumericError("contour_radius: could not place the contour; "
                       "instance too degenerate");
}

} // namespace

NablaValue nabla_sw(const LocalHitchinData& data, Complex z, Complex a1, Complex a2,
                    const TangentData& v) {
    const RootSystemData& rs = data.roots();
    const Mat2c j = jacobian_at(rs, a1, a2);
    const double jscale =
        std::abs(j.a) + std::abs(j.b) + std::abs(j.c) + std::abs(j.d) + 1e-300;
    if (std::abs(j.det()) <= 1e-12 * jscale * jscale)
        throw NumericError("nabla_sw: at ramification; use local frame");
    return solve_nabla(j, v.comp1.eval(z), v.comp2.eval(z));
}

Complex log_deriv_D(const LocalHitchinData& data, const TangentData& u, Complex z) {
    const DiscPack pack = build_disc_pack(data, u);
    Complex out(0, 0);
    for (size_t c = 0; c < pack.factor_z.size(); ++c) {
        const Complex f = pack.factor_z[c].eval(z);
        const double fs = pack.factor_z[c].scale_at(std::abs(z));
        if (std::abs(f) <= 1e-14 * fs)
            throw NumericError("log_deriv_D: evaluation at a discriminant zero");
        out += pack.dfactor_z[c].eval(z) / f;
    }
    return out;
}

namespace {

ResidueRecord residue_impl(const LocalHitchinData& data, const RamPoint& ram,
                           const DiscPack& pack_u, const TangentData& v,
                           const TangentData& w, ResidueMethod method,
                           const OracleOptions& opts, double t_rad, double z_guard) {
    const RootSystemData& rs = data.roots();
    const ClassData& cls = rs.class_data(ram.class_index);

    auto sample_fn = [&](int n) {
        LocalParam lp = local_param(data, ram, t_rad, n, z_guard);
        // differentiate z - z0: same derivative, no O(1) constant swamping
        // the O(r^2) signal in the Fourier coefficients
        std::vector<Complex> zrel = lp.z;
        for (Complex& zz : zrel) zz -= ram.branch.z0;
        const std::vector<Complex> dz = spectral_derivative(zrel, t_rad);
        std::vector<Complex> g(n);
        for (int m = 0; m < n; ++m) {
            const Complex z = lp.z[m];
            const Mat2c j = jacobian_at(rs, lp.a1[m], lp.a2[m]);
            const NablaValue nv = solve_nabla(j, v.comp1.eval(z), v.comp2.eval(z));
            const NablaValue nw = solve_nabla(j, w.comp1.eval(z), w.comp2.eval(z));
            const Complex pairing = kappa_pair(rs, nv, nw);
            const Complex frame = dz[m] * dz[m];
            Complex lead;
            if (method == ResidueMethod::Full) {
                Complex ld(0, 0);
                for (size_t c = 0; c < pack_u.factor_z.size(); ++c)
                    ld += pack_u.dfactor_z[c].eval(z) / pack_u.factor_z[c].eval(z);
                lead = ld;
            } else {
                const Complex b1 = data.beta1.eval(z);
                lead = to_complex(cls.reduced_prefactor) *
                       pack_u.dfactor_z[ram.class_index].eval(z) /
                       (cpow(b1, rs.b1_power) * lp.t[m] * lp.t[m]);
            }
            g[m] = lead * pairing * frame;
        }
        return g;
    };

    Pole2Options popts;
    popts.n_start = opts.n_start;
    popts.n_max = opts.n_max;
    popts.stab_rel = opts.stab_rel;
    popts.tail_rel = opts.tail_rel;
    // slow Laurent decay means the contour sits too close to the chart's
    // validity boundary (the sqrt excursion model is only an estimate);
    // shrink and retry before giving up
    Pole2Result res;
    for (int attempt = 0;; ++attempt) {
        try {
            res = extract_double_pole(sample_fn, t_rad, popts);
            break;
        } catch (const NumericError&) {
            if (attempt >= 4) throw;
            t_rad *= 0.6;
        }
    }

    ResidueRecord rec;
    rec.ram = ram;
    rec.value = res.a_m2;
    rec.laurent_tail_bound = res.tail_bound;
    rec.method = method;
    rec.n_samples = res.n_used;
    rec.contour_radius = t_rad;
    return rec;
}

} // namespace

ResidueRecord quadratic_residue_at(const LocalHitchinData& data,
                                   const GenericityCertificate& cert, const RamPoint& ram,
                                   const TangentData& u, const TangentData& v,
                                   const TangentData& w, ResidueMethod method,
                                   const OracleOptions& opts) {
    const double dist = feature_distance(data, cert, ram.branch.z0);
    const double t_rad = contour_radius(data, ram, opts.contour_factor * dist, dist);
    const DiscPack pack_u = build_disc_pack(data, u);
    return residue_impl(data, ram, pack_u, v, w, method, opts, t_rad, dist);
}

Complex residue_closed_form(const LocalHitchinData& data, const BranchPoint& bp,
                            const TangentData& u, const TangentData& v,
                            const TangentData& w) {
    const RootSystemData& rs = data.roots();
    const ClassData& cls = rs.class_data(bp.class_index);
    const Complex b1 = data.beta1.eval(bp.z0);
    const Complex b2 = data.beta2.eval(bp.z0);
    const Complex n1 = cls.numer_u1.eval(b1, b2);
    const Complex n2 = cls.numer_u2.eval(b1, b2);
    Complex numer(1, 0);
    for (const TangentData* t : {&u, &v, &w})
        numer *= n1 * t->comp1.eval(bp.z0) + n2 * t->comp2.eval(bp.z0);
    const Complex jet = bp.jet1 / to_complex(cls.factor_scale);
    return to_complex(cls.per_point_residue_coeff) * numer /
           (cpow(b1, rs.b1_power) * jet * jet);
}

OracleReport bp_cubic_detailed(const LocalHitchinData& data,
                               const GenericityCertificate& cert, const TangentData& u,
                               const TangentData& v, const TangentData& w,
                               const OracleOptions& opts) {
    const RootSystemData& rs = data.roots();
    OracleReport out;
    out.cubic.per_class.assign(rs.class_count(), Complex(0, 0));

    std::vector<std::vector<ResidueRecord>> per_bp(cert.points.size());
    parallel_for_indexed(cert.points.size(), [&](size_t bi) {
        const BranchPoint& bp = cert.points[bi];
        const double dist = feature_distance(data, cert, bp.z0);
        const DiscPack pack_u = build_disc_pack(data, u);
        std::vector<ResidueRecord>& recs = per_bp[bi];
        for (const RamPoint& ram : ramification_points(data, bp)) {
            const double t_rad = contour_radius(data, ram, opts.contour_factor * dist, dist);
            recs.push_back(residue_impl(data, ram, pack_u, v, w, ResidueMethod::Full,
                                        opts, t_rad, dist));
        }
    });

    for (size_t bi = 0; bi < cert.points.size(); ++bi) {
        Complex contrib(0, 0);
        for (const ResidueRecord& rec : per_bp[bi]) {
            contrib += 0.5 * rec.value;
            out.records.push_back(rec);
        }
        out.cubic.per_branch.push_back({cert.points[bi].z0, cert.points[bi].class_index,
                                        contrib});
        out.cubic.per_class[cert.points[bi].class_index] += contrib;
        out.cubic.total += contrib;
    }
    return out;
}

CubicValue bp_cubic(const LocalHitchinData& data, const GenericityCertificate& cert,
                    const TangentData& u, const TangentData& v, const TangentData& w,
                    const OracleOptions& opts) {
    return bp_cubic_detailed(data, cert, u, v, w, opts).cubic;
}

CubicValue bp_cubic(const LocalHitchinData& data, const TangentData& u, const TangentData& v,
                    const TangentData& w, const OracleOptions& opts) {
    return bp_cubic(data, certify_generic(data), u, v, w, opts);
}

NablaLimitResult nabla_limit_check(const LocalHitchinData& data,
                                   const GenericityCertificate& cert, const RamPoint& ram,
                                   const TangentData& v, double target, int max_halvings) {
    const RootSystemData& rs = data.roots();
    const double dist = feature_distance(data, cert, ram.branch.z0);
    const double t_cap = contour_radius(data, ram, 0.05 * dist, dist);
    double r = std::min(t_cap, 1e-2 * alpha_scale(data, ram));

    // limit value: scalar * table vector, orientation locked below
    const DiscPack pack_v = build_disc_pack(data, v);
    const Complex scalar =
        pack_v.dfactor_z[ram.class_index].eval(ram.branch.z0) / ram.branch.jet1;
    const RatVec2& nv = rs.nabla_table.at(ram.root_index);
    const Complex l1 = scalar * to_complex(nv.x);
    const Complex l2 = scalar * to_complex(nv.y);
    const double lscale = std::max(std::hypot(std::abs(l1), std::abs(l2)), 1e-300);

    // (dz/dt) nabla has the closed on-curve form -adj(DI) gamma / L(adj(DI) beta'):
    // implicit differentiation of the curve equations with L(alpha) = t; the
    // determinant cancels, so the quantity stays O(1)-conditioned through t = 0.
    const PositiveRoot& root = rs.positive_roots.at(ram.root_index);
    const Complex r1 = to_complex(root.coords.x), r2 = to_complex(root.coords.y);
    const CPoly1 db1 = data.beta1.derivative();
    const CPoly1 db2 = data.beta2.derivative();

    NablaLimitResult out;
    const int n = 32;
    bool sign_locked = false;
    for (int h = 0; h <= max_halvings; ++h, r *= 0.5) {
        LocalParam lp = local_param(data, ram, r, n, dist);
        double err_plus = 0.0, err_minus = 0.0;
        for (int m = 0; m < n; m += n / 4) {
            const Mat2c j = jacobian_at(rs, lp.a1[m], lp.a2[m]);
            const Complex g1 = v.comp1.eval(lp.z[m]), g2 = v.comp2.eval(lp.z[m]);
            const Complex b1p = db1.eval(lp.z[m]), b2p = db2.eval(lp.z[m]);
            // adj(J) x = (j22 x1 - j12 x2, -j21 x1 + j11 x2)
            const Complex num1 = j.d * g1 - j.b * g2;
            const Complex num2 = -j.c * g1 + j.a * g2;
            const Complex den = r1 * (j.d * b1p - j.b * b2p) + r2 * (-j.c * b1p + j.a * b2p);
            const Complex t1 = -num1 / den;
            const Complex t2 = -num2 / den;
            err_plus = std::max(err_plus,
                                std::hypot(std::abs(t1 - l1), std::abs(t2 - l2)) / lscale);
            err_minus = std::max(err_minus,
                                 std::hypot(std::abs(t1 + l1), std::abs(t2 + l2)) / lscale);
        }
        if (!sign_locked) {
            out.frame_sign = err_plus <= err_minus ? 1.0 : -1.0;
            sign_locked = true;
        }
        const double err = out.frame_sign > 0 ? err_plus : err_minus;
        out.radii.push_back(r);
        out.errors.push_back(err);
        out.final_error = err;
        if (err <= target && out.errors.size() >= 4) {
            out.reached_target = true;
            break;
        }
    }
    return out;
}

} // namespace cameral
