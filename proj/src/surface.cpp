#include "cameral/surface.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cameral/numkernel.hpp"

namespace cameral {

namespace {

std::string cpx(const Complex& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

} // namespace

std::vector<BranchPoint> GenericityCertificate::of_class(int class_index) const {
    std::vector<BranchPoint> out;
    for (const auto& bp : points)
        if (bp.class_index == class_index) out.push_back(bp);
    return out;
}

std::vector<CPoly1> discriminant_in_z(const LocalHitchinData& data) {
    const RootSystemData& rs = data.roots();
    std::vector<CPoly1> out;
    for (const auto& cls : rs.classes)
        out.push_back(trim_relative(compose_with_charts(cls.disc_b, data.beta1, data.beta2)));
    return out;
}

GenericityCertificate certify_generic(const LocalHitchinData& data, const CertifyOptions& opts) {
    const RootSystemData& rs = data.roots();
    const double R = data.chart.radius;
    if (!(R > 0)) throw GenericityError("chart", "radius must be positive");
    const std::vector<CPoly1> factors = discriminant_in_z(data);

    GenericityCertificate cert;
    cert.in_disk_count.assign(factors.size(), 0);
    cert.factor_degree.assign(factors.size(), 0);

    const double beta1_scale = std::max(data.beta1.scale_at(R), 1e-300);
    const double dmin = opts.delta_min_factor * R;

    // A2 genericity asks directly that the zeros of beta1 and beta2 are
    // disjoint; a shared zero would also degenerate the discriminant, so
    // this check runs first to name the actual cause.
    if (data.algebra == AlgebraId::A2 && data.beta1.degree() >= 1 &&
        data.beta2.degree() >= 1) {
        RootSet r1 = find_roots(data.beta1, opts.root_tol);
        RootSet r2 = find_roots(data.beta2, opts.root_tol);
        for (const Complex& a : r1.roots) {
            if (std::abs(a) >= R) continue;
            for (const Complex& b : r2.roots) {
                if (std::abs(b) >= R) continue;
                if (std::abs(a - b) <= dmin)
                    throw GenericityError("b1 b2 zeros not disjoint",
                                          "common zero of beta1 and beta2 near z = " + cpx(a));
            }
        }
    }

    for (size_t ci = 0; ci < factors.size(); ++ci) {
        const CPoly1& f = factors[ci];
        if (f.is_zero())
            throw GenericityError("zero factor",
                                  "discriminant factor of class " + rs.classes[ci].label +
                                      " vanishes identically");
        cert.factor_degree[ci] = f.degree();
        if (f.degree() == 0) continue; // constant nonzero factor: no branch points
        const CPoly1 df = f.derivative();
        const double fscale = f.scale_at(R);
        RootSet roots = find_roots(f, opts.root_tol);
        for (size_t k = 0; k < roots.roots.size(); ++k) {
            Complex z0 = roots.roots[k];
            // polish to step-size convergence: the ramification systems
            // downstream need branch points at eval-roundoff accuracy
            for (int it = 0; it < 8; ++it) {
                const Complex d0 = df.eval(z0);
                if (std::abs(d0) <= 1e-300) break;
                const Complex step = f.eval(z0) / d0;
                z0 -= step;
                if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z0))) break;
            }
            if (std::abs(z0) >= R) continue;
            BranchPoint bp;
            bp.z0 = z0;
            bp.class_index = static_cast<int>(ci);
            bp.jet1 = df.eval(z0);
            bp.factor_residual = std::abs(f.eval(z0));
            // simplicity: the factor derivative must clear the floor
            if (std::abs(bp.jet1) <= opts.eps_nonvanish * fscale)
                throw GenericityError("simplicity", "double zero of the " +
                                                        rs.classes[ci].label +
                                                        " factor near z = " + cpx(z0));
            if (std::abs(data.beta1.eval(z0)) <= opts.eps_nonvanish * beta1_scale)
                throw GenericityError("b1 vanishes",
                                      "beta1 vanishes at the branch point z = " + cpx(z0));
            cert.points.push_back(bp);
            cert.in_disk_count[ci] += 1;
        }
    }

    // pairwise separation, all classes together
    for (size_t a = 0; a < cert.points.size(); ++a) {
        for (size_t b = a + 1; b < cert.points.size(); ++b) {
            const double dist = std::abs(cert.points[a].z0 - cert.points[b].z0);
            const bool same_class = cert.points[a].class_index == cert.points[b].class_index;
            if (dist <= (same_class ? opts.delta_min_factor * R : dmin)) {
                throw GenericityError(same_class ? "simplicity" : "separation",
                                      "branch points too close near z = " +
                                          cpx(cert.points[a].z0));
            }
        }
    }

    for (size_t ci = 0; ci < factors.size(); ++ci)
        if (cert.in_disk_count[ci] != cert.factor_degree[ci]) cert.all_zeros_in_disk = false;

    std::sort(cert.points.begin(), cert.points.end(), [](const BranchPoint& a,
                                                         const BranchPoint& b) {
        if (a.class_index != b.class_index) return a.class_index < b.class_index;
        if (a.z0.real() != b.z0.real()) return a.z0.real() < b.z0.real();
        return a.z0.imag() < b.z0.imag();
    });
    return cert;
}

LocalHitchinData tau_apply(const LocalHitchinData& data) {
    const RootSystemData& rs = data.roots();
    auto [t1, t2] = langlands_tau(rs, data.beta1, data.beta2);
    LocalHitchinData out = data;
    out.beta1 = t1;
    out.beta2 = t2;
    return out;
}

TangentData tau_push_tangent(const LocalHitchinData& data, const TangentData& t) {
    const RootSystemData& rs = data.roots();
    auto [u1, u2] = langlands_dtau(rs, data.beta1, t.comp1, t.comp2);
    return {u1, u2};
}

} // namespace cameral
