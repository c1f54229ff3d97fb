#include "cameral/cubic.hpp"

#include <cmath>

#include "cameral/errors.hpp"

namespace cameral {

namespace {

void require_all_zeros_in_disk(const GenericityCertificate& cert) {
    if (!cert.all_zeros_in_disk)
        throw GenericityError("zeros outside disk",
                              "the cubic sums over every discriminant zero; enlarge the chart");
}

Complex b1_power_value(Complex b1, int power) {
    Complex out(1, 0);
    for (int i = 0; i < power; ++i) out *= b1;
    return out;
}

CubicValue evaluate(const LocalHitchinData& data, const GenericityCertificate& cert,
                    const TangentData& u, const TangentData& v, const TangentData& w,
                    bool fancy) {
    require_all_zeros_in_disk(cert);
    const RootSystemData& rs = data.roots();
    CubicValue out;
    out.per_class.assign(rs.class_count(), Complex(0, 0));

    for (const BranchPoint& bp : cert.points) {
        const ClassData& cls = rs.class_data(bp.class_index);
        const Complex b1 = data.beta1.eval(bp.z0);
        const Complex b2 = data.beta2.eval(bp.z0);

        Complex numer(1, 0);
        Complex coeff, jet;
        if (fancy) {
            // directional derivative of the stored factor
            const Complex d1 = poly2_partial(cls.disc_b, Var::x1).eval(b1, b2);
            const Complex d2 = poly2_partial(cls.disc_b, Var::x2).eval(b1, b2);
            for (const TangentData* t : {&u, &v, &w})
                numer *= d1 * t->comp1.eval(bp.z0) + d2 * t->comp2.eval(bp.z0);
            coeff = to_complex(cls.aggregate_coeff_fancy);
            jet = bp.jet1;
        } else {
            const Complex n1 = cls.numer_u1.eval(b1, b2);
            const Complex n2 = cls.numer_u2.eval(b1, b2);
            for (const TangentData* t : {&u, &v, &w})
                numer *= n1 * t->comp1.eval(bp.z0) + n2 * t->comp2.eval(bp.z0);
            coeff = to_complex(cls.aggregate_coeff_explicit);
            jet = bp.jet1 / to_complex(cls.factor_scale); // 1-jet of the bare factor
        }

        const Complex denom = b1_power_value(b1, rs.b1_power) * jet * jet;
        const Complex contrib = coeff * numer / denom;
        out.per_branch.push_back({bp.z0, bp.class_index, contrib});
        out.per_class[bp.class_index] += contrib;
        out.total += contrib;
    }
    return out;
}

} // namespace

CubicValue cubic_explicit(const LocalHitchinData& data, const GenericityCertificate& cert,
                          const TangentData& u, const TangentData& v, const TangentData& w) {
    return evaluate(data, cert, u, v, w, /*fancy=*/false);
}

CubicValue cubic_explicit(const LocalHitchinData& data, const TangentData& u,
                          const TangentData& v, const TangentData& w) {
    return cubic_explicit(data, certify_generic(data), u, v, w);
}

CubicValue cubic_fancy(const LocalHitchinData& data, const GenericityCertificate& cert,
                       const TangentData& u, const TangentData& v, const TangentData& w) {
    return evaluate(data, cert, u, v, w, /*fancy=*/true);
}

CubicValue cubic_fancy(const LocalHitchinData& data, const TangentData& u,
                       const TangentData& v, const TangentData& w) {
    return cubic_fancy(data, certify_generic(data), u, v, w);
}

TauInvarianceCheck check_tau_invariance(const LocalHitchinData& data, const TangentData& u,
                                        const TangentData& v, const TangentData& w) {
    TauInvarianceCheck out;
    const LocalHitchinData image = tau_apply(data);
    const GenericityCertificate cert = certify_generic(data);
    const GenericityCertificate cert_image = certify_generic(image);
    const TangentData tu = tau_push_tangent(data, u);
    const TangentData tv = tau_push_tangent(data, v);
    const TangentData tw = tau_push_tangent(data, w);
    out.image = cubic_explicit(image, cert_image, tu, tv, tw);
    out.original = cubic_explicit(data, cert, u, v, w);
    out.lhs = out.image.total;
    out.rhs = out.original.total;
    out.diff = std::abs(out.lhs - out.rhs) /
               std::max({std::abs(out.lhs), std::abs(out.rhs), 1e-300});
    return out;
}

} // namespace cameral
