#pragma once

#include <vector>

#include "cameral/surface.hpp"

namespace cameral {

/// Value of the cubic at one base point, resolved by branch point and by
/// length class. total is the in-order sum of the per-branch contributions.
struct CubicValue {
    Complex total{0, 0};
    std::vector<Complex> per_class;
    struct Contribution {
        Complex z0{0, 0};
        int class_index = 0;
        Complex value{0, 0};
    };
    std::vector<Contribution> per_branch;
};

/// Explicit component form of the cubic: per class, the aggregate theorem
/// coefficient times the product of the explicit numerator forms over the
/// branch-point denominators b1^pow * j1(bare factor)^2.
CubicValue cubic_explicit(const LocalHitchinData& data, const GenericityCertificate& cert,
                          const TangentData& u, const TangentData& v, const TangentData& w);
CubicValue cubic_explicit(const LocalHitchinData& data, const TangentData& u,
                          const TangentData& v, const TangentData& w);

/// Discriminant-differential form: aggregate fancy coefficients against the
/// directional derivative of each stored class factor, same denominators in
/// terms of the stored factor's 1-jet.
CubicValue cubic_fancy(const LocalHitchinData& data, const GenericityCertificate& cert,
                       const TangentData& u, const TangentData& v, const TangentData& w);
CubicValue cubic_fancy(const LocalHitchinData& data, const TangentData& u,
                       const TangentData& v, const TangentData& w);

/// Langlands-involution invariance check (G2): evaluates the cubic on the
/// involuted instance with pushed tangents against the original.
struct TauInvarianceCheck {
    Complex lhs{0, 0}; // cubic at tau(b) on pushed tangents
    Complex rhs{0, 0}; // cubic at b
    double diff = 0.0; // relative, floored
    CubicValue image, original;
};
TauInvarianceCheck check_tau_invariance(const LocalHitchinData& data, const TangentData& u,
                                        const TangentData& v, const TangentData& w);

} // namespace cameral
