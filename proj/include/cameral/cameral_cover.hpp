#pragma once

#include <vector>

#include "cameral/numkernel.hpp"
#include "cameral/surface.hpp"

namespace cameral {

/// One point of the cameral fiber over z, with its multiplicity as a
/// solution of the defining system (2 exactly at ramification points).
struct FiberPoint {
    Complex z{0, 0};
    Complex a1{0, 0}, a2{0, 0};
    double residual = 0.0;
    int multiplicity = 1;
};

/// The fiber over z: |W| points counted with multiplicity, solved through
/// the precomputed elimination resolvent, back-substitution into the
/// degree-2 invariant and Newton polish.
std::vector<FiberPoint> fiber(const LocalHitchinData& data, Complex z, double tol = 1e-8);

/// Ramification point of the cover above a branch point: the vanishing
/// positive root, the alpha coordinates and the compatibility residual.
struct RamPoint {
    BranchPoint branch;
    int root_index = 0;
    int class_index = 0;
    Complex a1{0, 0}, a2{0, 0};
    double residual = 0.0;
};

/// Solves the closed-form ramification systems over one certified branch
/// point: every positive root of the branch point's class contributes
/// points_per_root points (both square-root branches where applicable).
std::vector<RamPoint> ramification_points(const LocalHitchinData& data, const BranchPoint& bp,
                                          double tol = 1e-8);

/// Local parametrization of the cameral curve around a ramification point,
/// uniformized by the value t of the vanishing root. Samples the two-sheet
/// neighbourhood on the circle |t| = radius.
struct LocalParam {
    RamPoint ram;
    double radius = 0.0;
    std::vector<Complex> t, z, a1, a2; // samples, m = 0..N-1, t_m = radius e^{2 pi i m/N}
};

/// Newton continuation around the circle, seeded sample-to-sample. N must
/// be a power of two. z_guard > 0 caps |z - z0| (defaults to the distance
/// to the nearest other branch point, computed from the instance); throws
/// NumericError advising a smaller radius on sheet jumps or guard hits.
LocalParam local_param(const LocalHitchinData& data, const RamPoint& ram, double radius,
                       int n_samples, double z_guard = 0.0);

/// Distance from z0 to the nearest other branch point of the instance
/// (chart-radius capped). Used by the contour policy.
double nearest_feature_distance(const LocalHitchinData& data, Complex z0);

/// det D I at a point, from the numeric Jacobian cache.
Complex jacobian_determinant(const RootSystemData& rs, Complex a1, Complex a2);

} // namespace cameral
