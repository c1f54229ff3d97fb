#pragma once

#include <vector>

#include "cameral/cameral_cover.hpp"
#include "cameral/cubic.hpp"

namespace cameral {

/// z-frame components of the Gauss-Manin derivative of the tautological
/// differential at a cover point: -(D I(alpha))^{-1} applied to the chart
/// values of the tangent vector.
struct NablaValue {
    Complex n1{0, 0}, n2{0, 0};
};

NablaValue nabla_sw(const LocalHitchinData& data, Complex z, Complex a1, Complex a2,
                    const TangentData& v);
inline NablaValue nabla_sw(const LocalHitchinData& data, const FiberPoint& p,
                           const TangentData& v) {
    return nabla_sw(data, p.z, p.a1, p.a2, v);
}

/// Logarithmic derivative of the discriminant in the direction u, evaluated
/// at z: sum over classes of d(factor)(u)/factor. Throws when z sits on the
/// branch locus.
Complex log_deriv_D(const LocalHitchinData& data, const TangentData& u, Complex z);

enum class ResidueMethod { Full, Reduced };

struct ResidueRecord {
    RamPoint ram;
    Complex value{0, 0};
    double laurent_tail_bound = 0.0;
    ResidueMethod method = ResidueMethod::Full;
    int n_samples = 0;
    double contour_radius = 0.0; // in the uniformizer t
};

struct OracleOptions {
    int n_start = 64;
    int n_max = 4096;
    double contour_factor = 0.1; // z-excursion as a fraction of the feature distance
    double stab_rel = 1e-10;
    double tail_rel = 1e-6;
};

/// Quadratic residue of the full integrand at one ramification point,
/// extracted as the a_{-2} Laurent coefficient on a contour around it.
/// method = Full uses the pulled-back logarithmic derivative; Reduced
/// replaces it by the class prefactor times d(factor)(u)/b1^pow over t^2.
ResidueRecord quadratic_residue_at(const LocalHitchinData& data,
                                   const GenericityCertificate& cert, const RamPoint& ram,
                                   const TangentData& u, const TangentData& v,
                                   const TangentData& w, ResidueMethod method,
                                   const OracleOptions& opts = {});

/// Closed-form per-point residue (the per-class coefficient over the bare
/// 1-jet squared); the reference the oracle is checked against.
Complex residue_closed_form(const LocalHitchinData& data, const BranchPoint& bp,
                            const TangentData& u, const TangentData& v, const TangentData& w);

struct OracleReport {
    CubicValue cubic;
    std::vector<ResidueRecord> records;
};

/// Half-sum of the full-method residues over every ramification point of
/// every branch point. Branch points fan out across threads.
OracleReport bp_cubic_detailed(const LocalHitchinData& data,
                               const GenericityCertificate& cert, const TangentData& u,
                               const TangentData& v, const TangentData& w,
                               const OracleOptions& opts = {});
CubicValue bp_cubic(const LocalHitchinData& data, const GenericityCertificate& cert,
                    const TangentData& u, const TangentData& v, const TangentData& w,
                    const OracleOptions& opts = {});
CubicValue bp_cubic(const LocalHitchinData& data, const TangentData& u, const TangentData& v,
                    const TangentData& w, const OracleOptions& opts = {});

/// Frame-corrected nabla limit: (dz/dt) * nabla components along shrinking
/// contours against the tabulated direction times
/// d(factor)(v)/j1(factor) at z0. Radii halve until the error target or the
/// halving cap; errors are relative maxima over four probe angles. The
/// uniformizer's orientation is a per-root frame choice the cubic never
/// sees; the sign is locked at the first radius and must stay fixed for
/// the errors to decrease.
struct NablaLimitResult {
    std::vector<double> radii;
    std::vector<double> errors;
    double final_error = 0.0;
    bool reached_target = false;
    double frame_sign = -1.0; // locked at the first radius, +-1
};
NablaLimitResult nabla_limit_check(const LocalHitchinData& data,
                                   const GenericityCertificate& cert, const RamPoint& ram,
                                   const TangentData& v, double target = 1e-6,
                                   int max_halvings = 24);

} // namespace cameral
