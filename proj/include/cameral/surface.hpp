#pragma once

#include <vector>

#include "cameral/cpoly.hpp"
#include "cameral/rootsys.hpp"

namespace cameral {

struct DiskChart {
    double radius = 1.0;
};

/// A base point in the single-chart model: the algebra plus the two chart
/// coefficient functions beta1, beta2 of the characteristic coefficients.
struct LocalHitchinData {
    AlgebraId algebra = AlgebraId::G2;
    DiskChart chart;
    CPoly1 beta1, beta2;

    const RootSystemData& roots() const { return root_system(algebra); }
};

/// Tangent vector at the base point: chart functions of the two components.
struct TangentData {
    CPoly1 comp1, comp2;
};

/// A zero of one discriminant-factor polynomial inside the chart.
struct BranchPoint {
    Complex z0{0, 0};
    int class_index = 0;
    Complex jet1{0, 0};          // derivative of the vanishing factor at z0
    double factor_residual = 0.0; // |factor(z0)|
};

struct CertifyOptions {
    double eps_nonvanish = 1e-8;   // |beta1|, |jet| lower bounds (relative)
    double delta_min_factor = 1e-3; // min pairwise separation, fraction of radius
    double root_tol = 1e-12;
};

/// Branch points plus the bookkeeping the cubic needs: per-class zero counts
/// against the factor degrees decide whether every discriminant zero lies
/// inside the chart.
struct GenericityCertificate {
    std::vector<BranchPoint> points; // sorted: class, then re, then im
    std::vector<int> in_disk_count;  // per class
    std::vector<int> factor_degree;  // per class (z-degree of the factor)
    bool all_zeros_in_disk = true;

    std::vector<BranchPoint> of_class(int class_index) const;
};

/// Discriminant factor polynomials in the chart coordinate, one per length
/// class: disc_b of each class composed with (beta1(z), beta2(z)).
std::vector<CPoly1> discriminant_in_z(const LocalHitchinData& data);

/// Checks the genericity clauses (simple zeros, pairwise separation across
/// factors, beta1 nonvanishing on the branch locus, A2: zeros of beta1 and
/// beta2 disjoint) and returns the branch points. Throws GenericityError
/// naming the violated clause.
GenericityCertificate certify_generic(const LocalHitchinData& data,
                                      const CertifyOptions& opts = {});

/// Langlands involution on the instance (G2): (beta1, beta2) ->
/// (beta1, -beta2 + 4/27 beta1^3).
LocalHitchinData tau_apply(const LocalHitchinData& data);

/// Pushforward of a tangent vector under the involution:
/// (u1, u2) -> (u1, -u2 + 4/9 beta1^2 u1).
TangentData tau_push_tangent(const LocalHitchinData& data, const TangentData& t);

} // namespace cameral
