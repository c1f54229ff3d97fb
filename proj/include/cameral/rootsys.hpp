#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cameral/errors.hpp"
#include "cameral/ratpoly.hpp"

namespace cameral {

enum class AlgebraId { A2, B2, G2 };

std::string algebra_name(AlgebraId id);
std::optional<AlgebraId> algebra_from_name(const std::string& s);

enum class LengthClass { Short = 0, Long = 1 };

/// One positive root with everything the cover machinery needs: its
/// coordinates in the simple-root basis, the hyperplane kernel direction,
/// a preimage with L(w) = 1, and the coordinate action of its reflection.
struct PositiveRoot {
    RatVec2 coords;
    LengthClass length_class = LengthClass::Short;
    RatVec2 kernel_dir;   // spans ker L
    RatVec2 unit_preimage; // L(unit_preimage) = 1
    RatMat2 reflection;    // action on coordinate pairs (alpha1, alpha2)
    Rational inv1_on_kernel; // I1(kernel_dir)
    Rational inv2_on_kernel; // I2(kernel_dir)

    RatPoly2 linear_form() const { return RatPoly2::linear_form(coords.x, coords.y); }
};

/// Per-length-class tables: the discriminant factor in both coordinate
/// systems, the explicit/differential numerator forms and every theorem
/// coefficient attached to the class.
struct ClassData {
    std::string label; // "short", "long" or "all"
    LengthClass length_class = LengthClass::Short;
    RatPoly2 disc_alpha;   // +- product of squared roots of the class
    RatPoly2 disc_b;       // the same, in (b1, b2) via the invariants
    RatPoly2 explicit_jet; // bare polynomial in the theorems' denominators
    Rational factor_scale; // disc_b = factor_scale * explicit_jet
    RatPoly2 numer_u1, numer_u2; // explicit numerator N(u) = numer_u1*u1 + numer_u2*u2
    Rational numer_scale;        // d(disc_b)(u) = numer_scale * N(u)
    Rational nabla_killing_square;
    Rational per_point_residue_coeff;
    Rational aggregate_coeff_explicit;
    Rational aggregate_coeff_fancy;
    Rational reduced_prefactor; // class prefactor of the reduced residue method
    int points_per_root = 2;    // ramification points per root over one branch point
};

/// Langlands involution data (G2): the base involution is
/// (b1, b2) -> (b1, -b2 + 4/27 b1^3); at the Cartan level tau = sqrt(3)*M
/// with M rational, so pullbacks of the degree-d invariants are checked
/// exactly as 3^{d/2} * (I compose M).
struct TauData {
    RatMat2 cartan_action; // M
};

struct RootSystemData {
    AlgebraId id = AlgebraId::G2;
    int weyl_order = 0;
    std::pair<int, int> degrees{2, 6};
    RatPoly2 inv1, inv2;
    std::array<std::array<RatPoly2, 2>, 2> jacobian; // [i][j] = dI_{i+1}/dx_{j+1}
    std::vector<PositiveRoot> positive_roots;
    std::array<RatMat2, 2> weyl_generators; // coordinate actions of the simple reflections
    RatMat2 gram;    // <alpha_i, alpha_j> of the Euclidean realization
    RatMat2 killing; // sum over all roots of alpha (x) alpha
    std::vector<ClassData> classes;
    int b1_power = 2;
    std::vector<RatVec2> nabla_table; // per positive root
    std::optional<TauData> tau;

    ParamPoly fiber_resolvent; // Res_elim(I1 - c1, I2 - c2)
    Var fiber_elim = Var::x1;

    // double-precision caches for the numeric hot paths
    struct NumPoly2 {
        std::vector<std::tuple<int, int, double>> terms;
        Complex eval(Complex x1, Complex x2) const;
    };
    NumPoly2 n_inv1, n_inv2;
    std::array<std::array<NumPoly2, 2>, 2> n_jac;
    double n_killing[2][2] = {{0, 0}, {0, 0}};

    int class_count() const { return static_cast<int>(classes.size()); }
    int class_of_root(int root_index) const;
    const ClassData& class_data(int class_index) const { return classes.at(class_index); }
};

/// Exact tables for one algebra. The Weyl generators are derived from the
/// Euclidean realization through the Gram matrix (s_a(x) = x - <x,a^v> a),
/// not transcribed; verify_algebra gates the result.
RootSystemData build(AlgebraId id);

/// Shared immutable instance (built once per process).
const RootSystemData& root_system(AlgebraId id);

struct VerifyClause {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    AlgebraId algebra;
    std::vector<VerifyClause> clauses;
    bool all_pass() const {
        for (const auto& c : clauses)
            if (!c.pass) return false;
        return true;
    }
};

/// Exact identity suite over the tables: Weyl invariance, discriminant
/// factorizations, tau pullbacks (G2), the Jacobian-at-hyperplane tables,
/// Killing squares, coefficient consistency, counting identities and the
/// Weyl group structure. Every check is exact rational arithmetic.
VerificationReport verify_algebra(const RootSystemData& data);

/// Base involution of the G2 Hitchin base; throws for other algebras.
template <class T>
std::pair<T, T> langlands_tau(const RootSystemData& d, const T& b1, const T& b2) {
    if (d.id != AlgebraId::G2) throw InvalidArgument("involution undefined");
    if constexpr (std::is_same_v<T, Rational>) {
        return {b1, -b2 + Rational(4, 27) * b1 * b1 * b1};
    } else {
        return {b1, (b1 * b1 * b1) * (4.0 / 27.0) - b2};
    }
}

/// Differential of the base involution at b: (u1, u2) -> (u1, -u2 + 4/9 b1^2 u1).
template <class T>
std::pair<T, T> langlands_dtau(const RootSystemData& d, const T& b1, const T& u1,
                               const T& u2) {
    if (d.id != AlgebraId::G2) throw InvalidArgument("involution undefined");
    if constexpr (std::is_same_v<T, Rational>) {
        return {u1, -u2 + Rational(4, 9) * b1 * b1 * u1};
    } else {
        return {u1, (b1 * b1 * u1) * (4.0 / 9.0) - u2};
    }
}

} // namespace cameral
