#include "cameral/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cameral {

std::string algebra_name(AlgebraId id) {
    switch (id) {
        case AlgebraId::A2: return "A2";
        case AlgebraId::B2: return "B2";
        case AlgebraId::G2: return "G2";
    }
    return "?";
}

std::optional<AlgebraId> algebra_from_name(const std::string& s) {
    if (s == "A2" || s == "a2") return AlgebraId::A2;
    if (s == "B2" || s == "b2") return AlgebraId::B2;
    if (s == "G2" || s == "g2") return AlgebraId::G2;
    return std::nullopt;
}

Complex RootSystemData::NumPoly2::eval(Complex x1, Complex x2) const {
    Complex out(0, 0);
    for (const auto& [i, j, c] : terms) {
        Complex t(c, 0);
        for (int a = 0; a < i; ++a) t *= x1;
        for (int b = 0; b < j; ++b) t *= x2;
        out += t;
    }
    return out;
}

int RootSystemData::class_of_root(int root_index) const {
    if (classes.size() == 1) return 0;
    return positive_roots.at(root_index).length_class == LengthClass::Short ? 0 : 1;
}

namespace {

RatPoly2 mono(int i, int j, const Rational& c) { return RatPoly2::monomial(i, j, c); }

/// Coordinate action of the reflection in the hyperplane of the root with
/// coordinates r, derived from the Gram matrix: s_a(x) = x - <x, a^v> a on
/// t*, transposed onto coordinate pairs.
RatMat2 reflection_coordinate_action(const RatMat2& gram, const RatVec2& r) {
    const RatVec2 gr = gram * r;
    const Rational norm = r.x * gr.x + r.y * gr.y;
    const Rational c1 = 2 * gr.x / norm;
    const Rational c2 = 2 * gr.y / norm;
    // columns of the t*-action are e_i - c_i r; we return the transpose
    return {Rational(1) - c1 * r.x, -(c1 * r.y), -(c2 * r.x), Rational(1) - c2 * r.y};
}

RatPoly2 squared_product_of_roots(const std::vector<PositiveRoot>& roots, LengthClass cls,
                                  bool all_classes, const Rational& sign) {
    RatPoly2 p{sign};
    for (const auto& r : roots) {
        if (!all_classes && r.length_class != cls) continue;
        RatPoly2 f = r.linear_form();
        p = p * f * f;
    }
    return p;
}

RootSystemData::NumPoly2 to_numeric(const RatPoly2& p) {
    RootSystemData::NumPoly2 out;
    for (const auto& [k, c] : p.terms())
        out.terms.emplace_back(k.first, k.second, to_double(c));
    return out;
}

void finish_tables(RootSystemData& d) {
    // jacobian, kernels, reflections, killing, resolvent, numeric caches
    d.jacobian[0][0] = poly2_partial(d.inv1, Var::x1);
    d.jacobian[0][1] = poly2_partial(d.inv1, Var::x2);
    d.jacobian[1][0] = poly2_partial(d.inv2, Var::x1);
    d.jacobian[1][1] = poly2_partial(d.inv2, Var::x2);

    for (auto& r : d.positive_roots) {
        r.kernel_dir = {-r.coords.y, r.coords.x};
        const Rational nn = r.coords.x * r.coords.x + r.coords.y * r.coords.y;
        r.unit_preimage = {r.coords.x / nn, r.coords.y / nn};
        r.reflection = reflection_coordinate_action(d.gram, r.coords);
        r.inv1_on_kernel = d.inv1.eval(r.kernel_dir.x, r.kernel_dir.y);
        r.inv2_on_kernel = d.inv2.eval(r.kernel_dir.x, r.kernel_dir.y);
    }

    d.weyl_generators[0] = reflection_coordinate_action(d.gram, {Rational(1), Rational(0)});
    d.weyl_generators[1] = reflection_coordinate_action(d.gram, {Rational(0), Rational(1)});

    RatMat2 k{0, 0, 0, 0};
    for (const auto& r : d.positive_roots) {
        k.a += 2 * r.coords.x * r.coords.x;
        k.b += 2 * r.coords.x * r.coords.y;
        k.c += 2 * r.coords.y * r.coords.x;
        k.d += 2 * r.coords.y * r.coords.y;
    }
    d.killing = k;

    d.fiber_resolvent = poly2_eliminate(d.inv1, d.inv2, d.fiber_elim);
    if (d.fiber_resolvent.degree() != d.weyl_order ||
        !d.fiber_resolvent.coeffs.back().is_constant())
        throw NumericError("fiber resolvent has unexpected degree");

    d.n_inv1 = to_numeric(d.inv1);
    d.n_inv2 = to_numeric(d.inv2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d.n_jac[i][j] = to_numeric(d.jacobian[i][j]);
    d.n_killing[0][0] = to_double(k.a);
    d.n_killing[0][1] = to_double(k.b);
    d.n_killing[1][0] = to_double(k.c);
    d.n_killing[1][1] = to_double(k.d);
}

RootSystemData build_g2() {
    RootSystemData d;
    d.id = AlgebraId::G2;
    d.weyl_order = 12;
    d.degrees = {2, 6};
    d.b1_power = 2;
    d.fiber_elim = Var::x1;

    d.inv1 = mono(2, 0, 3) + mono(1, 1, 3) + mono(0, 2, 1);
    d.inv2 = mono(6, 0, 4) + mono(5, 1, 12) + mono(4, 2, 13) + mono(3, 3, 6) + mono(2, 4, 1);

    d.gram = {rat(1), rat(-3, 2), rat(-3, 2), rat(3)};

    auto add_root = [&](long a, long b, LengthClass c) {
        PositiveRoot r;
        r.coords = {Rational(a), Rational(b)};
        r.length_class = c;
        d.positive_roots.push_back(r);
    };
    add_root(1, 0, LengthClass::Short);
    add_root(1, 1, LengthClass::Short);
    add_root(2, 1, LengthClass::Short);
    add_root(3, 1, LengthClass::Long);
    add_root(3, 2, LengthClass::Long);
    add_root(0, 1, LengthClass::Long);

    d.nabla_table = {
        {rat(1), rat(-3, 2)},    // alpha1
        {rat(1, 2), rat(-3, 2)}, // alpha1 + alpha2
        {rat(1, 2), rat(0)},     // 2 alpha1 + alpha2
        {rat(1, 2), rat(-1, 2)}, // 3 alpha1 + alpha2
        {rat(0), rat(1, 2)},     // 3 alpha1 + 2 alpha2
        {rat(1, 2), rat(-1)},    // alpha2
    };

    ClassData s;
    s.label = "short";
    s.length_class = LengthClass::Short;
    s.disc_alpha = squared_product_of_roots(d.positive_roots, LengthClass::Short, false, 1);
    s.disc_b = mono(0, 1, 1);
    s.explicit_jet = s.disc_b;
    s.factor_scale = 1;
    s.numer_u1 = RatPoly2();
    s.numer_u2 = RatPoly2(Rational(1));
    s.numer_scale = 1;
    s.nabla_killing_square = 12;
    s.per_point_residue_coeff = 12;
    s.aggregate_coeff_explicit = 36;
    s.aggregate_coeff_fancy = 36;
    s.reduced_prefactor = 1;
    s.points_per_root = 2;

    ClassData l;
    l.label = "long";
    l.length_class = LengthClass::Long;
    l.disc_alpha = squared_product_of_roots(d.positive_roots, LengthClass::Long, false, 1);
    l.disc_b = mono(1, 0, 0) + mono(3, 0, 4) + mono(0, 1, -27); // 4 b1^3 - 27 b2
    l.explicit_jet = mono(3, 0, rat(4, 27)) + mono(0, 1, -1);   // tau2 component
    l.factor_scale = 27;
    l.numer_u1 = mono(2, 0, rat(4, 9));
    l.numer_u2 = RatPoly2(Rational(-1));
    l.numer_scale = 27;
    l.nabla_killing_square = 4;
    l.per_point_residue_coeff = 12;
    l.aggregate_coeff_explicit = 36;
    l.aggregate_coeff_fancy = rat(4, 3);
    l.reduced_prefactor = rat(1, 9);
    l.points_per_root = 2;

    d.classes = {s, l};
    d.tau = TauData{RatMat2{rat(1), rat(2, 3), rat(-2), rat(-1)}};
    finish_tables(d);
    return d;
}

RootSystemData build_a2() {
    RootSystemData d;
    d.id = AlgebraId::A2;
    d.weyl_order = 6;
    d.degrees = {2, 3};
    d.b1_power = 2;
    d.fiber_elim = Var::x2;

    d.inv1 = mono(2, 0, 1) + mono(1, 1, 1) + mono(0, 2, 1);
    d.inv2 = mono(3, 0, -2) + mono(2, 1, -3) + mono(1, 2, 3) + mono(0, 3, 2);

    d.gram = {rat(2), rat(-1), rat(-1), rat(2)};

    auto add_root = [&](long a, long b) {
        PositiveRoot r;
        r.coords = {Rational(a), Rational(b)};
        r.length_class = LengthClass::Short;
        d.positive_roots.push_back(r);
    };
    add_root(1, 0);
    add_root(0, 1);
    add_root(1, 1);

    d.nabla_table = {
        {rat(1), rat(-1, 2)}, // alpha1
        {rat(-1, 2), rat(1)}, // alpha2
        {rat(1, 2), rat(1, 2)}, // alpha1 + alpha2
    };

    ClassData c;
    c.label = "all";
    c.length_class = LengthClass::Short;
    c.disc_alpha = squared_product_of_roots(d.positive_roots, LengthClass::Short, true, -1);
    c.disc_b = mono(3, 0, rat(-4, 27)) + mono(0, 2, rat(1, 27)); // -(1/27)(4 b1^3 - b2^2)
    c.explicit_jet = mono(3, 0, 4) + mono(0, 2, -1);             // 4 b1^3 - b2^2
    c.factor_scale = rat(-1, 27);
    c.numer_u1 = mono(2, 0, 12);
    c.numer_u2 = mono(0, 1, -2);
    c.numer_scale = rat(-1, 27);
    // The sign of the single-class A2 coefficients is pinned by the residue
    // oracle (the half-sum of quadratic residues of the master formula):
    // |Phi+| = 3 is odd, so the discriminant is minus the product of squared
    // roots and the per-point residue comes out positive.
    c.nabla_killing_square = 3;
    c.per_point_residue_coeff = rat(1, 9);
    c.aggregate_coeff_explicit = rat(1, 6);
    c.aggregate_coeff_fancy = rat(-9, 2);
    c.reduced_prefactor = -1;
    c.points_per_root = 1;

    d.classes = {c};
    finish_tables(d);
    return d;
}

RootSystemData build_b2() {
    RootSystemData d;
    d.id = AlgebraId::B2;
    d.weyl_order = 8;
    d.degrees = {2, 4};
    d.b1_power = 1;
    d.fiber_elim = Var::x2;

    d.inv1 = mono(2, 0, 1) + mono(1, 1, 2) + mono(0, 2, 2);
    d.inv2 = mono(2, 2, 1) + mono(1, 3, 2) + mono(0, 4, 1);

    d.gram = {rat(2), rat(-1), rat(-1), rat(1)};

    auto add_root = [&](long a, long b, LengthClass c) {
        PositiveRoot r;
        r.coords = {Rational(a), Rational(b)};
        r.length_class = c;
        d.positive_roots.push_back(r);
    };
    add_root(1, 0, LengthClass::Long);
    add_root(1, 1, LengthClass::Short);
    add_root(1, 2, LengthClass::Long);
    add_root(0, 1, LengthClass::Short);

    d.nabla_table = {
        {rat(1), rat(-1, 2)}, // alpha1
        {rat(1), rat(0)},     // alpha1 + alpha2
        {rat(0), rat(1, 2)},  // alpha1 + 2 alpha2
        {rat(-1), rat(1)},    // alpha2
    };

    ClassData s;
    s.label = "short";
    s.length_class = LengthClass::Short;
    s.disc_alpha = squared_product_of_roots(d.positive_roots, LengthClass::Short, false, 1);
    s.disc_b = mono(0, 1, 1);
    s.explicit_jet = s.disc_b;
    s.factor_scale = 1;
    s.numer_u1 = RatPoly2();
    s.numer_u2 = RatPoly2(Rational(1));
    s.numer_scale = 1;
    s.nabla_killing_square = 6;
    s.per_point_residue_coeff = 6;
    s.aggregate_coeff_explicit = 12;
    s.aggregate_coeff_fancy = 12;
    s.reduced_prefactor = 1;
    s.points_per_root = 2;

    ClassData l;
    l.label = "long";
    l.length_class = LengthClass::Long;
    l.disc_alpha = squared_product_of_roots(d.positive_roots, LengthClass::Long, false, 1);
    l.disc_b = mono(2, 0, 1) + mono(0, 1, -4); // b1^2 - 4 b2
    l.explicit_jet = l.disc_b;
    l.factor_scale = 1;
    l.numer_u1 = mono(1, 0, 1);
    l.numer_u2 = RatPoly2(Rational(-2));
    l.numer_scale = 2;
    l.nabla_killing_square = 3;
    l.per_point_residue_coeff = 12;
    l.aggregate_coeff_explicit = 24;
    l.aggregate_coeff_fancy = 3;
    l.reduced_prefactor = rat(1, 2);
    l.points_per_root = 2;

    d.classes = {s, l};
    finish_tables(d);
    return d;
}

/// Reference values of the Jacobi matrix on each root hyperplane, the
/// fixed side of the jacobian-table verification.
std::array<std::array<RatPoly2, 2>, 2> expected_jacobian_on_hyperplane(AlgebraId id,
                                                                       int root_index) {
    auto m = [&](std::initializer_list<RatPoly2> v) {
        std::array<std::array<RatPoly2, 2>, 2> out;
        auto it = v.begin();
        out[0][0] = *it++;
        out[0][1] = *it++;
        out[1][0] = *it++;
        out[1][1] = *it++;
        return out;
    };
    const RatPoly2 z;
    switch (id) {
        case AlgebraId::G2:
            switch (root_index) {
                case 0: return m({mono(0, 1, 3), mono(0, 1, 2), z, z});
                case 1: return m({mono(1, 0, 3), mono(1, 0, 1), z, z});
                case 2: return m({z, mono(1, 0, -1), z, z});
                case 3:
                    return m({mono(0, 1, 1), mono(0, 1, 1), mono(0, 5, rat(4, 81)),
                              mono(0, 5, rat(4, 81))});
                case 4:
                    return m({mono(0, 1, -1), z, mono(0, 5, rat(-4, 81)), z});
                case 5:
                    return m({mono(1, 0, 6), mono(1, 0, 3), mono(5, 0, 24), mono(5, 0, 12)});
            }
            break;
        case AlgebraId::A2:
            switch (root_index) {
                case 0:
                    return m({mono(0, 1, 1), mono(0, 1, 2), mono(0, 2, 3), mono(0, 2, 6)});
                case 1:
                    return m({mono(1, 0, 2), mono(1, 0, 1), mono(2, 0, -6), mono(2, 0, -3)});
                case 2:
                    return m({mono(1, 0, 1), mono(1, 0, -1), mono(2, 0, 3), mono(2, 0, -3)});
            }
            break;
        case AlgebraId::B2:
            switch (root_index) {
                case 0:
                    return m({mono(0, 1, 2), mono(0, 1, 4), mono(0, 3, 2), mono(0, 3, 4)});
                case 1: return m({z, mono(0, 1, 2), z, z});
                case 2:
                    return m({mono(0, 1, -2), z, mono(0, 3, -2), z});
                case 3: return m({mono(1, 0, 2), mono(1, 0, 2), z, z});
            }
            break;
    }
    throw InvalidArgument("expected_jacobian_on_hyperplane: bad root index");
}

RatMat2 pinned_killing(AlgebraId id) {
    switch (id) {
        case AlgebraId::G2: return {rat(48), rat(24), rat(24), rat(16)};
        case AlgebraId::A2: return {rat(4), rat(2), rat(2), rat(4)};
        case AlgebraId::B2: return {rat(6), rat(6), rat(6), rat(12)};
    }
    throw InvalidArgument("pinned_killing");
}

bool coords_in_root_set(const RatVec2& v, const std::vector<PositiveRoot>& roots) {
    for (const auto& r : roots) {
        if (v == r.coords) return true;
        if (v.x == -r.coords.x && v.y == -r.coords.y) return true;
    }
    return false;
}

} // namespace

RootSystemData build(AlgebraId id) {
    switch (id) {
        case AlgebraId::A2: return build_a2();
        case AlgebraId::B2: return build_b2();
        case AlgebraId::G2: return build_g2();
    }
    throw InvalidArgument("build: bad algebra");
}

const RootSystemData& root_system(AlgebraId id) {
    static const RootSystemData a2 = build(AlgebraId::A2);
    static const RootSystemData b2 = build(AlgebraId::B2);
    static const RootSystemData g2 = build(AlgebraId::G2);
    switch (id) {
        case AlgebraId::A2: return a2;
        case AlgebraId::B2: return b2;
        case AlgebraId::G2: return g2;
    }
    throw InvalidArgument("root_system: bad algebra");
}

VerificationReport verify_algebra(const RootSystemData& d) {
    VerificationReport rep;
    rep.algebra = d.id;
    auto clause = [&](const std::string& id, bool pass, const std::string& detail = {}) {
        rep.clauses.push_back({id, pass, detail});
    };

    // (a) Weyl invariance of the invariants
    {
        bool ok = true;
        std::string detail;
        for (int g = 0; g < 2 && ok; ++g) {
            for (const RatPoly2* inv : {&d.inv1, &d.inv2}) {
                RatPoly2 diff = poly2_compose_linear(*inv, d.weyl_generators[g]) - *inv;
                if (!diff.is_zero()) {
                    ok = false;
                    detail = "generator " + std::to_string(g + 1) + ": diff = " + diff.str();
                    break;
                }
            }
        }
        clause("weyl_invariance", ok, detail);
    }

    // generators are involutions and permute the root set up to sign
    {
        bool ok = true;
        std::string detail;
        for (int g = 0; g < 2; ++g) {
            if (!(d.weyl_generators[g] * d.weyl_generators[g] == RatMat2::identity())) {
                ok = false;
                detail = "generator " + std::to_string(g + 1) + " is not an involution";
            }
        }
        clause("generators_involutive", ok, detail);

        ok = true;
        detail.clear();
        for (int g = 0; g < 2 && ok; ++g) {
            const RatMat2 t = d.weyl_generators[g].transposed();
            for (const auto& r : d.positive_roots) {
                if (!coords_in_root_set(t * r.coords, d.positive_roots)) {
                    ok = false;
                    detail = "generator " + std::to_string(g + 1) + " moves a root off the set";
                    break;
                }
            }
        }
        clause("root_permutation", ok, detail);
    }

    // Weyl group order via closure
    {
        std::vector<RatMat2> group{RatMat2::identity()};
        auto contains = [&](const RatMat2& m) {
            return std::any_of(group.begin(), group.end(),
                               [&](const RatMat2& g) { return g == m; });
        };
        bool grew = true;
        while (grew && group.size() <= 64) {
            grew = false;
            const size_t n = group.size();
            for (size_t i = 0; i < n; ++i) {
                for (int g = 0; g < 2; ++g) {
                    RatMat2 m = group[i] * d.weyl_generators[g];
                    if (!contains(m)) {
                        group.push_back(m);
                        grew = true;
                    }
                }
            }
        }
        clause("weyl_group_order", static_cast<int>(group.size()) == d.weyl_order,
               "order " + std::to_string(group.size()) + ", expected " +
                   std::to_string(d.weyl_order));
    }

    // Killing form: derived matrix equals the pinned matrix and is SPD
    {
        const RatMat2 expect = pinned_killing(d.id);
        clause("killing_matrix", d.killing == expect,
               d.killing == expect ? "" : "derived Killing matrix differs from the pinned one");
        const bool spd = d.killing.b == d.killing.c && sgn(d.killing.a) > 0 &&
                         sgn(d.killing.a * d.killing.d - d.killing.b * d.killing.c) > 0;
        clause("killing_spd", spd);
    }

    // (b) discriminant factorization per class
    {
        bool ok = true;
        std::string detail;
        for (const auto& cls : d.classes) {
            RatPoly2 diff = poly2_substitute(cls.disc_b, d.inv1, d.inv2) - cls.disc_alpha;
            if (!diff.is_zero()) {
                ok = false;
                detail = cls.label + ": diff = " + diff.str();
                break;
            }
        }
        clause("discriminant_factorization", ok, detail);
    }

    // (c) tau pullbacks (G2 only): tau = sqrt(3) M, so by homogeneity
    // tau* I1 = 3 (I1 o M) and tau* I2 = 27 (I2 o M)
    if (d.id == AlgebraId::G2) {
        bool ok = d.tau.has_value();
        std::string detail;
        if (ok) {
            const RatMat2& m = d.tau->cartan_action;
            RatPoly2 p1 = poly2_compose_linear(d.inv1, m) * Rational(3) - d.inv1;
            RatPoly2 expect2 = -d.inv2 + d.inv1.pow(3) * rat(4, 27);
            RatPoly2 p2 = poly2_compose_linear(d.inv2, m) * Rational(27) - expect2;
            if (!p1.is_zero()) {
                ok = false;
                detail = "tau* I1 - I1 = " + p1.str();
            } else if (!p2.is_zero()) {
                ok = false;
                detail = "tau* I2 + I2 - 4/27 I1^3 = " + p2.str();
            }
        } else {
            detail = "tau data missing";
        }
        clause("tau_pullback", ok, detail);
    }

    // jacobian really is the gradient table
    {
        bool ok = d.jacobian[0][0] == poly2_partial(d.inv1, Var::x1) &&
                  d.jacobian[0][1] == poly2_partial(d.inv1, Var::x2) &&
                  d.jacobian[1][0] == poly2_partial(d.inv2, Var::x1) &&
                  d.jacobian[1][1] == poly2_partial(d.inv2, Var::x2);
        clause("jacobian_is_gradient", ok);
    }

    // (d) Jacobian reduced mod each root hyperplane matches the tables
    {
        bool ok = true;
        std::string detail;
        for (size_t r = 0; r < d.positive_roots.size() && ok; ++r) {
            const RatPoly2 form = d.positive_roots[r].linear_form();
            const auto expect = expected_jacobian_on_hyperplane(d.id, static_cast<int>(r));
            for (int i = 0; i < 2 && ok; ++i) {
                for (int j = 0; j < 2; ++j) {
                    RatPoly2 lhs = poly2_reduce_mod_linear(d.jacobian[i][j], form);
                    RatPoly2 rhs = poly2_reduce_mod_linear(expect[i][j], form);
                    if (lhs != rhs) {
                        ok = false;
                        std::ostringstream os;
                        os << "root " << r << " entry (" << i << "," << j
                           << "): diff = " << (lhs - rhs).str();
                        detail = os.str();
                        break;
                    }
                }
            }
        }
        clause("jacobian_hyperplane_tables", ok, detail);
    }

    // (e) Killing squares of the nabla vectors
    {
        bool ok = d.nabla_table.size() == d.positive_roots.size();
        std::string detail = ok ? "" : "nabla table size mismatch";
        for (size_t r = 0; ok && r < d.positive_roots.size(); ++r) {
            const auto& cls = d.classes[d.class_of_root(static_cast<int>(r))];
            Rational q = bilinear(d.killing, d.nabla_table[r], d.nabla_table[r]);
            if (q != cls.nabla_killing_square) {
                ok = false;
                detail = "root " + std::to_string(r) + ": square " + to_string(q) +
                         " expected " + to_string(cls.nabla_killing_square);
            }
        }
        clause("killing_squares", ok, detail);
    }

    // (f) coefficient consistency between the fancy and explicit forms
    {
        bool ok = true;
        std::string detail;
        for (const auto& cls : d.classes) {
            RatPoly2 jet_diff = cls.disc_b - cls.explicit_jet * cls.factor_scale;
            RatPoly2 n1_diff = poly2_partial(cls.disc_b, Var::x1) - cls.numer_u1 * cls.numer_scale;
            RatPoly2 n2_diff = poly2_partial(cls.disc_b, Var::x2) - cls.numer_u2 * cls.numer_scale;
            const Rational ratio =
                cls.numer_scale * cls.numer_scale * cls.numer_scale /
                (cls.factor_scale * cls.factor_scale);
            const bool agg_ok = cls.aggregate_coeff_explicit == cls.aggregate_coeff_fancy * ratio;
            const bool pp_ok = cls.per_point_residue_coeff ==
                               cls.reduced_prefactor * cls.nabla_killing_square * ratio;
            if (!jet_diff.is_zero() || !n1_diff.is_zero() || !n2_diff.is_zero() || !agg_ok ||
                !pp_ok) {
                ok = false;
                detail = cls.label + ": ";
                if (!jet_diff.is_zero()) detail += "jet diff " + jet_diff.str();
                else if (!n1_diff.is_zero()) detail += "numer_u1 diff " + n1_diff.str();
                else if (!n2_diff.is_zero()) detail += "numer_u2 diff " + n2_diff.str();
                else if (!agg_ok) detail += "aggregate fancy/explicit mismatch";
                else detail += "per-point coefficient mismatch";
                break;
            }
        }
        clause("coefficient_consistency", ok, detail);
    }

    // counting identity: aggregate = per-point * roots * points per root * 1/2
    {
        bool ok = true;
        std::string detail;
        for (size_t ci = 0; ci < d.classes.size(); ++ci) {
            const auto& cls = d.classes[ci];
            long n_roots = 0;
            for (size_t r = 0; r < d.positive_roots.size(); ++r)
                if (d.class_of_root(static_cast<int>(r)) == static_cast<int>(ci)) ++n_roots;
            Rational expect = cls.per_point_residue_coeff * Rational(n_roots) *
                              Rational(cls.points_per_root) / Rational(2);
            if (expect != cls.aggregate_coeff_explicit) {
                ok = false;
                detail = cls.label + ": " + to_string(expect) + " vs " +
                         to_string(cls.aggregate_coeff_explicit);
                break;
            }
        }
        clause("counting_identity", ok, detail);
    }

    // fiber resolvent shape
    {
        bool ok = d.fiber_resolvent.degree() == d.weyl_order &&
                  !d.fiber_resolvent.coeffs.empty() &&
                  d.fiber_resolvent.coeffs.back().is_constant() &&
                  !d.fiber_resolvent.coeffs.back().is_zero();
        clause("resolvent_degree", ok,
               "degree " + std::to_string(d.fiber_resolvent.degree()));
    }

    return rep;
}

} // namespace cameral
