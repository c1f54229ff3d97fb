#include "cameral/instance.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "cameral/rng.hpp"

namespace cameral {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json coeffs_to_json(const std::vector<Complex>& c) {
    json arr = json::array();
    for (const Complex& z : c) arr.push_back(complex_to_json(z));
    return arr;
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ConfigError("complex values must be [re, im] number pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> coeffs_from_json(const json& j, const std::string& name) {
    if (!j.is_array() || j.empty())
        throw ConfigError(name + ": coefficient list must be a nonempty array");
    std::vector<Complex> out;
    for (const auto& e : j) out.push_back(complex_from_json(e));
    return out;
}

CPoly1 to_poly(const std::vector<Complex>& c) { return CPoly1{std::vector<Complex>(c)}; }

} // namespace

LocalHitchinData InstanceConfig::instance() const {
    LocalHitchinData d;
    d.algebra = algebra;
    d.chart.radius = chart_radius;
    d.beta1 = to_poly(beta1);
    d.beta2 = to_poly(beta2);
    return d;
}

TangentData InstanceConfig::tangent_u() const { return {to_poly(u.comp1), to_poly(u.comp2)}; }
TangentData InstanceConfig::tangent_v() const { return {to_poly(v.comp1), to_poly(v.comp2)}; }
TangentData InstanceConfig::tangent_w() const { return {to_poly(w.comp1), to_poly(w.comp2)}; }

std::string emit_config(const InstanceConfig& c) {
    json j;
    j["schema_version"] = 1;
    j["algebra"] = algebra_name(c.algebra);
    j["chart"] = {{"radius", c.chart_radius}};
    j["beta1"] = coeffs_to_json(c.beta1);
    j["beta2"] = coeffs_to_json(c.beta2);
    j["tangents"] = {
        {"u", {{"comp1", coeffs_to_json(c.u.comp1)}, {"comp2", coeffs_to_json(c.u.comp2)}}},
        {"v", {{"comp1", coeffs_to_json(c.v.comp1)}, {"comp2", coeffs_to_json(c.v.comp2)}}},
        {"w", {{"comp1", coeffs_to_json(c.w.comp1)}, {"comp2", coeffs_to_json(c.w.comp2)}}}};
    j["oracle"] = {{"n_start", c.oracle.n_start},
                   {"n_max", c.oracle.n_max},
                   {"contour_factor", c.oracle.contour_factor},
                   {"stab_rel", c.oracle.stab_rel},
                   {"tail_rel", c.oracle.tail_rel}};
    j["certify"] = {{"eps_nonvanish", c.certify.eps_nonvanish},
                    {"delta_min_factor", c.certify.delta_min_factor},
                    {"root_tol", c.certify.root_tol}};
    j["tolerances"] = {{"crosscheck", c.tolerances.crosscheck}, {"tau", c.tolerances.tau}};
    if (c.seed) j["seed"] = *c.seed;
    return j.dump(2) + "\n";
}

InstanceConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    try {
        InstanceConfig c;
        if (!j.contains("algebra")) throw ConfigError("missing field: algebra");
        const auto alg = algebra_from_name(j.at("algebra").get<std::string>());
        if (!alg) throw ConfigError("unknown algebra: " + j.at("algebra").dump());
        c.algebra = *alg;
        c.chart_radius = j.at("chart").at("radius").get<double>();
        if (!(c.chart_radius > 0)) throw ConfigError("chart.radius must be positive");
        c.beta1 = coeffs_from_json(j.at("beta1"), "beta1");
        c.beta2 = coeffs_from_json(j.at("beta2"), "beta2");
        const json& t = j.at("tangents");
        auto tang = [&](const char* name) {
            InstanceConfig::TangentCoeffs tc;
            tc.comp1 = coeffs_from_json(t.at(name).at("comp1"), std::string(name) + ".comp1");
            tc.comp2 = coeffs_from_json(t.at(name).at("comp2"), std::string(name) + ".comp2");
            return tc;
        };
        c.u = tang("u");
        c.v = tang("v");
        c.w = tang("w");
        if (j.contains("oracle")) {
            const json& o = j.at("oracle");
            if (o.contains("n_start")) c.oracle.n_start = o.at("n_start").get<int>();
            if (o.contains("n_max")) c.oracle.n_max = o.at("n_max").get<int>();
            if (o.contains("contour_factor"))
                c.oracle.contour_factor = o.at("contour_factor").get<double>();
            if (o.contains("stab_rel")) c.oracle.stab_rel = o.at("stab_rel").get<double>();
            if (o.contains("tail_rel")) c.oracle.tail_rel = o.at("tail_rel").get<double>();
        }
        if (j.contains("certify")) {
            const json& o = j.at("certify");
            if (o.contains("eps_nonvanish"))
                c.certify.eps_nonvanish = o.at("eps_nonvanish").get<double>();
            if (o.contains("delta_min_factor"))
                c.certify.delta_min_factor = o.at("delta_min_factor").get<double>();
            if (o.contains("root_tol")) c.certify.root_tol = o.at("root_tol").get<double>();
        }
        if (j.contains("tolerances")) {
            const json& o = j.at("tolerances");
            if (o.contains("crosscheck"))
                c.tolerances.crosscheck = o.at("crosscheck").get<double>();
            if (o.contains("tau")) c.tolerances.tau = o.at("tau").get<double>();
        }
        if (!(c.tolerances.crosscheck > 0) || !(c.tolerances.tau > 0) ||
            !(c.oracle.contour_factor > 0))
            throw ConfigError("tolerances and contour factor must be positive");
        if (j.contains("seed")) c.seed = j.at("seed").get<uint64_t>();
        return c;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }
}

InstanceConfig gen_instance(AlgebraId algebra, uint64_t seed, int deg1, int deg2,
                            int retry_budget) {
    if (deg1 < 1 || deg2 < 1)
        throw InvalidArgument("gen_instance: degrees must be >= 1");
    Xoshiro256 rng(seed);

    auto draw_coeffs = [&](int deg) {
        std::vector<Complex> c(deg + 1);
        for (auto& z : c) z = rng.unit_disk();
        // keep the nominal degree: redraw small leading coefficients
        while (std::abs(c.back()) < 0.1) c.back() = rng.unit_disk();
        return c;
    };

    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        InstanceConfig c;
        c.algebra = algebra;
        c.seed = seed;
        c.beta1 = draw_coeffs(deg1);
        c.beta2 = draw_coeffs(deg2);
        c.u = {draw_coeffs(deg1), draw_coeffs(deg2)};
        c.v = {draw_coeffs(deg1), draw_coeffs(deg2)};
        c.w = {draw_coeffs(deg1), draw_coeffs(deg2)};

        // size the chart around every discriminant zero
        LocalHitchinData probe = c.instance();
        probe.chart.radius = 1.0;
        double max_root = 0.0;
        bool degenerate = false;
        for (const CPoly1& f : discriminant_in_z(probe)) {
            if (f.is_zero()) {
                degenerate = true;
                break;
            }
            if (f.degree() < 1) continue;
            try {
                for (const Complex& r : find_roots(f, 1e-12).roots)
                    max_root = std::max(max_root, std::abs(r));
            } catch (const NumericError&) {
                degenerate = true;
                break;
            }
        }
        if (degenerate) continue;
        c.chart_radius = 1.25 * max_root + 0.1;

        try {
            certify_generic(c.instance(), c.certify);
            return c;
        } catch (const GenericityError&) {
            continue;
        }
    }
    throw GenerationError("gen_instance: retry budget exhausted");
}

} // namespace cameral
