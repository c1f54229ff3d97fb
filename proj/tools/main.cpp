#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cameral/instance.hpp"

using nlohmann::json;
using namespace cameral;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitGenericity = 3;
constexpr int kExitTolerance = 4;
constexpr int kExitGeneration = 5;

json cpx(const Complex& z) { return json::array({z.real(), z.imag()}); }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double rel_diff(const Complex& a, const Complex& b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

int run_verify(const std::string& which, const std::string& format) {
    std::vector<AlgebraId> algebras;
    if (which == "all") {
        algebras = {AlgebraId::A2, AlgebraId::B2, AlgebraId::G2};
    } else {
        auto id = algebra_from_name(which);
        if (!id) throw ConfigError("unknown algebra: " + which);
        algebras = {*id};
    }
    bool all_ok = true;
    json out = json::array();
    for (AlgebraId id : algebras) {
        const VerificationReport rep = verify_algebra(root_system(id));
        all_ok = all_ok && rep.all_pass();
        if (format == "json") {
            json sec;
            sec["algebra"] = algebra_name(id);
            sec["pass"] = rep.all_pass();
            sec["clauses"] = json::array();
            for (const auto& c : rep.clauses)
                sec["clauses"].push_back(
                    {{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
            out.push_back(sec);
        } else {
            std::cout << "== " << algebra_name(id) << " ==\n";
            for (const auto& c : rep.clauses) {
                std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id;
                if (!c.pass && !c.detail.empty()) std::cout << "  (" << c.detail << ")";
                std::cout << "\n";
            }
        }
    }
    if (format == "json")
        std::cout << json({{"schema_version", 1}, {"command", "verify"}, {"report", out}})
                         .dump(2)
                  << "\n";
    return all_ok ? kExitOk : 1;
}

json branch_points_json(const RootSystemData& rs, const GenericityCertificate& cert) {
    json arr = json::array();
    for (const auto& bp : cert.points)
        arr.push_back({{"z0", cpx(bp.z0)},
                       {"class", rs.class_data(bp.class_index).label},
                       {"jet1", cpx(bp.jet1)}});
    return arr;
}

json ram_points_json(const RootSystemData& rs, const LocalHitchinData& data,
                     const GenericityCertificate& cert) {
    json arr = json::array();
    for (const auto& bp : cert.points) {
        for (const RamPoint& rp : ramification_points(data, bp)) {
            const auto& root = rs.positive_roots[rp.root_index];
            arr.push_back({{"z0", cpx(bp.z0)},
                           {"root", {to_double(root.coords.x), to_double(root.coords.y)}},
                           {"alpha", {cpx(rp.a1), cpx(rp.a2)}},
                           {"class", rs.class_data(rp.class_index).label}});
        }
    }
    return arr;
}

json cubic_json(const RootSystemData& rs, const CubicValue& v) {
    json per_class = json::object();
    for (int c = 0; c < rs.class_count(); ++c)
        per_class[rs.class_data(c).label] = cpx(v.per_class[c]);
    json per_branch = json::array();
    for (const auto& pb : v.per_branch)
        per_branch.push_back({{"z0", cpx(pb.z0)},
                              {"class", rs.class_data(pb.class_index).label},
                              {"value", cpx(pb.value)}});
    return {{"total", cpx(v.total)}, {"per_class", per_class}, {"per_branch", per_branch}};
}

void print_table_cubic(const RootSystemData& rs, const char* name, const CubicValue& v) {
    std::cout << name << " total = " << v.total << "\n";
    for (int c = 0; c < rs.class_count(); ++c)
        std::cout << "  class " << rs.class_data(c).label << ": " << v.per_class[c] << "\n";
}

int run_eval(const std::string& path, const std::string& format) {
    const InstanceConfig cfg = parse_config(read_file(path));
    const LocalHitchinData data = cfg.instance();
    const RootSystemData& rs = data.roots();
    const GenericityCertificate cert = certify_generic(data, cfg.certify);
    const TangentData u = cfg.tangent_u(), v = cfg.tangent_v(), w = cfg.tangent_w();
    const CubicValue ex = cubic_explicit(data, cert, u, v, w);
    const CubicValue fy = cubic_fancy(data, cert, u, v, w);

    if (format == "json") {
        json out;
        out["schema_version"] = 1;
        out["command"] = "eval";
        out["algebra"] = algebra_name(cfg.algebra);
        out["branch_points"] = branch_points_json(rs, cert);
        out["ram_points"] = ram_points_json(rs, data, cert);
        out["explicit"] = cubic_json(rs, ex);
        out["fancy"] = cubic_json(rs, fy);
        out["explicit_total"] = cpx(ex.total);
        out["fancy_total"] = cpx(fy.total);
        out["fancy_vs_explicit_rel"] = rel_diff(ex.total, fy.total);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "algebra " << algebra_name(cfg.algebra) << ", "
                  << cert.points.size() << " branch points\n";
        print_table_cubic(rs, "explicit", ex);
        print_table_cubic(rs, "fancy", fy);
        std::cout << "fancy vs explicit (rel) = " << rel_diff(ex.total, fy.total) << "\n";
    }
    return kExitOk;
}

int run_crosscheck(const std::string& path, double tol_override, const std::string& format) {
    const InstanceConfig cfg = parse_config(read_file(path));
    const double tol = tol_override > 0 ? tol_override : cfg.tolerances.crosscheck;
    const LocalHitchinData data = cfg.instance();
    const RootSystemData& rs = data.roots();
    const GenericityCertificate cert = certify_generic(data, cfg.certify);
    const TangentData u = cfg.tangent_u(), v = cfg.tangent_v(), w = cfg.tangent_w();

    const CubicValue ex = cubic_explicit(data, cert, u, v, w);
    const CubicValue fy = cubic_fancy(data, cert, u, v, w);
    const OracleReport oracle = bp_cubic_detailed(data, cert, u, v, w, cfg.oracle);

    double max_delta = rel_diff(oracle.cubic.total, ex.total);
    json points = json::array();
    for (const ResidueRecord& rec : oracle.records) {
        const Complex closed = residue_closed_form(data, rec.ram.branch, u, v, w);
        const ResidueRecord reduced = quadratic_residue_at(
            data, cert, rec.ram, u, v, w, ResidueMethod::Reduced, cfg.oracle);
        const double d_closed = rel_diff(rec.value, closed);
        const double d_methods = rel_diff(rec.value, reduced.value);
        max_delta = std::max(max_delta, d_closed);
        const auto& root = rs.positive_roots[rec.ram.root_index];
        points.push_back({{"z0", cpx(rec.ram.branch.z0)},
                          {"root", {to_double(root.coords.x), to_double(root.coords.y)}},
                          {"alpha", {cpx(rec.ram.a1), cpx(rec.ram.a2)}},
                          {"class", rs.class_data(rec.ram.class_index).label},
                          {"oracle_full", cpx(rec.value)},
                          {"oracle_reduced", cpx(reduced.value)},
                          {"closed_form", cpx(closed)},
                          {"rel_delta_closed", d_closed},
                          {"rel_delta_methods", d_methods},
                          {"tail_bound", rec.laurent_tail_bound},
                          {"n_samples", rec.n_samples}});
    }

    json tau_section = {{"status", "n/a"}};
    if (cfg.algebra == AlgebraId::G2) {
        try {
            const TauInvarianceCheck tc = check_tau_invariance(data, u, v, w);
            tau_section = {{"status", "ok"},
                           {"lhs", cpx(tc.lhs)},
                           {"rhs", cpx(tc.rhs)},
                           {"diff", tc.diff}};
        } catch (const GenericityError& e) {
            tau_section = {{"status", "skipped"}, {"reason", e.what()}};
        }
    }

    const bool pass = max_delta <= tol;
    if (format == "json") {
        json out;
        out["schema_version"] = 1;
        out["command"] = "crosscheck";
        out["algebra"] = algebra_name(cfg.algebra);
        out["branch_points"] = branch_points_json(rs, cert);
        out["explicit"] = cubic_json(rs, ex);
        out["fancy"] = cubic_json(rs, fy);
        out["oracle"] = cubic_json(rs, oracle.cubic);
        out["explicit_total"] = cpx(ex.total);
        out["fancy_total"] = cpx(fy.total);
        out["oracle_total"] = cpx(oracle.cubic.total);
        out["points"] = points;
        out["max_rel_delta"] = max_delta;
        out["tolerance"] = tol;
        out["tau_invariance"] = tau_section;
        out["pass"] = pass;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "algebra " << algebra_name(cfg.algebra) << ", "
                  << cert.points.size() << " branch points, " << oracle.records.size()
                  << " ramification points\n";
        print_table_cubic(rs, "explicit", ex);
        print_table_cubic(rs, "oracle  ", oracle.cubic);
        std::cout << "max relative delta = " << max_delta << " (tolerance " << tol << ")\n";
        if (cfg.algebra == AlgebraId::G2)
            std::cout << "tau invariance: " << tau_section.dump() << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitOk : kExitTolerance;
}

int run_gen(const std::string& algebra, uint64_t seed, int deg1, int deg2) {
    auto id = algebra_from_name(algebra);
    if (!id) throw ConfigError("unknown algebra: " + algebra);
    if (deg1 < 1 || deg2 < 1) throw ConfigError("degrees must be >= 1");
    const InstanceConfig cfg = gen_instance(*id, seed, deg1, deg2);
    std::cout << emit_config(cfg);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Donagi-Markman cubic for rank-2 Hitchin systems: closed forms, "
                 "numeric residue oracle and exact identity suites"};
    app.require_subcommand(1);

    std::string verify_target = "all", verify_format = "table";
    CLI::App* verify = app.add_subcommand("verify", "run the exact identity suites");
    verify->add_option("algebra", verify_target, "A2, B2, G2 or all");
    verify->add_option("--format", verify_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    std::string eval_config, eval_format = "json";
    CLI::App* eval = app.add_subcommand("eval", "evaluate the cubic on an instance");
    eval->add_option("--config", eval_config, "instance config JSON")->required();
    eval->add_option("--format", eval_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    std::string cc_config, cc_format = "json";
    double cc_tol = -1.0;
    CLI::App* cc = app.add_subcommand("crosscheck",
                                      "evaluate and compare against the residue oracle");
    cc->add_option("--config", cc_config, "instance config JSON")->required();
    cc->add_option("--tol", cc_tol, "max relative delta (default: config value)");
    cc->add_option("--format", cc_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    std::string gen_algebra;
    uint64_t gen_seed = 0;
    int gen_deg1 = 1, gen_deg2 = 1;
    CLI::App* gen = app.add_subcommand("gen", "generate a certified random instance");
    gen->add_option("--algebra", gen_algebra, "A2, B2 or G2")->required();
    gen->add_option("--seed", gen_seed, "RNG seed")->required();
    gen->add_option("--deg1", gen_deg1, "degree of beta1")->required();
    gen->add_option("--deg2", gen_deg2, "degree of beta2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (verify->parsed()) return run_verify(verify_target, verify_format);
        if (eval->parsed()) return run_eval(eval_config, eval_format);
        if (cc->parsed()) return run_crosscheck(cc_config, cc_tol, cc_format);
        if (gen->parsed()) return run_gen(gen_algebra, gen_seed, gen_deg1, gen_deg2);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GenericityError& e) {
        std::cerr << "genericity error: " << e.what() << "\n";
        return kExitGenericity;
    } catch (const GenerationError& e) {
        std::cerr << "generation error: " << e.what() << "\n";
        return kExitGeneration;
    } catch (const InvalidArgument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
