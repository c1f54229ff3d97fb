#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cameral/residue_oracle.hpp"

namespace cameral {

/// Config file is malformed (exit code 2 at the CLI).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance generation exhausted its retry budget (exit code 5).
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ToleranceSettings {
    double crosscheck = 1e-6; // closed form vs oracle, relative
    double tau = 1e-10;       // Langlands invariance, relative
};

/// Everything one run needs: the instance, three tangents, oracle policy,
/// genericity thresholds and tolerances. Complex numbers serialize as
/// [re, im]; coefficient lists ascend in degree.
struct InstanceConfig {
    AlgebraId algebra = AlgebraId::G2;
    double chart_radius = 1.0;
    std::vector<Complex> beta1, beta2;
    struct TangentCoeffs {
        std::vector<Complex> comp1, comp2;
    };
    TangentCoeffs u, v, w;
    OracleOptions oracle;
    CertifyOptions certify;
    ToleranceSettings tolerances;
    std::optional<uint64_t> seed;

    LocalHitchinData instance() const;
    TangentData tangent_u() const;
    TangentData tangent_v() const;
    TangentData tangent_w() const;
};

/// JSON round-trip: parse(emit(config)) == config field-exact.
std::string emit_config(const InstanceConfig& config);
InstanceConfig parse_config(const std::string& json_text); // throws ConfigError

/// Draws unit-disk coefficients with the fixed xoshiro256** stream, sizes
/// the chart to contain every discriminant zero and retries until the
/// instance certifies (budget default 64). Deterministic per seed.
InstanceConfig gen_instance(AlgebraId algebra, uint64_t seed, int deg1, int deg2,
                            int retry_budget = 64);

} // namespace cameral
