#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgeo/distortion.hpp"
#include "mgeo/gluing.hpp"
#include "mgeo/mesh.hpp"
#include "mgeo/nets.hpp"
#include "mgeo/qs_fit.hpp"

namespace mgeo {

struct MeshSpec {
    MeshKind kind = MeshKind::circle;
    std::uint32_t resolution = 100; // vertex count / grid side / subdivision level
    double size = 1.0;              // circumference (circle) or radius (sphere)
};

/// Target metric on the mesh vertex set, derived from the geodesic metric.
struct TargetSpec {
    enum class Kind {
        geodesic,            // d = d_g
        scale,               // d = factor * d_g
        snowflake,           // d = d_g^alpha
        conformal,           // path metric of weights 1 + amplitude * t(v)
        conformal_snowflake, // the conformal metric, then ^alpha
    };
    Kind kind = Kind::geodesic;
    double factor = 1.0;
    double alpha = 1.0;
    double amplitude = 1.0;
};

std::string to_string(TargetSpec::Kind kind);
TargetSpec::Kind target_kind_from_string(const std::string& s);

struct ExperimentConfig {
    std::string label;
    MeshSpec mesh;
    TargetSpec target;
    std::vector<double> epsilons; // strictly decreasing, positive
    std::uint64_t seed = 0;
    int smoothing_rounds = 1;
    std::optional<double> r_override;
};

/// Config document is JSON; required fields mesh, target, epsilons, seed.
/// Unknown keys are rejected so typos cannot silently fall back to defaults.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
std::string config_to_json(const ExperimentConfig& config);

MeshManifold build_mesh(const MeshSpec& spec);
FiniteMetricSpace build_target(const MeshManifold& mesh, const FiniteMetricSpace& d_g,
                               const TargetSpec& spec);

/// One verification stage's outcome: the bound it enforced, the worst
/// observed value, and the multiplicative margin (bound / observed; >= 1
/// passes, with a 5% allowance shared across stages).
struct VerdictRecord {
    std::string stage;
    bool ok = false;
    double bound = 0.0;
    double observed = 0.0;
    double margin = 0.0;
    std::string witness;
};

struct EpsilonRecord {
    double epsilon = 0.0;
    std::size_t net_size = 0;
    int K_observed = 0;
    double R = 0.0, C = 0.0, L = 1.0;
    double lambda_min = 0.0, lambda_max = 0.0;
    double mu = 0.0; // max{C,1} * lambda_max
    ModulusFit eta;  // fitted modulus of (d_g, d)
    ModulusFit eta2; // fitted modulus of (d_g, glued); quasisymmetric pipeline only
    double gh_identity = 0.0;       // identity-correspondence bound, glued vs target
    double gh_common_net = 0.0;     // 2 mu eps through the shared net
    bool gh_density_ok = false;
    double gh_net_resolution = 0.0; // 2 eps max lambda: target-side net resolution
    std::vector<PointId> net_members;
    std::vector<double> lambda_values;
    std::vector<double> lambda_smoothed;
    std::vector<VerdictRecord> verdicts;
    bool all_ok = false;
};

struct RunReport {
    std::string pipeline; // "lipschitz" or "quasisymmetric"
    ExperimentConfig config;
    double mesh_scale = 0.0;
    double global_L = 1.0;   // measured bi-Lipschitz constant of (d_g, d)
    HoelderFit hoelder;      // fitted d <= C' d_g^alpha envelope
    std::vector<EpsilonRecord> records;
    bool all_ok = false;
};

/// Thrown when a pipeline stage fails beyond tolerance; partial results
/// would be unsound, so the run aborts with the stage name and witness.
struct pipeline_error : error {
    std::string stage;
    pipeline_error(std::string stage_name, const std::string& message)
        : error(stage_name + ": " + message), stage(std::move(stage_name)) {}
};

RunReport run_lipschitz_pipeline(const ExperimentConfig& config);
RunReport run_quasisymmetric_pipeline(const ExperimentConfig& config);

/// report.csv (one row per epsilon), report.json (full intermediates,
/// byte-deterministic for a fixed config), report.svg (log-log plot of the
/// GH bound and fitted-eta2 constant against epsilon).
std::string report_table_csv(const RunReport& report);
RunReport report_from_json(const std::string& json_text);
std::string report_structured_json(const RunReport& report);
std::string report_plot_svg(const RunReport& report);
void emit_report(const RunReport& report, const std::string& out_dir);

} // namespace mgeo
