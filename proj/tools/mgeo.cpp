#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mgeo/distortion.hpp"
#include "mgeo/gluing.hpp"
#include "mgeo/io.hpp"
#include "mgeo/nets.hpp"
#include "mgeo/pipeline.hpp"
#include "mgeo/qs_fit.hpp"

namespace {

using namespace mgeo;

std::vector<PointId> parse_id_list(const std::string& csv) {
    std::vector<PointId> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(PointId(std::stoul(tok)));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(int argc, char** argv) {
    CLI::App app{"metric-geometry experiment toolkit"};
    app.require_subcommand(1);

    // mesh: build a sampled manifold, save it, optionally with its metric.
    auto* mesh_cmd = app.add_subcommand("mesh", "build a mesh and its geodesic metric");
    std::string mesh_kind = "circle", mesh_out, metric_out;
    std::uint32_t resolution = 100;
    double size = 2.0 * 3.141592653589793;
    bool size_set = false;
    mesh_cmd->add_option("--kind", mesh_kind, "circle | torus | sphere");
    mesh_cmd->add_option("--resolution", resolution,
                         "vertex count / grid side / subdivision level");
    mesh_cmd->add_option("--size", size, "circumference (circle) or radius (sphere)")
        ->each([&](const std::string&) { size_set = true; });
    mesh_cmd->add_option("--out", mesh_out, "mesh file path")->required();
    mesh_cmd->add_option("--metric-out", metric_out, "write the geodesic metric here");

    auto* net_cmd = app.add_subcommand("net", "extract and verify a greedy net");
    std::string net_space;
    double net_eps = 0.1;
    net_cmd->add_option("--space", net_space, "metric-space file")->required();
    net_cmd->add_option("--epsilon", net_eps, "net scale")->required();

    auto* glue_cmd = app.add_subcommand("glue", "glue a shortcut metric into a space");
    std::string glue_space, glue_subset, glue_dist, glue_out;
    glue_cmd->add_option("--space", glue_space, "ambient metric-space file")->required();
    glue_cmd->add_option("--subset", glue_subset, "comma-separated point indices")
        ->required();
    glue_cmd->add_option("--dist", glue_dist, "metric-space file on the subset, same order")
        ->required();
    glue_cmd->add_option("--out", glue_out, "output metric-space file")->required();

    auto* lambda_cmd = app.add_subcommand("lambda", "compute the distortion field");
    std::string lam_geo, lam_target, lam_mesh;
    double lam_eps = 0.1;
    int lam_rounds = 1;
    lambda_cmd->add_option("--geodesic", lam_geo, "geodesic metric file")->required();
    lambda_cmd->add_option("--target", lam_target, "target metric file")->required();
    lambda_cmd->add_option("--epsilon", lam_eps, "scale")->required();
    lambda_cmd->add_option("--mesh", lam_mesh, "mesh file (enables smoothing)");
    lambda_cmd->add_option("--rounds", lam_rounds, "smoothing rounds");

    auto* fit_cmd = app.add_subcommand("fit", "fit a quasisymmetry modulus");
    std::string fit_source, fit_target, fit_family = "power_pair";
    std::uint64_t fit_seed = 0;
    fit_cmd->add_option("--source", fit_source, "source metric file")->required();
    fit_cmd->add_option("--target", fit_target, "target metric file")->required();
    fit_cmd->add_option("--family", fit_family, "linear | power_pair");
    fit_cmd->add_option("--seed", fit_seed, "sampling seed");

    auto* gh_cmd = app.add_subcommand("gh", "Gromov-Hausdorff bounds");
    std::string gh_a, gh_b;
    bool gh_brute = false;
    gh_cmd->add_option("--a", gh_a, "first metric file")->required();
    gh_cmd->add_option("--b", gh_b, "second metric file")->required();
    gh_cmd->add_flag("--brute", gh_brute, "exact search (both spaces <= 7 points)");

    auto* pl_cmd = app.add_subcommand("pipeline-lipschitz", "run the bi-Lipschitz pipeline");
    auto* pq_cmd =
        app.add_subcommand("pipeline-qs", "run the quasisymmetric pipeline");
    std::string pl_config, pl_out = "out", pq_config, pq_out = "out";
    pl_cmd->add_option("--config", pl_config, "config JSON")->required();
    pl_cmd->add_option("--out", pl_out, "output directory");
    pq_cmd->add_option("--config", pq_config, "config JSON")->required();
    pq_cmd->add_option("--out", pq_out, "output directory");

    auto* rep_cmd = app.add_subcommand("report", "re-emit outputs from a structured report");
    std::string rep_json, rep_out = "out";
    rep_cmd->add_option("--json", rep_json, "structured report (report.json)")->required();
    rep_cmd->add_option("--out", rep_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    if (mesh_cmd->parsed()) {
        MeshSpec spec;
        spec.kind = mesh_kind_from_string(mesh_kind);
        spec.resolution = resolution;
        spec.size = size_set ? size : (spec.kind == MeshKind::sphere ? 1.0 : size);
        const MeshManifold mesh = build_mesh(spec);
        save_mesh(mesh, mesh_out);
        std::cout << "vertices " << mesh.vertex_count() << " edges " << mesh.edges().size()
                  << " mesh_scale " << format_real(mesh.mesh_scale()) << "\n";
        if (!metric_out.empty()) save_metric_space(mesh.geodesic_metric(), metric_out);
        return 0;
    }
    if (net_cmd->parsed()) {
        const FiniteMetricSpace space = load_metric_space(net_space);
        const Net net = greedy_net(space, net_eps);
        const NetVerdict v = verify_net(space, net.members, net_eps);
        std::cout << "members " << net.members.size() << "\n";
        for (PointId p : net.members) std::cout << p << " ";
        std::cout << "\n" << (v.ok ? "ok" : "FAILED") << "\n";
        return v.ok ? 0 : 1;
    }
    if (glue_cmd->parsed()) {
        const FiniteMetricSpace space = load_metric_space(glue_space);
        const std::vector<PointId> subset = parse_id_list(glue_subset);
        const FiniteMetricSpace dist = load_metric_space(glue_dist);
        if (dist.size() != subset.size())
            throw input_error("subset size does not match the shortcut metric");
        const GluedMetric glued = glue(space, subset, dist.data());
        save_metric_space(glued.result, glue_out);
        const AxiomReport rep = check_metric_axioms(glued.result, space.tolerance());
        std::cout << (rep.valid ? "ok" : "FAILED") << "\n";
        return rep.valid ? 0 : 1;
    }
    if (lambda_cmd->parsed()) {
        const FiniteMetricSpace d_g = load_metric_space(lam_geo);
        const FiniteMetricSpace d = load_metric_space(lam_target);
        DistortionField field = compute_lambda(d_g, d, lam_eps);
        double lo = field.values[0], hi = field.values[0];
        for (double v : field.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        std::cout << "lambda min " << format_real(lo) << " max " << format_real(hi) << "\n";
        if (!lam_mesh.empty()) {
            const MeshManifold mesh = load_mesh(lam_mesh);
            smooth_lambda(field, mesh, lam_rounds);
            double slo = (*field.smoothed)[0], shi = slo;
            for (double v : *field.smoothed) {
                slo = std::min(slo, v);
                shi = std::max(shi, v);
            }
            std::cout << "smoothed min " << format_real(slo) << " max " << format_real(shi)
                      << "\n";
        }
        return 0;
    }
    if (fit_cmd->parsed()) {
        const FiniteMetricSpace source = load_metric_space(fit_source);
        const FiniteMetricSpace target = load_metric_space(fit_target);
        TripleSampleSpec spec;
        spec.seed = fit_seed;
        const auto family = fit_family == "linear" ? ModulusFamily::linear
                                                   : ModulusFamily::power_pair;
        const ModulusFit fit = fit_modulus(qs_quotients(source, target, spec), family);
        std::cout << "family " << (fit.family == ModulusFamily::linear ? "linear" : "power_pair")
                  << " C " << format_real(fit.C) << " alpha " << format_real(fit.alpha)
                  << "\n";
        return 0;
    }
    if (gh_cmd->parsed()) {
        const FiniteMetricSpace a = load_metric_space(gh_a);
        const FiniteMetricSpace b = load_metric_space(gh_b);
        if (gh_brute) {
            const GHBound bound = gh_bruteforce(a, b);
            std::cout << "exact " << format_real(bound.upper) << "\n";
        } else {
            if (a.size() != b.size())
                throw input_error("identity bound needs equal point counts");
            std::cout << "identity_upper " << format_real(gh_upper_identity(a, b)) << "\n";
        }
        return 0;
    }
    if (pl_cmd->parsed() || pq_cmd->parsed()) {
        const bool qs = pq_cmd->parsed();
        const ExperimentConfig cfg = load_config(qs ? pq_config : pl_config);
        const RunReport report =
            qs ? run_quasisymmetric_pipeline(cfg) : run_lipschitz_pipeline(cfg);
        emit_report(report, qs ? pq_out : pl_out);
        std::cout << (report.all_ok ? "ok" : "FAILED") << "\n";
        return report.all_ok ? 0 : 1;
    }
    if (rep_cmd->parsed()) {
        const RunReport report = report_from_json(read_file(rep_json));
        emit_report(report, rep_out);
        std::cout << "ok\n";
        return 0;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mgeo::pipeline_error& e) {
        std::cerr << "pipeline stage failed: " << e.what() << "\n";
        return 2;
    } catch (const mgeo::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
