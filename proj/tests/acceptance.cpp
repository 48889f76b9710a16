// Acceptance gate: ten end-to-end checks, one pass/fail line each.
// Exits nonzero when any check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "mgeo/distortion.hpp"
#include "mgeo/gluing.hpp"
#include "mgeo/mesh.hpp"
#include "mgeo/metric_space.hpp"
#include "mgeo/nets.hpp"
#include "mgeo/pipeline.hpp"
#include "mgeo/qs_fit.hpp"
#include "mgeo/rng.hpp"

using namespace mgeo;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("criterion %2d: %s  %s\n", criterion, ok ? "PASS" : "FAIL",
                detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

// Random integer-valued path-closed metric: chain sums stay exact in double
// arithmetic, so the glued metric can be checked with zero tolerance.
FiniteMetricSpace random_closed_metric(Rng& rng, std::size_t n) {
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = double(3 + rng.below(48));
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    return path_metric_closure(FiniteMetricSpace({}, std::move(d)));
}

std::vector<PointId> random_subset(Rng& rng, std::size_t n, std::size_t m) {
    std::vector<PointId> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = PointId(i);
    rng.shuffle(all);
    all.resize(m);
    return all;
}

// Integer shortcut metric with every entry at least one below rho, so the
// instances carry a strict gap for the local-isometry criterion.
FiniteMetricSpace random_shortcut(Rng& rng, const FiniteMetricSpace& rho,
                                  const std::vector<PointId>& S) {
    const std::size_t m = S.size();
    std::vector<double> d(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto cap = std::uint64_t(rho(S[i], S[j])) - 1;
            const double v = double(1 + rng.below(cap));
            d[i * m + j] = v;
            d[j * m + i] = v;
        }
    return path_metric_closure(FiniteMetricSpace({}, std::move(d)));
}

void criterion_1_and_2() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(20260823);
    bool metric_ok = true, dominated_ok = true, local_ok = true;
    std::string witness;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 5 + std::size_t(rng.below(36)); // <= 40 points
        const FiniteMetricSpace rho = random_closed_metric(rng, n);
        const std::size_t m = 2 + std::size_t(rng.below(4));
        const std::vector<PointId> S = random_subset(rng, n, m);
        const FiniteMetricSpace d = random_shortcut(rng, rho, S);
        const GluedMetric glued = glue(rho, S, d.data());

        const AxiomReport axioms = check_metric_axioms(glued.result, 0.0);
        if (!axioms.valid && metric_ok) {
            metric_ok = false;
            witness = "axioms failed at trial " + std::to_string(trial);
        }
        for (std::size_t x = 0; x < n && dominated_ok; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (glued.result(PointId(x), PointId(y)) > rho(PointId(x), PointId(y))) {
                    dominated_ok = false;
                    witness = "domination failed at trial " + std::to_string(trial);
                    break;
                }

        double gap = rho.diameter();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                gap = std::min(gap, rho(S[i], S[j]) - d(PointId(i), PointId(j)));
        for (std::size_t x = 0; x < n && local_ok; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (rho(PointId(x), PointId(y)) < gap / 2.0 &&
                    glued.result(PointId(x), PointId(y)) != rho(PointId(x), PointId(y))) {
                    local_ok = false;
                    witness = "pair below half-gap changed at trial " + std::to_string(trial);
                    break;
                }
    }
    const double elapsed = seconds_since(start);
    const bool timing_ok = elapsed < 10.0;
    report(1, metric_ok && dominated_ok && timing_ok,
           "1000 glued instances: exact axioms, glued <= rho, " +
               std::to_string(elapsed) + " s (< 10 s)" +
               (witness.empty() ? "" : "; " + witness));
    report(2, local_ok,
           local_ok ? "pairs with rho < gap/2 unchanged exactly in all instances"
                    : witness);
}

void criterion_3() {
    const auto start = std::chrono::steady_clock::now();
    ExperimentConfig cfg = parse_config(R"({
      "label": "acceptance lipschitz",
      "mesh": {"kind": "circle", "resolution": 2000},
      "target": {"kind": "scale", "factor": 2.0},
      "epsilons": [0.4, 0.2, 0.1, 0.05],
      "seed": 1
    })");
    bool ok = true;
    std::string detail;
    try {
        const RunReport rep = run_lipschitz_pipeline(cfg);
        ok = rep.all_ok && rep.global_L <= 2.0 + 1e-6;
        double worst = -std::numeric_limits<double>::infinity();
        for (const EpsilonRecord& rec : rep.records) {
            const double bound = 2.0 * rec.epsilon + rep.mesh_scale;
            worst = std::max(worst, rec.gh_common_net - bound);
            if (!(rec.gh_common_net <= bound)) ok = false;
        }
        const double elapsed = seconds_since(start);
        if (elapsed >= 60.0) ok = false;
        detail = "L = " + std::to_string(rep.global_L) +
                 ", GH bound slack vs 2e+h: " + std::to_string(-worst) + ", " +
                 std::to_string(elapsed) + " s (< 60 s)";
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("pipeline threw: ") + e.what();
    }
    report(3, ok, detail);
}

void criterion_4() {
    const auto start = std::chrono::steady_clock::now();
    ExperimentConfig cfg = parse_config(R"({
      "label": "acceptance snowflake",
      "mesh": {"kind": "circle", "resolution": 2000},
      "target": {"kind": "snowflake", "alpha": 0.5},
      "epsilons": [0.4, 0.2, 0.1, 0.05],
      "seed": 1
    })");
    bool ok = true;
    std::string detail;
    try {
        const RunReport rep = run_quasisymmetric_pipeline(cfg);
        ok = rep.all_ok;
        double prev = std::numeric_limits<double>::infinity();
        double eta2_min = std::numeric_limits<double>::infinity(), eta2_max = 0.0;
        for (const EpsilonRecord& rec : rep.records) {
            const double bound = 2.0 * rep.hoelder.C * std::pow(rec.epsilon, 0.5);
            if (!(rec.gh_net_resolution <= bound)) ok = false;
            if (!(rec.gh_net_resolution < prev)) ok = false;
            prev = rec.gh_net_resolution;
            eta2_min = std::min(eta2_min, rec.eta2.C);
            eta2_max = std::max(eta2_max, rec.eta2.C);
        }
        if (!(eta2_max <= 3.0 * eta2_min)) ok = false;
        const double elapsed = seconds_since(start);
        if (elapsed >= 600.0) ok = false;
        detail = "GH bounds under 2C'sqrt(e) and strictly decreasing, eta2 C ratio " +
                 std::to_string(eta2_max / eta2_min) + " (<= 3), " +
                 std::to_string(elapsed) + " s (< 600 s)";
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("pipeline threw: ") + e.what();
    }
    report(4, ok, detail);
}

void criterion_5() {
    // Circumference 1 makes both epsilons exact multiples of the mesh step,
    // so the discrete ball radius matches epsilon to machine precision.
    const MeshManifold mesh = MeshManifold::circle(1000, 1.0);
    const FiniteMetricSpace d_g = mesh.geodesic_metric();
    std::vector<double> snow(d_g.data());
    for (double& v : snow) v = std::pow(v, 0.5);
    const FiniteMetricSpace d({}, snow);
    bool ok = true;
    double worst = 0.0;
    for (double eps : {0.1, 0.05}) {
        const DistortionField field = compute_lambda(d_g, d, eps);
        const double oracle = std::pow(eps, -0.5);
        for (double v : field.values) {
            const double rel = std::abs(v - oracle) / oracle;
            worst = std::max(worst, rel);
            if (rel > 0.02) ok = false;
        }
    }
    report(5, ok,
           "lambda vs analytic eps^(alpha-1): worst relative error " +
               std::to_string(worst) + " (<= 0.02)");
}

void criterion_6() {
    bool ok = true;
    std::string detail = "margins:";
    // Snowflake circle.
    {
        const MeshManifold mesh = MeshManifold::circle(500, 2.0 * 3.141592653589793);
        const FiniteMetricSpace d_g = mesh.geodesic_metric();
        std::vector<double> snow(d_g.data());
        for (double& v : snow) v = std::pow(v, 0.5);
        const FiniteMetricSpace d({}, snow);
        TripleSampleSpec spec;
        spec.seed = 11;
        const ModulusFit eta =
            fit_modulus(qs_quotients(d_g, d, spec), ModulusFamily::power_pair);
        const DistortionField field = compute_lambda(d_g, d, 0.1);
        const BoundVerdict v = verify_ball_bound(d_g, field, 8.0, eta);
        if (!(v.worst_observed <= v.bound)) ok = false;
        detail += " circle " + std::to_string(v.worst_margin);
    }
    // Sphere with a conformal power weight.
    {
        MeshSpec ms;
        ms.kind = MeshKind::sphere;
        ms.resolution = 3;
        ms.size = 1.0;
        const MeshManifold mesh = build_mesh(ms);
        const FiniteMetricSpace d_g = mesh.geodesic_metric();
        TargetSpec ts;
        ts.kind = TargetSpec::Kind::conformal_snowflake;
        ts.alpha = 0.5;
        ts.amplitude = 1.0;
        const FiniteMetricSpace d = build_target(mesh, d_g, ts);
        TripleSampleSpec spec;
        spec.seed = 12;
        const ModulusFit eta =
            fit_modulus(qs_quotients(d_g, d, spec), ModulusFamily::power_pair);
        const DistortionField field = compute_lambda(d_g, d, 0.4);
        const BoundVerdict v = verify_ball_bound(d_g, field, 4.0, eta);
        if (!(v.worst_observed <= v.bound)) ok = false;
        detail += " sphere " + std::to_string(v.worst_margin);
    }
    report(6, ok, detail + " (both >= 1)");
}

void criterion_7() {
    bool ok = true;
    std::string detail = "K:";
    auto run = [&](const FiniteMetricSpace& space, std::uint32_t dim, double mesh_scale,
                   double eps) {
        const Net net = greedy_net(space, eps);
        if (!verify_net(space, net.members, eps).ok) ok = false;
        const ApproximationGraph g = build_approximation(net, dim, mesh_scale);
        const double cap = std::pow(8.0, double(dim)) * g.M_measured * g.M_measured;
        if (g.K_observed <= 0 || double(g.K_observed) > cap) ok = false;
        if (!verify_conditions(g, g.K_observed).all()) ok = false;
        detail += " " + std::to_string(g.K_observed);
    };
    const MeshManifold circle = MeshManifold::circle(1000, 2.0 * 3.141592653589793);
    const FiniteMetricSpace dc = circle.geodesic_metric();
    for (double eps : {0.5, 0.35, 0.2}) run(dc, 1, circle.mesh_scale(), eps);
    const MeshManifold sphere = MeshManifold::sphere(3);
    const FiniteMetricSpace ds = sphere.geodesic_metric();
    for (double eps : {0.8, 0.5, 0.3}) run(ds, 2, sphere.mesh_scale(), eps);
    report(7, ok, detail + " all conditions (A1)-(A4) hold, K <= 8^n M^2");
}

void criterion_8() {
    Rng rng(808);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        auto rand_space = [&] {
            const std::size_t n = 2 + std::size_t(rng.below(5)); // <= 6 points
            std::vector<double> d(n * n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    const double v = rng.uniform(0.5, 5.0);
                    d[i * n + j] = v;
                    d[j * n + i] = v;
                }
            return path_metric_closure(FiniteMetricSpace({}, std::move(d)));
        };
        const FiniteMetricSpace a = rand_space();
        const FiniteMetricSpace b = rand_space();
        const GHBound g = gh_bruteforce(a, b);
        const double diam_lower = std::abs(a.diameter() - b.diameter()) / 2.0;
        if (a.size() == b.size() && g.upper > gh_upper_identity(a, b) + 1e-12) {
            ok = false;
            detail = "identity bound violated at trial " + std::to_string(trial);
        }
        if (g.upper < diam_lower - 1e-12) {
            ok = false;
            detail = "diameter lower bound violated at trial " + std::to_string(trial);
        }
    }
    const FiniteMetricSpace a = FiniteMetricSpace::from_rows({{0, 1}, {1, 0}});
    const FiniteMetricSpace b = FiniteMetricSpace::from_rows({{0, 2}, {2, 0}});
    if (gh_bruteforce(a, b).upper != 0.5) {
        ok = false;
        detail = "two-point oracle instance is not 0.5";
    }
    report(8, ok,
           ok ? "500 random pairs: brute force within identity/diameter bounds, "
                "oracle value 0.5 exact"
              : detail);
}

void criterion_9() {
    Rng rng(909);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        const std::size_t n = 6 + std::size_t(rng.below(7));
        std::vector<double> base(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double v = rng.uniform(1.0, 6.0);
                base[i * n + j] = v;
                base[j * n + i] = v;
            }
        const FiniteMetricSpace a = path_metric_closure(FiniteMetricSpace({}, base));
        const double L = rng.uniform(1.0, 3.0);
        std::vector<double> wob(a.data());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double u = rng.uniform(1.0 / L, L);
                wob[i * n + j] *= u;
                wob[j * n + i] = wob[i * n + j];
            }
        const FiniteMetricSpace b = path_metric_closure(FiniteMetricSpace({}, wob));
        const ModulusFit fit =
            fit_modulus(qs_quotients(a, b), ModulusFamily::linear);
        if (fit.C > L * L + 1e-9) {
            ok = false;
            detail = "linear C exceeds L^2 at trial " + std::to_string(trial);
        }
    }
    const FiniteMetricSpace circ =
        MeshManifold::circle(40, 2.0 * 3.141592653589793).geodesic_metric();
    for (double alpha : {0.3, 0.5, 0.7, 0.9}) {
        std::vector<double> snow(circ.data());
        for (double& v : snow) v = std::pow(v, alpha);
        const ModulusFit fit = fit_modulus(
            qs_quotients(circ, FiniteMetricSpace({}, snow)), ModulusFamily::power_pair);
        if (std::abs(fit.alpha - alpha) > 0.02) {
            ok = false;
            detail = "snowflake exponent missed at alpha " + std::to_string(alpha);
        }
    }
    report(9, ok,
           ok ? "100 bi-Lipschitz fits under L^2, snowflake exponents within 0.02"
              : detail);
}

void criterion_10() {
    const char* lips = R"({
      "mesh": {"kind": "circle", "resolution": 300},
      "target": {"kind": "scale", "factor": 2.0},
      "epsilons": [0.4, 0.2], "seed": 7
    })";
    const char* qs = R"({
      "mesh": {"kind": "circle", "resolution": 300},
      "target": {"kind": "snowflake", "alpha": 0.5},
      "epsilons": [0.4, 0.2], "seed": 7
    })";
    bool ok = true;
    std::string detail = "reruns byte-identical for both pipelines";
    try {
        const ExperimentConfig cl = parse_config(lips);
        if (report_structured_json(run_lipschitz_pipeline(cl)) !=
            report_structured_json(run_lipschitz_pipeline(cl)))
            ok = false;
        const ExperimentConfig cq = parse_config(qs);
        if (report_structured_json(run_quasisymmetric_pipeline(cq)) !=
            report_structured_json(run_quasisymmetric_pipeline(cq)))
            ok = false;
        if (!ok) detail = "structured reports differ between reruns";
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("pipeline threw: ") + e.what();
    }
    report(10, ok, detail);
}

} // namespace

int main() {
    criterion_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%s\n", failures == 0 ? "all criteria passed" : "FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
