#include "mgeo/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "mgeo/rng.hpp"

#include <json.hpp>

namespace mgeo {

using nlohmann::json;

std::string to_string(TargetSpec::Kind kind) {
    switch (kind) {
        case TargetSpec::Kind::geodesic: return "geodesic";
        case TargetSpec::Kind::scale: return "scale";
        case TargetSpec::Kind::snowflake: return "snowflake";
        case TargetSpec::Kind::conformal: return "conformal";
        case TargetSpec::Kind::conformal_snowflake: return "conformal_snowflake";
    }
    return "?";
}

TargetSpec::Kind target_kind_from_string(const std::string& s) {
    if (s == "geodesic") return TargetSpec::Kind::geodesic;
    if (s == "scale") return TargetSpec::Kind::scale;
    if (s == "snowflake") return TargetSpec::Kind::snowflake;
    if (s == "conformal") return TargetSpec::Kind::conformal;
    if (s == "conformal_snowflake") return TargetSpec::Kind::conformal_snowflake;
    throw config_error("unknown target kind: " + s);
}

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const char* where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) known = true;
        if (!known)
            throw config_error(std::string("unknown key '") + item.key() + "' in " + where);
    }
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.epsilons.empty()) throw config_error("epsilon schedule is empty");
    for (std::size_t i = 0; i < cfg.epsilons.size(); ++i) {
        if (!(cfg.epsilons[i] > 0.0)) throw config_error("epsilons must be positive");
        if (i && !(cfg.epsilons[i] < cfg.epsilons[i - 1]))
            throw config_error("epsilon schedule must be strictly decreasing");
    }
    if (cfg.smoothing_rounds < 0) throw config_error("smoothing_rounds must be >= 0");
    if (cfg.r_override && !(*cfg.r_override >= 1.0))
        throw config_error("r_override must be >= 1");
}

} // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw config_error("config root must be an object");
    reject_unknown_keys(doc,
                        {"label", "mesh", "target", "epsilons", "seed", "smoothing_rounds",
                         "r_override"},
                        "config");
    for (const char* required : {"mesh", "target", "epsilons", "seed"})
        if (!doc.contains(required))
            throw config_error(std::string("config is missing required field '") + required +
                               "'");

    ExperimentConfig cfg;
    cfg.label = doc.value("label", std::string());

    const json& mesh = doc.at("mesh");
    reject_unknown_keys(mesh, {"kind", "resolution", "size"}, "mesh");
    cfg.mesh.kind = mesh_kind_from_string(mesh.at("kind").get<std::string>());
    cfg.mesh.resolution = mesh.at("resolution").get<std::uint32_t>();
    cfg.mesh.size = mesh.value("size",
                               cfg.mesh.kind == MeshKind::circle ? 2.0 * 3.141592653589793
                                                                 : 1.0);

    const json& target = doc.at("target");
    reject_unknown_keys(target, {"kind", "factor", "alpha", "amplitude"}, "target");
    cfg.target.kind = target_kind_from_string(target.at("kind").get<std::string>());
    cfg.target.factor = target.value("factor", 1.0);
    cfg.target.alpha = target.value("alpha", 1.0);
    cfg.target.amplitude = target.value("amplitude", 1.0);

    cfg.epsilons = doc.at("epsilons").get<std::vector<double>>();
    cfg.seed = doc.at("seed").get<std::uint64_t>();
    cfg.smoothing_rounds = doc.value("smoothing_rounds", 1);
    if (doc.contains("r_override") && !doc.at("r_override").is_null())
        cfg.r_override = doc.at("r_override").get<double>();

    validate(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw io_error("cannot open config '" + path + "'");
    std::string text;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof(buf), f)) > 0) text.append(buf, got);
    std::fclose(f);
    return parse_config(text);
}

std::string config_to_json(const ExperimentConfig& cfg) {
    json doc;
    doc["label"] = cfg.label;
    doc["mesh"] = {{"kind", to_string(cfg.mesh.kind)},
                   {"resolution", cfg.mesh.resolution},
                   {"size", cfg.mesh.size}};
    doc["target"] = {{"kind", to_string(cfg.target.kind)},
                     {"factor", cfg.target.factor},
                     {"alpha", cfg.target.alpha},
                     {"amplitude", cfg.target.amplitude}};
    doc["epsilons"] = cfg.epsilons;
    doc["seed"] = cfg.seed;
    doc["smoothing_rounds"] = cfg.smoothing_rounds;
    if (cfg.r_override)
        doc["r_override"] = *cfg.r_override;
    else
        doc["r_override"] = nullptr;
    return doc.dump(2);
}

MeshManifold build_mesh(const MeshSpec& spec) {
    switch (spec.kind) {
        case MeshKind::circle: return MeshManifold::circle(spec.resolution, spec.size);
        case MeshKind::torus: return MeshManifold::torus(spec.resolution);
        case MeshKind::sphere: return MeshManifold::sphere(spec.resolution, spec.size);
    }
    throw config_error("bad mesh kind");
}

namespace {

FiniteMetricSpace scale_space(const FiniteMetricSpace& space, double c, std::string label) {
    std::vector<double> data = space.data();
    for (double& v : data) v *= c;
    return FiniteMetricSpace(space.names(), std::move(data), std::move(label));
}

FiniteMetricSpace power_space(const FiniteMetricSpace& space, double alpha,
                              std::string label) {
    std::vector<double> data = space.data();
    for (double& v : data) v = std::pow(v, alpha);
    return FiniteMetricSpace(space.names(), std::move(data), std::move(label));
}

ConformalWeight coordinate_weight(const MeshManifold& mesh, double amplitude) {
    // Deterministic nonconstant profile from the embedding: the coordinate
    // sum, normalized to [0, 1] across the mesh.
    std::vector<double> t(mesh.vertex_count());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& v = mesh.vertex(PointId(i));
        t[i] = v[0] + v[1] + v[2];
    }
    const auto [lo, hi] = std::minmax_element(t.begin(), t.end());
    const double span = *hi - *lo;
    ConformalWeight w;
    w.values.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        w.values[i] = 1.0 + (span > 0.0 ? amplitude * (t[i] - *lo) / span : 0.0);
    return w;
}

} // namespace

FiniteMetricSpace build_target(const MeshManifold& mesh, const FiniteMetricSpace& d_g,
                               const TargetSpec& spec) {
    switch (spec.kind) {
        case TargetSpec::Kind::geodesic: return d_g.relabeled("d");
        case TargetSpec::Kind::scale:
            if (!(spec.factor > 0.0)) throw config_error("scale factor must be positive");
            return scale_space(d_g, spec.factor, "d");
        case TargetSpec::Kind::snowflake:
            if (!(spec.alpha > 0.0 && spec.alpha <= 1.0))
                throw config_error("snowflake exponent must lie in (0, 1]");
            return power_space(d_g, spec.alpha, "d");
        case TargetSpec::Kind::conformal:
            if (!(spec.amplitude >= 0.0))
                throw config_error("conformal amplitude must be >= 0");
            return mesh.rescale_metric(coordinate_weight(mesh, spec.amplitude), "d");
        case TargetSpec::Kind::conformal_snowflake: {
            if (!(spec.alpha > 0.0 && spec.alpha <= 1.0))
                throw config_error("snowflake exponent must lie in (0, 1]");
            if (!(spec.amplitude >= 0.0))
                throw config_error("conformal amplitude must be >= 0");
            auto base = mesh.rescale_metric(coordinate_weight(mesh, spec.amplitude), "d");
            return power_space(base, spec.alpha, "d");
        }
    }
    throw config_error("bad target kind");
}

namespace {

constexpr double kAllowance = 1.05; // shared relative tolerance budget

std::uint64_t derive_seed(std::uint64_t seed, std::size_t index) {
    return seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
}

VerdictRecord make_verdict(std::string stage, double bound, double observed,
                           std::string witness = {}) {
    VerdictRecord v;
    v.stage = std::move(stage);
    v.bound = bound;
    v.observed = observed;
    v.margin = observed > 0.0 ? bound / observed
                              : std::numeric_limits<double>::infinity();
    v.ok = observed <= bound * kAllowance;
    v.witness = std::move(witness);
    return v;
}

std::string pair_witness(const FiniteMetricSpace& space, PointId a, PointId b) {
    return space.name(a) + "," + space.name(b);
}

std::vector<double> restrict_table(const FiniteMetricSpace& space,
                                   const std::vector<PointId>& subset) {
    const std::size_t m = subset.size();
    std::vector<double> out(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out[i * m + j] = space(subset[i], subset[j]);
    return out;
}

AxiomReport check_axioms_adaptive(const FiniteMetricSpace& space, std::uint64_t seed) {
    const double tol = space.tolerance();
    if (space.size() <= 400) return check_metric_axioms(space, tol);
    return check_metric_axioms_sampled(space, tol, seed, 200000);
}

VerdictRecord axiom_verdict(const FiniteMetricSpace& space, std::uint64_t seed) {
    const AxiomReport rep = check_axioms_adaptive(space, seed);
    VerdictRecord v;
    v.stage = "glued_metric_axioms";
    v.ok = rep.valid;
    v.bound = space.tolerance();
    double worst = 0.0;
    std::string witness;
    for (const auto& slot : {rep.identity, rep.symmetry, rep.triangle})
        if (slot && slot->magnitude > worst) {
            worst = slot->magnitude;
            witness = space.name(slot->i) + "," + space.name(slot->j);
        }
    v.observed = worst;
    v.margin = worst > 0.0 ? v.bound / worst : std::numeric_limits<double>::infinity();
    v.witness = std::move(witness);
    return v;
}

std::vector<PointId> strided_subset(const std::vector<PointId>& members, std::size_t cap) {
    if (members.size() <= cap) return members;
    std::vector<PointId> out;
    out.reserve(cap);
    for (std::size_t i = 0; i < cap; ++i)
        out.push_back(members[i * members.size() / cap]);
    return out;
}

void warn_coarse_mesh(const MeshManifold& mesh, const ExperimentConfig& cfg) {
    const double min_eps = cfg.epsilons.back();
    if (mesh.mesh_scale() >= min_eps / 4.0)
        std::cerr << "warning: mesh scale " << mesh.mesh_scale()
                  << " is coarse for epsilon " << min_eps
                  << " (want mesh_scale < eps/4)\n";
}

bool finish_record(EpsilonRecord& rec) {
    rec.all_ok = std::all_of(rec.verdicts.begin(), rec.verdicts.end(),
                             [](const VerdictRecord& v) { return v.ok; });
    return rec.all_ok;
}

} // namespace

RunReport run_lipschitz_pipeline(const ExperimentConfig& cfg) {
    validate(cfg);
    const MeshManifold mesh = build_mesh(cfg.mesh);
    warn_coarse_mesh(mesh, cfg);
    const FiniteMetricSpace d_g = mesh.geodesic_metric();
    const FiniteMetricSpace d = build_target(mesh, d_g, cfg.target);

    RunReport rep;
    rep.pipeline = "lipschitz";
    rep.config = cfg;
    rep.mesh_scale = mesh.mesh_scale();

    const double L = bilipschitz_constant(d_g, d);
    if (!std::isfinite(L))
        throw pipeline_error("bilipschitz",
                             "target is not bi-Lipschitz comparable to the geodesic metric");
    rep.global_L = L;
    rep.hoelder = fit_hoelder(d_g, d);

    TripleSampleSpec tri;
    tri.seed = cfg.seed;
    const ModulusFit eta = fit_modulus(qs_quotients(d_g, d, tri), ModulusFamily::linear);

    const FiniteMetricSpace scaled = scale_space(d_g, L, "L*d_g");

    for (std::size_t idx = 0; idx < cfg.epsilons.size(); ++idx) {
        const double eps = cfg.epsilons[idx];
        EpsilonRecord rec;
        rec.epsilon = eps;
        rec.L = L;
        rec.C = 1.0;
        rec.R = 0.0;
        rec.K_observed = 0;
        rec.eta = eta;

        const Net net = greedy_net(scaled, eps);
        const NetVerdict nv = verify_net(scaled, net.members, eps);
        if (!nv.ok)
            throw pipeline_error("net", "greedy net failed verification at pair " +
                                            pair_witness(scaled, nv.witness_a, nv.witness_b));
        rec.net_size = net.members.size();
        rec.net_members = net.members;

        GluedMetric glued;
        try {
            glued = glue(scaled, net.members, restrict_table(d, net.members));
        } catch (const precondition_error& e) {
            throw pipeline_error("glue_precondition", e.what());
        }

        rec.verdicts.push_back(axiom_verdict(glued.result, derive_seed(cfg.seed, idx)));
        if (!rec.verdicts.back().ok)
            throw pipeline_error("glued_metric_axioms",
                                 "glued table violates the metric axioms at " +
                                     rec.verdicts.back().witness);

        const double comparison = bilipschitz_constant(d_g, glued.result);
        rec.verdicts.push_back(
            make_verdict("bilipschitz_comparison", L + 1e-6, comparison));

        // The distortion field is informative even here: its max gives the
        // target-side net resolution.
        const DistortionField field = compute_lambda(d_g, d, eps);
        const auto [lo_it, hi_it] =
            std::minmax_element(field.values.begin(), field.values.end());
        rec.lambda_min = *lo_it;
        rec.lambda_max = *hi_it;
        rec.lambda_values = field.values;
        rec.mu = 1.0;
        rec.gh_net_resolution = 2.0 * eps * rec.lambda_max;

        const CommonNetBound gh =
            gh_via_common_net(glued.result, d, net.members, 1.0, eps);
        rec.gh_identity = gh.identity_bound;
        rec.gh_common_net = gh.bound;
        rec.gh_density_ok = gh.density_ok;
        rec.verdicts.push_back(make_verdict("gh_net_density", eps,
                                            std::max(gh.worst_gap_a, gh.worst_gap_b)));

        TripleSampleSpec tri2;
        tri2.seed = derive_seed(cfg.seed, idx);
        rec.eta2 = fit_modulus(qs_quotients(d_g, glued.result, tri2),
                               ModulusFamily::linear);

        finish_record(rec);
        rep.records.push_back(std::move(rec));
    }
    rep.all_ok = std::all_of(rep.records.begin(), rep.records.end(),
                             [](const EpsilonRecord& r) { return r.all_ok; });
    return rep;
}

RunReport run_quasisymmetric_pipeline(const ExperimentConfig& cfg) {
    validate(cfg);
    const MeshManifold mesh = build_mesh(cfg.mesh);
    warn_coarse_mesh(mesh, cfg);
    const FiniteMetricSpace d_g = mesh.geodesic_metric();
    const FiniteMetricSpace d = build_target(mesh, d_g, cfg.target);
    const std::size_t n = d_g.size();

    RunReport rep;
    rep.pipeline = "quasisymmetric";
    rep.config = cfg;
    rep.mesh_scale = mesh.mesh_scale();
    rep.global_L = bilipschitz_constant(d_g, d);
    rep.hoelder = fit_hoelder(d_g, d);

    TripleSampleSpec tri;
    tri.seed = cfg.seed;
    const ModulusFit eta =
        fit_modulus(qs_quotients(d_g, d, tri), ModulusFamily::power_pair);

    for (std::size_t idx = 0; idx < cfg.epsilons.size(); ++idx) {
        const double eps = cfg.epsilons[idx];
        EpsilonRecord rec;
        rec.epsilon = eps;
        rec.eta = eta;

        // Half-epsilon net in the geodesic metric; its approximation graph
        // yields K and hence the comparison radius R.
        const Net net = greedy_net(d_g, eps / 2.0);
        const NetVerdict nv = verify_net(d_g, net.members, eps / 2.0);
        if (!nv.ok)
            throw pipeline_error("net", "greedy net failed verification at pair " +
                                            pair_witness(d_g, nv.witness_a, nv.witness_b));
        rec.net_size = net.members.size();
        rec.net_members = net.members;

        const ApproximationGraph approx =
            build_approximation(net, mesh.dim(), mesh.mesh_scale());
        rec.K_observed = approx.K_observed;
        if (rec.K_observed == 0)
            throw pipeline_error("approximation",
                                 "no K below the cutoff satisfies conditions (A1)-(A4)");
        rec.verdicts.push_back(make_verdict(
            "approximation_conditions",
            10.0 * std::pow(8.0, mesh.dim()) * approx.M_measured * approx.M_measured,
            double(rec.K_observed)));

        rec.R = cfg.r_override ? *cfg.r_override : 2.0 * (2.0 * rec.K_observed + 1.0);
        rec.C = eta(1.0) * eta(1.0) * std::pow(eta(16.0 * rec.R), 4.0);

        DistortionField field = compute_lambda(d_g, d, eps);
        smooth_lambda(field, mesh, cfg.smoothing_rounds);
        const auto [lo_it, hi_it] =
            std::minmax_element(field.values.begin(), field.values.end());
        rec.lambda_min = *lo_it;
        rec.lambda_max = *hi_it;
        rec.lambda_values = field.values;
        rec.lambda_smoothed = *field.smoothed;
        rec.mu = std::max(rec.C, 1.0) * rec.lambda_max;

        // Scale-comparison bounds with the fitted modulus.
        {
            std::vector<std::pair<PointId, PointId>> window;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    if (p == q) continue;
                    // Both orientations: the bound is asymmetric in (p, q).
                    const double dg = d_g(PointId(p), PointId(q));
                    if (dg > 0.0 && dg <= eps) window.push_back({PointId(p), PointId(q)});
                }
            const BoundVerdict sb = verify_sphere_bound(d_g, d, field, eta, window);
            rec.verdicts.push_back(make_verdict(
                "sphere_bound", sb.bound, sb.worst_observed,
                pair_witness(d_g, sb.witness_a, sb.witness_b)));
            if (!rec.verdicts.back().ok)
                throw pipeline_error("sphere_bound",
                                     "comparison failed at " + rec.verdicts.back().witness);
        }
        {
            const BoundVerdict bb = verify_ball_bound(d_g, field, rec.R, eta);
            rec.verdicts.push_back(make_verdict(
                "ball_bound", bb.bound, bb.worst_observed,
                pair_witness(d_g, bb.witness_a, bb.witness_b)));
            if (!rec.verdicts.back().ok)
                throw pipeline_error("ball_bound",
                                     "lambda ratio exceeded C at " +
                                         rec.verdicts.back().witness);
            const BoundVerdict ab = verify_annulus_bound(d_g, field, rec.R, eta);
            rec.verdicts.push_back(make_verdict(
                "annulus_bound", ab.bound, ab.worst_observed,
                pair_witness(d_g, ab.witness_a, ab.witness_b)));
        }

        const FiniteMetricSpace rho = build_rho_epsilon(mesh, field, rec.C);

        const AdjacencyVerdict adj =
            verify_adjacency_inequality(d_g, d, rho, eps, rec.C, eta);
        rec.L = adj.L;
        {
            VerdictRecord v;
            v.stage = "adjacency_inequality";
            v.ok = adj.ok;
            v.bound = 1.0;
            v.observed = 1.0 / std::min(adj.worst_upper_margin, adj.worst_lower_margin);
            v.margin = std::min(adj.worst_upper_margin, adj.worst_lower_margin);
            rec.verdicts.push_back(v);
            if (!adj.ok)
                throw pipeline_error("adjacency_inequality",
                                     "rho_eps vs d bounds failed in the adjacency window");
        }

        // Chain argument: d <= rho_eps on net pairs. Full scan for the
        // inequality itself, plus executed midpoint chains (links verified
        // against the adjacency window and the per-link bound) on a seeded
        // sample of pairs.
        {
            double worst = 0.0;
            PointId wa = 0, wb = 0;
            for (std::size_t i = 0; i < net.members.size(); ++i)
                for (std::size_t j = i + 1; j < net.members.size(); ++j) {
                    const PointId a = net.members[i], b = net.members[j];
                    const double ratio = d(a, b) / rho(a, b);
                    if (ratio > worst) {
                        worst = ratio;
                        wa = a;
                        wb = b;
                    }
                }
            rec.verdicts.push_back(
                make_verdict("net_pair_domination", 1.0, worst, pair_witness(d_g, wa, wb)));
            if (!rec.verdicts.back().ok)
                throw pipeline_error("net_pair_domination",
                                     "d exceeds rho_eps at net pair " +
                                         rec.verdicts.back().witness);

            ConformalWeight w;
            w.values.reserve(field.smoothed->size());
            for (double v : *field.smoothed) w.values.push_back(4.0 * rec.C * v);
            Rng rng(derive_seed(cfg.seed, idx));
            double worst_link = 0.0;
            std::size_t executed = 0;
            for (std::size_t attempt = 0; attempt < 600 && executed < 200; ++attempt) {
                const PointId a = net.members[rng.below(net.members.size())];
                const PointId b = net.members[rng.below(net.members.size())];
                if (a == b || d_g(a, b) < 0.5 * eps) continue;
                const GeodesicChain chain = geodesic_chain(mesh, d_g, a, b, eps, &w);
                for (std::size_t k = 0; k + 1 < chain.points.size(); ++k) {
                    const PointId u = chain.points[k], v = chain.points[k + 1];
                    worst_link = std::max(worst_link, d(u, v) / rho(u, v));
                }
                ++executed;
            }
            if (executed > 0)
                rec.verdicts.push_back(make_verdict(
                    "chain_links", 1.0, worst_link, std::to_string(executed) + " chains"));
        }

        GluedMetric glued;
        try {
            glued = glue(rho, net.members, restrict_table(d, net.members));
        } catch (const precondition_error& e) {
            throw pipeline_error("glue_precondition", e.what());
        }

        rec.verdicts.push_back(axiom_verdict(glued.result, derive_seed(cfg.seed, idx) + 1));
        if (!rec.verdicts.back().ok)
            throw pipeline_error("glued_metric_axioms",
                                 "glued table violates the metric axioms at " +
                                     rec.verdicts.back().witness);

        // Local isometry below half the smallest gluing gap.
        {
            // The separation of the shortcut metric is the theorem-backed
            // floor for the unchanged-scale radius.
            LocalIsometryVerdict liv = verify_local_isometry(rho, glued, 0.0);
            liv.ok = liv.max_scale >= liv.separation;
            VerdictRecord v;
            v.stage = "local_isometry";
            v.ok = liv.ok;
            v.bound = liv.separation;
            v.observed = liv.max_scale;
            v.margin = v.bound > 0.0 ? liv.max_scale / v.bound
                                     : std::numeric_limits<double>::infinity();
            rec.verdicts.push_back(v);
            if (!liv.ok)
                throw pipeline_error("local_isometry",
                                     "gluing disturbed scales below the shortcut separation");
        }

        TripleSampleSpec tri2;
        tri2.seed = derive_seed(cfg.seed, idx) + 2;
        tri2.exhaustive_subset = strided_subset(net.members, 120);
        rec.eta2 = fit_modulus(qs_quotients(d_g, glued.result, tri2),
                               ModulusFamily::power_pair);

        const CommonNetBound gh =
            gh_via_common_net(glued.result, d, net.members, rec.mu, eps);
        rec.gh_identity = gh.identity_bound;
        rec.gh_common_net = gh.bound;
        rec.gh_density_ok = gh.density_ok;
        rec.gh_net_resolution = 2.0 * eps * rec.lambda_max;
        rec.verdicts.push_back(make_verdict(
            "gh_envelope", 2.0 * rep.hoelder.C * std::pow(eps, rep.hoelder.alpha),
            rec.gh_net_resolution));

        finish_record(rec);
        rep.records.push_back(std::move(rec));
    }
    rep.all_ok = std::all_of(rep.records.begin(), rep.records.end(),
                             [](const EpsilonRecord& r) { return r.all_ok; });
    return rep;
}

} // namespace mgeo
