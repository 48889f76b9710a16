#include "mgeo/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mgeo {

namespace {

// Bound verifiers tolerate mesh-error-sized violations; beyond 5% of the
// bound the verdict fails.
constexpr double kMarginAllowance = 1.05;

} // namespace

DistortionField compute_lambda(const FiniteMetricSpace& d_g, const FiniteMetricSpace& d,
                               double epsilon) {
    if (d_g.size() != d.size())
        throw input_error("compute_lambda: metrics live on different point sets");
    if (!(epsilon > 0.0)) throw domain_error("compute_lambda: epsilon must be positive");
    const std::size_t n = d_g.size();
    DistortionField field;
    field.epsilon = epsilon;
    field.values.resize(n, 0.0);
    for (std::size_t p = 0; p < n; ++p) {
        double best = 0.0;
        std::size_t in_ball = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if (d_g(PointId(p), PointId(q)) <= epsilon) {
                ++in_ball;
                best = std::max(best, d(PointId(p), PointId(q)));
            }
        }
        if (in_ball < 2)
            throw resolution_error("compute_lambda: closed ball of point " +
                                   d_g.name(PointId(p)) + " holds fewer than two points");
        field.values[p] = best / epsilon;
    }
    return field;
}

void smooth_lambda(DistortionField& field, const MeshManifold& mesh, int rounds) {
    if (rounds < 0) throw domain_error("smooth_lambda: rounds must be >= 0");
    if (field.values.size() != mesh.vertex_count())
        throw input_error("smooth_lambda: field size does not match the mesh");
    std::vector<double> cur = field.values;
    std::vector<double> next(cur.size());
    const auto& adj = mesh.adjacency();
    for (int r = 0; r < rounds; ++r) {
        for (std::size_t v = 0; v < cur.size(); ++v) {
            double sum = 0.0;
            for (const auto& [u, w] : adj[v]) {
                (void)w;
                sum += cur[u];
            }
            const double mean = adj[v].empty() ? cur[v] : sum / double(adj[v].size());
            next[v] = 0.5 * cur[v] + 0.5 * mean;
        }
        cur.swap(next);
    }
    for (std::size_t v = 0; v < cur.size(); ++v)
        cur[v] = std::clamp(cur[v], 0.5 * field.values[v], 2.0 * field.values[v]);
    field.smoothed = std::move(cur);
}

BoundVerdict verify_sphere_bound(const FiniteMetricSpace& d_g, const FiniteMetricSpace& d,
                                 const DistortionField& field, const ModulusFit& eta,
                                 const std::vector<std::pair<PointId, PointId>>& pairs) {
    if (field.values.size() != d_g.size())
        throw input_error("verify_sphere_bound: field size mismatch");
    const double eps = field.epsilon;
    BoundVerdict v;
    v.bound = 1.0; // constraints are normalized: observed ratio must stay <= 1
    for (const auto& [p, q] : pairs) {
        const double dg = d_g(p, q);
        if (!(dg > 0.0) || dg > eps) {
            ++v.skipped;
            continue;
        }
        ++v.checked;
        const double le = field.values[p] * eps;
        const double dd = d(p, q);
        // Upper side: d <= lambda(p) eps. Lower side: eta(eps/dg)^-1 le <= d.
        const double up = dd / le;
        const double lo = le / (eta(eps / dg) * dd);
        const double worst = std::max(up, lo);
        if (worst > v.worst_observed) {
            v.worst_observed = worst;
            v.witness_a = p;
            v.witness_b = q;
        }
    }
    v.worst_margin = v.worst_observed > 0.0
                         ? v.bound / v.worst_observed
                         : std::numeric_limits<double>::infinity();
    v.ok = v.worst_observed <= v.bound * kMarginAllowance;
    return v;
}

namespace {

BoundVerdict lambda_ratio_scan(const FiniteMetricSpace& d_g, const DistortionField& field,
                               double C, double lo_window, double hi_window) {
    BoundVerdict v;
    v.bound = C;
    const std::size_t n = d_g.size();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q) continue;
            const double dg = d_g(PointId(p), PointId(q));
            if (dg < lo_window || dg >= hi_window) {
                ++v.skipped;
                continue;
            }
            ++v.checked;
            const double ratio = field.values[q] / field.values[p];
            if (ratio > v.worst_observed) {
                v.worst_observed = ratio;
                v.witness_a = PointId(p);
                v.witness_b = PointId(q);
            }
        }
    v.worst_margin = v.worst_observed > 0.0
                         ? v.bound / v.worst_observed
                         : std::numeric_limits<double>::infinity();
    v.ok = v.worst_observed <= v.bound * kMarginAllowance;
    return v;
}

} // namespace

BoundVerdict verify_ball_bound(const FiniteMetricSpace& d_g, const DistortionField& field,
                               double R, const ModulusFit& eta) {
    if (R < 1.0) throw domain_error("verify_ball_bound: R must be >= 1");
    if (field.values.size() != d_g.size())
        throw input_error("verify_ball_bound: field size mismatch");
    const double C = eta(1.0) * eta(1.0) * std::pow(eta(8.0 * R), 4.0);
    return lambda_ratio_scan(d_g, field, C, 0.0, R * field.epsilon);
}

BoundVerdict verify_annulus_bound(const FiniteMetricSpace& d_g, const DistortionField& field,
                                  double R, const ModulusFit& eta) {
    if (R < 1.0) throw domain_error("verify_annulus_bound: R must be >= 1");
    if (field.values.size() != d_g.size())
        throw input_error("verify_annulus_bound: field size mismatch");
    const double C = eta(1.0) * eta(R) * eta(R);
    const double eps = field.epsilon;
    auto v = lambda_ratio_scan(d_g, field, C, eps / R,
                               std::nextafter(R * eps, std::numeric_limits<double>::max()));
    return v;
}

PointId annulus_witness(const FiniteMetricSpace& d_g, PointId p, PointId q, double r) {
    if (!(r > 0.0)) throw domain_error("annulus_witness: r must be positive");
    if (!(d_g(p, q) < r))
        throw precondition_error("annulus_witness: d_g(p,q) must be below r");
    const std::size_t n = d_g.size();
    const double lo = r / 8.0, hi = 8.0 * r, target = 4.0 * r;
    double best_gap = std::numeric_limits<double>::infinity();
    PointId best = p;
    bool found = false;
    for (std::size_t s = 0; s < n; ++s) {
        const double dp = d_g(p, PointId(s));
        const double dq = d_g(q, PointId(s));
        if (dp < lo || dp > hi || dq < lo || dq > hi) continue;
        const double gap = std::abs(dp - target);
        if (!found || gap < best_gap) {
            found = true;
            best_gap = gap;
            best = PointId(s);
        }
    }
    if (!found)
        throw resolution_error("annulus_witness: no sampled point lands in the annulus of " +
                               d_g.name(p));
    return best;
}

GeodesicChain geodesic_chain(const MeshManifold& mesh, const FiniteMetricSpace& d_g,
                             PointId p, PointId q, double epsilon,
                             const ConformalWeight* path_weight) {
    if (!(epsilon > 0.0)) throw domain_error("geodesic_chain: epsilon must be positive");
    if (d_g.size() != mesh.vertex_count())
        throw input_error("geodesic_chain: metric does not match the mesh");
    if (d_g(p, q) < 0.5 * epsilon)
        throw precondition_error("geodesic_chain: endpoints closer than epsilon/2");

    const std::vector<PointId> path = mesh.shortest_path(p, q, path_weight);
    // Split indices by iterated midpoints: while a link is epsilon or longer,
    // insert the path vertex nearest to its d_g midpoint.
    std::vector<std::size_t> marks{0, path.size() - 1};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> refined;
        refined.push_back(marks.front());
        for (std::size_t k = 0; k + 1 < marks.size(); ++k) {
            const std::size_t i = marks[k], j = marks[k + 1];
            const double len = d_g(path[i], path[j]);
            if (len >= epsilon && j > i + 1) {
                std::size_t mid = i + 1;
                double best = std::numeric_limits<double>::infinity();
                for (std::size_t m = i + 1; m < j; ++m) {
                    const double gap = std::abs(d_g(path[i], path[m]) - 0.5 * len);
                    if (gap < best) {
                        best = gap;
                        mid = m;
                    }
                }
                refined.push_back(mid);
                grew = true;
            }
            refined.push_back(j);
        }
        marks.swap(refined);
    }

    GeodesicChain chain;
    chain.points.reserve(marks.size());
    for (std::size_t m : marks) chain.points.push_back(path[m]);
    for (std::size_t k = 0; k + 1 < chain.points.size(); ++k) {
        const double len = d_g(chain.points[k], chain.points[k + 1]);
        if (len < 0.5 * epsilon) chain.worst_short = std::max(chain.worst_short, 0.5 * epsilon - len);
        if (len >= epsilon) chain.worst_long = std::max(chain.worst_long, len - epsilon);
    }
    const double slack = mesh.mesh_scale();
    if (chain.worst_short > slack || chain.worst_long > slack)
        throw resolution_error("geodesic_chain: mesh too coarse to realize the link window");
    return chain;
}

FiniteMetricSpace build_rho_epsilon(const MeshManifold& mesh, const DistortionField& field,
                                    double C) {
    if (!field.smoothed)
        throw precondition_error("build_rho_epsilon: field has no smoothed values");
    if (C < 1.0) throw domain_error("build_rho_epsilon: C must be >= 1");
    ConformalWeight w;
    w.values.reserve(field.smoothed->size());
    for (double v : *field.smoothed) w.values.push_back(4.0 * C * v);
    return mesh.rescale_metric(w, "rho_eps");
}

AdjacencyVerdict verify_adjacency_inequality(const FiniteMetricSpace& d_g,
                                             const FiniteMetricSpace& d,
                                             const FiniteMetricSpace& rho_eps,
                                             double epsilon, double C,
                                             const ModulusFit& eta) {
    if (d_g.size() != d.size() || d_g.size() != rho_eps.size())
        throw input_error("verify_adjacency_inequality: space size mismatch");
    AdjacencyVerdict v;
    v.L = std::max(1.0, 8.0 * C * C * eta(2.0));
    const std::size_t n = d_g.size();
    double worst_upper = std::numeric_limits<double>::infinity();
    double worst_lower = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t) {
            const double dg = d_g(PointId(s), PointId(t));
            if (dg < 0.5 * epsilon || dg >= epsilon) continue;
            ++v.checked;
            const double dd = d(PointId(s), PointId(t));
            const double rho = rho_eps(PointId(s), PointId(t));
            worst_upper = std::min(worst_upper, rho / dd);
            worst_lower = std::min(worst_lower, dd * v.L / rho);
        }
    v.worst_upper_margin = worst_upper;
    v.worst_lower_margin = worst_lower;
    // The inequality demands d <= rho (upper margin >= 1) and
    // rho <= L d (lower margin >= 1), up to the 5% allowance.
    v.ok = worst_upper * kMarginAllowance >= 1.0 && worst_lower * kMarginAllowance >= 1.0;
    return v;
}

} // namespace mgeo
