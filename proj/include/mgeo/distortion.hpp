#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mgeo/mesh.hpp"
#include "mgeo/metric_space.hpp"
#include "mgeo/qs_fit.hpp"

namespace mgeo {

/// The scale-eps length-distortion field of the identity between a geodesic
/// metric and a target metric:
///   value(p) = max{ d(p,q) : d_g(p,q) <= eps } / eps.
struct DistortionField {
    double epsilon = 0.0;
    std::vector<double> values;
    std::optional<std::vector<double>> smoothed; // clamped into [v/2, 2v]
};

/// Exact scan over closed eps-balls. Throws resolution_error (naming the
/// point) when some closed ball holds fewer than two points.
DistortionField compute_lambda(const FiniteMetricSpace& d_g, const FiniteMetricSpace& d,
                               double epsilon);

/// Discrete stand-in for smooth mollification: `rounds` steps of lazy
/// neighbor averaging (half the value, half the neighbor mean) over the mesh
/// graph, then a pointwise clamp into the factor-2 envelope [v/2, 2v].
/// rounds = 0 copies the raw values.
void smooth_lambda(DistortionField& field, const MeshManifold& mesh, int rounds);

struct BoundVerdict {
    bool ok = true;
    double bound = 0.0;        // the constant being verified
    double worst_observed = 0.0;
    double worst_margin = std::numeric_limits<double>::infinity(); // bound/observed, >= 1 means ok
    PointId witness_a = 0, witness_b = 0;
    std::size_t checked = 0, skipped = 0;
};

/// Two-sided comparison on pairs with 0 < d_g(p,q) <= eps:
///   eta(eps/d_g(p,q))^-1 * lambda(p) * eps <= d(p,q) <= lambda(p) * eps.
/// Margin is the worst multiplicative slack over both sides; pairs outside
/// the scale window are skipped and counted.
BoundVerdict verify_sphere_bound(const FiniteMetricSpace& d_g, const FiniteMetricSpace& d,
                                 const DistortionField& field, const ModulusFit& eta,
                                 const std::vector<std::pair<PointId, PointId>>& pairs);

/// Lambda-ratio bound on balls: all pairs with d_g < R*eps must satisfy
/// lambda(q) <= C * lambda(p) with C = eta(1)^2 * eta(8R)^4.
BoundVerdict verify_ball_bound(const FiniteMetricSpace& d_g, const DistortionField& field,
                               double R, const ModulusFit& eta);

/// Annular variant on shell pairs eps/R <= d_g <= R*eps with the smaller
/// constant C = eta(1) * eta(R)^2. Report-style: the verdict records whether
/// the observed ratio exceeds the stated constant.
BoundVerdict verify_annulus_bound(const FiniteMetricSpace& d_g, const DistortionField& field,
                                  double R, const ModulusFit& eta);

/// A point s with both d_g(p,s) and d_g(q,s) in [r/8, 8r], chosen nearest to
/// the target distance 4r from p. Requires d_g(p,q) < r; throws
/// resolution_error when no sampled point qualifies.
PointId annulus_witness(const FiniteMetricSpace& d_g, PointId p, PointId q, double r);

struct GeodesicChain {
    std::vector<PointId> points; // s_0 = p, ..., s_l = q along a shortest path
    double worst_short = 0.0;    // largest shortfall below eps/2 over the links
    double worst_long = 0.0;     // largest excess at or above eps over the links
};

/// Midpoint-refined chain along a shortest path (optionally a path that is
/// shortest for rescaled weights, with link lengths still measured in d_g):
/// consecutive links aim for eps/2 <= d_g(s_i, s_{i+1}) < eps, with up to one
/// mesh-scale of slack on each bound. Requires d_g(p,q) >= eps/2.
GeodesicChain geodesic_chain(const MeshManifold& mesh, const FiniteMetricSpace& d_g,
                             PointId p, PointId q, double epsilon,
                             const ConformalWeight* path_weight = nullptr);

/// Path metric induced by the conformal factor 4*C*smoothed; this is the
/// rescaled approximant glued against the target at the net. Requires the
/// field to carry smoothed values and C >= 1.
FiniteMetricSpace build_rho_epsilon(const MeshManifold& mesh, const DistortionField& field,
                                    double C);

struct AdjacencyVerdict {
    bool ok = true;
    double L = 1.0;                 // max{1, 8 C^2 eta(2)}, handed to the gluing stage
    double worst_upper_margin = std::numeric_limits<double>::infinity(); // rho/d
    double worst_lower_margin = std::numeric_limits<double>::infinity(); // d*8C^2 eta(2)/rho
    std::size_t checked = 0;
};

/// On every pair with eps/2 <= d_g < eps checks
///   (8 C^2 eta(2))^-1 rho_eps <= d <= rho_eps.
AdjacencyVerdict verify_adjacency_inequality(const FiniteMetricSpace& d_g,
                                             const FiniteMetricSpace& d,
                                             const FiniteMetricSpace& rho_eps,
                                             double epsilon, double C,
                                             const ModulusFit& eta);

} // namespace mgeo
