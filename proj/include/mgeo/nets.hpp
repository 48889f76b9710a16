#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgeo/metric_space.hpp"

namespace mgeo {

/// An epsilon-separated, epsilon-dense subset of a host space.
struct Net {
    const FiniteMetricSpace* host = nullptr;
    std::vector<PointId> members;
    double epsilon = 0.0;
};

/// Greedy scan: a point joins the net when it is >= epsilon from every member
/// picked so far. Deterministic given the scan order (defaults to point order).
Net greedy_net(const FiniteMetricSpace& space, double epsilon,
               const std::vector<PointId>& scan_order = {});

struct NetVerdict {
    enum class Property { none, separation, density };
    bool ok = true;
    Property failed = Property::none;
    PointId witness_a = 0, witness_b = 0; // density: only witness_a is meaningful
};

/// Full-scan check of both net properties; reports the first witness of each
/// failure (separation checked first).
NetVerdict verify_net(const FiniteMetricSpace& space, const std::vector<PointId>& subset,
                      double epsilon);

/// The quadruple built from a net: graph on the members with an edge when
/// dist < 2*epsilon, centers = inclusion, constant radius epsilon, cover sets
/// U_v = open epsilon-balls. Holds the verification state for the four
/// approximation conditions.
struct ApproximationGraph {
    const FiniteMetricSpace* host = nullptr;
    std::vector<PointId> vertices; // net members
    double epsilon = 0.0;
    std::uint32_t dim = 1;
    std::vector<std::vector<std::uint32_t>> neighbors; // indices into `vertices`
    std::vector<std::vector<PointId>> cover;           // U_v as host point ids
    double M_measured = 1.0;
    int K_observed = 0; // 0 when the search hit the cutoff
    double mesh_scale = 0.0; // slack for the discrete overlap test; 0 disables
};

struct ConditionReport {
    bool a1 = false, a2 = false, a3 = false, a4 = false;
    int max_valence = 0;
    std::string detail; // first failure, for diagnostics
    bool all() const { return a1 && a2 && a3 && a4; }
};

/// Ball-cardinality ratio constant: max over radii {eps/2, 3 eps, 4 eps} of
/// (largest ball cardinality) / (smallest ball cardinality).
double measure_volume_ratio(const FiniteMetricSpace& space, double epsilon);

ApproximationGraph build_approximation(const Net& net, std::uint32_t dim,
                                       double mesh_scale = 0.0);

/// Checks (A1)-(A4) for the given K with L = 1:
///   A1  every valence < K,
///   A2  B(p_v, eps) == U_v (by construction; still checked),
///   A3  edges imply overlapping covers (up to one mesh-scale of slack) and
///       radius ratio 1; overlapping covers imply combinatorial distance < K,
///   A4  N(U_v, eps) inside the K-star of v.
ConditionReport verify_conditions(const ApproximationGraph& approx, int K);

/// Smallest K for which all four conditions pass; 0 if the cutoff
/// 10 * 8^dim * M^2 is exceeded.
int find_smallest_K(const ApproximationGraph& approx);

/// Union of U_u over vertices u with combinatorial distance k(u,v) < K.
/// `vertex` is an index into approx.vertices.
std::vector<PointId> k_star(const ApproximationGraph& approx, std::uint32_t vertex, int K);

/// Combinatorial (edge-count) distances from `vertex` to every graph vertex,
/// by breadth-first scan; unreachable = -1.
std::vector<int> combinatorial_distances(const ApproximationGraph& approx,
                                         std::uint32_t vertex);

} // namespace mgeo
