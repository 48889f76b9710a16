#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mgeo/metric_space.hpp"

namespace mgeo {

enum class MeshKind { circle, torus, sphere };

std::string to_string(MeshKind kind);
MeshKind mesh_kind_from_string(const std::string& s);

struct MeshEdge {
    PointId a, b;
    double weight;
};

/// Positive per-vertex scale factor, applied to edge weights by the
/// trapezoid rule (mean of the endpoint values).
struct ConformalWeight {
    std::vector<double> values;
};

/// A weighted graph sampling a compact Riemannian manifold. Vertices carry
/// embedding coordinates, edges carry ambient geodesic lengths, and the
/// induced geodesic metric is the all-pairs shortest-path metric.
class MeshManifold {
public:
    /// Regular resolution-gon by arc length; every edge weighs
    /// circumference / resolution. Requires resolution >= 3.
    static MeshManifold circle(std::uint32_t resolution, double circumference);

    /// Flat unit-square torus on a grid x grid lattice with 4-neighbor plus
    /// diagonal edges. Requires grid >= 3.
    static MeshManifold torus(std::uint32_t grid);

    /// Icosphere: `subdivisions` rounds of loop subdivision of an icosahedron
    /// projected to the sphere; 10 * 4^k + 2 vertices. Edge weights are
    /// great-circle lengths. Requires subdivisions >= 1.
    static MeshManifold sphere(std::uint32_t subdivisions, double radius = 1.0);

    MeshKind kind() const { return kind_; }
    std::uint32_t dim() const { return dim_; }
    double mesh_scale() const { return mesh_scale_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::array<double, 3>& vertex(PointId i) const { return vertices_[i]; }
    const std::vector<std::array<double, 3>>& vertices() const { return vertices_; }
    const std::vector<MeshEdge>& edges() const { return edges_; }
    const std::vector<std::vector<std::pair<PointId, double>>>& adjacency() const {
        return adj_;
    }

    /// All-pairs shortest-path metric (one Dijkstra per source).
    FiniteMetricSpace geodesic_metric(std::string label = "d_g") const;

    /// Each edge weight is multiplied by the mean of its endpoint weights,
    /// then shortest paths are recomputed. Constant weight c gives exactly
    /// c * geodesic_metric(). Throws domain_error on missing or nonpositive
    /// weight values.
    FiniteMetricSpace rescale_metric(const ConformalWeight& weight,
                                     std::string label = "rescaled") const;

    /// Vertex sequence of a shortest path, optionally under rescaled weights.
    std::vector<PointId> shortest_path(PointId from, PointId to,
                                       const ConformalWeight* weight = nullptr) const;

    static MeshManifold from_parts(MeshKind kind, std::uint32_t dim,
                                   std::vector<std::array<double, 3>> vertices,
                                   std::vector<MeshEdge> edges);

private:
    MeshManifold() = default;
    void finalize(); // builds adjacency, checks connectivity, sets mesh_scale

    MeshKind kind_ = MeshKind::circle;
    std::uint32_t dim_ = 1;
    double mesh_scale_ = 0.0;
    std::vector<std::array<double, 3>> vertices_;
    std::vector<MeshEdge> edges_;
    std::vector<std::vector<std::pair<PointId, double>>> adj_;
};

} // namespace mgeo
