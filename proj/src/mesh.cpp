#include "mgeo/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <queue>

namespace mgeo {

std::string to_string(MeshKind kind) {
    switch (kind) {
        case MeshKind::circle: return "circle";
        case MeshKind::torus: return "torus";
        case MeshKind::sphere: return "sphere";
    }
    return "?";
}

MeshKind mesh_kind_from_string(const std::string& s) {
    if (s == "circle") return MeshKind::circle;
    if (s == "torus") return MeshKind::torus;
    if (s == "sphere") return MeshKind::sphere;
    throw config_error("unknown mesh kind: " + s);
}

void MeshManifold::finalize() {
    const std::size_t n = vertices_.size();
    adj_.assign(n, {});
    mesh_scale_ = 0.0;
    for (const MeshEdge& e : edges_) {
        if (e.a >= n || e.b >= n) throw input_error("mesh edge index out of range");
        if (!(e.weight > 0.0)) throw input_error("mesh edge weight must be positive");
        adj_[e.a].push_back({e.b, e.weight});
        adj_[e.b].push_back({e.a, e.weight});
        mesh_scale_ = std::max(mesh_scale_, e.weight);
    }
    // Connectivity check (BFS).
    std::vector<char> seen(n, 0);
    std::vector<PointId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        PointId v = stack.back();
        stack.pop_back();
        for (auto [u, w] : adj_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    if (reached != n) throw domain_error("mesh graph is disconnected");
}

MeshManifold MeshManifold::from_parts(MeshKind kind, std::uint32_t dim,
                                      std::vector<std::array<double, 3>> vertices,
                                      std::vector<MeshEdge> edges) {
    MeshManifold m;
    m.kind_ = kind;
    m.dim_ = dim;
    m.vertices_ = std::move(vertices);
    m.edges_ = std::move(edges);
    m.finalize();
    return m;
}

MeshManifold MeshManifold::circle(std::uint32_t resolution, double circumference) {
    if (resolution < 3) throw config_error("circle mesh needs resolution >= 3");
    if (!(circumference > 0.0)) throw config_error("circumference must be positive");
    const double radius = circumference / (2.0 * std::numbers::pi);
    const double step = circumference / resolution;
    MeshManifold m;
    m.kind_ = MeshKind::circle;
    m.dim_ = 1;
    m.vertices_.resize(resolution);
    for (std::uint32_t i = 0; i < resolution; ++i) {
        const double t = 2.0 * std::numbers::pi * i / resolution;
        m.vertices_[i] = {radius * std::cos(t), radius * std::sin(t), 0.0};
    }
    for (std::uint32_t i = 0; i < resolution; ++i)
        m.edges_.push_back({i, (i + 1) % resolution, step});
    m.finalize();
    return m;
}

MeshManifold MeshManifold::torus(std::uint32_t grid) {
    if (grid < 3) throw config_error("torus mesh needs grid >= 3");
    const double h = 1.0 / grid;
    MeshManifold m;
    m.kind_ = MeshKind::torus;
    m.dim_ = 2;
    m.vertices_.resize(std::size_t(grid) * grid);
    auto id = [grid](std::uint32_t x, std::uint32_t y) {
        return PointId((x % grid) * grid + (y % grid));
    };
    for (std::uint32_t x = 0; x < grid; ++x)
        for (std::uint32_t y = 0; y < grid; ++y)
            m.vertices_[id(x, y)] = {x * h, y * h, 0.0};
    const double diag = std::sqrt(2.0) * h;
    for (std::uint32_t x = 0; x < grid; ++x)
        for (std::uint32_t y = 0; y < grid; ++y) {
            m.edges_.push_back({id(x, y), id(x + 1, y), h});
            m.edges_.push_back({id(x, y), id(x, y + 1), h});
            // Both diagonals of each cell, to tame shortest-path anisotropy.
            m.edges_.push_back({id(x, y), id(x + 1, y + 1), diag});
            m.edges_.push_back({id(x + 1, y), id(x, y + 1), diag});
        }
    m.finalize();
    return m;
}

namespace {

struct IcoMesh {
    std::vector<std::array<double, 3>> verts;
    std::vector<std::array<std::uint32_t, 3>> faces;
};

std::array<double, 3> normalized(const std::array<double, 3>& v) {
    const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return {v[0] / len, v[1] / len, v[2] / len};
}

IcoMesh icosahedron() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    IcoMesh m;
    const double pts[12][3] = {
        {-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
    for (const auto& p : pts) m.verts.push_back(normalized({p[0], p[1], p[2]}));
    m.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
               {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
               {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
               {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
    return m;
}

void subdivide(IcoMesh& m) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> midpoint;
    auto mid = [&](std::uint32_t a, std::uint32_t b) {
        auto key = std::minmax(a, b);
        auto it = midpoint.find(key);
        if (it != midpoint.end()) return it->second;
        const auto& va = m.verts[a];
        const auto& vb = m.verts[b];
        m.verts.push_back(normalized(
            {(va[0] + vb[0]) / 2, (va[1] + vb[1]) / 2, (va[2] + vb[2]) / 2}));
        const auto id = std::uint32_t(m.verts.size() - 1);
        midpoint.emplace(key, id);
        return id;
    };
    std::vector<std::array<std::uint32_t, 3>> out;
    out.reserve(m.faces.size() * 4);
    for (const auto& f : m.faces) {
        const std::uint32_t ab = mid(f[0], f[1]);
        const std::uint32_t bc = mid(f[1], f[2]);
        const std::uint32_t ca = mid(f[2], f[0]);
        out.push_back({f[0], ab, ca});
        out.push_back({f[1], bc, ab});
        out.push_back({f[2], ca, bc});
        out.push_back({ab, bc, ca});
    }
    m.faces = std::move(out);
}

} // namespace

MeshManifold MeshManifold::sphere(std::uint32_t subdivisions, double radius) {
    if (subdivisions < 1) throw config_error("sphere mesh needs subdivision level >= 1");
    if (!(radius > 0.0)) throw config_error("sphere radius must be positive");
    IcoMesh ico = icosahedron();
    for (std::uint32_t k = 0; k < subdivisions; ++k) subdivide(ico);

    MeshManifold m;
    m.kind_ = MeshKind::sphere;
    m.dim_ = 2;
    m.vertices_.resize(ico.verts.size());
    for (std::size_t i = 0; i < ico.verts.size(); ++i)
        m.vertices_[i] = {ico.verts[i][0] * radius, ico.verts[i][1] * radius,
                          ico.verts[i][2] * radius};

    auto great_circle = [&](std::uint32_t a, std::uint32_t b) {
        const auto& u = ico.verts[a];
        const auto& v = ico.verts[b];
        double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
        dot = std::clamp(dot, -1.0, 1.0);
        return radius * std::acos(dot);
    };
    std::map<std::pair<std::uint32_t, std::uint32_t>, char> seen;
    for (const auto& f : ico.faces)
        for (int e = 0; e < 3; ++e) {
            auto key = std::minmax(f[e], f[(e + 1) % 3]);
            if (seen.emplace(key, 1).second)
                m.edges_.push_back({key.first, key.second, great_circle(key.first, key.second)});
        }
    m.finalize();
    return m;
}

namespace {

// Dijkstra over the adjacency list with optionally rescaled edge weights.
void dijkstra(const std::vector<std::vector<std::pair<PointId, double>>>& adj,
              PointId source, const std::vector<double>* weight, std::vector<double>& dist,
              std::vector<PointId>* parent) {
    const std::size_t n = adj.size();
    dist.assign(n, std::numeric_limits<double>::infinity());
    if (parent) parent->assign(n, source);
    using Item = std::pair<double, PointId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) continue;
        for (auto [u, w] : adj[v]) {
            double ew = w;
            if (weight) ew *= ((*weight)[v] + (*weight)[u]) / 2.0;
            const double nd = d + ew;
            if (nd < dist[u]) {
                dist[u] = nd;
                if (parent) (*parent)[u] = v;
                heap.push({nd, u});
            }
        }
    }
}

void check_weight(const ConformalWeight& w, std::size_t n) {
    if (w.values.size() != n)
        throw domain_error("conformal weight not defined on every vertex");
    for (double v : w.values)
        if (!(v > 0.0) || !std::isfinite(v))
            throw domain_error("conformal weight values must be positive and finite");
}

} // namespace

FiniteMetricSpace MeshManifold::geodesic_metric(std::string label) const {
    const std::size_t n = vertex_count();
    std::vector<double> dense(n * n);
    std::vector<double> dist;
    for (std::size_t s = 0; s < n; ++s) {
        dijkstra(adj_, PointId(s), nullptr, dist, nullptr);
        std::copy(dist.begin(), dist.end(), dense.begin() + s * n);
    }
    // Enforce exact symmetry; per-source rounding can differ by ulps.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = std::min(dense[i * n + j], dense[j * n + i]);
            dense[i * n + j] = v;
            dense[j * n + i] = v;
        }
    return FiniteMetricSpace(std::vector<std::string>(n), std::move(dense),
                             std::move(label));
}

FiniteMetricSpace MeshManifold::rescale_metric(const ConformalWeight& weight,
                                               std::string label) const {
    check_weight(weight, vertex_count());
    const std::size_t n = vertex_count();
    std::vector<double> dense(n * n);
    std::vector<double> dist;
    for (std::size_t s = 0; s < n; ++s) {
        dijkstra(adj_, PointId(s), &weight.values, dist, nullptr);
        std::copy(dist.begin(), dist.end(), dense.begin() + s * n);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = std::min(dense[i * n + j], dense[j * n + i]);
            dense[i * n + j] = v;
            dense[j * n + i] = v;
        }
    return FiniteMetricSpace(std::vector<std::string>(n), std::move(dense),
                             std::move(label));
}

std::vector<PointId> MeshManifold::shortest_path(PointId from, PointId to,
                                                 const ConformalWeight* weight) const {
    if (weight) check_weight(*weight, vertex_count());
    std::vector<double> dist;
    std::vector<PointId> parent;
    dijkstra(adj_, from, weight ? &weight->values : nullptr, dist, &parent);
    std::vector<PointId> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace mgeo
