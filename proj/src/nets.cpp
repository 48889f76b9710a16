#include "mgeo/nets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

namespace mgeo {

Net greedy_net(const FiniteMetricSpace& space, double epsilon,
               const std::vector<PointId>& scan_order) {
    if (!(epsilon > 0.0)) throw domain_error("greedy_net: epsilon must be positive");
    const std::size_t n = space.size();
    Net net{&space, {}, epsilon};
    auto consider = [&](PointId p) {
        for (PointId s : net.members)
            if (space(p, s) < epsilon) return;
        net.members.push_back(p);
    };
    if (scan_order.empty()) {
        for (std::size_t p = 0; p < n; ++p) consider(PointId(p));
    } else {
        for (PointId p : scan_order) consider(p);
    }
    return net;
}

NetVerdict verify_net(const FiniteMetricSpace& space, const std::vector<PointId>& subset,
                      double epsilon) {
    NetVerdict v;
    if (subset.empty()) throw domain_error("verify_net: empty subset");
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (space(subset[i], subset[j]) < epsilon) {
                v.ok = false;
                v.failed = NetVerdict::Property::separation;
                v.witness_a = subset[i];
                v.witness_b = subset[j];
                return v;
            }
    for (std::size_t p = 0; p < space.size(); ++p) {
        double best = std::numeric_limits<double>::infinity();
        for (PointId s : subset) best = std::min(best, space(PointId(p), s));
        if (!(best < epsilon)) {
            v.ok = false;
            v.failed = NetVerdict::Property::density;
            v.witness_a = PointId(p);
            return v;
        }
    }
    return v;
}

double measure_volume_ratio(const FiniteMetricSpace& space, double epsilon) {
    double M = 1.0;
    for (double r : {epsilon / 2.0, 3.0 * epsilon, 4.0 * epsilon}) {
        std::size_t lo = space.size(), hi = 0;
        for (std::size_t p = 0; p < space.size(); ++p) {
            const std::size_t c = ball(space, PointId(p), r, false).size();
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (lo == 0) lo = 1;
        M = std::max(M, double(hi) / double(lo));
    }
    return M;
}

ApproximationGraph build_approximation(const Net& net, std::uint32_t dim,
                                       double mesh_scale) {
    if (!net.host) throw domain_error("build_approximation: net has no host space");
    const FiniteMetricSpace& space = *net.host;
    ApproximationGraph a;
    a.host = net.host;
    a.vertices = net.members;
    a.epsilon = net.epsilon;
    a.dim = dim;
    a.mesh_scale = mesh_scale;
    const std::size_t m = a.vertices.size();
    a.neighbors.assign(m, {});
    a.cover.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        a.cover[i] = ball(space, a.vertices[i], net.epsilon, false);
        for (std::size_t j = i + 1; j < m; ++j)
            if (space(a.vertices[i], a.vertices[j]) < 2.0 * net.epsilon) {
                a.neighbors[i].push_back(std::uint32_t(j));
                a.neighbors[j].push_back(std::uint32_t(i));
            }
    }
    a.M_measured = measure_volume_ratio(space, net.epsilon);
    a.K_observed = find_smallest_K(a);
    return a;
}

std::vector<int> combinatorial_distances(const ApproximationGraph& approx,
                                         std::uint32_t vertex) {
    std::vector<int> dist(approx.vertices.size(), -1);
    std::queue<std::uint32_t> q;
    dist[vertex] = 0;
    q.push(vertex);
    while (!q.empty()) {
        const std::uint32_t v = q.front();
        q.pop();
        for (std::uint32_t u : approx.neighbors[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}

std::vector<PointId> k_star(const ApproximationGraph& approx, std::uint32_t vertex, int K) {
    if (vertex >= approx.vertices.size()) throw domain_error("k_star: vertex not in graph");
    if (K < 1) throw domain_error("k_star: K must be >= 1");
    const auto dist = combinatorial_distances(approx, vertex);
    std::set<PointId> out;
    for (std::size_t u = 0; u < approx.vertices.size(); ++u)
        if (dist[u] >= 0 && dist[u] < K)
            out.insert(approx.cover[u].begin(), approx.cover[u].end());
    return {out.begin(), out.end()};
}

ConditionReport verify_conditions(const ApproximationGraph& approx, int K) {
    if (K < 1) throw domain_error("verify_conditions: K must be >= 1");
    const FiniteMetricSpace& space = *approx.host;
    const double eps = approx.epsilon;
    const std::size_t m = approx.vertices.size();
    ConditionReport rep;

    // A1: valence strictly below K.
    rep.max_valence = 0;
    for (const auto& nb : approx.neighbors)
        rep.max_valence = std::max(rep.max_valence, int(nb.size()));
    rep.a1 = rep.max_valence < K;
    if (!rep.a1 && rep.detail.empty()) rep.detail = "A1: valence " + std::to_string(rep.max_valence);

    // A2: U_v equals the open eps-ball around its center (L = 1).
    rep.a2 = true;
    for (std::size_t v = 0; v < m && rep.a2; ++v) {
        const auto b = ball(space, approx.vertices[v], eps, false);
        if (b != approx.cover[v]) {
            rep.a2 = false;
            rep.detail = "A2: cover set mismatch at vertex " + std::to_string(v);
        }
    }

    // Pairwise cover overlap, both exact and with one mesh-scale of slack for
    // the forward direction of A3 (the continuum overlap point need not be
    // sampled on a coarse mesh).
    auto covers_overlap = [&](std::size_t u, std::size_t v, double slack) {
        for (PointId p : approx.cover[u])
            if (space(p, approx.vertices[v]) < eps + slack) return true;
        for (PointId p : approx.cover[v])
            if (space(p, approx.vertices[u]) < eps + slack) return true;
        return false;
    };

    rep.a3 = true;
    std::vector<std::vector<int>> kdist(m);
    for (std::size_t v = 0; v < m; ++v) kdist[v] = combinatorial_distances(approx, std::uint32_t(v));
    for (std::size_t u = 0; u < m && rep.a3; ++u) {
        for (std::size_t v = u + 1; v < m && rep.a3; ++v) {
            const bool edge =
                std::find(approx.neighbors[u].begin(), approx.neighbors[u].end(),
                          std::uint32_t(v)) != approx.neighbors[u].end();
            if (edge && !covers_overlap(u, v, approx.mesh_scale)) {
                rep.a3 = false;
                rep.detail = "A3: edge without cover overlap (" + std::to_string(u) + "," +
                             std::to_string(v) + ")";
            }
            if (covers_overlap(u, v, 0.0) && !(kdist[u][v] >= 0 && kdist[u][v] < K)) {
                rep.a3 = false;
                rep.detail = "A3: overlapping covers at combinatorial distance " +
                             std::to_string(kdist[u][v]);
            }
        }
    }

    // A4: N(U_v, eps) inside the K-star of v.
    rep.a4 = true;
    for (std::size_t v = 0; v < m && rep.a4; ++v) {
        const auto star = k_star(approx, std::uint32_t(v), K);
        for (std::size_t p = 0; p < space.size(); ++p) {
            double to_cover = std::numeric_limits<double>::infinity();
            for (PointId q : approx.cover[v])
                to_cover = std::min(to_cover, space(PointId(p), q));
            if (to_cover < eps &&
                !std::binary_search(star.begin(), star.end(), PointId(p))) {
                rep.a4 = false;
                rep.detail = "A4: neighborhood point " + std::to_string(p) +
                             " outside the K-star of vertex " + std::to_string(v);
                break;
            }
        }
    }
    return rep;
}

int find_smallest_K(const ApproximationGraph& approx) {
    const double cutoff =
        10.0 * std::pow(8.0, double(approx.dim)) * approx.M_measured * approx.M_measured;
    for (int K = 1; K <= int(cutoff) + 1; ++K)
        if (verify_conditions(approx, K).all()) return K;
    return 0;
}

} // namespace mgeo
