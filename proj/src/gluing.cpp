#include "mgeo/gluing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mgeo {

GluedMetric glue(const FiniteMetricSpace& ambient, const std::vector<PointId>& shortcut_set,
                 const std::vector<double>& d_on_S) {
    const std::size_t n = ambient.size();
    const std::size_t m = shortcut_set.size();
    if (m == 0) throw domain_error("glue: empty shortcut set");
    if (d_on_S.size() != m * m) throw input_error("glue: shortcut table size mismatch");
    const double tol = ambient.tolerance();

    std::vector<double> d(d_on_S);
    for (std::size_t i = 0; i < m; ++i) {
        if (d[i * m + i] != 0.0) throw input_error("glue: shortcut table has nonzero diagonal");
        for (std::size_t j = i + 1; j < m; ++j) {
            if (d[i * m + j] != d[j * m + i])
                throw input_error("glue: shortcut table is asymmetric");
            const double rho = ambient(shortcut_set[i], shortcut_set[j]);
            if (d[i * m + j] > rho + tol)
                throw precondition_error(
                    "glue: d > rho at shortcut pair (" + std::to_string(shortcut_set[i]) +
                    "," + std::to_string(shortcut_set[j]) + ")");
            if (d[i * m + j] > rho) {
                // Within tolerance: clamp to equality.
                d[i * m + j] = rho;
                d[j * m + i] = rho;
            }
        }
    }

    // Two-stage minimum: via[x][q] = min_p rho(x,p) + d(p,q), then
    // glued(x,y) = min(rho(x,y), min_q via[x][q] + rho(q,y)).
    std::vector<double> via(n * m);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t q = 0; q < m; ++q) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t p = 0; p < m; ++p)
                best = std::min(best, ambient(PointId(x), shortcut_set[p]) + d[p * m + q]);
            via[x * m + q] = best;
        }

    std::vector<double> out(n * n, 0.0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            double best = ambient(PointId(x), PointId(y));
            const double* vx = via.data() + x * m;
            for (std::size_t q = 0; q < m; ++q) {
                const double chain = vx[q] + ambient(shortcut_set[q], PointId(y));
                if (chain < best) best = chain;
            }
            out[x * n + y] = best;
            out[y * n + x] = best;
        }

    GluedMetric g;
    g.shortcut_set = shortcut_set;
    g.shortcut_dist = std::move(d);
    g.result = FiniteMetricSpace(ambient.names(), std::move(out),
                                 ambient.label().empty() ? "glued" : ambient.label() + "~");
    return g;
}

LocalIsometryVerdict verify_local_isometry(const FiniteMetricSpace& ambient,
                                           const GluedMetric& glued,
                                           double gap_threshold) {
    const std::size_t n = ambient.size();
    if (glued.result.size() != n)
        throw input_error("verify_local_isometry: space size mismatch");
    LocalIsometryVerdict v;
    v.separation = std::numeric_limits<double>::infinity();
    const std::size_t m = glued.shortcut_set.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            v.separation = std::min(v.separation, glued.shortcut_dist[i * m + j]);
    if (m < 2) v.separation = ambient.diameter();

    // Largest r with (glued < r => glued == rho) is the smallest glued
    // distance among changed pairs, or the diameter when nothing changed.
    // Every winning chain passes through a distinct shortcut pair, so r is
    // at least the shortcut separation. "Changed" is judged up to the
    // ambient tolerance: chains through a shortcut point sitting on the x-y
    // geodesic reproduce rho only up to rounding.
    const double tol = ambient.tolerance();
    double r = ambient.diameter();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (glued.result(PointId(x), PointId(y)) <
                ambient(PointId(x), PointId(y)) - tol)
                r = std::min(r, glued.result(PointId(x), PointId(y)));
    v.max_scale = r;
    v.ok = r >= gap_threshold;
    return v;
}

BiLipVerdict verify_bilipschitz_comparison(const FiniteMetricSpace& ambient,
                                           const GluedMetric& glued, double L) {
    if (L < 1.0) throw domain_error("verify_bilipschitz_comparison: L must be >= 1");
    const std::size_t n = ambient.size();
    BiLipVerdict v;
    v.ok = true;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            const double rho = ambient(PointId(x), PointId(y));
            const double g = glued.result(PointId(x), PointId(y));
            if (g > rho) {
                v.ok = false; // glued <= rho must hold by construction
                v.witness_a = PointId(x);
                v.witness_b = PointId(y);
            }
            const double ratio = g > 0.0 ? rho / g : (rho > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
            if (ratio > v.worst_ratio) {
                v.worst_ratio = ratio;
                v.witness_a = PointId(x);
                v.witness_b = PointId(y);
            }
        }
    if (v.worst_ratio > L) v.ok = false;
    return v;
}

} // namespace mgeo
