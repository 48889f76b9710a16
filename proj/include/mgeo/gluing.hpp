#pragma once

#include <cstdint>
#include <vector>

#include "mgeo/metric_space.hpp"

namespace mgeo {

/// The glued metric: the ambient metric rho with one shortcut through a
/// subset S carrying a smaller metric d,
///   glued(x,y) = min{ rho(x,y), min_{p,q in S} rho(x,p) + d(p,q) + rho(q,y) }.
struct GluedMetric {
    std::vector<PointId> shortcut_set;  // S, indices into the ambient space
    std::vector<double> shortcut_dist;  // d on S x S, row-major |S|^2
    FiniteMetricSpace result;           // the glued metric on all points
};

/// Evaluates the gluing formula exactly over the finite S (single-shortcut
/// chains, p = q allowed). Preconditions: d_on_S symmetric with zero
/// diagonal, and d <= rho on S x S within the ambient tolerance; violations
/// within tolerance are clamped to equality, larger ones throw
/// precondition_error naming the witness pair.
GluedMetric glue(const FiniteMetricSpace& ambient, const std::vector<PointId>& shortcut_set,
                 const std::vector<double>& d_on_S);

struct LocalIsometryVerdict {
    bool ok = false;
    double max_scale = 0.0;   // largest r: glued < r implies glued == rho
    double separation = 0.0;  // min of d over distinct shortcut pairs
};

/// Largest r such that every pair with glued(x,y) < r is unchanged by the
/// gluing, by full scan; ok iff that r >= gap_threshold. Any chain that
/// actually shortens a pair crosses a distinct shortcut pair, so max_scale
/// is never below `separation`.
LocalIsometryVerdict verify_local_isometry(const FiniteMetricSpace& ambient,
                                           const GluedMetric& glued,
                                           double gap_threshold);

struct BiLipVerdict {
    bool ok = false;
    double worst_ratio = 1.0; // max over pairs of rho / glued
    PointId witness_a = 0, witness_b = 0;
};

/// Checks L^-1 rho <= glued <= rho over all pairs.
BiLipVerdict verify_bilipschitz_comparison(const FiniteMetricSpace& ambient,
                                           const GluedMetric& glued, double L);

} // namespace mgeo
