#pragma once

#include <cstdint>
#include <vector>

#include "mgeo/metric_space.hpp"

namespace mgeo {

/// One sampled triple (p, q, s): t = source(p,q)/source(q,s),
/// quotient = target(p,q)/target(q,s).
struct QuotientSample {
    double t = 0.0;
    double quotient = 0.0;
    PointId p = 0, q = 0, s = 0;
};

struct TripleSampleSpec {
    std::uint64_t seed = 0;
    std::size_t sample_count = 200000;      // used above the exhaustive threshold
    std::size_t exhaustive_threshold = 60;  // point count up to which all triples run
    std::vector<PointId> exhaustive_subset; // always scanned exhaustively (net points)
};

/// Quasisymmetry quotients of the identity map between two metrics on the
/// same point set. Exhaustive over all triples for small spaces, seeded
/// sampling plus an exhaustive subset above the threshold. Degenerate
/// triples (zero denominator) are skipped.
std::vector<QuotientSample> qs_quotients(const FiniteMetricSpace& source,
                                         const FiniteMetricSpace& target,
                                         const TripleSampleSpec& spec = {});

enum class ModulusFamily { linear, power_pair };

/// A fitted control function: linear eta(t) = C t, or the power-pair normal
/// form eta(t) = C max(t^alpha, t^(1/alpha)) with alpha in (0, 1].
struct ModulusFit {
    ModulusFamily family = ModulusFamily::linear;
    double C = 1.0;
    double alpha = 1.0;
    QuotientSample worst; // the sample attaining the tightest constraint
    double operator()(double t) const;
};

/// Smallest C (and for the power-pair family, the alpha minimizing it over a
/// 0.01 grid, ties resolved to the largest alpha) such that every sampled
/// quotient satisfies quotient <= eta(t). C is clamped to >= 1 so eta remains
/// a quasisymmetry modulus.
ModulusFit fit_modulus(const std::vector<QuotientSample>& quotients, ModulusFamily family);

/// Smallest L with L^-1 a <= b <= L a over all pairs.
double bilipschitz_constant(const FiniteMetricSpace& a, const FiniteMetricSpace& b);

struct HoelderFit {
    double C = 1.0;
    double alpha = 1.0;
    double slope = 1.0; // empirical log-log slope over pairs with d_g < 1
};

/// Fits d(p,q) <= C * d_g(p,q)^alpha over pairs with d_g < 1. Alpha is the
/// largest grid value {1.0, 0.9, ..., 0.1} admitting a finite constant; the
/// discrete finiteness surrogate is the least-squares log-log slope (a grid
/// exponent is admitted when it is at most slope + 0.05, so the constant does
/// not blow up as d_g -> 0 under refinement).
HoelderFit fit_hoelder(const FiniteMetricSpace& d_g, const FiniteMetricSpace& d);

/// Half the distortion of the identity correspondence between two metrics on
/// the same point set.
double gh_upper_identity(const FiniteMetricSpace& a, const FiniteMetricSpace& b);

enum class GHMethod { identity_correspondence, brute_force, diameter_bound };

struct GHBound {
    double lower = 0.0;
    double upper = 0.0;
    GHMethod method = GHMethod::identity_correspondence;
};

/// Exact Gromov-Hausdorff distance between tiny spaces: minimum over all
/// correspondences (relations surjective both ways) of half the distortion.
/// Refuses spaces above max_points.
GHBound gh_bruteforce(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                      std::size_t max_points = 7);

struct CommonNetBound {
    double bound = 0.0;          // 2 * mu * eps
    double identity_bound = 0.0; // usually tighter, for comparison
    bool density_ok = false;
    double worst_gap_a = 0.0; // worst min-distance to the net in a
    double worst_gap_b = 0.0;
};

/// GH upper bound through a common mu*eps-dense net. The density
/// precondition is verified by scan in both spaces; on failure the verdict
/// carries the worst gaps and density_ok = false.
CommonNetBound gh_via_common_net(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                                 const std::vector<PointId>& net, double mu, double eps);

} // namespace mgeo
