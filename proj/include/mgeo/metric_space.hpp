#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgeo/errors.hpp"

namespace mgeo {

using PointId = std::uint32_t;

/// A finite metric space: a point sequence with a dense symmetric distance
/// table. Immutable after construction; all operations on it are pure.
///
/// Construction does not enforce the metric axioms -- check_metric_axioms is
/// the explicit verifier, and tests need to build broken tables on purpose.
class FiniteMetricSpace {
public:
    FiniteMetricSpace() = default;

    /// Dense row-major table of size n*n. Names may be empty (auto-filled).
    FiniteMetricSpace(std::vector<std::string> names, std::vector<double> dense,
                      std::string label = {});

    static FiniteMetricSpace from_rows(const std::vector<std::vector<double>>& rows,
                                       std::string label = {});

    /// Lower triangle in row-major order: row i contributes entries (i,0..i-1).
    static FiniteMetricSpace from_lower_triangle(std::vector<std::string> names,
                                                 const std::vector<double>& tri,
                                                 std::string label = {});

    std::size_t size() const { return n_; }

    double operator()(PointId i, PointId j) const { return d_[std::size_t(i) * n_ + j]; }

    const std::string& label() const { return label_; }
    const std::string& name(PointId i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<double>& data() const { return d_; }

    double diameter() const;
    double min_positive_distance() const;

    /// Relative axiom-check tolerance: 1e-9 times the diameter.
    double tolerance() const { return 1e-9 * diameter(); }

    FiniteMetricSpace relabeled(std::string label) const;

private:
    std::size_t n_ = 0;
    std::vector<std::string> names_;
    std::vector<double> d_;
    std::string label_;
};

struct AxiomViolation {
    enum class Kind { identity, symmetry, triangle };
    Kind kind;
    PointId i = 0, j = 0, k = 0; // triangle witness: d(i,j) > d(i,k) + d(k,j)
    double magnitude = 0.0;
};

struct AxiomReport {
    bool valid = true;
    // Worst violation per axiom family, when present.
    std::optional<AxiomViolation> identity;
    std::optional<AxiomViolation> symmetry;
    std::optional<AxiomViolation> triangle;
};

/// Checks the three metric-axiom families on a raw square table:
/// zero diagonal / positive off-diagonal, symmetry, and the triangle
/// inequality, each up to `tol`. Throws input_error on a non-square table.
AxiomReport check_metric_axioms(const std::vector<std::vector<double>>& rows,
                                double tol = 0.0);

AxiomReport check_metric_axioms(const FiniteMetricSpace& space, double tol);

/// Same families but with the cubic triangle scan replaced by `triples`
/// seeded random triples. Used by the pipelines on desk-scale spaces where
/// the full scan is wasteful; the diagonal and symmetry scans stay exhaustive.
AxiomReport check_metric_axioms_sampled(const FiniteMetricSpace& space, double tol,
                                        std::uint64_t seed, std::size_t triples);

/// Replaces every distance by the minimal chain sum (all-pairs relaxation).
/// Output satisfies the triangle inequality exactly, is entrywise <= input,
/// and the operation is idempotent. Requires a symmetric table with zero
/// diagonal and positive off-diagonal entries.
FiniteMetricSpace path_metric_closure(const FiniteMetricSpace& space);

/// Open ({q : d < r}) or closed ({q : d <= r}) ball, as a sorted id list.
std::vector<PointId> ball(const FiniteMetricSpace& space, PointId center, double r,
                          bool closed);

/// Hausdorff distance between two nonempty subsets of the same space.
double hausdorff_distance(const FiniteMetricSpace& space,
                          const std::vector<PointId>& a,
                          const std::vector<PointId>& b);

} // namespace mgeo
