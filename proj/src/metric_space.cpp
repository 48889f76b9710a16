#include "mgeo/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mgeo/rng.hpp"

namespace mgeo {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> names,
                                     std::vector<double> dense, std::string label)
    : names_(std::move(names)), d_(std::move(dense)), label_(std::move(label)) {
    std::size_t n = names_.size();
    if (n == 0) {
        // Infer the point count from the table.
        double root = std::sqrt(static_cast<double>(d_.size()));
        n = static_cast<std::size_t>(std::llround(root));
        names_.resize(n);
    }
    if (d_.size() != n * n)
        throw input_error("distance table size does not match point count");
    for (std::size_t i = 0; i < n; ++i)
        if (names_[i].empty()) names_[i] = "p" + std::to_string(i);
    n_ = n;
}

FiniteMetricSpace FiniteMetricSpace::from_rows(
    const std::vector<std::vector<double>>& rows, std::string label) {
    const std::size_t n = rows.size();
    std::vector<double> dense(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw input_error("distance table is not square");
        std::copy(rows[i].begin(), rows[i].end(), dense.begin() + i * n);
    }
    return FiniteMetricSpace(std::vector<std::string>(n), std::move(dense),
                             std::move(label));
}

FiniteMetricSpace FiniteMetricSpace::from_lower_triangle(
    std::vector<std::string> names, const std::vector<double>& tri, std::string label) {
    const std::size_t n = names.size();
    if (tri.size() != n * (n - 1) / 2)
        throw input_error("lower triangle has wrong length");
    std::vector<double> dense(n * n, 0.0);
    std::size_t at = 0;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            dense[i * n + j] = tri[at];
            dense[j * n + i] = tri[at];
            ++at;
        }
    return FiniteMetricSpace(std::move(names), std::move(dense), std::move(label));
}

double FiniteMetricSpace::diameter() const {
    double m = 0.0;
    for (double v : d_) m = std::max(m, v);
    return m;
}

double FiniteMetricSpace::min_positive_distance() const {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
            double v = (*this)(PointId(i), PointId(j));
            if (v > 0.0) m = std::min(m, v);
        }
    return m;
}

FiniteMetricSpace FiniteMetricSpace::relabeled(std::string label) const {
    FiniteMetricSpace out = *this;
    out.label_ = std::move(label);
    return out;
}

namespace {

void note_worst(std::optional<AxiomViolation>& slot, const AxiomViolation& v) {
    if (!slot || v.magnitude > slot->magnitude) slot = v;
}

void check_triple(const double* d, std::size_t n, std::size_t i, std::size_t j,
                  std::size_t k, double tol, AxiomReport& rep) {
    const double gap = d[i * n + j] - d[i * n + k] - d[k * n + j];
    if (gap > tol) {
        note_worst(rep.triangle,
                   {AxiomViolation::Kind::triangle, PointId(i), PointId(j), PointId(k), gap});
        rep.valid = false;
    }
}

AxiomReport check_dense(const double* d, std::size_t n, double tol, bool full_triangle,
                        std::uint64_t seed, std::size_t triples) {
    AxiomReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(d[i * n + i]) > tol) {
            note_worst(rep.identity, {AxiomViolation::Kind::identity, PointId(i),
                                      PointId(i), 0, std::abs(d[i * n + i])});
            rep.valid = false;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const double gap = std::abs(d[i * n + j] - d[j * n + i]);
            if (gap > tol) {
                note_worst(rep.symmetry, {AxiomViolation::Kind::symmetry, PointId(i),
                                          PointId(j), 0, gap});
                rep.valid = false;
            }
            if (d[i * n + j] <= 0.0 && i != j) {
                // Zero (or negative) off-diagonal entries belong to the
                // identity family: distinct points at distance zero. This is
                // an exact test: the relative tolerance is meant for
                // arithmetic noise, and legitimate metrics may span many
                // orders of magnitude.
                note_worst(rep.identity, {AxiomViolation::Kind::identity, PointId(i),
                                          PointId(j), 0, -d[i * n + j]});
                rep.valid = false;
            }
        }
    }
    if (full_triangle) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    check_triple(d, n, i, j, k, tol, rep);
                }
            }
    } else if (n >= 3) {
        Rng rng(seed);
        for (std::size_t t = 0; t < triples; ++t) {
            std::size_t i = std::size_t(rng.below(n));
            std::size_t j = std::size_t(rng.below(n));
            std::size_t k = std::size_t(rng.below(n));
            if (i == j || j == k || i == k) continue;
            check_triple(d, n, i, j, k, tol, rep);
        }
    }
    return rep;
}

} // namespace

AxiomReport check_metric_axioms(const std::vector<std::vector<double>>& rows, double tol) {
    const std::size_t n = rows.size();
    std::vector<double> dense(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw input_error("axiom check: table is not square");
        std::copy(rows[i].begin(), rows[i].end(), dense.begin() + i * n);
    }
    return check_dense(dense.data(), n, tol, true, 0, 0);
}

AxiomReport check_metric_axioms(const FiniteMetricSpace& space, double tol) {
    return check_dense(space.data().data(), space.size(), tol, true, 0, 0);
}

AxiomReport check_metric_axioms_sampled(const FiniteMetricSpace& space, double tol,
                                        std::uint64_t seed, std::size_t triples) {
    return check_dense(space.data().data(), space.size(), tol, false, seed, triples);
}

FiniteMetricSpace path_metric_closure(const FiniteMetricSpace& space) {
    const std::size_t n = space.size();
    const double* d = space.data().data();
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i * n + i] != 0.0)
            throw input_error("path_metric_closure: nonzero diagonal");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (d[i * n + j] != d[j * n + i])
                throw input_error("path_metric_closure: asymmetric table");
            if (d[i * n + j] <= 0.0)
                throw input_error("path_metric_closure: nonpositive off-diagonal entry");
        }
    }
    std::vector<double> w(space.data());
    // All-pairs relaxation; exact and cubic, fine at desk scale.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const double dik = w[i * n + k];
            for (std::size_t j = 0; j < n; ++j) {
                const double via = dik + w[k * n + j];
                if (via < w[i * n + j]) w[i * n + j] = via;
            }
        }
    return FiniteMetricSpace(space.names(), std::move(w), space.label());
}

std::vector<PointId> ball(const FiniteMetricSpace& space, PointId center, double r,
                          bool closed) {
    if (r < 0.0) throw domain_error("ball: negative radius");
    std::vector<PointId> out;
    const std::size_t n = space.size();
    for (std::size_t q = 0; q < n; ++q) {
        const double v = space(center, PointId(q));
        if (closed ? (v <= r) : (v < r)) out.push_back(PointId(q));
    }
    return out;
}

double hausdorff_distance(const FiniteMetricSpace& space, const std::vector<PointId>& a,
                          const std::vector<PointId>& b) {
    if (a.empty() || b.empty())
        throw domain_error("hausdorff_distance: empty subset");
    auto directed = [&](const std::vector<PointId>& from, const std::vector<PointId>& to) {
        double worst = 0.0;
        for (PointId p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (PointId q : to) best = std::min(best, space(p, q));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

} // namespace mgeo
