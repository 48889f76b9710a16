#include <doctest.h>

#include <vector>

#include "mgeo/gluing.hpp"
#include "mgeo/metric_space.hpp"
#include "mgeo/rng.hpp"

using namespace mgeo;

namespace {

FiniteMetricSpace three_point_line() {
    // a, m, b at positions 0, 5, 10.
    return FiniteMetricSpace::from_rows({{0, 5, 10}, {5, 0, 5}, {10, 5, 0}});
}

FiniteMetricSpace random_metric(Rng& rng, std::size_t n) {
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = double(1 + rng.below(40));
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    return path_metric_closure(FiniteMetricSpace({}, std::move(d)));
}

} // namespace

TEST_CASE("two-point shortcut replaces the ambient distance") {
    FiniteMetricSpace rho = FiniteMetricSpace::from_rows({{0, 10}, {10, 0}});
    GluedMetric g = glue(rho, {0, 1}, {0, 3, 3, 0});
    CHECK(g.result(0, 1) == 3.0);
}

TEST_CASE("midpoint distances survive the endpoint shortcut") {
    FiniteMetricSpace rho = three_point_line();
    GluedMetric g = glue(rho, {0, 2}, {0, 3, 3, 0});
    CHECK(g.result(0, 2) == 3.0);
    CHECK(g.result(0, 1) == 5.0); // chain 0 + 3 + 5 = 8 does not beat 5
    CHECK(g.result(1, 2) == 5.0);
    CHECK(check_metric_axioms(g.result, 0.0).valid);
}

TEST_CASE("glued distance never exceeds the ambient distance") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 4 + std::size_t(rng.below(12));
        FiniteMetricSpace rho = random_metric(rng, n);
        std::vector<PointId> S{0, PointId(1 + rng.below(std::uint64_t(n - 1)))};
        if (S[0] == S[1]) continue;
        const double r = rho(S[0], S[1]);
        const double dval = double(int(r * 0.5) + (r >= 2.0 ? 0 : 1));
        GluedMetric g = glue(rho, S, {0, dval, dval, 0});
        for (PointId x = 0; x < n; ++x)
            for (PointId y = 0; y < n; ++y)
                CHECK(g.result(x, y) <= rho(x, y));
        CHECK(check_metric_axioms(g.result, 0.0).valid);
    }
}

TEST_CASE("gluing restricted to the shortcut set is dominated by d") {
    Rng rng(37);
    FiniteMetricSpace rho = random_metric(rng, 10);
    std::vector<PointId> S{1, 4, 7};
    std::vector<double> d(9, 0.0);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return d[i * 3 + j]; };
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            const double v = rho(S[i], S[j]) / 2.0;
            at(i, j) = v;
            at(j, i) = v;
        }
    // d itself need not satisfy the triangle inequality; close it first so
    // the glued result stays a metric.
    FiniteMetricSpace dm = path_metric_closure(FiniteMetricSpace({}, d));
    GluedMetric g = glue(rho, S, dm.data());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(g.result(S[i], S[j]) <= dm(PointId(i), PointId(j)) + 1e-12);
}

TEST_CASE("gluing is idempotent") {
    FiniteMetricSpace rho = three_point_line();
    GluedMetric g1 = glue(rho, {0, 2}, {0, 3, 3, 0});
    GluedMetric g2 = glue(g1.result, {0, 2}, {0, 3, 3, 0});
    CHECK(g2.result.data() == g1.result.data());
}

TEST_CASE("gluing with the full point set is the closure of min(rho, d)") {
    FiniteMetricSpace rho = three_point_line();
    // d equals rho except the endpoints come close.
    std::vector<double> d{0, 5, 1, 5, 0, 5, 1, 5, 0};
    GluedMetric g = glue(rho, {0, 1, 2}, d);
    std::vector<double> mins(9);
    for (std::size_t i = 0; i < 9; ++i) mins[i] = std::min(rho.data()[i], d[i]);
    FiniteMetricSpace closed = path_metric_closure(FiniteMetricSpace({}, mins));
    for (PointId x = 0; x < 3; ++x)
        for (PointId y = 0; y < 3; ++y)
            CHECK(g.result(x, y) == doctest::Approx(closed(x, y)));
}

TEST_CASE("glue validates its shortcut table") {
    FiniteMetricSpace rho = three_point_line();
    CHECK_THROWS_AS(glue(rho, {}, {}), domain_error);
    CHECK_THROWS_AS(glue(rho, {0, 2}, {0, 3, 3}), input_error);
    CHECK_THROWS_AS(glue(rho, {0, 2}, {1, 3, 3, 0}), input_error);
    CHECK_THROWS_AS(glue(rho, {0, 2}, {0, 3, 4, 0}), input_error);
    // d > rho beyond tolerance names the witness pair.
    CHECK_THROWS_AS(glue(rho, {0, 2}, {0, 11, 11, 0}), precondition_error);
    // d > rho within tolerance is clamped to equality.
    const double nudged = 10.0 + 1e-10;
    GluedMetric g = glue(rho, {0, 2}, {0, nudged, nudged, 0});
    CHECK(g.result(0, 2) == 10.0);
}

TEST_CASE("local isometry scale on the three-point example is 3") {
    FiniteMetricSpace rho = three_point_line();
    GluedMetric g = glue(rho, {0, 2}, {0, 3, 3, 0});
    const LocalIsometryVerdict v = verify_local_isometry(rho, g, 3.0);
    CHECK(v.ok);
    CHECK(v.max_scale == doctest::Approx(3.0));
    CHECK(v.separation == doctest::Approx(3.0));
    CHECK_FALSE(verify_local_isometry(rho, g, 3.5).ok);
}

TEST_CASE("local isometry scale is the diameter when nothing changes") {
    FiniteMetricSpace rho = three_point_line();
    GluedMetric g = glue(rho, {0, 2}, {0, 10, 10, 0}); // d = rho on S
    const LocalIsometryVerdict v = verify_local_isometry(rho, g, 10.0);
    CHECK(v.ok);
    CHECK(v.max_scale == doctest::Approx(10.0));
}

TEST_CASE("unchanged-scale radius never drops below the shortcut separation") {
    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 5 + std::size_t(rng.below(10));
        FiniteMetricSpace rho = random_metric(rng, n);
        std::vector<PointId> S{0, PointId(n / 2), PointId(n - 1)};
        std::vector<double> d(9, 0.0);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                const double v = std::max(1.0, double(int(rho(S[i], S[j]) / 2)));
                d[i * 3 + j] = v;
                d[j * 3 + i] = v;
            }
        FiniteMetricSpace dm = path_metric_closure(FiniteMetricSpace({}, d));
        GluedMetric g = glue(rho, S, dm.data());
        const LocalIsometryVerdict v = verify_local_isometry(rho, g, 0.0);
        CHECK(v.max_scale >= v.separation);
    }
}

TEST_CASE("bi-Lipschitz comparison against the gluing") {
    FiniteMetricSpace rho = three_point_line();
    GluedMetric g = glue(rho, {0, 2}, {0, 3, 3, 0});
    // Worst ratio is rho/glued = 10/3 at the endpoints.
    const BiLipVerdict tight = verify_bilipschitz_comparison(rho, g, 10.0 / 3.0 + 1e-12);
    CHECK(tight.ok);
    CHECK(tight.worst_ratio == doctest::Approx(10.0 / 3.0));
    CHECK_FALSE(verify_bilipschitz_comparison(rho, g, 3.0).ok);
    CHECK_THROWS_AS(verify_bilipschitz_comparison(rho, g, 0.5), domain_error);
}
