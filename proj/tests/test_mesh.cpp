#include <doctest.h>

#include <cmath>

#include "mgeo/mesh.hpp"
#include "mgeo/metric_space.hpp"

using namespace mgeo;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("circle mesh has uniform arc-length edges") {
    MeshManifold m = MeshManifold::circle(4, 4.0);
    CHECK(m.vertex_count() == 4);
    REQUIRE(m.edges().size() == 4);
    for (const MeshEdge& e : m.edges()) CHECK(e.weight == doctest::Approx(1.0));
    CHECK(m.mesh_scale() == doctest::Approx(1.0));
    CHECK_THROWS_AS(MeshManifold::circle(2, 1.0), config_error);
}

TEST_CASE("circle geodesic metric is the shorter-arc distance") {
    MeshManifold m = MeshManifold::circle(8, 8.0);
    FiniteMetricSpace d = m.geodesic_metric();
    CHECK(d(0, 4) == doctest::Approx(4.0)); // antipodal
    CHECK(d(0, 1) == doctest::Approx(1.0));
    CHECK(d(0, 7) == doctest::Approx(1.0)); // wraps around
    CHECK(d(0, 5) == doctest::Approx(3.0));
    // Exact shorter-arc comparison at higher resolution.
    MeshManifold fine = MeshManifold::circle(100, 2.0 * kPi);
    FiniteMetricSpace fd = fine.geodesic_metric();
    const double step = 2.0 * kPi / 100.0;
    for (PointId j = 0; j < 100; j += 7) {
        const double arc = step * std::min<double>(j, 100 - j);
        CHECK(fd(0, j) == doctest::Approx(arc).epsilon(1e-12));
    }
}

TEST_CASE("icosphere vertex counts follow 10*4^k + 2") {
    CHECK(MeshManifold::sphere(1).vertex_count() == 42);
    CHECK(MeshManifold::sphere(2).vertex_count() == 162);
    CHECK(MeshManifold::sphere(3).vertex_count() == 642);
}

TEST_CASE("icosphere pole-to-pole distance is pi within 3 percent") {
    for (std::uint32_t level : {2u, 3u, 4u}) {
        MeshManifold m = MeshManifold::sphere(level);
        PointId top = 0, bot = 0;
        for (PointId i = 0; i < m.vertex_count(); ++i) {
            if (m.vertex(i)[2] > m.vertex(top)[2]) top = i;
            if (m.vertex(i)[2] < m.vertex(bot)[2]) bot = i;
        }
        FiniteMetricSpace d = m.geodesic_metric();
        CHECK(std::abs(d(top, bot) - kPi) < 0.03 * kPi);
    }
}

TEST_CASE("sphere radius scales the metric linearly") {
    FiniteMetricSpace unit = MeshManifold::sphere(2, 1.0).geodesic_metric();
    FiniteMetricSpace big = MeshManifold::sphere(2, 3.0).geodesic_metric();
    for (PointId j : {PointId(1), PointId(40), PointId(100)})
        CHECK(big(0, j) == doctest::Approx(3.0 * unit(0, j)));
}

TEST_CASE("torus grid is connected with diagonal edges") {
    MeshManifold m = MeshManifold::torus(4);
    CHECK(m.vertex_count() == 16);
    CHECK(m.dim() == 2);
    FiniteMetricSpace d = m.geodesic_metric();
    // Every distance is finite and positive off the diagonal.
    for (PointId i = 0; i < 16; ++i)
        for (PointId j = 0; j < 16; ++j) {
            if (i == j) continue;
            CHECK(d(i, j) > 0.0);
            CHECK(std::isfinite(d(i, j)));
        }
    // One lattice step costs 1/4; the wrap-around keeps distances small.
    CHECK(d(0, 1) == doctest::Approx(0.25));
    CHECK(d(0, 3) == doctest::Approx(0.25)); // wraps in x
}

TEST_CASE("rescale with constant weight multiplies the metric") {
    MeshManifold m = MeshManifold::circle(12, 12.0);
    ConformalWeight w{std::vector<double>(12, 2.5)};
    FiniteMetricSpace scaled = m.rescale_metric(w);
    FiniteMetricSpace base = m.geodesic_metric();
    for (PointId j = 1; j < 12; ++j)
        CHECK(scaled(0, j) == doctest::Approx(2.5 * base(0, j)));
}

TEST_CASE("rescale uses the trapezoid rule on edge endpoints") {
    // 4-cycle with unit edges and weights (1,1,3,3): edge costs are
    // 1,2,3,2 around the loop, so dist(v0, v2) = min(1+2, 2+3) = 3.
    MeshManifold m = MeshManifold::circle(4, 4.0);
    ConformalWeight w{{1.0, 1.0, 3.0, 3.0}};
    FiniteMetricSpace d = m.rescale_metric(w);
    CHECK(d(0, 2) == doctest::Approx(3.0));
    CHECK(d(0, 1) == doctest::Approx(1.0));
    CHECK(d(2, 3) == doctest::Approx(3.0));
    CHECK_THROWS_AS(m.rescale_metric(ConformalWeight{{1.0, 1.0}}), domain_error);
    CHECK_THROWS_AS(
        m.rescale_metric(ConformalWeight{{1.0, 1.0, 0.0, 1.0}}), domain_error);
}

TEST_CASE("geodesic metric passes the axiom check") {
    for (const MeshManifold& m :
         {MeshManifold::circle(30, 2.0 * kPi), MeshManifold::torus(5),
          MeshManifold::sphere(1)}) {
        FiniteMetricSpace d = m.geodesic_metric();
        CHECK(check_metric_axioms(d, d.tolerance()).valid);
    }
}

TEST_CASE("shortest_path endpoints and length match the metric") {
    MeshManifold m = MeshManifold::circle(10, 10.0);
    const std::vector<PointId> path = m.shortest_path(0, 4);
    REQUIRE(path.size() >= 2);
    CHECK(path.front() == 0);
    CHECK(path.back() == 4);
    CHECK(path.size() == 5); // four unit hops
    // Under weights favoring the far side, the path may flip direction but
    // endpoints stay fixed.
    ConformalWeight w{std::vector<double>(10, 1.0)};
    w.values[2] = 100.0;
    const std::vector<PointId> detour = m.shortest_path(0, 4, &w);
    CHECK(detour.front() == 0);
    CHECK(detour.back() == 4);
    CHECK(detour.size() == 7); // goes the long way around
}

TEST_CASE("from_parts round-trips the raw data and rejects disconnection") {
    MeshManifold m = MeshManifold::circle(6, 6.0);
    MeshManifold copy = MeshManifold::from_parts(m.kind(), m.dim(), m.vertices(),
                                                 m.edges());
    CHECK(copy.vertex_count() == 6);
    CHECK(copy.mesh_scale() == doctest::Approx(m.mesh_scale()));
    CHECK_THROWS_AS(MeshManifold::from_parts(
                        MeshKind::circle, 1,
                        {{0, 0, 0}, {1, 0, 0}, {5, 5, 5}}, {{0, 1, 1.0}}),
                    domain_error);
}

TEST_CASE("mesh kind names round-trip") {
    for (MeshKind k : {MeshKind::circle, MeshKind::torus, MeshKind::sphere})
        CHECK(mesh_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(mesh_kind_from_string("plane"), config_error);
}
