#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "cvx/bodies.hpp"

using namespace cvx;

TEST_CASE("gauge closed forms and LP forms") {
    const Body cube = make_cube(3);
    CHECK(gauge(cube, {1, 0, 0}) == doctest::Approx(1.0));
    CHECK(gauge(cube, {0.5, -0.2, 0.1}) == doctest::Approx(0.5));

    const Body cross = make_cross(2);
    CHECK(gauge(cross, {1, 1}) == doctest::Approx(2.0));  // l1 gauge
    CHECK(gauge(cross, {0, 0}) == doctest::Approx(0.0));

    const Body ball = make_ball(4);
    CHECK(gauge(ball, {0, 3, 0, 4}) == doctest::Approx(5.0));
}

TEST_CASE("gauge is positively homogeneous and symmetric on symmetric bodies") {
    const Body bodies[] = {make_cube(3), make_cross(3), make_ball(3)};
    const auto dirs = sample_unit_sphere(3, 25, Seed{17});
    for (const auto& b : bodies) {
        for (const auto& v : dirs) {
            const double g = gauge(b, v);
            for (double t : {0.5, 2.0, 10.0})
                CHECK(gauge(b, t * v) == doctest::Approx(t * g).epsilon(1e-9));
            CHECK(gauge(b, -1.0 * v) == doctest::Approx(g).epsilon(1e-9));
        }
    }
}

TEST_CASE("support values") {
    CHECK(support(make_ball(3), {0, 1, 0}) == doctest::Approx(1.0));
    CHECK(support(make_cube(2), {1, 1}) == doctest::Approx(2.0));   // vertex (1,1)
    CHECK(support(make_cross(2), {1, 1}) == doctest::Approx(1.0));  // vertex (1,0)
}

TEST_CASE("gauge and support are dual on polytopes") {
    for (std::size_t d : {2u, 3u, 5u}) {
        const Body cross = make_cross(d);
        const Body polar = polar_polytope(cross);  // the cube as H-rep
        const auto dirs = sample_unit_sphere(d, 30, Seed{d});
        for (const auto& v : dirs)
            CHECK(support(polar, v) == doctest::Approx(gauge(cross, v)).epsilon(1e-8));
    }
}

TEST_CASE("polar pairs: cube <-> cross-polytope") {
    const Body cube = make_cube(3);
    const Body polar = polar_polytope(cube);
    REQUIRE(body_kind(polar) == "vrep");
    const auto& pts = std::get<VRep>(polar.rep).points;
    CHECK(pts.size() == 6);
    for (const auto& p : pts) CHECK(norm2(p) == doctest::Approx(1.0));  // +-e_i

    const Body cross = make_cross(4);
    const Body polar2 = polar_polytope(cross);
    REQUIRE(body_kind(polar2) == "hrep");
    CHECK(std::get<HRep>(polar2.rep).ineq.size() == 8);
    // gauge of the polar at the all-ones vector is the cube gauge.
    CHECK(gauge(polar2, {1, 1, 1, 1}) == doctest::Approx(1.0));
}

TEST_CASE("double polar of a pentagon preserves support on 360 directions") {
    VRep pent;
    for (int k = 0; k < 5; ++k) {
        const double th = 2.0 * M_PI * k / 5.0 + 0.3;
        pent.points.push_back({std::cos(th), 0.9 * std::sin(th)});
    }
    const Body body{pent, false};
    const Body dd = polar_polytope(polar_polytope(body));
    for (int k = 0; k < 360; ++k) {
        const double th = 2.0 * M_PI * k / 360.0;
        const Vector c = {std::cos(th), std::sin(th)};
        CHECK(support(dd, c) == doctest::Approx(support(body, c)).epsilon(1e-9));
    }
}

TEST_CASE("polar requires the origin in the interior") {
    VRep off;  // hull well away from the origin
    off.points = {{1, 1}, {2, 1}, {1, 2}};
    CHECK_THROWS(polar_polytope(Body{off, false}));
}

TEST_CASE("make_tsp counts and structure") {
    SUBCASE("n=4: 3 vertices, dim 2") {
        const TspBody t = make_tsp(4);
        CHECK(t.vertex_edges.size() == 3);
        CHECK(t.dim == 2);
        CHECK(std::get<VRep>(t.body.rep).points.size() == 3);
    }
    SUBCASE("n=5: 12 vertices, dim 5") {
        const TspBody t = make_tsp(5);
        CHECK(t.vertex_edges.size() == 12);
        CHECK(t.dim == 5);
    }
    SUBCASE("every vertex is 2-regular") {
        const TspBody t = make_tsp(6);
        CHECK(t.vertex_edges.size() == 60);
        for (const auto& v : t.vertex_edges) {
            // row sums of the adjacency matrix
            std::size_t e = 0;
            std::vector<double> deg(6, 0.0);
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j) {
                    deg[i] += v[e];
                    deg[j] += v[e];
                    ++e;
                }
            for (double s : deg) CHECK(s == doctest::Approx(2.0));
        }
    }
    SUBCASE("center row sums are exactly 2 (barycenter lies in the affine hull)") {
        const TspBody t = make_tsp(5);
        std::vector<double> deg(5, 0.0);
        std::size_t e = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) {
                deg[i] += t.center_edges[e];
                deg[j] += t.center_edges[e];
                ++e;
            }
        for (double s : deg) CHECK(s == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("n < 4 is rejected") { CHECK_THROWS(make_tsp(3)); }
}

TEST_CASE("TSP_5 facet enumeration finds the 20 known facets") {
    const TspBody t = make_tsp(5);
    const auto facets = facet_enum_bruteforce(std::get<VRep>(t.body.rep).points, 1e-7);
    CHECK(facets.size() == 20);
}

TEST_CASE("make_cut vertices") {
    SUBCASE("n=2 symmetric") {
        const auto vs = make_cut_vertices(2);
        REQUIRE(vs.size() == 2);
        CHECK(vs[0](0, 1) == doctest::Approx(1.0));
        CHECK(vs[1](0, 1) == doctest::Approx(-1.0));
    }
    SUBCASE("n=3 symmetric has 4 vertices, all PSD with unit diagonal") {
        const auto vs = make_cut_vertices(3);
        REQUIRE(vs.size() == 4);
        std::set<std::vector<long long>> distinct;
        for (const auto& m : vs) {
            CHECK(is_psd(m));
            std::vector<long long> key;
            for (std::size_t i = 0; i < 3; ++i) {
                CHECK(m(i, i) == doctest::Approx(1.0));
                for (std::size_t j = 0; j < 3; ++j) key.push_back(llround(m(i, j)));
            }
            distinct.insert(key);
        }
        CHECK(distinct.size() == 4);
    }
    SUBCASE("asymmetric count is 2^(2n-1)") {
        CHECK(make_acut_vertices(2).size() == 8);
        CHECK(make_acut_vertices(3).size() == 32);
    }
}

TEST_CASE("certify_sandwich basics") {
    SUBCASE("X = B gives alpha = 1") {
        const Body ball = make_ball(3);
        const auto cert = certify_sandwich(ball, ball, 64, Seed{1});
        CHECK(cert.valid);
        CHECK(cert.alpha == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("half ball inside ball gives alpha = 2") {
        const auto cert = certify_sandwich(make_ball(3, 0.5), make_ball(3), 128, Seed{2});
        CHECK(cert.valid);
        CHECK(cert.alpha == doctest::Approx(2.0).epsilon(1e-9));
    }
    SUBCASE("unit disc inside the square gives alpha = sqrt(2)") {
        Ellipsoid disc{Vector(2, 0.0), SymMatrix::identity(2)};
        const auto cert = certify_sandwich(Body{disc, true}, make_cube_vrep(2), 256, Seed{3});
        CHECK(cert.valid);
        CHECK(cert.outer_mode == "vertices");
        CHECK(cert.alpha == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
    }
    SUBCASE("alpha doubles when B is scaled by 2") {
        const Body x = make_cross(2);
        const Body b = make_cube_vrep(2);
        const auto c1 = certify_sandwich(x, b, 64, Seed{4});
        const auto c2 = certify_sandwich(x, scale_body(b, 2.0), 64, Seed{4});
        CHECK(c2.alpha == doctest::Approx(2.0 * c1.alpha).epsilon(1e-9));
    }
    SUBCASE("violations are flagged with a witness") {
        const auto cert = certify_sandwich(make_ball(2, 1.1), make_cube_vrep(2), 64, Seed{5});
        CHECK_FALSE(cert.valid);  // the inflated disc pokes out of the square
    }
}

TEST_CASE("membership across representations") {
    const Body cube = make_cube(3);
    CHECK(membership(cube, {1, 1, 1}));
    CHECK_FALSE(membership(cube, {1.01, 0, 0}));

    const Body simplex = make_simplex(3);
    CHECK(membership(simplex, {0, 0, 0}));
    const auto& pts = std::get<VRep>(simplex.rep).points;
    REQUIRE(pts.size() == 4);
    for (const auto& p : pts) CHECK(membership(simplex, p));
    // Vertices are equidistant from the origin (regular).
    for (const auto& p : pts) CHECK(norm2(p) == doctest::Approx(norm2(pts[0])));
}

TEST_CASE("symmetric flag matches sampled membership symmetry") {
    const Body bodies[] = {make_cube(3), make_cross(3), make_ball(3)};
    for (const auto& b : bodies) {
        REQUIRE(b.symmetric);
        for (const auto& c : sample_unit_sphere(3, 20, Seed{6})) {
            const Vector p = 0.7 * c;
            CHECK(membership(b, p) == membership(b, -1.0 * p));
        }
    }
}

TEST_CASE("facet enumeration agrees with the V-rep gauge on random 3-D hulls") {
    CounterRng rng(Seed{88});
    std::uint64_t ctr = 0;
    for (int trial = 0; trial < 6; ++trial) {
        // Random symmetric point cloud about the origin (interior).
        VRep v;
        for (int p = 0; p < 7; ++p) {
            Vector x(3);
            for (auto& c : x) c = 2.0 * rng.uniform(ctr++) - 1.0;
            v.points.push_back(x);
            v.points.push_back(-1.0 * x);
        }
        const Body body{v, true};
        const auto facets = facet_enum_bruteforce(v.points, 1e-9);
        REQUIRE(!facets.empty());
        HRep h;
        for (const auto& a : facets) h.ineq.push_back(LinearRow{a, 1.0});
        const Body hbody{h, true};
        // Same body through both representations: gauges agree.
        for (const auto& dir : sample_unit_sphere(3, 25, Seed{ctr})) {
            CHECK(gauge(hbody, dir) == doctest::Approx(gauge(body, dir)).epsilon(1e-7));
            CHECK(support(hbody, dir) == doctest::Approx(support(body, dir)).epsilon(1e-7));
        }
    }
}

TEST_CASE("facet enumeration on the square and a pentagon") {
    const auto sq = facet_enum_bruteforce(std::get<VRep>(make_cube_vrep(2).rep).points);
    CHECK(sq.size() == 4);
    VRep pent;
    for (int k = 0; k < 5; ++k) {
        const double th = 2.0 * M_PI * k / 5.0;
        pent.points.push_back({std::cos(th), std::sin(th)});
    }
    CHECK(facet_enum_bruteforce(pent.points).size() == 5);
}
