#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cvx/ellipsoid.hpp"

using namespace cvx;

TEST_CASE("MVEE of the cross-polytope vertices is the unit disc") {
    const auto pts = std::get<VRep>(make_cross(2).rep).points;
    const auto mv = loewner_mvee(pts, 1e-8, true);
    CHECK(mv.gap <= 1e-8);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(mv.ellipsoid.form(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).scale(1.0).epsilon(1e-6));
    CHECK(norm2(mv.ellipsoid.center) < 1e-12);
}

TEST_CASE("MVEE of the square vertices is the disc of radius sqrt(2)") {
    const auto pts = std::get<VRep>(make_cube_vrep(2).rep).points;
    const auto mv = loewner_mvee(pts, 1e-8, true);
    // form = I/2 corresponds to radius sqrt(2)
    CHECK(mv.ellipsoid.form(0, 0) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(mv.ellipsoid.form(1, 1) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(mv.ellipsoid.form(0, 1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
}

TEST_CASE("MVEE rejects rank-deficient input naming the problem") {
    const std::vector<Vector> pts = {{1, 0}, {-1, 0}};
    CHECK_THROWS_WITH_AS(loewner_mvee(pts, 1e-6, true), doctest::Contains("degenerate"),
                         std::runtime_error);
}

TEST_CASE("general-mode MVEE encloses all points and is near-optimal on a shifted simplex") {
    const std::vector<Vector> pts = {{2, 0}, {3, 0}, {2.5, 1.0}, {2.5, 0.3}};
    const auto mv = loewner_mvee(pts, 1e-7, false);
    for (const auto& p : pts) CHECK(mv.ellipsoid.form.quad(p - mv.ellipsoid.center) <= 1.0 + 1e-12);
    // The interior point must be strictly inside.
    CHECK(mv.ellipsoid.form.quad(Vector{2.5, 0.3} - mv.ellipsoid.center) < 1.0 - 1e-3);
}

TEST_CASE("Khachiyan optimality: weighted second moments reproduce the form") {
    const auto pts = std::get<VRep>(make_cube_vrep(3).rep).points;
    const double eps = 1e-7;
    const auto mv = loewner_mvee(pts, eps, true);
    // sum_i u_i q(p_i) = trace(Q M(u)) must sit at 1/(1+gap).
    double tr = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        tr += mv.weights[i] * mv.ellipsoid.form.quad(pts[i]);
    CHECK(tr == doctest::Approx(1.0).epsilon(10 * eps));
    // Support points (positive weight) should be near the boundary.
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (mv.weights[i] > 1e-6) CHECK(mv.ellipsoid.form.quad(pts[i]) > 1.0 - 10 * eps);
}

TEST_CASE("john_inner_symmetric on squares, cross-polytopes and an interval") {
    SUBCASE("square -> unit disc") {
        const Ellipsoid e = john_inner_symmetric(make_cube_vrep(2), 1e-7);
        CHECK(e.form(0, 0) == doctest::Approx(1.0).epsilon(1e-5));
        CHECK(e.form(1, 1) == doctest::Approx(1.0).epsilon(1e-5));
        CHECK(e.form(0, 1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-5));
    }
    SUBCASE("cross-polytope -> ball of radius 1/sqrt(d)") {
        const Ellipsoid e = john_inner_symmetric(make_cross(3), 1e-7);
        // form = d * I corresponds to radius 1/sqrt(3)
        CHECK(e.form(0, 0) == doctest::Approx(3.0).epsilon(1e-5));
    }
    SUBCASE("interval [-1,1] -> itself") {
        VRep v;
        v.points = {{1.0}, {-1.0}};
        const Ellipsoid e = john_inner_symmetric(Body{v, true}, 1e-9);
        CHECK(e.form(0, 0) == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("certified sandwich factor of the inner ellipsoid is at most sqrt(d)(1+10eps)") {
    const double eps = 1e-7;
    for (std::size_t d : {2u, 3u, 4u}) {
        const Body cube = make_cube_vrep(d);
        const Ellipsoid e = john_inner_symmetric(cube, eps);
        const auto cert = certify_sandwich(Body{e, true}, cube, 128, Seed{d}, 1e-6);
        CHECK(cert.valid);
        CHECK(cert.alpha <= std::sqrt(double(d)) * (1.0 + 10.0 * eps));
        CHECK(cert.alpha == doctest::Approx(std::sqrt(double(d))).epsilon(1e-4));
    }
}

TEST_CASE("inscribed_via_polar of the square recovers the unit disc") {
    const Ellipsoid e = inscribed_via_polar(make_cube_vrep(2), 1e-8);
    CHECK(e.form(0, 0) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(e.form(1, 1) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("TSP_5 inscribed ellipsoid: polar pipeline agrees with the facet-distance ball") {
    const TspBody t = make_tsp(5);
    const double r = tsp_zero_facet_distance(t);
    CHECK(r == doctest::Approx(1.0).epsilon(1e-9));  // Frobenius-isometric coordinates

    const Ellipsoid viaPolar = inscribed_via_polar(t.body, 1e-8);
    const Ellipsoid ball = tsp_inscribed_ball(t);
    for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = i; j < t.dim; ++j)
            CHECK(viaPolar.form(i, j) == doctest::Approx(ball.form(i, j)).scale(1.0).epsilon(1e-4));
}

TEST_CASE("TSP_5 tangency observation: the inscribed ball touches the zero facets") {
    // At n=5 the barycenter has a_e = 1/2, which puts the x_e = 0 and
    // x_e <= 1 facet classes at the same distance: all 20 facets touch.
    const TspBody t = make_tsp(5);
    const auto facets = facet_enum_bruteforce(std::get<VRep>(t.body.rep).points, 1e-7);
    const double r = tsp_zero_facet_distance(t);
    REQUIRE(facets.size() == 20);
    for (const auto& a : facets) {
        const double dist = 1.0 / norm2(a);  // facet a.x <= 1
        CHECK(dist == doctest::Approx(r).epsilon(1e-7));
    }
}
