#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cvx/polyapprox.hpp"

using namespace cvx;

namespace {

// O2 as a section of a (scaled) 3-simplex: conv(2(e_i - c)) in R^4 cut by
// the plane spanned by s1' = (s1+s2)/sqrt2, s2' = (s1-s2)/sqrt2 where
// s1 = (e1-e2)/sqrt2, s2 = (e3-e4)/sqrt2 gives exactly conv(+-e1, +-e2).
Body o2_as_section_of_simplex() {
    SectionedRep s;
    const Vector c(4, 0.5);  // 2 * (1/4) * ones
    for (int i = 0; i < 4; ++i) {
        Vector e(4, 0.0);
        e[i] = 2.0;
        s.points.push_back(e - c);
    }
    const double h = 0.5;  // (1/sqrt2)^2
    s.basis.push_back({h, -h, h, -h});
    s.basis.push_back({h, -h, -h, h});
    return Body{s, true};
}

Body cube_as_identity_projection(std::size_t d) {
    ProjectedRep p;
    p.poly.dim = d;
    for (std::size_t i = 0; i < d; ++i) {
        Vector a(d, 0.0);
        a[i] = 1.0;
        p.poly.ineq.push_back(LinearRow{a, 1.0});
        a[i] = -1.0;
        p.poly.ineq.push_back(LinearRow{a, 1.0});
    }
    p.map = LinearMap::identity(d);
    return Body{p, true};
}

Body slab_projection(std::size_t d, std::size_t axis) {
    // |x_axis| <= 1 as the projection of an interval crossed with nothing:
    // lifted variable w in R^1, T places it on the chosen axis... the slab
    // is unbounded in other coordinates, so lift to R^d with two rows.
    ProjectedRep p;
    p.poly.dim = d;
    Vector a(d, 0.0);
    a[axis] = 1.0;
    p.poly.ineq.push_back(LinearRow{a, 1.0});
    a[axis] = -1.0;
    p.poly.ineq.push_back(LinearRow{a, 1.0});
    p.map = LinearMap::identity(d);
    return Body{p, true};
}

}  // namespace

TEST_CASE("greedy_net on the interval [-1,1] with eps = 0.5") {
    VRep v;
    v.points = {{1.0}, {-1.0}};
    const auto net = greedy_net(Body{v, true}, 0.5, 200, 50, Seed{1});
    CHECK(net.points.size() <= 5);  // (1 + 2/eps)^1
    CHECK(net.cert.alpha <= 2.0 + 1e-3);
    CHECK(net.cert.valid);
}

TEST_CASE("greedy_net on the square with eps = 0.9") {
    const auto net = greedy_net(make_cube_vrep(2), 0.9, 400, 100, Seed{2});
    CHECK(double(net.points.size()) <= std::pow(1.0 + 2.0 / 0.9, 2));
    CHECK(net.cert.alpha <= 10.0 + 1e-3);
}

TEST_CASE("greedy_net on the unit disc with eps = 0.25 meets the angular oracle") {
    const auto net = greedy_net(make_ball(2), 0.25, 3000, 400, Seed{3});
    CHECK(net.points.size() <= 81);
    CHECK(net.cert.alpha <= 4.0 / 3.0 + 1e-3);

    // Angular-grid oracle: the outer factor of conv(X) against the disc
    // is 1 / min over directions of the support of conv(X).
    double worst = 0.0;
    for (int k = 0; k < 3600; ++k) {
        const double th = 2.0 * M_PI * k / 3600.0;
        const Vector c = {std::cos(th), std::sin(th)};
        double s = -1e300;
        for (const auto& p : net.points) s = std::max(s, dot(c, p));
        worst = std::max(worst, 1.0 / s);
    }
    CHECK(worst <= 4.0 / 3.0 + 1e-3);
    CHECK(net.cert.alpha <= worst + 1e-6);  // certificate never exceeds the oracle
}

TEST_CASE("net cardinality always clears the exponential ball lower bound") {
    for (std::size_t d : {2u, 3u}) {
        for (double eps : {0.5, 0.25}) {
            const auto net = greedy_net(make_ball(d), eps, d == 2 ? 2000 : 6000, 300, Seed{d});
            const double lower = ball_net_lower_bound(d, net.cert.alpha);
            CHECK(double(net.points.size()) >= lower);
            CHECK(double(net.points.size()) <= std::pow(1.0 + 2.0 / eps, double(d)));
        }
    }
}

TEST_CASE("ball_net_lower_bound formula values") {
    CHECK(ball_net_lower_bound(2, 1.0) == doctest::Approx(std::exp(1.0)));
    CHECK(ball_net_lower_bound(4, 2.0) == doctest::Approx(std::exp(0.5)));
    CHECK(ball_net_lower_bound(3, 1e9) == doctest::Approx(1.0));
}

TEST_CASE("pairwise gauge separation holds in every net") {
    const Body b = make_cross(2);
    const auto net = greedy_net(b, 0.4, 600, 150, Seed{5});
    for (std::size_t i = 0; i < net.points.size(); ++i)
        for (std::size_t j = i + 1; j < net.points.size(); ++j)
            CHECK(gauge(b, net.points[i] - net.points[j]) > 0.4);
}

TEST_CASE("convert_rep: section of a simplex becomes a projection with <= N facets") {
    const Body section = o2_as_section_of_simplex();
    // Sanity: the section really is O2.
    CHECK(gauge(section, {1.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(support(section, {1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-7));

    const Body proj = convert_rep(section);
    REQUIRE(body_kind(proj) == "projected");
    CHECK(std::get<ProjectedRep>(proj.rep).poly.ineq.size() <= 4);
    for (int k = 0; k < 500; ++k) {
        const double th = 2.0 * M_PI * k / 500.0;
        const Vector c = {std::cos(th), std::sin(th)};
        CHECK(support(proj, c) == doctest::Approx(support(section, c)).epsilon(1e-7));
    }
}

TEST_CASE("convert_rep round trip: identity projection of a cube") {
    const Body proj = cube_as_identity_projection(2);
    const Body section = convert_rep(proj);
    REQUIRE(body_kind(section) == "sectioned");
    CHECK(std::get<SectionedRep>(section.rep).points.size() <= 4);
    const Body back = convert_rep(section);
    REQUIRE(body_kind(back) == "projected");
    for (int k = 0; k < 500; ++k) {
        const double th = 2.0 * M_PI * k / 500.0;
        const Vector c = {std::cos(th), std::sin(th)};
        const double ref = support(proj, c);
        CHECK(support(section, c) == doctest::Approx(ref).epsilon(1e-7));
        CHECK(support(back, c) == doctest::Approx(ref).epsilon(1e-7));
    }
}

TEST_CASE("convert_rep: segment as projection of a triangle") {
    // Triangle in R^2 projected onto the x-axis: the segment [-1, 1.5].
    // Recentring is part of the conversion; compare supports only.
    ProjectedRep p;
    p.poly.dim = 2;
    p.poly.ineq.push_back(LinearRow{{0.0, -1.0}, 0.25});       // y >= -0.25
    p.poly.ineq.push_back(LinearRow{{1.0, 1.0}, 1.5});
    p.poly.ineq.push_back(LinearRow{{-1.0, 1.0}, 1.0});
    p.map.rows = 1;
    p.map.cols = 2;
    p.map.a = {1.0, 0.0};
    const Body proj{p, false};
    const Body section = convert_rep(proj);
    CHECK(std::get<SectionedRep>(section.rep).points.size() <= 3);
    CHECK(support(section, {1.0}) == doctest::Approx(support(proj, {1.0})).epsilon(1e-7));
    CHECK(support(section, {-1.0}) == doctest::Approx(support(proj, {-1.0})).epsilon(1e-7));
}

TEST_CASE("convert_rep survives random 3-D projections of 5-D polytopes") {
    CounterRng rng(Seed{91});
    std::uint64_t ctr = 0;
    for (int trial = 0; trial < 4; ++trial) {
        ProjectedRep p;
        p.poly.dim = 5;
        for (int i = 0; i < 5; ++i) {
            Vector a(5, 0.0), b(5, 0.0);
            a[i] = 1.0;
            b[i] = -1.0;
            p.poly.ineq.push_back(LinearRow{a, 1.0});
            p.poly.ineq.push_back(LinearRow{b, 1.0});
        }
        for (int cidx = 0; cidx < 2; ++cidx) {
            Vector a(5);
            for (auto& c : a) c = 2.0 * rng.uniform(ctr++) - 1.0;
            p.poly.ineq.push_back(LinearRow{a, 1.0 + rng.uniform(ctr++)});
        }
        p.map.rows = 3;
        p.map.cols = 5;
        p.map.a.resize(15);
        for (auto& c : p.map.a) c = 2.0 * rng.uniform(ctr++) - 1.0;
        const Body proj{p, false};

        const Body section = convert_rep(proj);
        REQUIRE(body_kind(section) == "sectioned");
        // At most as many section vertices as projection facets.
        CHECK(std::get<SectionedRep>(section.rep).points.size() <= p.poly.ineq.size());
        for (const auto& c : sample_unit_sphere(3, 60, Seed{1000 + std::uint64_t(trial)})) {
            CHECK(support(section, c) == doctest::Approx(support(proj, c)).epsilon(1e-7));
        }
    }
}

TEST_CASE("combine: intersect(Q, Q) behaves as Q on sampled queries") {
    const Body q = cube_as_identity_projection(2);
    const Body qq = combine(q, q, CombineMode::Intersect);
    CounterRng rng(Seed{7});
    for (int k = 0; k < 100; ++k) {
        const Vector x = {3.0 * rng.uniform(2 * k) - 1.5, 3.0 * rng.uniform(2 * k + 1) - 1.5};
        CHECK(membership(qq, x) == membership(q, x));
    }
}

TEST_CASE("combine: the unit square from two projected slabs, 4 facets total") {
    const Body sx = slab_projection(2, 0);
    const Body sy = slab_projection(2, 1);
    const Body sq = combine(sx, sy, CombineMode::Intersect);
    CHECK(std::get<ProjectedRep>(sq.rep).poly.ineq.size() == 4);
    CHECK(membership(sq, {1.0, 1.0}));
    CHECK_FALSE(membership(sq, {1.0, 1.01}));
    CHECK(support(sq, {1.0, 1.0}) == doctest::Approx(2.0));
}

TEST_CASE("combine: product of two intervals is the square") {
    ProjectedRep interval;
    interval.poly.dim = 1;
    interval.poly.ineq.push_back(LinearRow{{1.0}, 1.0});
    interval.poly.ineq.push_back(LinearRow{{-1.0}, 1.0});
    interval.map = LinearMap::identity(1);
    const Body a{interval, true};
    const Body prod = combine(a, a, CombineMode::Product);
    CHECK(body_dim(prod) == 2);
    CHECK(std::get<ProjectedRep>(prod.rep).poly.ineq.size() == 4);
    CHECK(membership(prod, {1.0, -1.0}));
    CHECK_FALSE(membership(prod, {1.1, 0.0}));
}

TEST_CASE("lift_member on the cross-polytope base set") {
    LiftFamily lf;
    lf.base_points = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (std::size_t i = 0; i < 4; ++i) lf.family.push_back({i});

    SUBCASE("constant function is in the singleton cone") {
        CHECK(lift_member({0.0, 0.0}, 1.0, lf));
    }
    SUBCASE("recovered square boundary: c = (1,0) accepted") {
        CHECK(lift_member({1.0, 0.0}, 1.0, lf));
    }
    SUBCASE("outside the recovered square: c = (1.5,0) rejected") {
        CHECK_FALSE(lift_member({1.5, 0.0}, 1.0, lf));
    }
    SUBCASE("slice violations throw instead of returning false") {
        CHECK_THROWS_AS(lift_member({1.0, 0.0}, 2.0, lf), std::invalid_argument);
    }
    SUBCASE("monotonicity: enlarging the family keeps accepted points accepted") {
        LiftFamily bigger = lf;
        bigger.family.push_back({0, 1});
        bigger.family.push_back({2, 3});
        for (double t : {0.0, 0.4, 0.8, 1.0}) {
            if (lift_member({t, 0.2}, 1.0, lf)) CHECK(lift_member({t, 0.2}, 1.0, bigger));
        }
    }
}

TEST_CASE("type-2 estimator exact values") {
    SUBCASE("unit ball with an orthonormal basis gives 1") {
        for (std::size_t d : {2u, 5u, 10u}) {
            std::vector<Vector> basis;
            for (std::size_t i = 0; i < d; ++i) {
                Vector e(d, 0.0);
                e[i] = 1.0;
                basis.push_back(e);
            }
            CHECK(type2_lower_exact(make_ball(d), basis) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("cross-polytope with the standard basis gives sqrt(d)") {
        for (std::size_t d : {2u, 4u}) {
            std::vector<Vector> basis;
            for (std::size_t i = 0; i < d; ++i) {
                Vector e(d, 0.0);
                e[i] = 1.0;
                basis.push_back(e);
            }
            CHECK(type2_lower_exact(make_cross(d), basis) ==
                  doctest::Approx(std::sqrt(double(d))).epsilon(1e-9));
        }
    }
    SUBCASE("cube with the standard basis gives 1/sqrt(N)") {
        for (std::size_t n : {3u, 6u}) {
            std::vector<Vector> basis;
            for (std::size_t i = 0; i < n; ++i) {
                Vector e(n, 0.0);
                e[i] = 1.0;
                basis.push_back(e);
            }
            CHECK(type2_lower_exact(make_cube(n), basis) ==
                  doctest::Approx(1.0 / std::sqrt(double(n))).epsilon(1e-12));
        }
    }
}

TEST_CASE("type-2 estimator is scale invariant") {
    const std::vector<Vector> xs = {{1, 0.3}, {-0.2, 1}, {0.5, 0.5}};
    const double v1 = type2_lower_exact(make_cross(2), xs);
    const double v2 = type2_lower_exact(scale_body(make_cross(2), 3.0), xs);
    CHECK(v1 == doctest::Approx(v2).epsilon(1e-12));
}

TEST_CASE("monte carlo type-2 estimate approaches the exact value") {
    const std::vector<Vector> xs = {{1, 0}, {0, 1}};
    const double exact = type2_lower_exact(make_cross(2), xs);
    const double mc = type2_lower_mc(make_cross(2), xs, 4000, Seed{11});
    CHECK(mc == doctest::Approx(exact).epsilon(0.05));
}
