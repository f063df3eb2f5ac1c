#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cvx/socone.hpp"

using namespace cvx;

namespace {

// Independent oracle: run the fold-and-rotate recurrence forward with the
// tightest feasible eta chain and check the terminal box constraints.
bool recurrence_member(int m, double xi, double eta, double tol = 1e-9) {
    if (xi < -tol || eta < -tol) return false;
    double a = xi, b = eta;
    for (int k = 2; k <= m; ++k) {
        const double th = M_PI / std::pow(2.0, k);
        const double a2 = a * std::cos(th) + b * std::sin(th);
        const double b2 = std::fabs(-a * std::sin(th) + b * std::cos(th));
        a = a2;
        b = b2;
    }
    return a <= 1.0 + tol && b <= M_PI / std::pow(2.0, m) + tol;
}

}  // namespace

TEST_CASE("quarter gadget row count is exactly 3(m-1)+4") {
    for (int m : {2, 4, 8, 16}) {
        const GadgetSpec g = quarter_gadget(m);
        CHECK(g.rows.eq.size() == std::size_t(m - 1));
        CHECK(g.rows.ineq.size() == std::size_t(2 * (m - 1) + 4));
        CHECK(g.variables.size() == std::size_t(2 * m));
    }
    CHECK_THROWS(quarter_gadget(1));
}

TEST_CASE("quarter gadget membership matches the recurrence oracle") {
    for (int m : {3, 6, 8}) {
        const GadgetSpec g = quarter_gadget(m);
        // (1,0) is a fixed point of every rotation stage.
        CHECK(quarter_member(g, 1.0, 0.0));
        // Points of the quarter circle are members at m = 8.
        if (m == 8)
            for (int deg = 0; deg <= 90; deg += 15) {
                const double t = deg * M_PI / 180.0;
                CHECK(quarter_member(g, std::cos(t), std::sin(t)));
            }
        // (1.2, 0) is rejected: the xi chain contracts only by cosines.
        CHECK_FALSE(quarter_member(g, 1.2, 0.0));

        // Grid agreement with the forward recurrence.
        int checked = 0;
        for (double x = 0.0; x <= 1.15; x += 0.115)
            for (double y = 0.0; y <= 1.15; y += 0.115) {
                const bool lp = quarter_member(g, x, y, 1e-9);
                const bool loose = recurrence_member(m, x, y, 1e-6);
                const bool tight = recurrence_member(m, x, y, 1e-12);
                if (loose != tight) continue;  // boundary band
                CHECK(lp == tight);
                ++checked;
            }
        CHECK(checked > 80);
    }
}

TEST_CASE("ball_bn base case d=1 is the interval") {
    const Body b = ball_bn(1, 4);
    CHECK(membership(b, {1.0}));
    CHECK(membership(b, {-1.0}));
    CHECK_FALSE(membership(b, {1.001}));
    CHECK(support(b, {1.0}) == doctest::Approx(1.0));
}

TEST_CASE("ball_bn d=2: outer factor via dense angular sampling") {
    const Body b = ball_bn(2, 6);
    double worst = 0.0;
    for (int k = 0; k < 720; ++k) {
        const double th = 2.0 * M_PI * k / 720.0;
        const Vector c = {std::cos(th), std::sin(th)};
        worst = std::max(worst, support(b, c));
    }
    CHECK(worst - 1.0 <= 2e-3);
    CHECK(worst >= 1.0 - 1e-9);  // contains the ball, so support >= 1
}

TEST_CASE("ball_bn d=2: error decays at least twofold per stage") {
    double prev = -1.0;
    for (int m = 4; m <= 10; ++m) {
        const Body b = ball_bn(2, m);
        double worst = 0.0;
        for (int k = 0; k < 720; ++k) {
            const double th = 2.0 * M_PI * (k + 0.25) / 720.0;
            const Vector c = {std::cos(th), std::sin(th)};
            worst = std::max(worst, support(b, c));
        }
        const double err = worst - 1.0;
        CHECK(err > 0.0);
        if (prev > 0.0) CHECK(err <= 0.5 * prev);
        prev = err;
    }
}

TEST_CASE("ball_bn facet count obeys 3dm and the construction formula") {
    for (std::size_t d : {2u, 3u, 4u, 6u}) {
        for (int m : {4, 6}) {
            const Body b = ball_bn(d, m);
            const std::size_t facets = ball_bn_facets(b);
            CHECK(facets <= 3 * d * std::size_t(m));
            // Leaves contribute 2 rows each, every gadget 2(m-1)+2.
            CHECK(facets == 2 * d + (d - 1) * (2 * std::size_t(m - 1) + 2));
            CHECK(ball_bn_equalities(b) == (d - 1) * std::size_t(m - 1));
        }
    }
}

TEST_CASE("ball_bn inner containment: boundary points of the ball are members") {
    const Body b = ball_bn(3, 5);
    const auto dirs = sample_unit_sphere(3, 100, Seed{31});
    for (const auto& c : dirs) CHECK(membership(b, c, 1e-7));
}

TEST_CASE("ball_bn membership is symmetric") {
    const Body b = ball_bn(3, 4);
    const auto dirs = sample_unit_sphere(3, 40, Seed{32});
    for (const auto& c : dirs) {
        const Vector p = 0.97 * c;
        CHECK(membership(b, p, 1e-8) == membership(b, -1.0 * p, 1e-8));
    }
}

TEST_CASE("ball_bn gauge matches the Euclidean norm within the stage error") {
    const Body b = ball_bn(2, 8);
    const auto dirs = sample_unit_sphere(2, 24, Seed{33});
    for (const auto& c : dirs) {
        const Vector p = 0.8 * c;
        CHECK(gauge(b, p) == doctest::Approx(0.8).epsilon(2e-4));
    }
}
