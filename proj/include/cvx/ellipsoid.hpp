#pragma once

#include "cvx/bodies.hpp"
#include "cvx/numerics.hpp"

namespace cvx {

struct MveeResult {
    Ellipsoid ellipsoid;   // every input point satisfies q(p - c) <= 1
    int iterations = 0;
    double gap = 0.0;      // Khachiyan duality gap at termination
    Vector weights;        // dual weights on the points at termination
};

/// Minimum-volume enclosing ellipsoid by Khachiyan coordinate ascent with
/// Wolfe-Atwood drop steps. Symmetric mode centers the ellipsoid at the
/// origin (input conceptually closed under negation); general mode lifts
/// to homogeneous coordinates. Containment q(p - c) <= 1 holds exactly at
/// return (the form absorbs the termination gap).
MveeResult loewner_mvee(const std::vector<Vector>& points, double eps,
                        bool symmetric = false, long max_iter = 1000000);

/// Inscribed ellipsoid of a symmetric V-polytope: the dual ellipsoid
/// {x : x^T M(u)^{-1} x <= 1} of the Loewner computation, which is
/// certified inside conv(+-points) and satisfies B within
/// sqrt(d(1+gap)) of it. Boundary samples are gauge-checked <= 1 + eps.
Ellipsoid john_inner_symmetric(const Body& b, double eps);

/// Inscribed ellipsoid of a centered V-polytope of dimension <= 6 via
/// brute-force facet enumeration and a centered MVEE of the polar. The
/// result is certified inside the body (polarity of a certified
/// enclosing ellipsoid).
Ellipsoid inscribed_via_polar(const Body& b, double eps);

/// The inscribed ball of TSP_n about its barycenter: radius equals the
/// distance to the {x_e = 0} facet hyperplanes in intrinsic coordinates.
Ellipsoid tsp_inscribed_ball(const TspBody& t);

}  // namespace cvx
