#pragma once

#include "cvx/bodies.hpp"

namespace cvx {

struct NetResult {
    std::vector<Vector> points;
    double eps = 0.0;
    SandwichCertificate cert;   // conv(points) vs the body
    std::size_t candidates_used = 0;
};

/// Greedy packing net on a symmetric body: boundary candidates (vertices
/// first, then gauge-normalized sphere samples) are inserted when their
/// pairwise gauge distance to the net exceeds eps. The cardinality bound
/// (1 + 2/eps)^d is a hard assertion; the outer factor 1/(1 - eps) is a
/// verified postcondition, re-run with more candidates until it holds or
/// the retry budget is spent.
NetResult greedy_net(const Body& b, double eps, std::size_t candidates,
                     std::size_t stall_cap, Seed seed, double factor_tol = 1e-3);

/// exp(d / (2 alpha^2)): minimum vertex count of any polytope
/// alpha-approximating the unit ball.
double ball_net_lower_bound(std::size_t d, double alpha);

/// Sectioned -> Projected via the simplex factorization (N vertices give
/// at most N inequality facets); Projected -> Sectioned via polarity.
/// Support functions agree with the input on sampled directions.
Body convert_rep(const Body& q);

enum class CombineMode { Intersect, Product };

/// Intersection or direct product of two projected bodies; the lifted
/// polytope keeps at most N1 + N2 inequality facets.
Body combine(const Body& q1, const Body& q2, CombineMode mode);

struct LiftFamily {
    std::vector<Vector> base_points;                 // X subset of B-polar
    std::vector<std::vector<std::size_t>> family;    // subsets F as index sets
};

/// Is (f(x))_{x in X} with f = <c,.> + alpha0 in the conic hull of the
/// family indicators? The affine slice (mean of f over X equal to 1) is a
/// precondition; violations throw rather than return false.
bool lift_member(const Vector& c, double alpha0, const LiftFamily& lf, double feastol = 1e-9);

/// sqrt( E || sum eps_i x_i ||_B^2 / sum ||x_i||_B^2 ): a lower bound on
/// the type-2 constant of B. Exact mode enumerates all sign patterns.
double type2_lower_exact(const Body& b, const std::vector<Vector>& xs);
double type2_lower_mc(const Body& b, const std::vector<Vector>& xs, std::size_t samples,
                      Seed seed);

}  // namespace cvx
