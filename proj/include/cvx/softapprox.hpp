#pragma once

#include "cvx/bodies.hpp"

namespace cvx {

/// The soft-approximation polytope: generators h_I(x) = 1 - prod_{i in I}
/// (1 - g_i(T^{-1} x)) over multisets I of facet indices, |I| <= k, with
/// the empty multiset standing for the origin of the hull.
struct SoftPolytope {
    std::vector<LinearRow> base;   // P rows normalized to g_i . w <= 1
    LinearMap t, tinv;
    std::size_t k = 1;
    std::vector<std::vector<std::size_t>> generators;  // sorted multisets

    double eval_generator(std::size_t gen, const Vector& x) const;
};

/// Multiset count C(N+k, k); the hard cap build_soft enforces.
double multiset_count(std::size_t n, std::size_t k);

/// Builds the polytope and asserts h_I <= 1 on sampled points of T(P)
/// (hit-and-run over P). Throws if T is singular or a generator exceeds 1.
SoftPolytope build_soft(const HRep& p, const LinearMap& t, std::size_t k,
                        std::size_t check_samples = 1000, Seed seed = Seed{0x50f7});

/// Uniform-ish interior samples of T(P) by hit-and-run from the origin.
std::vector<Vector> sample_tp(const SoftPolytope& sp, std::size_t count, Seed seed);

struct ApproximantResult {
    Vector weights;          // convex weights over sp.generators (sum <= 1)
    double sup_ratio = 0.0;  // max over samples of |l(x) - h(x)| / l(x)^2
    double evaluate(const SoftPolytope& sp, const Vector& x) const;
};

/// The truncated-exponential approximant F = 1 - (1 - f/k)^k of a dual
/// functional, expanded into explicit convex weights over the h_I. The
/// membership of f/k in conv(0, g_i) is LP-verified, and the quadratic
/// error ratio is measured on the given samples of B and required <= 1.
ApproximantResult approximant(const SoftPolytope& sp, const Vector& ell,
                              const std::vector<Vector>& b_samples);

struct AcceptDecision {
    bool accept = false;
    double distance = 0.0;     // L2(mu) residual at the Frank-Wolfe optimum
    double ell_norm = 0.0;     // L2(mu) norm of ell
    Vector weights;            // witness weights over the generators
    std::vector<double> residual_trace;  // per-iteration residuals (monotone)
};

/// L2 accept/reject: minimize ||ell - h|| over h in conv(0, h_I) by
/// Frank-Wolfe with exact line search; accept iff the distance is at
/// most eps * ||ell||. Rejections are certified through the duality gap
/// (the optimum provably exceeds the threshold). An optional warm start
/// (e.g. the approximant weights) speeds up completeness checks.
AcceptDecision accept_test(const SoftPolytope& sp, const Vector& ell, double eps,
                           const std::vector<Vector>& b_samples,
                           const Vector* initial_weights = nullptr);

/// Monte Carlo fiber mode for non-invertible maps: the average of
/// g_I(w) = 1 - prod_{i in I}(1 - g_i(w)) over the fiber polytope
/// {w in P : T w = x}, by hit-and-run from an interior point of the
/// fiber. Approximate by construction; rows of p must be normalized to
/// g_i . w <= 1. Throws if the fiber is empty.
double fiber_average_generator(const HPolytope& p, const LinearMap& t,
                               const std::vector<std::size_t>& multiset, const Vector& x,
                               std::size_t samples, Seed seed);

}  // namespace cvx
