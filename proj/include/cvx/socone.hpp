#pragma once

#include "cvx/bodies.hpp"

namespace cvx {

/// The m-stage polyhedral lift of the quarter disc: variables
/// (xi_k, eta_k), one rotation equality and two folding inequalities per
/// stage k = 2..m, plus the four boundary rows xi_1 >= 0, eta_1 >= 0,
/// xi_m <= 1, eta_m <= pi/2^m. Row count is exactly 3(m-1) + 4.
struct GadgetSpec {
    int m = 0;
    std::vector<std::string> variables;  // xi_1, eta_1, ..., xi_m, eta_m
    HPolytope rows;
    LinearMap projection;                // onto (xi_1, eta_1)
};

GadgetSpec quarter_gadget(int m);

/// Membership of (xi, eta) in the projection of the gadget (LP).
bool quarter_member(const GadgetSpec& g, double xi, double eta, double feastol = 1e-9);

/// Polyhedral approximation of the unit ball B_d as a projected body: a
/// balanced binary tower of quarter-disc gadgets over |x_i| bounds, with
/// the top cone variable fixed to 1. Inner containment of B_d is exact up
/// to LP tolerance; the outer factor decays like 4^{-m}.
Body ball_bn(std::size_t d, int m);

/// Inequality rows of the lifted polytope (the facet count the tower is
/// charged for; equality rows only cut the ambient space).
std::size_t ball_bn_facets(const Body& b);
std::size_t ball_bn_equalities(const Body& b);

}  // namespace cvx
