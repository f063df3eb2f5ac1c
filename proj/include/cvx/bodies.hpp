#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cvx/lp.hpp"
#include "cvx/numerics.hpp"

namespace cvx {

/// {v : (v - center)^T form (v - center) <= 1}, form positive definite.
struct Ellipsoid {
    Vector center;
    SymMatrix form;
};

struct VRep {
    std::vector<Vector> points;
};

/// Intersection of halfspaces a.x <= b, optionally restricted by
/// equality rows (used by lifted polytopes; plain bodies keep eq empty).
struct HRep {
    std::vector<LinearRow> ineq;
    std::vector<LinearRow> eq;
};

struct BallRep {
    std::size_t dim = 0;
    double radius = 1.0;
};

/// Q = map(poly): linear image of an H-polytope in a lifted space.
struct ProjectedRep {
    HPolytope poly;
    LinearMap map;
};

/// Q = {z : sum_k z_k basis[k] in conv(points)}: section of a V-polytope
/// by the span of an orthonormal basis, in basis coordinates.
struct SectionedRep {
    std::vector<Vector> points;
    std::vector<Vector> basis;
};

/// Convex body recentered at the origin, queried through a uniform
/// membership / gauge / support interface.
struct Body {
    std::variant<VRep, HRep, BallRep, Ellipsoid, ProjectedRep, SectionedRep> rep;
    bool symmetric = false;
};

std::size_t body_dim(const Body& b);
std::string body_kind(const Body& b);

bool membership(const Body& b, const Vector& x, double tol = 1e-9);

/// Minkowski gauge inf{t > 0 : v in t*b}. Closed form for ball,
/// ellipsoid and H-representations; a single LP for V-rep, sections and
/// projections. Throws if the origin is not interior.
double gauge(const Body& b, const Vector& v);

/// max_{x in b} <c, x>. Throws if the representation is unbounded.
double support(const Body& b, const Vector& c);

/// VRep(p_i) -> HRep(p_i . x <= 1); HRep(a_j . x <= 1) -> VRep(a_j).
/// Requires the origin strictly interior.
Body polar_polytope(const Body& b);

Body scale_body(const Body& b, double t);

/// All facets of a full-dimensional V-polytope, normalized to a.x <= 1
/// about the interior origin. Brute-force hyperplane scan; dim <= 6.
std::vector<Vector> facet_enum_bruteforce(const std::vector<Vector>& points,
                                          double tol = 1e-9);

struct SandwichCertificate {
    double alpha = 1.0;
    double tol = 0.0;
    bool valid = true;
    std::string inner_mode;   // "vertices" | "facets" | "sampled"
    std::string outer_mode;   // "vertices" | "facets" | "sampled"
    std::vector<Vector> inner_witnesses;
    std::vector<Vector> outer_witnesses;  // worst direction(s)
    Vector violation;                     // an inner point found outside B
    double worst_inner_gauge = 0.0;
};

/// Certifies X subset B subset alpha*X about the common origin. Inner
/// containment is exact for V-rep X (vertex scan) or H-rep B (facet
/// evaluation via support); the outer factor is exact for V-rep B or
/// H-rep X, sampled otherwise. The certificate records which mode ran.
SandwichCertificate certify_sandwich(const Body& x, const Body& b, std::size_t n_dirs,
                                     Seed seed, double tol = 1e-6);

// ---- Body zoo ----

Body make_cube(std::size_t d);            // H-rep, 2d facets
Body make_cube_vrep(std::size_t d);       // 2^d vertices (d <= 20)
Body make_cross(std::size_t d);           // V-rep, 2d vertices
Body make_ball(std::size_t d, double radius = 1.0);
/// Centered regular simplex: d+1 vertices in R^d, origin at barycenter.
Body make_simplex(std::size_t d);

struct TspBody {
    int n = 0;
    std::size_t dim = 0;                 // n(n-3)/2
    Body body;                            // V-rep in intrinsic coordinates
    std::vector<Vector> vertex_edges;     // 0/1 vectors per cycle, edge-indexed
    Vector center_edges;                  // barycenter in edge coordinates
    std::vector<Vector> basis_edges;      // orthonormal basis of V_n (Frobenius)
};

/// TSP_n: convex hull of Hamiltonian-cycle adjacency matrices, expressed
/// in an orthonormal basis of its affine hull with the barycenter as the
/// origin. 4 <= n <= 8.
TspBody make_tsp(int n);

/// Distance from the TSP center to the {x_e = 0} facet hyperplanes in
/// intrinsic coordinates (all edges give the same value).
double tsp_zero_facet_distance(const TspBody& t);

/// Vertices of CUT_n (x (x) x over sign vectors, 2^{n-1} distinct) or of
/// ACUT_n (x (x) y, 2^{2n-1} distinct).
std::vector<SymMatrix> make_cut_vertices(int n);
std::vector<std::vector<double>> make_acut_vertices(int n);  // row-major n*n

Vector flatten_matrix(const SymMatrix& m);

}  // namespace cvx
