#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvx/numerics.hpp"

namespace cvx {

struct LinearRow {
    Vector coeffs;
    double rhs = 0.0;
};

/// maximize objective . x  subject to  ineq: row.x <= rhs,  eq: row.x = rhs.
/// Variables are free; bounds are expressed as rows.
struct LinearProgram {
    Vector objective;
    std::vector<LinearRow> ineq;
    std::vector<LinearRow> eq;

    std::size_t n_vars() const { return objective.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded, Failed };

/// Farkas certificate of infeasibility for {Ax <= b, Ex = f}:
///   ineq_mult >= 0,  ineq_mult^T A + eq_mult^T E = 0,
///   ineq_mult^T b + eq_mult^T f < 0.
struct FarkasCertificate {
    Vector ineq_mult;
    Vector eq_mult;
};

struct LpResult {
    LpStatus status = LpStatus::Failed;
    double value = 0.0;
    Vector point;
    /// Dual multipliers of the inequality rows at optimality (>= 0).
    Vector dual_ineq;
    Vector dual_eq;
    std::optional<FarkasCertificate> farkas;
    std::string diagnostic;
    int iterations = 0;
};

/// Two-phase dense revised simplex. Dantzig pricing with an automatic
/// switch to Bland's rule after a degenerate streak, explicit basis
/// inverse with periodic refactorization.
LpResult lp_solve(const LinearProgram& p, double feastol = 1e-9);

/// Residual check used by tests: max violation of the constraints at x.
double lp_max_violation(const LinearProgram& p, const Vector& x);

/// Verifies a Farkas certificate against the program within feastol.
bool farkas_valid(const LinearProgram& p, const FarkasCertificate& f, double feastol);

/// x in conv(points)? LP feasibility over barycentric weights.
/// Throws on an empty point list.
bool member_vrep(const Vector& x, const std::vector<Vector>& points, double feastol = 1e-9);

/// H-polytope (inequalities plus optional equality rows) in a lifted space W.
struct HPolytope {
    std::vector<LinearRow> ineq;
    std::vector<LinearRow> eq;
    std::size_t dim = 0;
};

/// Dense linear map w -> T w (rows x cols), row-major.
struct LinearMap {
    std::size_t rows = 0, cols = 0;
    std::vector<double> a;

    static LinearMap identity(std::size_t d);
    static LinearMap from_rows(const std::vector<Vector>& r);
    double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Vector apply(const Vector& w) const;
    Vector apply_transpose(const Vector& v) const;
};

/// x in T(P)? Feasibility of {w : T w = x, w in P}.
bool member_projection(const Vector& x, const HPolytope& p, const LinearMap& t,
                       double feastol = 1e-9);

/// max c . (T w) over w in P; throws if unbounded or infeasible.
double support_projection(const Vector& c, const HPolytope& p, const LinearMap& t,
                          double feastol = 1e-9);

}  // namespace cvx
