#pragma once

#include "cvx/bodies.hpp"
#include "cvx/polynorm.hpp"

namespace cvx {

/// Membership in the unit-diagonal PSD relaxation of CUT_n. A diagonal
/// away from 1 is a precondition violation (throws), not a "false".
bool cut_relax_member(const SymMatrix& x, double tol = 1e-9);

/// Membership in CUT_n itself: barycentric LP over the 2^{n-1} cut
/// vertices. n <= 10.
bool cut_brute_member(const SymMatrix& x, int n, double feastol = 1e-9);

/// Sampled lower bound on the dilation factor between the PSD relaxation
/// and CUT_n: boundary points of the relaxation are pulled toward the
/// identity until they enter the polytope.
double cut_ratio(int n, std::size_t n_samples, Seed seed, double feastol = 1e-9,
                 double bisect_tol = 1e-7);

enum class QStatus { Feasible, Infeasible, Undetermined };

struct QMemberResult {
    QStatus status = QStatus::Undetermined;
    SymMatrix witness;   // completed 2n x 2n matrix (valid when Feasible)
    double residual = 0.0;
    long iterations = 0;
};

/// Is X the upper-right n x n corner of some 2n x 2n PSD matrix with unit
/// diagonal? Dykstra-corrected alternating projections between the PSD
/// cone and the affine slice. Slow boundary convergence reports
/// Undetermined rather than a false negative.
QMemberResult q_member(const std::vector<double>& x_rowmajor, int n, double tol = 1e-7,
                       long iter_cap = 20000);

struct QvForm {
    Vector v;
    std::vector<std::vector<std::size_t>> basis;  // monomial exponents, degree <= k
    SymMatrix gram;
};

/// gram[a][b] = sum_i w_i (1 - <l_i, v>) m_a(l_i) m_b(l_i) over the atoms.
QvForm build_qv(const EmpiricalMeasure& mu, std::size_t k, const Vector& v);

/// v is accepted into X_k iff the q_v form is PSD. Degenerate moment
/// matrices (atoms that cannot tell the basis monomials apart) throw.
bool qv_certify(const EmpiricalMeasure& mu, std::size_t k, const Vector& v, double tol = 1e-9);

}  // namespace cvx
