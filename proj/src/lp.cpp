#include "cvx/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace cvx {

namespace {

// Standard-form working problem: min cost.z  s.t.  M z = rhs, z >= 0.
// Columns are stored dense; the basis inverse is maintained explicitly.
struct Tableau {
    std::size_t m = 0;  // rows
    std::size_t n = 0;  // columns
    std::vector<double> cols;  // column-major m*n
    Vector rhs;
    Vector cost;

    double& at(std::size_t i, std::size_t j) { return cols[j * m + i]; }
    double at(std::size_t i, std::size_t j) const { return cols[j * m + i]; }
};

struct Basis {
    std::vector<std::size_t> idx;       // basis column per row
    std::vector<double> binv;           // m*m row-major
    Vector xb;                          // basic values

    double& bi(std::size_t i, std::size_t j) { return binv[i * idx.size() + j]; }
    double bi(std::size_t i, std::size_t j) const { return binv[i * idx.size() + j]; }
};

// Recompute binv = B^{-1} by Gauss-Jordan with partial pivoting.
bool refactorize(const Tableau& t, Basis& b) {
    const std::size_t m = t.m;
    std::vector<double> a(m * 2 * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) a[i * 2 * m + k] = t.at(i, b.idx[k]);
        a[i * 2 * m + m + i] = 1.0;
    }
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < m; ++i)
            if (std::fabs(a[i * 2 * m + k]) > std::fabs(a[piv * 2 * m + k])) piv = i;
        if (std::fabs(a[piv * 2 * m + k]) < 1e-13) return false;
        if (piv != k)
            for (std::size_t j = 0; j < 2 * m; ++j) std::swap(a[piv * 2 * m + j], a[k * 2 * m + j]);
        const double d = a[k * 2 * m + k];
        for (std::size_t j = 0; j < 2 * m; ++j) a[k * 2 * m + j] /= d;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == k) continue;
            const double f = a[i * 2 * m + k];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < 2 * m; ++j) a[i * 2 * m + j] -= f * a[k * 2 * m + j];
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) b.bi(i, j) = a[i * 2 * m + m + j];
    b.xb.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m; ++j) s += b.bi(i, j) * t.rhs[j];
        b.xb[i] = s;
    }
    return true;
}

Vector btran(const Tableau& t, const Basis& b) {
    const std::size_t m = t.m;
    Vector y(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += t.cost[b.idx[i]] * b.bi(i, j);
        y[j] = s;
    }
    return y;
}

Vector ftran(const Tableau& t, const Basis& b, std::size_t col) {
    const std::size_t m = t.m;
    Vector w(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m; ++j) s += b.bi(i, j) * t.at(j, col);
        w[i] = s;
    }
    return w;
}

enum class SimplexOutcome { Optimal, Unbounded, IterationCap };

struct BasisCorrupt : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Core primal iteration loop on a feasible starting basis. Termination
// claims (optimal / unbounded) are only accepted against a freshly
// refactorized basis inverse, so drift cannot end the solve early. In
// careful mode pricing is Bland's rule from the start and the inverse is
// rebuilt after every pivot.
SimplexOutcome iterate(const Tableau& t, Basis& b, const std::vector<bool>& allowed,
                       double feastol, int& iter_count, bool careful) {
    const std::size_t m = t.m, n = t.n;
    const double dual_tol = feastol * 10.0;
    const int cap = 20000 + 200 * static_cast<int>(m);
    const int cadence = careful ? 1 : 25;
    int degenerate_streak = 0;
    bool bland = careful;
    int since_refactor = 0;
    bool fresh = true;

    double bscale = 1.0;
    for (std::size_t i = 0; i < m; ++i) bscale = std::max(bscale, std::fabs(t.rhs[i]));

    std::vector<bool> in_basis(n, false);
    for (std::size_t i : b.idx) in_basis[i] = true;

    auto refresh = [&]() {
        if (!refactorize(t, b)) throw BasisCorrupt("singular basis in refactorization");
        for (double& v : b.xb) {
            if (v < -1e-6 * bscale) throw BasisCorrupt("basic solution lost feasibility");
            if (v < 0.0) v = 0.0;
        }
        since_refactor = 0;
        fresh = true;
    };

    for (;; ++iter_count) {
        if (iter_count > cap) return SimplexOutcome::IterationCap;
        const Vector y = btran(t, b);

        std::size_t enter = n;
        double best = -dual_tol;
        for (std::size_t j = 0; j < n; ++j) {
            if (in_basis[j] || !allowed[j]) continue;
            double d = t.cost[j];
            for (std::size_t i = 0; i < m; ++i) d -= y[i] * t.at(i, j);
            if (bland) {
                if (d < -dual_tol) { enter = j; break; }
            } else if (d < best) {
                best = d;
                enter = j;
            }
        }
        if (enter == n) {
            if (fresh) return SimplexOutcome::Optimal;
            refresh();
            continue;  // re-price against the clean inverse
        }

        const Vector w = ftran(t, b, enter);
        // Two-pass ratio test: prefer solid pivots, fall back to tiny
        // ones only when nothing else is eligible.
        std::size_t leave = m;
        double theta = std::numeric_limits<double>::infinity();
        for (const double pivot_tol : {1e-9, 1e-11}) {
            for (std::size_t i = 0; i < m; ++i) {
                if (w[i] <= pivot_tol) continue;
                const double r = std::max(b.xb[i], 0.0) / w[i];
                if (r < theta - 1e-12) {
                    theta = r;
                    leave = i;
                } else if (r < theta + 1e-12 && leave != m) {
                    // Tie: Bland keeps the smallest variable index (the
                    // anti-cycling guarantee); otherwise take the largest
                    // pivot for stability.
                    if (bland ? b.idx[i] < b.idx[leave] : w[i] > w[leave]) {
                        theta = std::min(theta, r);
                        leave = i;
                    }
                }
            }
            if (leave != m) break;
        }
        if (leave == m) {
            if (fresh) return SimplexOutcome::Unbounded;
            refresh();
            continue;
        }

        if (theta < feastol) {
            if (++degenerate_streak > 30) bland = true;
        } else {
            degenerate_streak = 0;
        }

        for (std::size_t i = 0; i < m; ++i) b.xb[i] -= theta * w[i];
        b.xb[leave] = theta;
        in_basis[b.idx[leave]] = false;
        in_basis[enter] = true;
        b.idx[leave] = enter;

        // Product-form update of the explicit inverse.
        const double pivot = w[leave];
        for (std::size_t j = 0; j < m; ++j) b.bi(leave, j) /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            const double f = w[i];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < m; ++j) b.bi(i, j) -= f * b.bi(leave, j);
        }
        fresh = false;
        if (++since_refactor >= cadence) refresh();
    }
}

}  // namespace

LinearMap LinearMap::identity(std::size_t d) {
    LinearMap t;
    t.rows = t.cols = d;
    t.a.assign(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) t.a[i * d + i] = 1.0;
    return t;
}

LinearMap LinearMap::from_rows(const std::vector<Vector>& r) {
    LinearMap t;
    t.rows = r.size();
    t.cols = r.empty() ? 0 : r[0].size();
    t.a.reserve(t.rows * t.cols);
    for (const auto& row : r) {
        if (row.size() != t.cols) throw std::invalid_argument("LinearMap: ragged rows");
        t.a.insert(t.a.end(), row.begin(), row.end());
    }
    return t;
}

Vector LinearMap::apply(const Vector& w) const {
    if (w.size() != cols) throw std::invalid_argument("LinearMap::apply: dimension mismatch");
    Vector r(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols; ++j) s += a[i * cols + j] * w[j];
        r[i] = s;
    }
    return r;
}

Vector LinearMap::apply_transpose(const Vector& v) const {
    if (v.size() != rows) throw std::invalid_argument("LinearMap::apply_transpose: dimension mismatch");
    Vector r(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r[j] += a[i * cols + j] * v[i];
    return r;
}

double lp_max_violation(const LinearProgram& p, const Vector& x) {
    double v = 0.0;
    for (const auto& r : p.ineq) v = std::max(v, dot(r.coeffs, x) - r.rhs);
    for (const auto& r : p.eq) v = std::max(v, std::fabs(dot(r.coeffs, x) - r.rhs));
    return v;
}

bool farkas_valid(const LinearProgram& p, const FarkasCertificate& f, double feastol) {
    const std::size_t n = p.n_vars();
    if (f.ineq_mult.size() != p.ineq.size() || f.eq_mult.size() != p.eq.size()) return false;
    double scale = 1.0;
    for (double v : f.ineq_mult) {
        if (v < -feastol) return false;
        scale = std::max(scale, std::fabs(v));
    }
    for (double v : f.eq_mult) scale = std::max(scale, std::fabs(v));
    Vector comb(n, 0.0);
    double rhs = 0.0;
    for (std::size_t i = 0; i < p.ineq.size(); ++i) {
        for (std::size_t k = 0; k < n; ++k) comb[k] += f.ineq_mult[i] * p.ineq[i].coeffs[k];
        rhs += f.ineq_mult[i] * p.ineq[i].rhs;
    }
    for (std::size_t i = 0; i < p.eq.size(); ++i) {
        for (std::size_t k = 0; k < n; ++k) comb[k] += f.eq_mult[i] * p.eq[i].coeffs[k];
        rhs += f.eq_mult[i] * p.eq[i].rhs;
    }
    for (double c : comb)
        if (std::fabs(c) > feastol * 100 * scale) return false;
    return rhs < -feastol * scale;
}

namespace {
LpResult lp_solve_mode(const LinearProgram& p, double feastol, bool careful) {
    const std::size_t nv = p.n_vars();
    const std::size_t mi = p.ineq.size(), me = p.eq.size();
    const std::size_t m = mi + me;
    LpResult res;

    if (m == 0) {
        // No constraints: optimal iff objective is zero.
        bool zero = true;
        for (double c : p.objective) zero = zero && std::fabs(c) < feastol;
        res.status = zero ? LpStatus::Optimal : LpStatus::Unbounded;
        res.point.assign(nv, 0.0);
        return res;
    }

    // Columns: u (nv), v (nv), slacks (mi), artificials (m).
    Tableau t;
    t.m = m;
    t.n = 2 * nv + mi + m;
    t.cols.assign(t.n * t.m, 0.0);
    t.rhs.assign(m, 0.0);
    t.cost.assign(t.n, 0.0);

    std::vector<double> sign(m, 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        const LinearRow& row = i < mi ? p.ineq[i] : p.eq[i - mi];
        sign[i] = row.rhs < 0.0 ? -1.0 : 1.0;
        t.rhs[i] = sign[i] * row.rhs;
        for (std::size_t k = 0; k < nv; ++k) {
            t.at(i, k) = sign[i] * row.coeffs[k];
            t.at(i, nv + k) = -sign[i] * row.coeffs[k];
        }
        if (i < mi) t.at(i, 2 * nv + i) = sign[i];
        t.at(i, 2 * nv + mi + i) = 1.0;
    }

    // Phase 1: minimize the artificial sum from the all-artificial basis.
    for (std::size_t i = 0; i < m; ++i) t.cost[2 * nv + mi + i] = 1.0;
    Basis b;
    b.idx.resize(m);
    std::iota(b.idx.begin(), b.idx.end(), 2 * nv + mi);
    b.binv.assign(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) b.bi(i, i) = 1.0;
    b.xb = t.rhs;

    std::vector<bool> allowed(t.n, true);
    int iters = 0;
    SimplexOutcome out = iterate(t, b, allowed, feastol, iters, careful);
    res.iterations = iters;
    if (out == SimplexOutcome::IterationCap) {
        res.status = LpStatus::Failed;
        res.diagnostic = "phase 1 iteration cap exceeded";
        return res;
    }
    double phase1 = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        if (b.idx[i] >= 2 * nv + mi) phase1 += b.xb[i];

    double bscale = 1.0;
    for (std::size_t i = 0; i < m; ++i) bscale = std::max(bscale, std::fabs(t.rhs[i]));
    if (phase1 > feastol * 100 * bscale) {
        // Infeasible: the phase-1 duals give a Farkas certificate.
        res.status = LpStatus::Infeasible;
        const Vector y = btran(t, b);
        FarkasCertificate f;
        f.ineq_mult.assign(mi, 0.0);
        f.eq_mult.assign(me, 0.0);
        for (std::size_t i = 0; i < mi; ++i) f.ineq_mult[i] = -sign[i] * y[i];
        for (std::size_t j = 0; j < me; ++j) f.eq_mult[j] = -sign[mi + j] * y[mi + j];
        for (double& v : f.ineq_mult)
            if (v < 0.0 && v > -feastol * 100) v = 0.0;
        res.farkas = std::move(f);
        res.diagnostic = "phase 1 optimum positive (" + std::to_string(phase1) + ")";
        return res;
    }

    // Drive any artificial still basic (at level ~0) out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
        if (b.idx[i] < 2 * nv + mi) continue;
        std::size_t replacement = t.n;
        Vector row(m, 0.0);
        for (std::size_t j = 0; j < t.n && replacement == t.n; ++j) {
            if (j >= 2 * nv + mi) continue;
            bool basic = false;
            for (std::size_t r2 = 0; r2 < m; ++r2) basic = basic || b.idx[r2] == j;
            if (basic) continue;
            const Vector w = ftran(t, b, j);
            if (std::fabs(w[i]) > 1e-9) replacement = j;
        }
        if (replacement < t.n) {
            const Vector w = ftran(t, b, replacement);
            const double pivot = w[i];
            b.idx[i] = replacement;
            for (std::size_t j2 = 0; j2 < m; ++j2) b.bi(i, j2) /= pivot;
            for (std::size_t r2 = 0; r2 < m; ++r2) {
                if (r2 == i) continue;
                const double fimp = w[r2];
                if (fimp == 0.0) continue;
                for (std::size_t j2 = 0; j2 < m; ++j2) b.bi(r2, j2) -= fimp * b.bi(i, j2);
            }
            refactorize(t, b);
        }
        // If no replacement exists the row is redundant; the artificial
        // stays basic at zero, blocked from re-entering below.
    }

    // Phase 2: maximize objective = minimize -obj(u) + obj(v).
    for (std::size_t k = 0; k < nv; ++k) {
        t.cost[k] = -p.objective[k];
        t.cost[nv + k] = p.objective[k];
    }
    for (std::size_t i = 0; i < m; ++i) t.cost[2 * nv + mi + i] = 0.0;
    for (std::size_t i = 0; i < m; ++i) allowed[2 * nv + mi + i] = false;

    out = iterate(t, b, allowed, feastol, iters, careful);
    res.iterations = iters;
    if (out == SimplexOutcome::IterationCap) {
        res.status = LpStatus::Failed;
        res.diagnostic = "phase 2 iteration cap exceeded";
        return res;
    }
    if (out == SimplexOutcome::Unbounded) {
        res.status = LpStatus::Unbounded;
        return res;
    }

    res.status = LpStatus::Optimal;
    res.point.assign(nv, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = b.idx[i];
        if (j < nv) res.point[j] += b.xb[i];
        else if (j < 2 * nv) res.point[j - nv] -= b.xb[i];
    }
    res.value = dot(p.objective, res.point);
    const Vector y = btran(t, b);
    res.dual_ineq.assign(mi, 0.0);
    res.dual_eq.assign(me, 0.0);
    for (std::size_t i = 0; i < mi; ++i) res.dual_ineq[i] = -sign[i] * y[i];
    for (std::size_t j = 0; j < me; ++j) res.dual_eq[j] = -sign[mi + j] * y[mi + j];
    return res;
}
}  // namespace

LpResult lp_solve(const LinearProgram& p, double feastol) {
    const std::size_t nv = p.n_vars();
    for (const auto& r : p.ineq)
        if (r.coeffs.size() != nv)
            throw std::invalid_argument("lp_solve: inequality row dimension mismatch");
    for (const auto& r : p.eq)
        if (r.coeffs.size() != nv)
            throw std::invalid_argument("lp_solve: equality row dimension mismatch");

    double scale = 1.0;
    for (const auto& r : p.ineq) scale = std::max(scale, std::fabs(r.rhs));
    for (const auto& r : p.eq) scale = std::max(scale, std::fabs(r.rhs));

    // Fast pricing first; any basis corruption or unverifiable answer
    // falls back to the careful mode (Bland + per-pivot refactorization).
    try {
        LpResult res = lp_solve_mode(p, feastol, false);
        const bool verify_point =
            res.status == LpStatus::Optimal && lp_max_violation(p, res.point) <= 1e-6 * scale;
        const bool verify_farkas =
            res.status != LpStatus::Infeasible || !res.farkas.has_value() ||
            farkas_valid(p, *res.farkas, feastol);
        if (res.status == LpStatus::Optimal ? verify_point : verify_farkas) return res;
    } catch (const BasisCorrupt&) {
    }
    try {
        return lp_solve_mode(p, feastol, true);
    } catch (const BasisCorrupt& e) {
        LpResult res;
        res.status = LpStatus::Failed;
        res.diagnostic = std::string("careful mode basis failure: ") + e.what();
        return res;
    }
}

bool member_vrep(const Vector& x, const std::vector<Vector>& points, double feastol) {
    if (points.empty()) throw std::invalid_argument("member_vrep: empty point list");
    const std::size_t d = x.size();
    const std::size_t np = points.size();
    for (const auto& pt : points)
        if (pt.size() != d) throw std::invalid_argument("member_vrep: point dimension mismatch");

    LinearProgram lp;
    lp.objective.assign(np, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        LinearRow r;
        r.coeffs.resize(np);
        for (std::size_t j = 0; j < np; ++j) r.coeffs[j] = points[j][i];
        r.rhs = x[i];
        lp.eq.push_back(std::move(r));
    }
    LinearRow sum;
    sum.coeffs.assign(np, 1.0);
    sum.rhs = 1.0;
    lp.eq.push_back(std::move(sum));
    for (std::size_t j = 0; j < np; ++j) {
        LinearRow r;
        r.coeffs.assign(np, 0.0);
        r.coeffs[j] = -1.0;
        r.rhs = 0.0;
        lp.ineq.push_back(std::move(r));
    }
    return lp_solve(lp, feastol).status == LpStatus::Optimal;
}

namespace {
LinearProgram projection_lp(const Vector& x, const HPolytope& p, const LinearMap& t,
                            const Vector* objective_on_v) {
    if (t.rows != x.size() && objective_on_v == nullptr)
        throw std::invalid_argument("member_projection: map target dimension mismatch");
    if (t.cols != p.dim) throw std::invalid_argument("projection: map source dimension mismatch");
    LinearProgram lp;
    lp.objective.assign(p.dim, 0.0);
    if (objective_on_v != nullptr) lp.objective = t.apply_transpose(*objective_on_v);
    for (const auto& r : p.ineq) lp.ineq.push_back(r);
    for (const auto& r : p.eq) lp.eq.push_back(r);
    if (objective_on_v == nullptr) {
        for (std::size_t i = 0; i < t.rows; ++i) {
            LinearRow r;
            r.coeffs.resize(p.dim);
            for (std::size_t j = 0; j < p.dim; ++j) r.coeffs[j] = t.at(i, j);
            r.rhs = x[i];
            lp.eq.push_back(std::move(r));
        }
    }
    return lp;
}
}  // namespace

bool member_projection(const Vector& x, const HPolytope& p, const LinearMap& t, double feastol) {
    const LinearProgram lp = projection_lp(x, p, t, nullptr);
    return lp_solve(lp, feastol).status == LpStatus::Optimal;
}

double support_projection(const Vector& c, const HPolytope& p, const LinearMap& t, double feastol) {
    const LinearProgram lp = projection_lp(Vector(), p, t, &c);
    const LpResult r = lp_solve(lp, feastol);
    if (r.status == LpStatus::Unbounded) throw std::runtime_error("support_projection: unbounded body");
    if (r.status != LpStatus::Optimal) throw std::runtime_error("support_projection: LP failed (" + r.diagnostic + ")");
    return r.value;
}

}  // namespace cvx
