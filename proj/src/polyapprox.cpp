#include "cvx/polyapprox.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cvx {

namespace {

double pow_int(double base, std::size_t e) {
    double r = 1.0;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

NetResult greedy_net(const Body& b, double eps, std::size_t candidates, std::size_t stall_cap,
                     Seed seed, double factor_tol) {
    if (!b.symmetric) throw std::invalid_argument("greedy_net: symmetric body required");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("greedy_net: 0 < eps < 1 required");
    const std::size_t d = body_dim(b);
    const double card_bound = pow_int(1.0 + 2.0 / eps, d);
    const double target = 1.0 / (1.0 - eps) + factor_tol;

    std::size_t budget = candidates;
    for (int attempt = 0; attempt < 4; ++attempt, budget *= 4) {
        std::vector<Vector> net;
        std::size_t stall = 0, used = 0;

        auto try_insert = [&](const Vector& x) {
            for (const auto& y : net)
                if (gauge(b, x - y) <= eps) {
                    ++stall;
                    return;
                }
            net.push_back(x);
            stall = 0;
            if (double(net.size()) > card_bound)
                throw std::logic_error("greedy_net: packing bound (1+2/eps)^d violated");
        };

        if (const auto* v = std::get_if<VRep>(&b.rep)) {
            for (const auto& p : v->points) {
                if (stall >= stall_cap || used >= budget) break;
                ++used;
                try_insert(p);
            }
        }
        const auto dirs = sample_unit_sphere(d, budget, Seed{seed.value + attempt});
        for (const auto& c : dirs) {
            if (stall >= stall_cap || used >= budget) break;
            ++used;
            const double g = gauge(b, c);
            if (g <= 0.0 || !std::isfinite(g)) continue;
            try_insert((1.0 / g) * c);
        }

        NetResult res;
        res.points = net;
        res.eps = eps;
        res.candidates_used = used;
        const Body hull{VRep{net}, false};
        const std::size_t cert_dirs = std::max<std::size_t>(2000, 400 * d);
        res.cert = certify_sandwich(hull, b, cert_dirs, Seed{seed.value ^ 0xABCDULL}, 1e-9);
        if (res.cert.valid && res.cert.alpha <= target) return res;
        if (attempt == 3)
            throw std::runtime_error("greedy_net: outer factor " + std::to_string(res.cert.alpha) +
                                     " exceeds 1/(1-eps) after retries");
    }
    throw std::logic_error("greedy_net: unreachable");
}

double ball_net_lower_bound(std::size_t d, double alpha) {
    if (alpha < 1.0) throw std::invalid_argument("ball_net_lower_bound: alpha >= 1 required");
    return std::exp(double(d) / (2.0 * alpha * alpha));
}

namespace {

// Columns -> (orthonormal Q, upper-triangular R) with A = Q R; throws if
// the columns are dependent.
void qr_columns(const std::vector<Vector>& cols, std::vector<Vector>& q,
                std::vector<std::vector<double>>& r) {
    const std::size_t k = cols.size();
    q.clear();
    r.assign(k, std::vector<double>(k, 0.0));
    for (std::size_t j = 0; j < k; ++j) {
        Vector v = cols[j];
        for (std::size_t i = 0; i < j; ++i) {
            const double c = dot(v, q[i]);
            r[i][j] = c;
            for (std::size_t t = 0; t < v.size(); ++t) v[t] -= c * q[i][t];
        }
        const double nrm = norm2(v);
        if (nrm < 1e-10 * (1.0 + norm2(cols[j])))
            throw std::runtime_error("convert_rep: projection map is not surjective");
        r[j][j] = nrm;
        q.push_back((1.0 / nrm) * v);
    }
}

std::vector<std::vector<double>> upper_inverse(const std::vector<std::vector<double>>& r) {
    const std::size_t k = r.size();
    std::vector<std::vector<double>> inv(k, std::vector<double>(k, 0.0));
    for (std::size_t j = 0; j < k; ++j) {
        inv[j][j] = 1.0 / r[j][j];
        for (std::size_t i = j; i-- > 0;) {
            double s = 0.0;
            for (std::size_t t = i + 1; t <= j; ++t) s += r[i][t] * inv[t][j];
            inv[i][j] = -s / r[i][i];
        }
    }
    return inv;
}

ProjectedRep section_to_projection(const SectionedRep& s) {
    const std::size_t n = s.points.size();
    if (n == 0) throw std::invalid_argument("convert_rep: empty sectioned body");
    const std::size_t wdim = s.points[0].size();
    const std::size_t v = s.basis.size();

    ProjectedRep out;
    out.poly.dim = n;
    for (std::size_t j = 0; j < n; ++j) {
        LinearRow row;  // -lambda_j <= 0
        row.coeffs.assign(n, 0.0);
        row.coeffs[j] = -1.0;
        out.poly.ineq.push_back(std::move(row));
    }
    LinearRow sum;
    sum.coeffs.assign(n, 1.0);
    sum.rhs = 1.0;
    out.poly.eq.push_back(std::move(sum));
    // P lambda must stay in span(basis): residual rows vanish.
    for (std::size_t i = 0; i < wdim; ++i) {
        LinearRow row;
        row.coeffs.resize(n);
        double scale = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double resid = s.points[j][i];
            for (const auto& bas : s.basis) resid -= bas[i] * dot(bas, s.points[j]);
            row.coeffs[j] = resid;
            scale = std::max(scale, std::fabs(resid));
        }
        if (scale < 1e-13) continue;  // direction already in the span
        out.poly.eq.push_back(std::move(row));
    }
    out.map.rows = v;
    out.map.cols = n;
    out.map.a.assign(v * n, 0.0);
    for (std::size_t k = 0; k < v; ++k)
        for (std::size_t j = 0; j < n; ++j) out.map.at(k, j) = dot(s.basis[k], s.points[j]);
    return out;
}

// Eliminate equality rows of P and recentre so the zero fiber passes
// through an interior point: returns a pure-inequality polytope in
// reduced coordinates with rows normalized to a.u <= 1, plus the reduced
// map, such that map(P) is unchanged.
void reduce_projected(const HPolytope& p, const LinearMap& t, std::vector<Vector>& rows_out,
                      LinearMap& tmap_out) {
    const std::size_t wdim = p.dim;
    // Interior point of P on the zero fiber of t: max margin s.
    LinearProgram lp;
    lp.objective.assign(wdim + 1, 0.0);
    lp.objective[wdim] = 1.0;
    for (const auto& row : p.ineq) {
        LinearRow q;
        q.coeffs = row.coeffs;
        q.coeffs.push_back(norm2(row.coeffs));
        q.rhs = row.rhs;
        lp.ineq.push_back(std::move(q));
    }
    {
        LinearRow q;  // s <= 1 keeps the LP bounded
        q.coeffs.assign(wdim + 1, 0.0);
        q.coeffs[wdim] = 1.0;
        q.rhs = 1.0;
        lp.ineq.push_back(std::move(q));
    }
    for (const auto& row : p.eq) {
        LinearRow q;
        q.coeffs = row.coeffs;
        q.coeffs.push_back(0.0);
        q.rhs = row.rhs;
        lp.eq.push_back(std::move(q));
    }
    for (std::size_t i = 0; i < t.rows; ++i) {
        LinearRow q;
        q.coeffs.resize(wdim + 1, 0.0);
        for (std::size_t j = 0; j < wdim; ++j) q.coeffs[j] = t.at(i, j);
        lp.eq.push_back(std::move(q));
    }
    const LpResult res = lp_solve(lp);
    if (res.status != LpStatus::Optimal || res.value <= 1e-10)
        throw std::runtime_error("convert_rep: origin not interior to the projected body");
    Vector w0(res.point.begin(), res.point.begin() + wdim);

    // Null-space basis of the equality rows.
    std::vector<Vector> eqrows;
    for (const auto& row : p.eq) eqrows.push_back(row.coeffs);
    const auto eqspan = orthonormal_span(eqrows, 1e-11);
    std::vector<Vector> null_basis;
    for (std::size_t e = 0; e < wdim; ++e) {
        Vector cand(wdim, 0.0);
        cand[e] = 1.0;
        for (const auto& s : eqspan) {
            const double c = dot(cand, s);
            for (std::size_t i = 0; i < wdim; ++i) cand[i] -= c * s[i];
        }
        for (const auto& s : null_basis) {
            const double c = dot(cand, s);
            for (std::size_t i = 0; i < wdim; ++i) cand[i] -= c * s[i];
        }
        const double nrm = norm2(cand);
        if (nrm > 1e-9) null_basis.push_back((1.0 / nrm) * cand);
    }
    const std::size_t k = null_basis.size();

    rows_out.clear();
    for (const auto& row : p.ineq) {
        Vector a(k);
        for (std::size_t j = 0; j < k; ++j) a[j] = dot(row.coeffs, null_basis[j]);
        const double rhs = row.rhs - dot(row.coeffs, w0);
        const double anrm = norm2(a);
        if (anrm < 1e-12) {
            if (rhs < -1e-9) throw std::runtime_error("convert_rep: inconsistent reduction");
            continue;  // redundant after restriction
        }
        if (rhs <= 1e-12) throw std::runtime_error("convert_rep: interior margin lost in reduction");
        rows_out.push_back((1.0 / rhs) * a);
    }
    tmap_out.rows = t.rows;
    tmap_out.cols = k;
    tmap_out.a.assign(t.rows * k, 0.0);
    for (std::size_t i = 0; i < t.rows; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < wdim; ++c) s += t.at(i, c) * null_basis[j][c];
            tmap_out.at(i, j) = s;
        }
}

SectionedRep projection_to_section(const ProjectedRep& q) {
    // Step 1: pure-inequality reduction (P1, T1) with rows a_i.u <= 1.
    std::vector<Vector> rows1;
    LinearMap t1;
    reduce_projected(q.poly, q.map, rows1, t1);
    const std::size_t v = t1.rows;

    // Step 2: Q-polar as a preimage section {y : T1^T y in conv(rows1)}.
    std::vector<Vector> t1t_cols(v);  // columns of T1^T = rows of T1
    for (std::size_t i = 0; i < v; ++i) {
        Vector col(t1.cols);
        for (std::size_t j = 0; j < t1.cols; ++j) col[j] = t1.at(i, j);
        t1t_cols[i] = std::move(col);
    }
    std::vector<Vector> s1;
    std::vector<std::vector<double>> r1;
    qr_columns(t1t_cols, s1, r1);

    // Q-polar = R1^{-1} (section of conv(rows1) by span(s1)).
    SectionedRep polar_section{rows1, s1};
    ProjectedRep polar_proj = section_to_projection(polar_section);
    const auto r1inv = upper_inverse(r1);
    LinearMap composed;  // R1^{-1} righter after the section map
    composed.rows = v;
    composed.cols = polar_proj.map.cols;
    composed.a.assign(v * composed.cols, 0.0);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < composed.cols; ++j) {
            double s = 0.0;
            for (std::size_t m = 0; m < v; ++m) s += r1inv[i][m] * polar_proj.map.at(m, j);
            composed.at(i, j) = s;
        }

    // Step 3: reduce the polar's projection and polarize back.
    std::vector<Vector> rows2;
    LinearMap t2;
    reduce_projected(polar_proj.poly, composed, rows2, t2);

    std::vector<Vector> t2t_cols(v);
    for (std::size_t i = 0; i < v; ++i) {
        Vector col(t2.cols);
        for (std::size_t j = 0; j < t2.cols; ++j) col[j] = t2.at(i, j);
        t2t_cols[i] = std::move(col);
    }
    std::vector<Vector> s2;
    std::vector<std::vector<double>> r2;
    qr_columns(t2t_cols, s2, r2);
    const auto r2inv = upper_inverse(r2);

    // Q = {x : T2^T x in conv(rows2)} = {x : S2 (R2 x) in conv(rows2)}.
    // Rewrite as an orthonormal section by moving R2 into the hull:
    // A = S2 R2^{-1} S2^T + (I - S2 S2^T) maps S2 R2 z to S2 z.
    const std::size_t k2 = t2.cols;
    SectionedRep out;
    out.basis = s2;
    out.points.reserve(rows2.size());
    for (const auto& dpt : rows2) {
        // A d = S2 R2^{-1} (S2^T d) + d - S2 (S2^T d)
        Vector st(v);
        for (std::size_t i = 0; i < v; ++i) st[i] = dot(s2[i], dpt);
        Vector rs(v, 0.0);
        for (std::size_t i = 0; i < v; ++i)
            for (std::size_t j = 0; j < v; ++j) rs[i] += r2inv[i][j] * st[j];
        Vector res(k2, 0.0);
        for (std::size_t c = 0; c < k2; ++c) {
            double val = dpt[c];
            for (std::size_t i = 0; i < v; ++i) val += (rs[i] - st[i]) * s2[i][c];
            res[c] = val;
        }
        out.points.push_back(std::move(res));
    }
    return out;
}

}  // namespace

Body convert_rep(const Body& q) {
    if (const auto* s = std::get_if<SectionedRep>(&q.rep)) {
        return Body{section_to_projection(*s), q.symmetric};
    }
    if (const auto* p = std::get_if<ProjectedRep>(&q.rep)) {
        return Body{projection_to_section(*p), q.symmetric};
    }
    throw std::invalid_argument("convert_rep: body must be sectioned or projected");
}

Body combine(const Body& q1, const Body& q2, CombineMode mode) {
    const auto* p1 = std::get_if<ProjectedRep>(&q1.rep);
    const auto* p2 = std::get_if<ProjectedRep>(&q2.rep);
    if (p1 == nullptr || p2 == nullptr)
        throw std::invalid_argument("combine: both bodies must be projected");
    const std::size_t w1 = p1->poly.dim, w2 = p2->poly.dim;
    const std::size_t v1 = p1->map.rows, v2 = p2->map.rows;

    ProjectedRep out;
    out.poly.dim = w1 + w2;
    auto pad_row = [&](const LinearRow& r, bool first) {
        LinearRow q;
        q.coeffs.assign(w1 + w2, 0.0);
        for (std::size_t j = 0; j < r.coeffs.size(); ++j)
            q.coeffs[first ? j : w1 + j] = r.coeffs[j];
        q.rhs = r.rhs;
        return q;
    };
    for (const auto& r : p1->poly.ineq) out.poly.ineq.push_back(pad_row(r, true));
    for (const auto& r : p2->poly.ineq) out.poly.ineq.push_back(pad_row(r, false));
    for (const auto& r : p1->poly.eq) out.poly.eq.push_back(pad_row(r, true));
    for (const auto& r : p2->poly.eq) out.poly.eq.push_back(pad_row(r, false));

    if (mode == CombineMode::Intersect) {
        if (v1 != v2) throw std::invalid_argument("combine: intersect needs a common target space");
        // T1 x1 = T2 x2 rows.
        for (std::size_t i = 0; i < v1; ++i) {
            LinearRow r;
            r.coeffs.assign(w1 + w2, 0.0);
            for (std::size_t j = 0; j < w1; ++j) r.coeffs[j] = p1->map.at(i, j);
            for (std::size_t j = 0; j < w2; ++j) r.coeffs[w1 + j] = -p2->map.at(i, j);
            out.poly.eq.push_back(std::move(r));
        }
        out.map.rows = v1;
        out.map.cols = w1 + w2;
        out.map.a.assign(v1 * (w1 + w2), 0.0);
        for (std::size_t i = 0; i < v1; ++i)
            for (std::size_t j = 0; j < w1; ++j) out.map.at(i, j) = p1->map.at(i, j);
    } else {
        out.map.rows = v1 + v2;
        out.map.cols = w1 + w2;
        out.map.a.assign((v1 + v2) * (w1 + w2), 0.0);
        for (std::size_t i = 0; i < v1; ++i)
            for (std::size_t j = 0; j < w1; ++j) out.map.at(i, j) = p1->map.at(i, j);
        for (std::size_t i = 0; i < v2; ++i)
            for (std::size_t j = 0; j < w2; ++j) out.map.at(v1 + i, w1 + j) = p2->map.at(i, j);
    }
    return Body{out, q1.symmetric && q2.symmetric};
}

bool lift_member(const Vector& c, double alpha0, const LiftFamily& lf, double feastol) {
    const std::size_t nx = lf.base_points.size();
    if (nx == 0) throw std::invalid_argument("lift_member: empty base point set");
    Vector fvec(nx);
    double mean = 0.0;
    for (std::size_t i = 0; i < nx; ++i) {
        fvec[i] = dot(c, lf.base_points[i]) + alpha0;
        mean += fvec[i];
    }
    mean /= double(nx);
    if (std::fabs(mean - 1.0) > feastol * 100)
        throw std::invalid_argument("lift_member: affine slice violated (mean of f is not 1)");

    for (const auto& f : lf.family)
        if (f.empty()) throw std::invalid_argument("lift_member: empty subset in the family");

    // Conic combination: mu >= 0 with sum_F mu_F delta_F = fvec.
    const std::size_t nf = lf.family.size();
    LinearProgram lp;
    lp.objective.assign(nf, 0.0);
    for (std::size_t i = 0; i < nx; ++i) {
        LinearRow row;
        row.coeffs.assign(nf, 0.0);
        for (std::size_t j = 0; j < nf; ++j)
            for (std::size_t idx : lf.family[j])
                if (idx == i) row.coeffs[j] += 1.0;
        row.rhs = fvec[i];
        lp.eq.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < nf; ++j) {
        LinearRow row;
        row.coeffs.assign(nf, 0.0);
        row.coeffs[j] = -1.0;
        lp.ineq.push_back(std::move(row));
    }
    return lp_solve(lp, feastol).status == LpStatus::Optimal;
}

namespace {

double type2_ratio(const Body& b, const std::vector<Vector>& xs, double esum) {
    double denom = 0.0;
    for (const auto& x : xs) {
        const double g = gauge(b, x);
        denom += g * g;
    }
    if (denom <= 0.0) throw std::invalid_argument("type2: vectors have zero gauge");
    return std::sqrt(esum / denom);
}

}  // namespace

double type2_lower_exact(const Body& b, const std::vector<Vector>& xs) {
    const std::size_t m = xs.size();
    if (m == 0 || m > 20) throw std::invalid_argument("type2_lower_exact: 1 <= m <= 20 vectors");
    const std::size_t d = body_dim(b);
    // For symmetric bodies gauge(-v) = gauge(v): fix the first sign.
    const bool halve = b.symmetric;
    const std::size_t total = std::size_t{1} << (halve ? m - 1 : m);
    double esum = 0.0;
    for (std::size_t mask = 0; mask < total; ++mask) {
        Vector s(d, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            double sign;
            if (halve)
                sign = i == 0 ? 1.0 : (((mask >> (i - 1)) & 1) ? -1.0 : 1.0);
            else
                sign = ((mask >> i) & 1) ? -1.0 : 1.0;
            for (std::size_t t = 0; t < d; ++t) s[t] += sign * xs[i][t];
        }
        const double g = gauge(b, s);
        esum += g * g;
    }
    esum /= double(total);
    return type2_ratio(b, xs, esum);
}

double type2_lower_mc(const Body& b, const std::vector<Vector>& xs, std::size_t samples,
                      Seed seed) {
    const std::size_t m = xs.size();
    if (m == 0) throw std::invalid_argument("type2_lower_mc: empty vector list");
    const std::size_t d = body_dim(b);
    CounterRng rng(seed);
    double esum = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        Vector s(d, 0.0);
        const std::uint64_t bits = rng.word(k);
        for (std::size_t i = 0; i < m; ++i) {
            const double sign = ((bits >> (i % 64)) & 1) ? -1.0 : 1.0;
            for (std::size_t t = 0; t < d; ++t) s[t] += sign * xs[i][t];
        }
        const double g = gauge(b, s);
        esum += g * g;
    }
    esum /= double(samples);
    return type2_ratio(b, xs, esum);
}

}  // namespace cvx
