#include "cvx/sdprelax.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cvx {

bool cut_relax_member(const SymMatrix& x, double tol) {
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (std::fabs(x(i, i) - 1.0) > tol)
            throw std::invalid_argument("cut_relax_member: diagonal entry differs from 1");
    return is_psd(x, tol);
}

bool cut_brute_member(const SymMatrix& x, int n, double feastol) {
    if (n < 2 || n > 10) throw std::invalid_argument("cut_brute_member: 2 <= n <= 10");
    if (x.dim() != static_cast<std::size_t>(n))
        throw std::invalid_argument("cut_brute_member: dimension mismatch");
    const auto vertices = make_cut_vertices(n);
    std::vector<Vector> flat;
    flat.reserve(vertices.size());
    for (const auto& v : vertices) flat.push_back(flatten_matrix(v));
    return member_vrep(flatten_matrix(x), flat, feastol);
}

double cut_ratio(int n, std::size_t n_samples, Seed seed, double feastol, double bisect_tol) {
    if (n < 2 || n > 6) throw std::invalid_argument("cut_ratio: 2 <= n <= 6");
    CounterRng rng(seed);
    const std::size_t offdiag = static_cast<std::size_t>(n) * (n - 1) / 2;
    double worst = 1.0;
    for (std::size_t s = 0; s < n_samples; ++s) {
        // Random unit-diagonal direction, pushed to the PSD boundary:
        // R = (1-t) I + t S has min eigenvalue 0 at t = 1/(1 - lambda_min).
        SymMatrix sdir(n);
        std::size_t ctr = s * offdiag;
        for (int i = 0; i < n; ++i) {
            sdir.set(i, i, 1.0);
            for (int j = i + 1; j < n; ++j) sdir.set(i, j, 2.0 * rng.uniform(ctr++) - 1.0);
        }
        const auto eig = sym_eigen(sdir, 1e-12);
        const double lmin = eig.values.back();
        if (lmin > 1.0 - 1e-9) continue;  // essentially the identity
        const double t = 1.0 / (1.0 - lmin);
        SymMatrix r(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                r.set(i, j, (1.0 - t) * (i == j ? 1.0 : 0.0) + t * sdir(i, j));

        // Smallest shrink factor that lands inside CUT_n.
        auto inside = [&](double factor) {
            SymMatrix m(n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j)
                    m.set(i, j, (i == j ? 1.0 : 0.0) + (r(i, j) - (i == j ? 1.0 : 0.0)) / factor);
            return cut_brute_member(m, n, feastol);
        };
        double hi = 1.0;
        while (!inside(hi)) {
            hi *= 2.0;
            if (hi > 64.0) break;
        }
        if (hi > 64.0) continue;
        double lo = hi > 1.0 ? hi / 2.0 : 1.0;
        if (hi == 1.0) {
            worst = std::max(worst, 1.0);
            continue;
        }
        while (hi - lo > bisect_tol) {
            const double mid = 0.5 * (lo + hi);
            (inside(mid) ? hi : lo) = mid;
        }
        worst = std::max(worst, hi);
    }
    return worst;
}

QMemberResult q_member(const std::vector<double>& x_rowmajor, int n, double tol, long iter_cap) {
    if (n < 1 || n > 20) throw std::invalid_argument("q_member: 1 <= n <= 20");
    if (x_rowmajor.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("q_member: corner matrix size mismatch");
    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t big = 2 * nn;

    QMemberResult res;
    // 2x2 principal minors force |entries| <= 1: a certified rejection.
    for (double v : x_rowmajor)
        if (std::fabs(v) > 1.0 + tol) {
            res.status = QStatus::Infeasible;
            return res;
        }

    auto corner_at = [&](std::size_t i, std::size_t j) { return x_rowmajor[i * nn + j]; };

    // Closed-form witnesses before iterating: the identity completion
    // works whenever the corner has spectral norm at most 1, and a sign
    // outer product x (x) y completes to (x;y)(x;y)^T exactly.
    {
        SymMatrix cand(big);
        for (std::size_t i = 0; i < big; ++i) cand.set(i, i, 1.0);
        for (std::size_t i = 0; i < nn; ++i)
            for (std::size_t j = 0; j < nn; ++j) cand.set(i, nn + j, corner_at(i, j));
        if (is_psd(cand, tol)) {
            res.status = QStatus::Feasible;
            res.witness = cand;
            return res;
        }
    }
    {
        bool sign_matrix = true;
        for (double v : x_rowmajor) sign_matrix = sign_matrix && std::fabs(std::fabs(v) - 1.0) <= tol;
        bool rank1 = sign_matrix;
        for (std::size_t i = 0; i < nn && rank1; ++i)
            for (std::size_t j = 0; j < nn && rank1; ++j)
                rank1 = std::fabs(corner_at(i, j) * corner_at(0, 0) -
                                  corner_at(i, 0) * corner_at(0, j)) <= tol;
        if (rank1) {
            Vector z(big);
            for (std::size_t i = 0; i < nn; ++i) z[i] = corner_at(i, 0) * corner_at(0, 0);
            for (std::size_t j = 0; j < nn; ++j) z[nn + j] = corner_at(0, j);
            SymMatrix cand = SymMatrix::outer(z);
            bool matches = true;
            for (std::size_t i = 0; i < nn && matches; ++i)
                for (std::size_t j = 0; j < nn && matches; ++j)
                    matches = std::fabs(cand(i, nn + j) - corner_at(i, j)) <= tol;
            if (matches) {
                res.status = QStatus::Feasible;
                res.witness = cand;
                return res;
            }
        }
    }

    auto project_affine = [&](SymMatrix& m) {
        for (std::size_t i = 0; i < big; ++i) m.set(i, i, 1.0);
        for (std::size_t i = 0; i < nn; ++i)
            for (std::size_t j = 0; j < nn; ++j) m.set(i, nn + j, x_rowmajor[i * nn + j]);
    };

    SymMatrix m(big);
    project_affine(m);
    SymMatrix corr(big);  // Dykstra correction for the cone step

    double residual = 1e300;
    double plateau_ref = 1e300;
    long plateau_at = 0;
    for (long it = 0; it < iter_cap; ++it) {
        // PSD projection of (m + corr).
        SymMatrix shifted(big);
        for (std::size_t i = 0; i < big; ++i)
            for (std::size_t j = i; j < big; ++j) shifted.set(i, j, m(i, j) + corr(i, j));
        const auto eig = sym_eigen(shifted, 1e-12);
        SymMatrix psd(big);
        for (std::size_t k = 0; k < big; ++k) {
            if (eig.values[k] <= 0.0) continue;
            for (std::size_t i = 0; i < big; ++i)
                for (std::size_t j = i; j < big; ++j)
                    psd.add(i, j, eig.values[k] * eig.vectors[k][i] * eig.vectors[k][j]);
        }
        for (std::size_t i = 0; i < big; ++i)
            for (std::size_t j = i; j < big; ++j)
                corr.set(i, j, shifted(i, j) - psd(i, j));

        // Affine projection (plain overwrite: the constraints fix entries).
        SymMatrix next = psd;
        project_affine(next);

        residual = 0.0;
        for (std::size_t i = 0; i < big; ++i)
            for (std::size_t j = i; j < big; ++j)
                residual = std::max(residual, std::fabs(next(i, j) - psd(i, j)));
        m = next;
        res.iterations = it + 1;

        if (residual <= tol) {
            // The affine iterate is exact on the slice; certify the cone
            // side with the eigenvalue check.
            res.status = is_psd(m, 10.0 * tol) ? QStatus::Feasible : QStatus::Undetermined;
            if (res.status == QStatus::Feasible) res.witness = m;
            res.residual = residual;
            return res;
        }
        if (it % 500 == 499) {
            if (residual > plateau_ref * 0.999) {
                res.status = QStatus::Undetermined;
                res.residual = residual;
                (void)plateau_at;
                return res;
            }
            plateau_ref = residual;
            plateau_at = it;
        }
    }
    res.status = QStatus::Undetermined;
    res.residual = residual;
    return res;
}

namespace {

void enum_upto(std::size_t d, std::size_t k, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == d) {
        out.push_back(cur);
        return;
    }
    std::size_t used = 0;
    for (std::size_t e : cur) used += e;
    for (std::size_t e = 0; e + used <= k; ++e) {
        cur.push_back(e);
        enum_upto(d, k, cur, out);
        cur.pop_back();
    }
}

double mono_eval(const std::vector<std::size_t>& alpha, const Vector& x) {
    double r = 1.0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t e = 0; e < alpha[i]; ++e) r *= x[i];
    return r;
}

}  // namespace

QvForm build_qv(const EmpiricalMeasure& mu, std::size_t k, const Vector& v) {
    if (mu.atoms.empty()) throw std::invalid_argument("build_qv: empty measure");
    const std::size_t d = mu.atoms[0].size();
    QvForm out;
    out.v = v;
    std::vector<std::size_t> cur;
    enum_upto(d, k, cur, out.basis);
    const std::size_t nb = out.basis.size();
    if (nb > 200) throw std::invalid_argument("build_qv: monomial basis above 200");

    // Cache monomial values per atom.
    std::vector<Vector> mvals(mu.atoms.size(), Vector(nb));
    for (std::size_t i = 0; i < mu.atoms.size(); ++i)
        for (std::size_t a = 0; a < nb; ++a) mvals[i][a] = mono_eval(out.basis[a], mu.atoms[i]);

    // Degeneracy: the atoms must span the dual space; the higher-degree
    // moment matrix is allowed to be singular (PSD with a kernel).
    std::vector<Vector> active;
    for (std::size_t i = 0; i < mu.atoms.size(); ++i)
        if (mu.weights[i] > 0.0) active.push_back(mu.atoms[i]);
    if (orthonormal_span(active).size() < d)
        throw std::runtime_error("build_qv: degenerate moment matrix (atoms do not span the dual)");

    out.gram = SymMatrix(nb);
    for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
        const double w = mu.weights[i];
        if (w == 0.0) continue;
        const double lead = w * (1.0 - dot(mu.atoms[i], v));
        for (std::size_t a = 0; a < nb; ++a)
            for (std::size_t b = a; b < nb; ++b)
                out.gram.add(a, b, lead * mvals[i][a] * mvals[i][b]);
    }
    return out;
}

bool qv_certify(const EmpiricalMeasure& mu, std::size_t k, const Vector& v, double tol) {
    return is_psd(build_qv(mu, k, v).gram, tol);
}

}  // namespace cvx
