#include "cvx/softapprox.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace cvx {

namespace {

LinearMap invert_map(const LinearMap& t) {
    if (t.rows != t.cols) throw std::invalid_argument("build_soft: map must be square");
    const std::size_t n = t.rows;
    std::vector<double> a(n * 2 * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * 2 * n + j] = t.at(i, j);
        a[i * 2 * n + n + i] = 1.0;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(a[i * 2 * n + k]) > std::fabs(a[piv * 2 * n + k])) piv = i;
        if (std::fabs(a[piv * 2 * n + k]) < 1e-12)
            throw std::runtime_error("build_soft: map is singular");
        if (piv != k)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a[piv * 2 * n + j], a[k * 2 * n + j]);
        const double d = a[k * 2 * n + k];
        for (std::size_t j = 0; j < 2 * n; ++j) a[k * 2 * n + j] /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const double f = a[i * 2 * n + k];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) a[i * 2 * n + j] -= f * a[k * 2 * n + j];
        }
    }
    LinearMap inv;
    inv.rows = inv.cols = n;
    inv.a.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = a[i * 2 * n + n + j];
    return inv;
}

void enum_multisets(std::size_t n, std::size_t k, std::size_t start,
                    std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
    out.push_back(cur);
    if (cur.size() == k) return;
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        enum_multisets(n, k, i, cur, out);
        cur.pop_back();
    }
}

}  // namespace

double multiset_count(std::size_t n, std::size_t k) {
    double r = 1.0;
    for (std::size_t i = 0; i < k; ++i) r *= double(n + k - 1 - i) / double(k - i);
    // C(n+k-1, k) counts size-k multisets; summing 0..k telescopes to
    // C(n+k, k).
    double total = 0.0;
    for (std::size_t j = 0; j <= k; ++j) {
        double c = 1.0;
        for (std::size_t i = 0; i < j; ++i) c *= double(n + j - 1 - i) / double(j - i);
        total += c;
    }
    (void)r;
    return total;
}

double SoftPolytope::eval_generator(std::size_t gen, const Vector& x) const {
    const Vector w = tinv.apply(x);
    double prod = 1.0;
    for (std::size_t i : generators[gen]) prod *= 1.0 - dot(base[i].coeffs, w);
    return 1.0 - prod;
}

std::vector<Vector> sample_tp(const SoftPolytope& sp, std::size_t count, Seed seed) {
    const std::size_t d = sp.t.rows;
    CounterRng rng(seed);
    std::vector<Vector> out;
    out.reserve(count);
    Vector w(d, 0.0);
    std::uint64_t ctr = 0;
    const std::size_t thin = 4;
    for (std::size_t s = 0; s < count * thin; ++s) {
        // Random direction, chord through the row system, uniform step.
        Vector u(d);
        for (std::size_t i = 0; i < d; ++i) u[i] = rng.gaussian(ctr++);
        const double nrm = norm2(u);
        if (nrm < 1e-12) continue;
        for (double& c : u) c /= nrm;
        double tlo = -1e300, thi = 1e300;
        for (const auto& row : sp.base) {
            const double gu = dot(row.coeffs, u);
            const double slack = 1.0 - dot(row.coeffs, w);
            if (gu > 1e-14) thi = std::min(thi, slack / gu);
            else if (gu < -1e-14) tlo = std::max(tlo, slack / gu);
        }
        if (!(thi > tlo)) continue;
        const double step = tlo + (thi - tlo) * rng.uniform(ctr++);
        for (std::size_t i = 0; i < d; ++i) w[i] += step * u[i];
        if (s % thin == thin - 1) out.push_back(sp.t.apply(w));
    }
    return out;
}

SoftPolytope build_soft(const HRep& p, const LinearMap& t, std::size_t k,
                        std::size_t check_samples, Seed seed) {
    if (k < 1) throw std::invalid_argument("build_soft: k >= 1");
    if (!p.eq.empty()) throw std::invalid_argument("build_soft: base polytope must be pure inequalities");
    SoftPolytope sp;
    for (const auto& row : p.ineq) {
        if (row.rhs <= 0.0) throw std::invalid_argument("build_soft: origin not interior to P");
        sp.base.push_back(LinearRow{(1.0 / row.rhs) * row.coeffs, 1.0});
    }
    const std::size_t n = sp.base.size();
    if (multiset_count(n, k) > 1e5) throw std::invalid_argument("build_soft: generator cap exceeded");
    sp.t = t;
    sp.tinv = invert_map(t);
    sp.k = k;
    std::vector<std::size_t> cur;
    enum_multisets(n, k, 0, cur, sp.generators);

    // Boundedness of P (so that g_I <= 1 on it is meaningful) and the
    // uniform bound itself, on sampled points.
    const auto samples = sample_tp(sp, check_samples, seed);
    for (const auto& x : samples)
        for (std::size_t g = 0; g < sp.generators.size(); ++g)
            if (sp.eval_generator(g, x) > 1.0 + 1e-9)
                throw std::runtime_error("build_soft: generator exceeds 1 on T(P)");
    return sp;
}

double ApproximantResult::evaluate(const SoftPolytope& sp, const Vector& x) const {
    double h = 0.0;
    for (std::size_t g = 0; g < weights.size(); ++g) {
        if (weights[g] == 0.0) continue;
        h += weights[g] * sp.eval_generator(g, x);
    }
    return h;
}

namespace {

// Multinomial expansion of (q0 * 1 + sum_i mu_i (1 - g_i))^k: each
// multiset of letters {const, g_0..g_{n-1}} with total multiplicity k
// contributes multinomial(k; counts) * q0^c * prod mu_i^{m_i} to the
// generator indexed by its non-const part. `slots_used` carries the
// incremental multinomial coefficient.
void expand(std::size_t n, std::size_t k, std::size_t letter, std::size_t remaining,
            double weight, std::size_t slots_used, double q0, const Vector& mu,
            std::vector<std::size_t>& cur,
            const std::map<std::vector<std::size_t>, std::size_t>& index, Vector& out) {
    if (letter == n) {
        // The rest of the budget goes to the constant letter.
        double w = weight;
        std::size_t used = slots_used;
        for (std::size_t i = 1; i <= remaining; ++i) {
            ++used;
            w *= q0 * double(used) / double(i);
        }
        out[index.at(cur)] += w;
        return;
    }
    for (std::size_t mult = 0; mult <= remaining; ++mult) {
        double w = weight;
        std::size_t used = slots_used;
        for (std::size_t i = 1; i <= mult; ++i) {
            ++used;
            w *= mu[letter] * double(used) / double(i);
        }
        if (w != 0.0 || mult == 0) {
            for (std::size_t i = 0; i < mult; ++i) cur.push_back(letter);
            expand(n, k, letter + 1, remaining - mult, w, used, q0, mu, cur, index, out);
            for (std::size_t i = 0; i < mult; ++i) cur.pop_back();
        }
    }
}

}  // namespace

ApproximantResult approximant(const SoftPolytope& sp, const Vector& ell,
                              const std::vector<Vector>& b_samples) {
    const std::size_t n = sp.base.size();
    const std::size_t k = sp.k;
    const Vector fvec = sp.t.apply_transpose(ell);  // f(w) = <fvec, w>

    // (5.1.1)-style bound: f <= k on P, by LP support.
    LinearProgram sup;
    sup.objective = fvec;
    sup.ineq = sp.base;
    const LpResult sres = lp_solve(sup);
    if (sres.status != LpStatus::Optimal)
        throw std::runtime_error("approximant: support LP failed on P");
    if (sres.value > double(k) * (1.0 + 1e-9))
        throw std::invalid_argument("approximant: functional exceeds k on P (not in the polar)");

    // f/k in conv(0, g_i): mu >= 0, sum mu <= 1, sum mu_i g_i = f/k.
    LinearProgram conv;
    conv.objective.assign(n, 0.0);
    for (std::size_t c = 0; c < sp.t.rows; ++c) {
        LinearRow row;
        row.coeffs.resize(n);
        for (std::size_t i = 0; i < n; ++i) row.coeffs[i] = sp.base[i].coeffs[c];
        row.rhs = fvec[c] / double(k);
        conv.eq.push_back(std::move(row));
    }
    LinearRow sum;
    sum.coeffs.assign(n, 1.0);
    sum.rhs = 1.0;
    conv.ineq.push_back(std::move(sum));
    for (std::size_t i = 0; i < n; ++i) {
        LinearRow row;
        row.coeffs.assign(n, 0.0);
        row.coeffs[i] = -1.0;
        conv.ineq.push_back(std::move(row));
    }
    const LpResult cres = lp_solve(conv);
    if (cres.status != LpStatus::Optimal)
        throw std::runtime_error("approximant: f/k is not in conv(0, g_i)");
    Vector mu = cres.point;
    double mu_sum = 0.0;
    for (double& m : mu) {
        m = std::max(m, 0.0);
        mu_sum += m;
    }
    const double q0 = std::max(0.0, 1.0 - mu_sum);

    // Multinomial expansion of F = 1 - (1 - f/k)^k over the generators.
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t g = 0; g < sp.generators.size(); ++g) index[sp.generators[g]] = g;
    ApproximantResult res;
    res.weights.assign(sp.generators.size(), 0.0);
    std::vector<std::size_t> cur;
    expand(n, k, 0, k, 1.0, 0, q0, mu, cur, index, res.weights);
    // The weights of (1 - f/k)^k sum to 1; F = sum w_I (1 - (1-g_I)) with
    // h_emptyset = 0 keeps the convex combination intact.

    for (const auto& x : b_samples) {
        const double lx = dot(ell, x);
        if (std::fabs(lx) < 1e-9) continue;
        const double hx = res.evaluate(sp, x);
        res.sup_ratio = std::max(res.sup_ratio, std::fabs(lx - hx) / (lx * lx));
    }
    if (res.sup_ratio > 1.0 + 1e-9)
        throw std::logic_error("approximant: quadratic error ratio exceeded gamma = 1");
    return res;
}

AcceptDecision accept_test(const SoftPolytope& sp, const Vector& ell, double eps,
                           const std::vector<Vector>& b_samples,
                           const Vector* initial_weights) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("accept_test: 0 < eps < 1");
    const std::size_t m = b_samples.size();
    if (m == 0) throw std::invalid_argument("accept_test: empty sample measure");
    const std::size_t ng = sp.generators.size();

    // Precompute generator values on the sample.
    std::vector<Vector> gvals(m, Vector(ng));
    Vector lvals(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t g = 0; g < ng; ++g) gvals[j][g] = sp.eval_generator(g, b_samples[j]);
        lvals[j] = dot(ell, b_samples[j]);
    }

    AcceptDecision dec;
    dec.weights.assign(ng, 0.0);
    if (initial_weights != nullptr) {
        if (initial_weights->size() != ng)
            throw std::invalid_argument("accept_test: warm start has the wrong size");
        dec.weights = *initial_weights;
    }
    Vector hx(m, 0.0);  // current G theta
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t g = 0; g < ng; ++g) hx[j] += dec.weights[g] * gvals[j][g];

    double ln = 0.0;
    for (std::size_t j = 0; j < m; ++j) ln += lvals[j] * lvals[j];
    dec.ell_norm = std::sqrt(ln / double(m));
    const double threshold = eps * dec.ell_norm;

    auto objective = [&]() {
        double o = 0.0;
        for (std::size_t j = 0; j < m; ++j) o += (hx[j] - lvals[j]) * (hx[j] - lvals[j]);
        return o / double(m);
    };
    double obj = objective();

    const long max_iter = 20000;
    for (long it = 0; it < max_iter; ++it) {
        dec.residual_trace.push_back(std::sqrt(obj));
        // Early certified accept.
        if (obj <= threshold * threshold) break;

        // Gradient over theta_g: (2/m) sum_j gvals[j][g] * res_j.
        Vector grad(ng, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
            const double r = 2.0 * (hx[j] - lvals[j]) / double(m);
            if (r == 0.0) continue;
            for (std::size_t g = 0; g < ng; ++g) grad[g] += r * gvals[j][g];
        }
        // Linear minimization over conv(0, e_g).
        std::size_t best = ng;  // ng encodes the origin vertex
        double bestval = 0.0;
        for (std::size_t g = 0; g < ng; ++g)
            if (grad[g] < bestval) {
                bestval = grad[g];
                best = g;
            }
        // Frank-Wolfe gap upper-bounds obj - optimum, so obj - gap is a
        // certified lower bound on the optimum: reject once it clears the
        // threshold.
        double gap = -bestval;
        for (std::size_t g = 0; g < ng; ++g) gap += grad[g] * dec.weights[g];
        if (obj - gap > threshold * threshold) break;
        if (gap <= 1e-6 * (obj + 1e-12) || gap <= 1e-14) break;

        // Direction d = s - theta; exact quadratic line search.
        Vector gd(m, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
            double s = best < ng ? gvals[j][best] : 0.0;
            gd[j] = s - hx[j];
        }
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            num -= (hx[j] - lvals[j]) * gd[j];
            den += gd[j] * gd[j];
        }
        if (den <= 0.0) break;
        const double gamma = std::clamp(num / den, 0.0, 1.0);
        if (gamma == 0.0) break;
        for (std::size_t g = 0; g < ng; ++g) dec.weights[g] *= (1.0 - gamma);
        if (best < ng) dec.weights[best] += gamma;
        for (std::size_t j = 0; j < m; ++j) hx[j] += gamma * gd[j];
        obj = objective();
    }

    dec.distance = std::sqrt(obj);
    dec.accept = dec.distance <= threshold + 1e-12;
    return dec;
}

double fiber_average_generator(const HPolytope& p, const LinearMap& t,
                               const std::vector<std::size_t>& multiset, const Vector& x,
                               std::size_t samples, Seed seed) {
    const std::size_t wdim = p.dim;
    for (const auto& row : p.ineq)
        if (std::fabs(row.rhs - 1.0) > 1e-12)
            throw std::invalid_argument("fiber_average: rows must be normalized to g.w <= 1");

    // Interior point of the fiber by a margin LP.
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
        LinearRow cap;
        cap.coeffs.assign(wdim + 1, 0.0);
        cap.coeffs[wdim] = 1.0;
        cap.rhs = 1.0;
        lp.ineq.push_back(std::move(cap));
    }
    auto push_eq = [&](const Vector& coeffs, double rhs) {
        LinearRow q;
        q.coeffs = coeffs;
        q.coeffs.push_back(0.0);
        q.rhs = rhs;
        lp.eq.push_back(std::move(q));
    };
    for (const auto& row : p.eq) push_eq(row.coeffs, row.rhs);
    for (std::size_t i = 0; i < t.rows; ++i) {
        Vector c(wdim);
        for (std::size_t j = 0; j < wdim; ++j) c[j] = t.at(i, j);
        push_eq(c, x[i]);
    }
    const LpResult res = lp_solve(lp);
    if (res.status != LpStatus::Optimal || res.value < -1e-9)
        throw std::runtime_error("fiber_average: empty fiber (x is outside T(P))");
    const Vector w0(res.point.begin(), res.point.begin() + wdim);

    auto eval = [&](const Vector& w) {
        double prod = 1.0;
        for (std::size_t i : multiset) prod *= 1.0 - dot(p.ineq[i].coeffs, w);
        return 1.0 - prod;
    };

    // Null basis of the combined equality system spans the fiber.
    std::vector<Vector> eqrows;
    for (const auto& row : p.eq) eqrows.push_back(row.coeffs);
    for (std::size_t i = 0; i < t.rows; ++i) {
        Vector c(wdim);
        for (std::size_t j = 0; j < wdim; ++j) c[j] = t.at(i, j);
        eqrows.push_back(std::move(c));
    }
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
        if (norm2(cand) > 1e-9) null_basis.push_back((1.0 / norm2(cand)) * cand);
    }
    if (null_basis.empty() || res.value <= 1e-10) return eval(w0);  // point fiber

    CounterRng rng(seed);
    Vector u(null_basis.size(), 0.0);  // fiber coordinates around w0
    auto to_w = [&](const Vector& uu) {
        Vector w = w0;
        for (std::size_t b = 0; b < null_basis.size(); ++b)
            for (std::size_t i = 0; i < wdim; ++i) w[i] += uu[b] * null_basis[b][i];
        return w;
    };

    double total = 0.0;
    std::size_t taken = 0;
    std::uint64_t ctr = 0;
    const std::size_t thin = 4;
    for (std::size_t s = 0; taken < samples; ++s) {
        Vector dir(null_basis.size());
        for (double& c : dir) c = rng.gaussian(ctr++);
        const double nrm = norm2(dir);
        if (nrm < 1e-12) continue;
        for (double& c : dir) c /= nrm;
        const Vector w = to_w(u);
        double tlo = -1e300, thi = 1e300;
        for (const auto& row : p.ineq) {
            double gdir = 0.0;
            for (std::size_t b = 0; b < null_basis.size(); ++b)
                gdir += dir[b] * dot(row.coeffs, null_basis[b]);
            const double slack = row.rhs - dot(row.coeffs, w);
            if (gdir > 1e-14) thi = std::min(thi, slack / gdir);
            else if (gdir < -1e-14) tlo = std::max(tlo, slack / gdir);
        }
        if (!(thi > tlo)) continue;
        const double step = tlo + (thi - tlo) * rng.uniform(ctr++);
        for (std::size_t b = 0; b < null_basis.size(); ++b) u[b] += step * dir[b];
        if (s % thin == thin - 1) {
            total += eval(to_w(u));
            ++taken;
        }
    }
    return total / double(samples);
}

}  // namespace cvx
