#include "cvx/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "cvx/bodies.hpp"
#include "cvx/ellipsoid.hpp"
#include "cvx/polyapprox.hpp"
#include "cvx/polynorm.hpp"
#include "cvx/sdprelax.hpp"
#include "cvx/socone.hpp"
#include "cvx/softapprox.hpp"

namespace cvx {

namespace {

using Clock = std::chrono::steady_clock;

struct RowTimer {
    Clock::time_point start = Clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    }
};

double param(const ExperimentConfig& cfg, const std::string& key, double dflt) {
    const auto it = cfg.params.find(key);
    return it == cfg.params.end() ? dflt : it->second;
}

ReportRow row(const ExperimentConfig& cfg, std::string instance, std::string metric, double value,
              double bound, bool pass, const RowTimer& t) {
    ReportRow r;
    r.experiment = cfg.name;
    r.instance = std::move(instance);
    r.metric = std::move(metric);
    r.value = value;
    r.bound = bound;
    r.pass = pass;
    r.seed = cfg.seed;
    r.tol = cfg.tol;
    r.runtime_ms = t.ms();
    return r;
}

// ---- suite: john-cube -------------------------------------------------

Report suite_john_cube(const ExperimentConfig& cfg) {
    Report rep;
    const int dmin = int(param(cfg, "dmin", 2));
    const int dmax = int(param(cfg, "dmax", 6));
    for (int d = dmin; d <= dmax; ++d) {
        RowTimer t;
        const Body cube = make_cube_vrep(std::size_t(d));
        const Ellipsoid e = john_inner_symmetric(cube, 1e-7);
        const auto cert =
            certify_sandwich(Body{e, true}, cube, 128, Seed{cfg.seed + std::uint64_t(d)}, cfg.tol);
        const double target = std::sqrt(double(d));
        const bool pass = cert.valid && std::fabs(cert.alpha - target) <= 1e-3;
        rep.rows.push_back(
            row(cfg, "cube-d" + std::to_string(d), "certified-alpha", cert.alpha, target, pass, t));
    }
    return rep;
}

// ---- suite: tsp-ellipsoid ---------------------------------------------

Report suite_tsp(const ExperimentConfig& cfg) {
    Report rep;
    for (int n : {5, 6}) {
        RowTimer t;
        const TspBody tsp = make_tsp(n);
        const Ellipsoid ball = tsp_inscribed_ball(tsp);
        const auto cert = certify_sandwich(Body{ball, false}, tsp.body, std::size_t(param(cfg, "dirs", 200)),
                                           Seed{cfg.seed + std::uint64_t(n)}, cfg.tol);
        const double bound = double(n - 3) * std::sqrt(double(n)) / 2.0 + 1e-3;
        rep.rows.push_back(row(cfg, "tsp-n" + std::to_string(n), "certified-alpha", cert.alpha,
                               bound, cert.valid && cert.alpha <= bound, t));
        if (n == 5) {
            // Cross-check: facet enumeration + polar MVEE reproduces the ball.
            RowTimer t2;
            const Ellipsoid via = inscribed_via_polar(tsp.body, 1e-8);
            double maxdiff = 0.0;
            for (std::size_t i = 0; i < tsp.dim; ++i)
                for (std::size_t j = i; j < tsp.dim; ++j)
                    maxdiff = std::max(maxdiff, std::fabs(via.form(i, j) - ball.form(i, j)));
            rep.rows.push_back(row(cfg, "tsp-n5-polar-pipeline", "certified-form-gap", maxdiff,
                                   1e-4, maxdiff <= 1e-4, t2));
        }
    }
    return rep;
}

// ---- suite: net-bounds -------------------------------------------------

Report suite_net(const ExperimentConfig& cfg) {
    Report rep;
    for (std::size_t d : {2u, 3u}) {
        for (double eps : {0.5, 0.25}) {
            RowTimer t;
            const std::size_t candidates = d == 2 ? 2000 : 6000;
            const auto net = greedy_net(make_ball(d), eps, candidates, 300,
                                        Seed{cfg.seed + d * 10 + std::uint64_t(eps * 100)});
            const std::string inst =
                "ball-d" + std::to_string(d) + "-eps" + std::to_string(int(eps * 100));
            const double card_bound = std::pow(1.0 + 2.0 / eps, double(d));
            rep.rows.push_back(row(cfg, inst, "certified-cardinality", double(net.points.size()),
                                   card_bound, double(net.points.size()) <= card_bound, t));
            const double factor_bound = 1.0 / (1.0 - eps) + 1e-3;
            rep.rows.push_back(row(cfg, inst, "sampled-alpha", net.cert.alpha, factor_bound,
                                   net.cert.valid && net.cert.alpha <= factor_bound, t));
            const double lower = ball_net_lower_bound(d, net.cert.alpha);
            rep.rows.push_back(row(cfg, inst, "certified-lower-bound-consistency",
                                   double(net.points.size()), lower,
                                   double(net.points.size()) >= lower, t));
        }
    }
    return rep;
}

// ---- suite: bn-gadget --------------------------------------------------

double bn_outer_error(const Body& b, int angles) {
    double worst = 0.0;
    for (int k = 0; k < angles; ++k) {
        const double th = 2.0 * M_PI * (k + 0.25) / angles;
        worst = std::max(worst, support(b, {std::cos(th), std::sin(th)}));
    }
    return worst - 1.0;
}

Report suite_bn(const ExperimentConfig& cfg) {
    Report rep;
    double prev = -1.0;
    const int angles = int(param(cfg, "angles", 720));
    for (int m = 4; m <= 10; ++m) {
        RowTimer t;
        const Body b = ball_bn(2, m);
        const double err = bn_outer_error(b, angles);
        const std::string inst = "d2-m" + std::to_string(m);
        if (prev > 0.0)
            rep.rows.push_back(
                row(cfg, inst, "sampled-decay-ratio", err / prev, 0.5, err <= 0.5 * prev, t));
        if (m == 6)
            rep.rows.push_back(row(cfg, inst, "sampled-outer-error", err, 2e-3, err <= 2e-3, t));
        prev = err;
    }
    {
        RowTimer t;
        const Body b4 = ball_bn(4, 6);
        const std::size_t facets = ball_bn_facets(b4);
        rep.rows.push_back(
            row(cfg, "d4-m6", "certified-facets", double(facets), 72.0, facets <= 72, t));
        const auto dirs = sample_unit_sphere(4, std::size_t(param(cfg, "boundary", 1000)),
                                             Seed{cfg.seed + 44});
        int violations = 0;
        for (const auto& c : dirs)
            if (!membership(b4, c, 1e-7)) ++violations;
        rep.rows.push_back(row(cfg, "d4-m6", "certified-inner-violations", double(violations), 0.0,
                               violations == 0, t));
    }
    return rep;
}

// ---- suite: tensor-lift -------------------------------------------------

Report suite_tensor(const ExperimentConfig& cfg) {
    Report rep;
    {
        RowTimer t;
        const auto cube = make_cube_vrep(3);
        const auto s = tensor_lift(std::get<VRep>(cube.rep).points, 2, 1e-7);
        const auto dirs =
            sample_unit_sphere(3, std::size_t(param(cfg, "dirs", 10000)), Seed{cfg.seed + 5});
        double lo = 1e300, hi = 0.0;
        for (const auto& v : dirs) {
            const double gauge_o3 = std::fabs(v[0]) + std::fabs(v[1]) + std::fabs(v[2]);
            const double ratio = gauge_o3 / s.norm_estimate(v);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        const double upper = alpha_bound(3, 2) * 1.01;
        rep.rows.push_back(row(cfg, "o3-k2", "sampled-ratio-min", lo, 1.0 - 1e-9, lo >= 1.0 - 1e-9, t));
        rep.rows.push_back(row(cfg, "o3-k2", "sampled-ratio-max", hi, upper, hi <= upper, t));
    }
    for (std::size_t k : {1u, 2u, 3u}) {
        RowTimer t;
        const auto s = tensor_lift({{1.0}, {-1.0}}, k, 1e-9);
        rep.rows.push_back(row(cfg, "interval-k" + std::to_string(k), "certified-factor", s.factor,
                               1.0 + 1e-6, s.factor <= 1.0 + 1e-6, t));
    }
    return rep;
}

// ---- suite: power-norm ---------------------------------------------------

Report suite_power(const ExperimentConfig& cfg) {
    Report rep;
    RowTimer t;
    const auto p = power_sum_norm(4, 2);
    const Body cube = make_cube(4);
    const auto dirs =
        sample_unit_sphere(4, std::size_t(param(cfg, "dirs", 10000)), Seed{cfg.seed + 6});
    double lo = 1e300, hi = 0.0;
    for (const auto& v : dirs) {
        const double ratio = p.norm_estimate(v) / gauge(cube, v);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    const double dpow = std::pow(4.0, 0.25);
    rep.rows.push_back(row(cfg, "cube-d4-k2", "sampled-ratio-min", lo, 1.0, lo >= 1.0 - 1e-12, t));
    rep.rows.push_back(row(cfg, "cube-d4-k2", "sampled-ratio-max", hi, dpow, hi <= dpow + 1e-12, t));
    const Vector ones(4, 1.0);
    const double worst = p.norm_estimate(ones) / gauge(cube, ones);
    rep.rows.push_back(row(cfg, "cube-d4-k2", "certified-worst-direction", worst, dpow,
                           std::fabs(worst - dpow) <= 1e-9, t));
    return rep;
}

// ---- suite: cut-ratio ----------------------------------------------------

Report suite_cut(const ExperimentConfig& cfg) {
    Report rep;
    {
        RowTimer t;
        const double r = cut_ratio(2, std::size_t(param(cfg, "samples2", 30)), Seed{cfg.seed + 7},
                                   cfg.feastol);
        rep.rows.push_back(
            row(cfg, "cut-n2", "sampled-ratio-lower-bound", r, 1.0, std::fabs(r - 1.0) <= 1e-6, t));
    }
    for (int n = 3; n <= 5; ++n) {
        RowTimer t;
        int failures = 0;
        for (const auto& v : make_cut_vertices(n))
            if (!cut_relax_member(v, cfg.feastol)) ++failures;
        rep.rows.push_back(row(cfg, "cut-n" + std::to_string(n), "certified-vertex-violations",
                               double(failures), 0.0, failures == 0, t));
        RowTimer t2;
        const std::size_t samples = n == 5 ? 6 : (n == 4 ? 10 : 20);
        const double r = cut_ratio(n, samples, Seed{cfg.seed + std::uint64_t(n)}, cfg.feastol);
        rep.rows.push_back(row(cfg, "cut-n" + std::to_string(n), "sampled-ratio-lower-bound", r,
                               64.0, r >= 1.0 && r < 64.0, t2));
    }
    return rep;
}

// ---- suite: groth-sandwich -------------------------------------------------

Report suite_groth(const ExperimentConfig& cfg) {
    Report rep;
    for (int n = 2; n <= 3; ++n) {
        RowTimer t;
        int infeasible = 0;
        for (const auto& xy : make_acut_vertices(n)) {
            const auto res = q_member(xy, n, 1e-7);
            if (res.status != QStatus::Feasible) ++infeasible;
        }
        rep.rows.push_back(row(cfg, "acut-n" + std::to_string(n), "certified-vertex-violations",
                               double(infeasible), 0.0, infeasible == 0, t));
    }
    {
        RowTimer t;
        const int n = 3;
        const auto acut = make_acut_vertices(n);
        std::vector<Vector> flat;
        for (const auto& v : acut) flat.push_back(Vector(v.begin(), v.end()));
        const double kappa_inv = 1.0 / 1.7822;
        const std::size_t trials = std::size_t(param(cfg, "qn_samples", 20));
        int outside = 0;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            const auto gram = sample_unit_sphere(2 * n, 2 * n, Seed{cfg.seed + 100 + trial});
            Vector corner(std::size_t(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) corner[std::size_t(i) * n + j] = dot(gram[i], gram[n + j]);
            if (!member_vrep(kappa_inv * corner, flat, cfg.feastol)) ++outside;
        }
        rep.rows.push_back(row(cfg, "qn-scaled-n3", "sampled-membership-violations",
                               double(outside), 0.0, outside == 0, t));
        // Containment measurements in both printed directions, reported
        // not asserted: how far a scaled corner sits from ACUT.
        RowTimer t2;
        int acut_in_q = 0;
        for (const auto& xy : acut)
            if (q_member(xy, n, 1e-7).status == QStatus::Feasible) ++acut_in_q;
        rep.rows.push_back(row(cfg, "acut-in-qn-n3", "sampled-containment-count", double(acut_in_q),
                               double(acut.size()), true, t2));
    }
    return rep;
}

// ---- suite: soft-approx -----------------------------------------------------

HRep cube_hrep_rows(std::size_t d) {
    HRep h;
    for (std::size_t i = 0; i < d; ++i) {
        Vector a(d, 0.0);
        a[i] = 1.0;
        h.ineq.push_back(LinearRow{a, 1.0});
        a[i] = -1.0;
        h.ineq.push_back(LinearRow{a, 1.0});
    }
    return h;
}

Report suite_soft(const ExperimentConfig& cfg) {
    Report rep;
    RowTimer t0;
    const std::size_t d = 3, k = 4;
    const auto sp = build_soft(cube_hrep_rows(d), LinearMap::identity(d), k, 1000,
                               Seed{cfg.seed + 9});
    rep.rows.push_back(row(cfg, "cube-d3-k4", "certified-generators", double(sp.generators.size()),
                           210.0, sp.generators.size() == 210, t0));

    // Uniform boundedness on sampled points of T(P) = the cube.
    RowTimer t1;
    CounterRng rng(Seed{cfg.seed + 10});
    std::vector<Vector> samples;
    std::uint64_t ctr = 0;
    for (int s = 0; s < 1000; ++s) {
        Vector x(d);
        for (std::size_t i = 0; i < d; ++i) x[i] = 2.0 * rng.uniform(ctr++) - 1.0;
        samples.push_back(std::move(x));
    }
    double worst = -1e300;
    for (const auto& x : samples)
        for (std::size_t g = 0; g < sp.generators.size(); ++g)
            worst = std::max(worst, sp.eval_generator(g, x));
    rep.rows.push_back(
        row(cfg, "cube-d3-k4", "certified-generator-max", worst, 1.0 + 1e-9, worst <= 1.0 + 1e-9, t1));

    const int trials = int(param(cfg, "functionals", 100));
    for (double eps : {0.5, 0.25, 0.1}) {
        RowTimer t2;
        double sup_err = 0.0;
        int rejected = 0;
        for (int trial = 0; trial < trials; ++trial) {
            Vector ell(d);
            double l1 = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                ell[i] = 2.0 * rng.uniform(ctr++) - 1.0;
                l1 += std::fabs(ell[i]);
            }
            for (double& c : ell) c *= eps / l1;  // sup over the cube = eps
            const auto res = approximant(sp, ell, samples);
            for (const auto& x : samples) {
                const double lx = dot(ell, x);
                sup_err = std::max(sup_err, std::fabs(lx - res.evaluate(sp, x)));
            }
            const auto dec = accept_test(sp, ell, eps, samples, &res.weights);
            if (!dec.accept) ++rejected;
        }
        const std::string inst = "cube-eps" + std::to_string(int(eps * 100));
        rep.rows.push_back(
            row(cfg, inst, "sampled-sup-error", sup_err, eps * eps, sup_err <= eps * eps, t2));
        rep.rows.push_back(row(cfg, inst, "certified-completeness-rejections", double(rejected),
                               0.0, rejected == 0, t2));
    }
    return rep;
}

// ---- suite: type2 -------------------------------------------------------------

Body cross_hrep(std::size_t d) {
    // O_d as an H-rep: sign-vector rows give an exact closed-form gauge.
    HRep h;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        Vector a(d);
        for (std::size_t i = 0; i < d; ++i) a[i] = (mask >> i) & 1 ? 1.0 : -1.0;
        h.ineq.push_back(LinearRow{a, 1.0});
    }
    return Body{h, true};
}

Report suite_type2(const ExperimentConfig& cfg) {
    Report rep;
    const int dmax = int(param(cfg, "dmax", 10));
    for (int d = 2; d <= dmax; ++d) {
        std::vector<Vector> basis;
        for (int i = 0; i < d; ++i) {
            Vector e(std::size_t(d), 0.0);
            e[std::size_t(i)] = 1.0;
            basis.push_back(e);
        }
        RowTimer t;
        const double vball = type2_lower_exact(make_ball(std::size_t(d)), basis);
        rep.rows.push_back(row(cfg, "ball-d" + std::to_string(d), "certified-type2", vball, 1.0,
                               std::fabs(vball - 1.0) <= 1e-12, t));
        RowTimer t2;
        const double vcross = type2_lower_exact(cross_hrep(std::size_t(d)), basis);
        const double target = std::sqrt(double(d));
        rep.rows.push_back(row(cfg, "cross-d" + std::to_string(d), "certified-type2", vcross,
                               target, std::fabs(vcross - target) <= 1e-12, t2));
    }
    return rep;
}

// ---- suite: qv-grid -------------------------------------------------------------

Report suite_qv(const ExperimentConfig& cfg) {
    Report rep;
    const EmpiricalMeasure mu = uniform_measure({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});

    {
        RowTimer t;
        CounterRng rng(Seed{cfg.seed + 11});
        int rejected = 0;
        const int samples = int(param(cfg, "b_samples", 200));
        for (int s = 0; s < samples; ++s) {
            const Vector v = {2.0 * rng.uniform(2 * std::uint64_t(s)) - 1.0,
                              2.0 * rng.uniform(2 * std::uint64_t(s) + 1) - 1.0};
            if (!qv_certify(mu, 1, v, cfg.feastol)) ++rejected;
            if (!qv_certify(mu, 2, v, cfg.feastol)) ++rejected;
        }
        rep.rows.push_back(row(cfg, "square-interior", "certified-rejections", double(rejected),
                               0.0, rejected == 0, t));
    }
    {
        RowTimer t;
        int nesting_violations = 0;
        for (int gx = 0; gx <= 40; ++gx)
            for (int gy = 0; gy <= 40; ++gy) {
                const Vector v = {-2.0 + gx * 0.1, -2.0 + gy * 0.1};
                if (qv_certify(mu, 2, v, cfg.feastol) && !qv_certify(mu, 1, v, cfg.feastol))
                    ++nesting_violations;
            }
        rep.rows.push_back(row(cfg, "grid-41x41", "certified-nesting-violations",
                               double(nesting_violations), 0.0, nesting_violations == 0, t));
    }
    {
        RowTimer t;
        const bool rejected = !qv_certify(mu, 1, {3.0, 0.0}, cfg.feastol);
        const QvForm f = build_qv(mu, 1, {3.0, 0.0});
        const bool oracle_rejects = !is_psd_eigen_oracle(f.gram, cfg.feastol);
        rep.rows.push_back(row(cfg, "v(3,0)-k1", "certified-rejected", rejected ? 1.0 : 0.0, 1.0,
                               rejected && oracle_rejects, t));
    }
    return rep;
}

// ---- suite: oracle-equiv -----------------------------------------------------------

bool brute_member_2d(const Vector& x, const std::vector<Vector>& pts, double tol) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::fabs(pts[i][0] - x[0]) <= tol && std::fabs(pts[i][1] - x[1]) <= tol) return true;
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector &a = pts[i], &b = pts[j], &c = pts[k];
                const double det = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
                if (std::fabs(det) < 1e-14) continue;
                const double l1 =
                    ((x[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (x[1] - a[1])) / det;
                const double l2 =
                    ((b[0] - a[0]) * (x[1] - a[1]) - (x[0] - a[0]) * (b[1] - a[1])) / det;
                if (1.0 - l1 - l2 >= -tol && l1 >= -tol && l2 >= -tol) return true;
            }
            const Vector &a = pts[i], &b = pts[j];
            const double dx = b[0] - a[0], dy = b[1] - a[1];
            const double len2 = dx * dx + dy * dy;
            if (len2 < 1e-16) continue;
            const double tt = ((x[0] - a[0]) * dx + (x[1] - a[1]) * dy) / len2;
            if (tt < -tol || tt > 1.0 + tol) continue;
            if (std::fabs(a[0] + tt * dx - x[0]) <= tol && std::fabs(a[1] + tt * dy - x[1]) <= tol)
                return true;
        }
    }
    return false;
}

Report suite_oracle(const ExperimentConfig& cfg) {
    Report rep;
    {
        RowTimer t;
        const std::vector<std::vector<Vector>> polys = {
            {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}},
            {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
            {{0.9, 0.2}, {-0.3, 0.8}, {-0.7, -0.1}, {0.1, -0.9}, {0.6, -0.5}},
            {{0.5, 0}, {0.25, 0.43}, {-0.25, 0.43}, {-0.5, 0}, {-0.25, -0.43}, {0.25, -0.43}},
        };
        int disagreements = 0, checked = 0;
        for (const auto& poly : polys)
            for (int gx = 0; gx <= 40; ++gx)
                for (int gy = 0; gy <= 40; ++gy) {
                    const Vector q = {-1.0 + gx * 0.05, -1.0 + gy * 0.05};
                    const bool loose = brute_member_2d(q, poly, 1e-6);
                    const bool tight = brute_member_2d(q, poly, 1e-12);
                    if (loose != tight) continue;
                    ++checked;
                    if (member_vrep(q, poly, cfg.feastol) != tight) ++disagreements;
                }
        rep.rows.push_back(row(cfg, "vrep-vs-barycentric", "certified-disagreements",
                               double(disagreements), 0.0, disagreements == 0 && checked > 4000, t));
    }
    {
        RowTimer t;
        CounterRng rng(Seed{cfg.seed + 12});
        int disagreements = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t d = 1 + trial % 20;
            SymMatrix m(d);
            std::uint64_t ctr = 5000ull * std::uint64_t(trial);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i; j < d; ++j) m.set(i, j, 2.0 * rng.uniform(ctr++) - 1.0);
            if (trial % 3 == 0) {
                SymMatrix g(d);
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = i; j < d; ++j) {
                        double s = 0.0;
                        for (std::size_t k = 0; k < d; ++k) s += m(i, k) * m(j, k);
                        g.set(i, j, s);
                    }
                m = g;
            }
            if (is_psd(m, 1e-9) != is_psd_eigen_oracle(m, 1e-9)) ++disagreements;
        }
        rep.rows.push_back(row(cfg, "psd-vs-eigen", "certified-disagreements",
                               double(disagreements), 0.0, disagreements == 0, t));
    }
    return rep;
}

using SuiteFn = std::function<Report(const ExperimentConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"john-cube", suite_john_cube}, {"tsp-ellipsoid", suite_tsp},
        {"net-bounds", suite_net},      {"bn-gadget", suite_bn},
        {"bn-decay", suite_bn},         {"tensor-lift", suite_tensor},
        {"power-norm", suite_power},    {"cut-ratio", suite_cut},
        {"groth-sandwich", suite_groth},{"soft-approx", suite_soft},
        {"type2", suite_type2},         {"qv-grid", suite_qv},
        {"oracle-equiv", suite_oracle},
    };
    return reg;
}

}  // namespace

bool Report::all_pass() const {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

std::vector<std::string> experiment_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

Report run_experiment(const ExperimentConfig& cfg) {
    for (const auto& [name, fn] : registry())
        if (name == cfg.name) return fn(cfg);
    std::string known;
    for (const auto& [name, fn] : registry()) known += (known.empty() ? "" : ", ") + name;
    throw std::invalid_argument("run_experiment: unknown suite '" + cfg.name + "' (known: " +
                                known + ")");
}

std::string emit_csv(const Report& r) {
    std::ostringstream out;
    out << "experiment,instance,metric,value,bound,pass,seed,tol,runtime_ms\n";
    out.precision(12);
    for (const auto& row : r.rows) {
        out << row.experiment << ',' << row.instance << ',' << row.metric << ',' << row.value
            << ',' << row.bound << ',' << (row.pass ? "true" : "false") << ',' << row.seed << ','
            << row.tol << ',' << row.runtime_ms << '\n';
    }
    return out.str();
}

std::string emit_json(const Report& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"experiment", row.experiment},
                        {"instance", row.instance},
                        {"metric", row.metric},
                        {"value", row.value},
                        {"bound", row.bound},
                        {"pass", row.pass},
                        {"seed", row.seed},
                        {"tol", row.tol},
                        {"runtime_ms", row.runtime_ms}});
    }
    return nlohmann::json{{"rows", rows}}.dump(2);
}

Report parse_report_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Report r;
    for (const auto& jr : j.at("rows")) {
        ReportRow row;
        row.experiment = jr.at("experiment").get<std::string>();
        row.instance = jr.at("instance").get<std::string>();
        row.metric = jr.at("metric").get<std::string>();
        row.value = jr.at("value").get<double>();
        row.bound = jr.at("bound").get<double>();
        row.pass = jr.at("pass").get<bool>();
        row.seed = jr.at("seed").get<std::uint64_t>();
        row.tol = jr.at("tol").get<double>();
        row.runtime_ms = jr.at("runtime_ms").get<long>();
        r.rows.push_back(std::move(row));
    }
    return r;
}

}  // namespace cvx
