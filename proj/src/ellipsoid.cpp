#include "cvx/ellipsoid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cvx {

namespace {

// Centered Khachiyan ascent on max log det M(u), M(u) = sum u_i p_i p_i^T.
// Returns (u, M^{-1}, gap) with max_i p_i^T M^{-1} p_i <= d (1 + gap).
struct CenteredResult {
    Vector u;
    SymMatrix minv;
    double gap = 0.0;
    int iterations = 0;
};

CenteredResult khachiyan_centered(const std::vector<Vector>& pts, double eps, long max_iter) {
    const std::size_t n = pts.size();
    const std::size_t d = pts[0].size();

    {
        const auto span = orthonormal_span(pts, 1e-10);
        if (span.size() < d) {
            // Name a deficient direction: any coordinate direction with a
            // nonzero residual against the span.
            for (std::size_t e = 0; e < d; ++e) {
                Vector cand(d, 0.0);
                cand[e] = 1.0;
                for (const auto& s : span) {
                    const double c = dot(cand, s);
                    for (std::size_t i = 0; i < d; ++i) cand[i] -= c * s[i];
                }
                if (norm2(cand) > 1e-6)
                    throw std::runtime_error(
                        "loewner_mvee: degenerate span, deficient near coordinate " +
                        std::to_string(e));
            }
            throw std::runtime_error("loewner_mvee: degenerate span");
        }
    }

    Vector u(n, 1.0 / double(n));
    SymMatrix m(d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a; b < d; ++b) m.add(a, b, u[i] * pts[i][a] * pts[i][b]);
    SymMatrix minv = inverse_spd(m);

    Vector kappa(n);
    auto recompute_kappa = [&]() {
        for (std::size_t i = 0; i < n; ++i) kappa[i] = minv.quad(pts[i]);
    };
    recompute_kappa();

    CenteredResult res;
    long it = 0;
    for (; it < max_iter; ++it) {
        std::size_t jmax = 0, jmin = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (kappa[i] > kappa[jmax]) jmax = i;
            if (u[i] > 1e-14 && (jmin == n || kappa[i] < kappa[jmin])) jmin = i;
        }
        const double e_plus = kappa[jmax] / double(d) - 1.0;
        const double e_minus = jmin == n ? 0.0 : 1.0 - kappa[jmin] / double(d);
        if (std::max(e_plus, e_minus) <= eps) {
            res.gap = std::max(e_plus, 0.0);
            break;
        }

        std::size_t j;
        double beta;
        if (e_plus >= e_minus) {
            j = jmax;
            beta = (kappa[j] - d) / (d * (kappa[j] - 1.0));
        } else {
            j = jmin;
            beta = (kappa[j] - d) / (d * (kappa[j] - 1.0));  // negative
            beta = std::max(beta, -u[j] / (1.0 - u[j]));     // drop step floor
        }

        // u <- (1-beta) u + beta e_j, Sherman-Morrison on M^{-1}.
        for (double& w : u) w *= (1.0 - beta);
        u[j] += beta;
        const Vector w = minv.mul(pts[j]);
        const double denom = (1.0 - beta) + beta * kappa[j];
        const double scale = 1.0 / (1.0 - beta);
        SymMatrix upd(d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a; b < d; ++b)
                upd.set(a, b, scale * (minv(a, b) - beta * w[a] * w[b] / denom));
        minv = upd;
        for (std::size_t i = 0; i < n; ++i) {
            const double z = dot(pts[i], w);
            kappa[i] = scale * (kappa[i] - beta * z * z / denom);
        }

        if ((it + 1) % 2000 == 0) {
            // Refresh against drift: rebuild M from u.
            SymMatrix mm(d);
            for (std::size_t i = 0; i < n; ++i) {
                if (u[i] <= 0.0) continue;
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = a; b < d; ++b) mm.add(a, b, u[i] * pts[i][a] * pts[i][b]);
            }
            minv = inverse_spd(mm);
            recompute_kappa();
        }
    }
    if (it >= max_iter) throw std::runtime_error("loewner_mvee: iteration cap exceeded");

    // Exact recompute at exit so the certificate is from fresh data.
    SymMatrix mm(d);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] <= 0.0) continue;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a; b < d; ++b) mm.add(a, b, u[i] * pts[i][a] * pts[i][b]);
    }
    minv = inverse_spd(mm);
    double kmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) kmax = std::max(kmax, minv.quad(pts[i]));
    res.gap = std::max(kmax / double(d) - 1.0, 0.0);
    res.u = std::move(u);
    res.minv = std::move(minv);
    res.iterations = static_cast<int>(it);
    return res;
}

}  // namespace

MveeResult loewner_mvee(const std::vector<Vector>& points, double eps, bool symmetric,
                        long max_iter) {
    if (points.empty()) throw std::invalid_argument("loewner_mvee: no points");
    const std::size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d) throw std::invalid_argument("loewner_mvee: ragged points");

    MveeResult out;
    if (symmetric) {
        const CenteredResult c = khachiyan_centered(points, eps, max_iter);
        const double denom = double(d) * (1.0 + c.gap);
        SymMatrix q(d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a; b < d; ++b) q.set(a, b, c.minv(a, b) / denom);
        out.ellipsoid = Ellipsoid{Vector(d, 0.0), q};
        out.gap = c.gap;
        out.iterations = c.iterations;
        out.weights = c.u;
        return out;
    }

    // General case: lift to homogeneous coordinates and peel the center
    // off the lifted moment matrix by the Schur identity
    //   q_lift(p,1) = (p-c)^T (S - c c^T)^{-1} (p-c) + 1.
    std::vector<Vector> lifted;
    lifted.reserve(points.size());
    for (const auto& p : points) {
        Vector q = p;
        q.push_back(1.0);
        lifted.push_back(std::move(q));
    }
    const CenteredResult c = khachiyan_centered(lifted, eps, max_iter);

    Vector center(d, 0.0);
    SymMatrix s(d);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (c.u[i] <= 0.0) continue;
        for (std::size_t a = 0; a < d; ++a) center[a] += c.u[i] * points[i][a];
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (c.u[i] <= 0.0) continue;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a; b < d; ++b)
                s.add(a, b, c.u[i] * (points[i][a] - center[a]) * (points[i][b] - center[b]));
    }
    const SymMatrix sinv = inverse_spd(s);
    // kappa_lift <= (d+1)(1+gap) gives q(p-c) <= (d+1)(1+gap) - 1.
    const double denom = double(d + 1) * (1.0 + c.gap) - 1.0;
    SymMatrix q(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) q.set(a, b, sinv(a, b) / denom);

    // Certify and absorb any residual overshoot.
    double worst = 0.0;
    for (const auto& p : points) worst = std::max(worst, q.quad(p - center));
    if (worst > 1.0) {
        SymMatrix q2(d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a; b < d; ++b) q2.set(a, b, q(a, b) / worst);
        q = q2;
    }
    out.ellipsoid = Ellipsoid{center, q};
    out.gap = c.gap;
    out.iterations = c.iterations;
    out.weights = c.u;
    return out;
}

Ellipsoid john_inner_symmetric(const Body& b, double eps) {
    const auto* v = std::get_if<VRep>(&b.rep);
    if (v == nullptr) throw std::invalid_argument("john_inner_symmetric: V-rep body required");
    if (!b.symmetric) throw std::invalid_argument("john_inner_symmetric: symmetric body required");
    const std::size_t d = body_dim(b);

    const MveeResult mv = loewner_mvee(v->points, eps, true);

    // Enclosing form is M^{-1} / (d (1+gap)); shrinking the Loewner
    // ellipsoid by sqrt(d (1+gap)) gives E = {x : x^T M^{-1} x <= 1},
    // which the support-mean argument places inside conv(+-P).
    const double scale = double(d) * (1.0 + mv.gap);
    SymMatrix inner(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t bb = a; bb < d; ++bb) inner.set(a, bb, mv.ellipsoid.form(a, bb) * scale);
    Ellipsoid e{Vector(d, 0.0), inner};

    // Verification: boundary samples of E are gauge-inside b.
    const auto dirs = sample_unit_sphere(d, 64, Seed{0x10aull});
    for (const auto& dir : dirs) {
        const double g = std::sqrt(std::max(inner.quad(dir), 1e-300));
        const Vector x = (1.0 / g) * dir;
        if (gauge(b, x) > 1.0 + 10.0 * eps + 1e-9)
            throw std::runtime_error("john_inner_symmetric: inner containment check failed");
    }
    return e;
}

Ellipsoid inscribed_via_polar(const Body& b, double eps) {
    const auto* v = std::get_if<VRep>(&b.rep);
    if (v == nullptr) throw std::invalid_argument("inscribed_via_polar: V-rep body required");
    const std::size_t d = body_dim(b);
    if (d > 6) throw std::invalid_argument("inscribed_via_polar: dim <= 6 (facet enumeration)");

    const auto facets = facet_enum_bruteforce(v->points, 1e-7);
    if (facets.empty()) throw std::runtime_error("inscribed_via_polar: no facets found");

    // Centered MVEE of the polar's vertex set, then polarity:
    // {y^T F y <= 1}^polar = {x^T F^{-1} x <= 1}.
    const MveeResult mv = loewner_mvee(facets, eps, true);
    const SymMatrix finv = inverse_spd(mv.ellipsoid.form);
    Ellipsoid e{Vector(d, 0.0), SymMatrix(d)};
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t bb = a; bb < d; ++bb) e.form.set(a, bb, finv(a, bb));
    return e;
}

Ellipsoid tsp_inscribed_ball(const TspBody& t) {
    const double r = tsp_zero_facet_distance(t);
    SymMatrix q(t.dim);
    for (std::size_t i = 0; i < t.dim; ++i) q.set(i, i, 1.0 / (r * r));
    return Ellipsoid{Vector(t.dim, 0.0), q};
}

}  // namespace cvx
