#include "cvx/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace cvx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Vector section_lift(const SectionedRep& s, const Vector& z) {
    if (z.size() != s.basis.size()) throw std::invalid_argument("sectioned: coordinate dimension mismatch");
    Vector w(s.points.empty() ? 0 : s.points[0].size(), 0.0);
    for (std::size_t k = 0; k < s.basis.size(); ++k)
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += z[k] * s.basis[k][i];
    return w;
}

}  // namespace

std::size_t body_dim(const Body& b) {
    return std::visit(
        [](const auto& r) -> std::size_t {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, VRep>) {
                return r.points.empty() ? 0 : r.points[0].size();
            } else if constexpr (std::is_same_v<T, HRep>) {
                return r.ineq.empty() ? 0 : r.ineq[0].coeffs.size();
            } else if constexpr (std::is_same_v<T, BallRep>) {
                return r.dim;
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                return r.center.size();
            } else if constexpr (std::is_same_v<T, ProjectedRep>) {
                return r.map.rows;
            } else {
                return r.basis.size();
            }
        },
        b.rep);
}

std::string body_kind(const Body& b) {
    switch (b.rep.index()) {
        case 0: return "vrep";
        case 1: return "hrep";
        case 2: return "ball";
        case 3: return "ellipsoid";
        case 4: return "projected";
        default: return "sectioned";
    }
}

bool membership(const Body& b, const Vector& x, double tol) {
    return std::visit(
        [&](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, VRep>) {
                return member_vrep(x, r.points, tol);
            } else if constexpr (std::is_same_v<T, HRep>) {
                for (const auto& row : r.ineq)
                    if (dot(row.coeffs, x) > row.rhs + tol) return false;
                for (const auto& row : r.eq)
                    if (std::fabs(dot(row.coeffs, x) - row.rhs) > tol) return false;
                return true;
            } else if constexpr (std::is_same_v<T, BallRep>) {
                return norm2(x) <= r.radius + tol;
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                return r.form.quad(x - r.center) <= 1.0 + tol;
            } else if constexpr (std::is_same_v<T, ProjectedRep>) {
                return member_projection(x, r.poly, r.map, tol);
            } else {
                return member_vrep(section_lift(r, x), r.points, tol);
            }
        },
        b.rep);
}

namespace {

double gauge_vrep_target(const std::vector<Vector>& points, const Vector& target) {
    // inf{ sum mu : sum mu_i p_i = target, mu >= 0 }.
    const std::size_t np = points.size();
    if (np == 0) throw std::invalid_argument("gauge: empty V-rep");
    LinearProgram lp;
    lp.objective.assign(np, -1.0);  // maximize -sum = minimize sum
    for (std::size_t i = 0; i < target.size(); ++i) {
        LinearRow row;
        row.coeffs.resize(np);
        for (std::size_t j = 0; j < np; ++j) row.coeffs[j] = points[j][i];
        row.rhs = target[i];
        lp.eq.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < np; ++j) {
        LinearRow row;
        row.coeffs.assign(np, 0.0);
        row.coeffs[j] = -1.0;
        lp.ineq.push_back(std::move(row));
    }
    const LpResult res = lp_solve(lp);
    if (res.status == LpStatus::Infeasible) return kInf;
    if (res.status != LpStatus::Optimal)
        throw std::runtime_error("gauge: LP failed (" + res.diagnostic + ")");
    return -res.value;
}

}  // namespace

double gauge(const Body& b, const Vector& v) {
    if (norm2(v) == 0.0) return 0.0;
    return std::visit(
        [&](const auto& r) -> double {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, VRep>) {
                return gauge_vrep_target(r.points, v);
            } else if constexpr (std::is_same_v<T, HRep>) {
                double g = 0.0;
                for (const auto& row : r.ineq) {
                    const double av = dot(row.coeffs, v);
                    if (row.rhs <= 0.0) throw std::runtime_error("gauge: origin not interior (nonpositive rhs)");
                    g = std::max(g, av / row.rhs);
                }
                for (const auto& row : r.eq) {
                    if (row.rhs != 0.0) throw std::runtime_error("gauge: origin not interior (equality rhs)");
                    if (std::fabs(dot(row.coeffs, v)) > 1e-9 * (1.0 + norm2(v))) return kInf;
                }
                return g;
            } else if constexpr (std::is_same_v<T, BallRep>) {
                return norm2(v) / r.radius;
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                if (norm2(r.center) > 1e-12)
                    throw std::runtime_error("gauge: ellipsoid must be recentered at the origin");
                return std::sqrt(std::max(0.0, r.form.quad(v)));
            } else if constexpr (std::is_same_v<T, ProjectedRep>) {
                // min t s.t. T w = v, g.w <= t*b, E.w = t*f; vars (w, t).
                const std::size_t nw = r.poly.dim;
                LinearProgram lp;
                lp.objective.assign(nw + 1, 0.0);
                lp.objective[nw] = -1.0;
                for (const auto& row : r.poly.ineq) {
                    LinearRow q;
                    q.coeffs = row.coeffs;
                    q.coeffs.push_back(-row.rhs);
                    q.rhs = 0.0;
                    lp.ineq.push_back(std::move(q));
                }
                {
                    LinearRow q;  // t >= 0
                    q.coeffs.assign(nw + 1, 0.0);
                    q.coeffs[nw] = -1.0;
                    lp.ineq.push_back(std::move(q));
                }
                for (const auto& row : r.poly.eq) {
                    LinearRow q;
                    q.coeffs = row.coeffs;
                    q.coeffs.push_back(-row.rhs);
                    q.rhs = 0.0;
                    lp.eq.push_back(std::move(q));
                }
                for (std::size_t i = 0; i < r.map.rows; ++i) {
                    LinearRow q;
                    q.coeffs.resize(nw + 1, 0.0);
                    for (std::size_t j = 0; j < nw; ++j) q.coeffs[j] = r.map.at(i, j);
                    q.rhs = v[i];
                    lp.eq.push_back(std::move(q));
                }
                const LpResult res = lp_solve(lp);
                if (res.status == LpStatus::Infeasible) return kInf;
                if (res.status != LpStatus::Optimal)
                    throw std::runtime_error("gauge: projection LP failed (" + res.diagnostic + ")");
                return -res.value;
            } else {
                return gauge_vrep_target(r.points, section_lift(r, v));
            }
        },
        b.rep);
}

double support(const Body& b, const Vector& c) {
    return std::visit(
        [&](const auto& r) -> double {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, VRep>) {
                if (r.points.empty()) throw std::invalid_argument("support: empty V-rep");
                double s = -kInf;
                for (const auto& p : r.points) s = std::max(s, dot(c, p));
                return s;
            } else if constexpr (std::is_same_v<T, HRep>) {
                LinearProgram lp;
                lp.objective = c;
                lp.ineq = r.ineq;
                lp.eq = r.eq;
                const LpResult res = lp_solve(lp);
                if (res.status == LpStatus::Unbounded) throw std::runtime_error("support: unbounded H-rep");
                if (res.status != LpStatus::Optimal)
                    throw std::runtime_error("support: LP failed (" + res.diagnostic + ")");
                return res.value;
            } else if constexpr (std::is_same_v<T, BallRep>) {
                return r.radius * norm2(c);
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                const Vector w = solve_spd(r.form, c);
                return dot(c, r.center) + std::sqrt(std::max(0.0, dot(c, w)));
            } else if constexpr (std::is_same_v<T, ProjectedRep>) {
                return support_projection(c, r.poly, r.map);
            } else {
                // max <c, S^T P lambda> over lambda in the simplex with
                // P lambda restricted to span(S).
                const std::size_t np = r.points.size();
                const std::size_t wdim = np == 0 ? 0 : r.points[0].size();
                if (np == 0) throw std::invalid_argument("support: empty sectioned rep");
                LinearProgram lp;
                lp.objective.assign(np, 0.0);
                for (std::size_t j = 0; j < np; ++j) {
                    double s = 0.0;
                    for (std::size_t k = 0; k < r.basis.size(); ++k)
                        s += c[k] * dot(r.basis[k], r.points[j]);
                    lp.objective[j] = s;
                }
                // Residual of P lambda off the span must vanish.
                for (std::size_t i = 0; i < wdim; ++i) {
                    LinearRow row;
                    row.coeffs.resize(np);
                    for (std::size_t j = 0; j < np; ++j) {
                        double resid = r.points[j][i];
                        for (const auto& bas : r.basis) resid -= bas[i] * dot(bas, r.points[j]);
                        row.coeffs[j] = resid;
                    }
                    row.rhs = 0.0;
                    lp.eq.push_back(std::move(row));
                }
                LinearRow sum;
                sum.coeffs.assign(np, 1.0);
                sum.rhs = 1.0;
                lp.eq.push_back(std::move(sum));
                for (std::size_t j = 0; j < np; ++j) {
                    LinearRow row;
                    row.coeffs.assign(np, 0.0);
                    row.coeffs[j] = -1.0;
                    lp.ineq.push_back(std::move(row));
                }
                const LpResult res = lp_solve(lp);
                if (res.status != LpStatus::Optimal)
                    throw std::runtime_error("support: sectioned LP failed (" + res.diagnostic + ")");
                return res.value;
            }
        },
        b.rep);
}

namespace {

void require_origin_interior_vrep(const std::vector<Vector>& points) {
    if (points.empty()) throw std::invalid_argument("polar: empty V-rep");
    const std::size_t d = points[0].size();
    if (orthonormal_span(points).size() < d)
        throw std::runtime_error("polar: origin not interior (points do not span)");
    // max eps s.t. sum lambda p = 0, sum lambda = 1, lambda_i >= eps.
    const std::size_t np = points.size();
    LinearProgram lp;
    lp.objective.assign(np + 1, 0.0);
    lp.objective[np] = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
        LinearRow row;
        row.coeffs.assign(np + 1, 0.0);
        for (std::size_t j = 0; j < np; ++j) row.coeffs[j] = points[j][i];
        lp.eq.push_back(std::move(row));
    }
    LinearRow sum;
    sum.coeffs.assign(np + 1, 0.0);
    for (std::size_t j = 0; j < np; ++j) sum.coeffs[j] = 1.0;
    sum.rhs = 1.0;
    lp.eq.push_back(std::move(sum));
    for (std::size_t j = 0; j < np; ++j) {
        LinearRow row;  // eps - lambda_j <= 0
        row.coeffs.assign(np + 1, 0.0);
        row.coeffs[j] = -1.0;
        row.coeffs[np] = 1.0;
        lp.ineq.push_back(std::move(row));
    }
    const LpResult res = lp_solve(lp);
    if (res.status != LpStatus::Optimal || res.value <= 1e-12)
        throw std::runtime_error("polar: origin not interior");
}

}  // namespace

Body polar_polytope(const Body& b) {
    if (const auto* v = std::get_if<VRep>(&b.rep)) {
        require_origin_interior_vrep(v->points);
        HRep h;
        for (const auto& p : v->points) h.ineq.push_back(LinearRow{p, 1.0});
        return Body{h, b.symmetric};
    }
    if (const auto* h = std::get_if<HRep>(&b.rep)) {
        if (!h->eq.empty()) throw std::runtime_error("polar: H-rep with equality rows is not full-dimensional");
        VRep v;
        for (const auto& row : h->ineq) {
            if (row.rhs <= 0.0) throw std::runtime_error("polar: origin not interior");
            v.points.push_back((1.0 / row.rhs) * row.coeffs);
        }
        return Body{v, b.symmetric};
    }
    throw std::invalid_argument("polar: body must be V-rep or H-rep");
}

Body scale_body(const Body& b, double t) {
    if (t <= 0.0) throw std::invalid_argument("scale_body: t > 0 required");
    Body out = b;
    std::visit(
        [&](auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, VRep>) {
                for (auto& p : r.points) p = t * p;
            } else if constexpr (std::is_same_v<T, HRep>) {
                for (auto& row : r.ineq) row.rhs *= t;
                for (auto& row : r.eq) row.rhs *= t;
            } else if constexpr (std::is_same_v<T, BallRep>) {
                r.radius *= t;
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                SymMatrix f(r.form.dim());
                for (std::size_t i = 0; i < f.dim(); ++i)
                    for (std::size_t j = i; j < f.dim(); ++j) f.set(i, j, r.form(i, j) / (t * t));
                r.form = f;
                r.center = t * r.center;
            } else if constexpr (std::is_same_v<T, ProjectedRep>) {
                for (auto& row : r.poly.ineq) row.rhs *= t;
                for (auto& row : r.poly.eq) row.rhs *= t;
            } else {
                for (auto& p : r.points) p = t * p;
            }
        },
        out.rep);
    return out;
}

std::vector<Vector> facet_enum_bruteforce(const std::vector<Vector>& points, double tol) {
    if (points.empty()) throw std::invalid_argument("facet_enum: empty point set");
    const std::size_t d = points[0].size();
    const std::size_t n = points.size();
    if (d > 6) throw std::invalid_argument("facet_enum: dimension > 6 not supported by brute force");
    double combos = 1.0;
    for (std::size_t i = 0; i < d; ++i) combos *= double(n - i) / double(i + 1);
    if (combos > 2e6) throw std::invalid_argument("facet_enum: subset count too large");

    std::vector<Vector> facets;
    std::map<std::vector<long long>, bool> seen;
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), std::size_t{0});

    auto emit = [&](const Vector& a) {
        std::vector<long long> key(d);
        for (std::size_t i = 0; i < d; ++i) key[i] = llround(a[i] * 1e7);
        if (!seen.emplace(key, true).second) return;
        facets.push_back(a);
    };

    // Iterate over all d-subsets of point indices.
    while (true) {
        // Hyperplane through points[idx]: normal orthogonal to differences.
        std::vector<Vector> diffs;
        for (std::size_t k = 1; k < d; ++k) diffs.push_back(points[idx[k]] - points[idx[0]]);
        const auto span = orthonormal_span(diffs, 1e-9);
        if (span.size() == d - 1) {
            Vector normal;
            for (std::size_t e = 0; e < d && normal.empty(); ++e) {
                Vector cand(d, 0.0);
                cand[e] = 1.0;
                for (const auto& s : span) {
                    const double c = dot(cand, s);
                    for (std::size_t i = 0; i < d; ++i) cand[i] -= c * s[i];
                }
                if (norm2(cand) > 1e-6) normal = (1.0 / norm2(cand)) * cand;
            }
            if (!normal.empty()) {
                const double beta = dot(normal, points[idx[0]]);
                double lo = kInf, hi = -kInf;
                for (const auto& p : points) {
                    const double val = dot(normal, p);
                    lo = std::min(lo, val);
                    hi = std::max(hi, val);
                }
                if (hi <= beta + tol && beta > tol) emit((1.0 / beta) * normal);
                if (lo >= beta - tol && beta < -tol) emit((1.0 / beta) * normal);
            }
        }
        // next combination
        std::size_t k = d;
        while (k-- > 0) {
            if (idx[k] + (d - k) < n) {
                ++idx[k];
                for (std::size_t j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (k == 0) return facets;
        }
    }
}

SandwichCertificate certify_sandwich(const Body& x, const Body& b, std::size_t n_dirs,
                                     Seed seed, double tol) {
    if (body_dim(x) != body_dim(b))
        throw std::invalid_argument("certify_sandwich: dimension mismatch");
    const std::size_t d = body_dim(x);
    SandwichCertificate cert;
    cert.tol = tol;

    const auto* xv = std::get_if<VRep>(&x.rep);
    const auto* bv = std::get_if<VRep>(&b.rep);
    const auto* xh = std::get_if<HRep>(&x.rep);
    const auto* bh = std::get_if<HRep>(&b.rep);
    const bool xh_plain = xh != nullptr && xh->eq.empty();
    const bool bh_plain = bh != nullptr && bh->eq.empty();

    // Inner containment X subset (1+tol) B.
    if (xv != nullptr) {
        cert.inner_mode = "vertices";
        for (const auto& v : xv->points) {
            const double g = gauge(b, v);
            cert.worst_inner_gauge = std::max(cert.worst_inner_gauge, g);
            if (g > 1.0 + tol) {
                cert.valid = false;
                cert.violation = v;
            }
        }
        cert.inner_witnesses = xv->points;
    } else if (bh_plain) {
        cert.inner_mode = "facets";
        for (const auto& row : bh->ineq) {
            const double s = support(x, row.coeffs);
            const double g = s / row.rhs;
            cert.worst_inner_gauge = std::max(cert.worst_inner_gauge, g);
            if (g > 1.0 + tol) cert.valid = false;
        }
    } else {
        cert.inner_mode = "sampled";
        const auto dirs = sample_unit_sphere(d, n_dirs, seed);
        for (const auto& c : dirs) {
            const double gx = gauge(x, c);
            if (gx <= 0.0 || !std::isfinite(gx)) continue;
            const Vector boundary = (1.0 / gx) * c;
            const double g = gauge(b, boundary);
            cert.worst_inner_gauge = std::max(cert.worst_inner_gauge, g);
            if (g > 1.0 + tol) {
                cert.valid = false;
                cert.violation = boundary;
            }
            if (cert.inner_witnesses.size() < 8) cert.inner_witnesses.push_back(boundary);
        }
    }

    // Outer factor: smallest verified alpha with B subset alpha X.
    double alpha = 1.0;
    Vector worst_dir;
    if (bv != nullptr) {
        cert.outer_mode = "vertices";
        for (const auto& v : bv->points) {
            const double g = gauge(x, v);
            if (g > alpha) {
                alpha = g;
                worst_dir = v;
            }
        }
    } else if (xh_plain) {
        cert.outer_mode = "facets";
        for (const auto& row : xh->ineq) {
            const double ratio = support(b, row.coeffs) / row.rhs;
            if (ratio > alpha) {
                alpha = ratio;
                worst_dir = row.coeffs;
            }
        }
    } else {
        cert.outer_mode = "sampled";
        const auto dirs = sample_unit_sphere(d, n_dirs, Seed{seed.value ^ 0x5eedULL});
        for (const auto& c : dirs) {
            const double sx = support(x, c);
            const double sb = support(b, c);
            if (sx <= 0.0) continue;
            const double ratio = sb / sx;
            if (ratio > alpha) {
                alpha = ratio;
                worst_dir = c;
            }
        }
    }
    cert.alpha = alpha;
    if (!worst_dir.empty()) cert.outer_witnesses.push_back(worst_dir);
    return cert;
}

Body make_cube(std::size_t d) {
    HRep h;
    for (std::size_t i = 0; i < d; ++i) {
        Vector a(d, 0.0);
        a[i] = 1.0;
        h.ineq.push_back(LinearRow{a, 1.0});
        a[i] = -1.0;
        h.ineq.push_back(LinearRow{a, 1.0});
    }
    return Body{h, true};
}

Body make_cube_vrep(std::size_t d) {
    if (d > 16) throw std::invalid_argument("make_cube_vrep: 2^d vertices too many beyond d=16");
    VRep v;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        Vector p(d);
        for (std::size_t i = 0; i < d; ++i) p[i] = (mask >> i) & 1 ? 1.0 : -1.0;
        v.points.push_back(std::move(p));
    }
    return Body{v, true};
}

Body make_cross(std::size_t d) {
    VRep v;
    for (std::size_t i = 0; i < d; ++i) {
        Vector p(d, 0.0);
        p[i] = 1.0;
        v.points.push_back(p);
        p[i] = -1.0;
        v.points.push_back(p);
    }
    return Body{v, true};
}

Body make_ball(std::size_t d, double radius) { return Body{BallRep{d, radius}, true}; }

Body make_simplex(std::size_t d) {
    // Regular simplex: e_i in R^{d+1} recentered, expressed in an
    // orthonormal basis of the sum-zero subspace.
    std::vector<Vector> verts;
    const Vector c(d + 1, 1.0 / double(d + 1));
    for (std::size_t i = 0; i <= d; ++i) {
        Vector e(d + 1, 0.0);
        e[i] = 1.0;
        verts.push_back(e - c);
    }
    const auto basis = orthonormal_span(verts);
    if (basis.size() != d) throw std::runtime_error("make_simplex: basis construction failed");
    VRep v;
    for (const auto& w : verts) {
        Vector z(d);
        for (std::size_t k = 0; k < d; ++k) z[k] = dot(w, basis[k]);
        v.points.push_back(std::move(z));
    }
    return Body{v, false};
}

namespace {
std::size_t edge_index(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    // lexicographic over pairs (i<j)
    return static_cast<std::size_t>(i * (2 * n - i - 1) / 2 + (j - i - 1));
}
}  // namespace

TspBody make_tsp(int n) {
    if (n < 4) throw std::invalid_argument("make_tsp: n >= 4 required");
    if (n > 8) throw std::invalid_argument("make_tsp: n <= 8 at desk scale");
    const std::size_t ne = static_cast<std::size_t>(n) * (n - 1) / 2;

    // Hamiltonian cycles anchored at vertex 0; reflections removed by
    // requiring the first neighbor to be smaller than the last.
    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Vector> cycles;
    do {
        if (perm.front() > perm.back()) continue;
        Vector edges(ne, 0.0);
        int prev = 0;
        for (int q : perm) {
            edges[edge_index(prev, q, n)] = 1.0;
            prev = q;
        }
        edges[edge_index(prev, 0, n)] = 1.0;
        cycles.push_back(std::move(edges));
    } while (std::next_permutation(perm.begin(), perm.end()));

    TspBody t;
    t.n = n;
    t.dim = static_cast<std::size_t>(n) * (n - 3) / 2;
    t.vertex_edges = cycles;
    t.center_edges.assign(ne, 0.0);
    for (const auto& v : cycles) t.center_edges += v;
    for (double& c : t.center_edges) c /= double(cycles.size());

    // Frobenius-isometric coordinates: edge vectors scaled by sqrt(2)
    // (each off-diagonal entry appears twice in the symmetric matrix).
    const double s2 = std::sqrt(2.0);
    std::vector<Vector> diffs;
    for (const auto& v : cycles) diffs.push_back(s2 * (v - t.center_edges));
    t.basis_edges = orthonormal_span(diffs, 1e-9);
    if (t.basis_edges.size() != t.dim)
        throw std::runtime_error("make_tsp: affine hull dimension mismatch");

    VRep vr;
    for (const auto& w : diffs) {
        Vector z(t.dim);
        for (std::size_t k = 0; k < t.dim; ++k) z[k] = dot(w, t.basis_edges[k]);
        vr.points.push_back(std::move(z));
    }
    t.body = Body{vr, false};
    return t;
}

double tsp_zero_facet_distance(const TspBody& t) {
    // Functional x_e in intrinsic coordinates: x_e = a_e + <g, z> with
    // g_k = basis[k][e] / sqrt(2); the facet is {x_e = 0}.
    const double s2 = std::sqrt(2.0);
    double dist = kInf;
    const std::size_t ne = t.center_edges.size();
    for (std::size_t e = 0; e < ne; ++e) {
        Vector g(t.dim);
        for (std::size_t k = 0; k < t.dim; ++k) g[k] = t.basis_edges[k][e] / s2;
        dist = std::min(dist, t.center_edges[e] / norm2(g));
    }
    return dist;
}

std::vector<SymMatrix> make_cut_vertices(int n) {
    if (n < 2 || n > 10) throw std::invalid_argument("make_cut_vertices: 2 <= n <= 10");
    std::vector<SymMatrix> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        Vector x(n, 1.0);
        for (int i = 1; i < n; ++i) x[i] = (mask >> (i - 1)) & 1 ? -1.0 : 1.0;
        out.push_back(SymMatrix::outer(x));
    }
    return out;
}

std::vector<std::vector<double>> make_acut_vertices(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("make_acut_vertices: 1 <= n <= 5");
    std::vector<std::vector<double>> out;
    for (std::size_t xm = 0; xm < (std::size_t{1} << (n - 1)); ++xm) {
        Vector x(n, 1.0);
        for (int i = 1; i < n; ++i) x[i] = (xm >> (i - 1)) & 1 ? -1.0 : 1.0;
        for (std::size_t ym = 0; ym < (std::size_t{1} << n); ++ym) {
            Vector y(n, 1.0);
            for (int i = 0; i < n; ++i) y[i] = (ym >> i) & 1 ? -1.0 : 1.0;
            std::vector<double> m(static_cast<std::size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = x[i] * y[j];
            out.push_back(std::move(m));
        }
    }
    return out;
}

Vector flatten_matrix(const SymMatrix& m) {
    Vector v(m.dim() * m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) v[i * m.dim() + j] = m(i, j);
    return v;
}

}  // namespace cvx
