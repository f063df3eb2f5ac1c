#include "cvx/socone.hpp"

#include <cmath>
#include <stdexcept>

namespace cvx {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

GadgetSpec quarter_gadget(int m) {
    if (m < 2 || m > 30) throw std::invalid_argument("quarter_gadget: 2 <= m <= 30");
    GadgetSpec g;
    g.m = m;
    const std::size_t nv = 2 * static_cast<std::size_t>(m);
    g.rows.dim = nv;
    auto xi = [](int k) { return 2 * static_cast<std::size_t>(k - 1); };
    auto eta = [](int k) { return 2 * static_cast<std::size_t>(k - 1) + 1; };
    for (int k = 1; k <= m; ++k) {
        g.variables.push_back("xi_" + std::to_string(k));
        g.variables.push_back("eta_" + std::to_string(k));
    }

    for (int k = 2; k <= m; ++k) {
        const double c = std::cos(kPi / std::pow(2.0, k));
        const double s = std::sin(kPi / std::pow(2.0, k));
        LinearRow rot;  // xi_k = c xi_{k-1} + s eta_{k-1}
        rot.coeffs.assign(nv, 0.0);
        rot.coeffs[xi(k)] = 1.0;
        rot.coeffs[xi(k - 1)] = -c;
        rot.coeffs[eta(k - 1)] = -s;
        g.rows.eq.push_back(std::move(rot));

        LinearRow up;  // eta_k >= -s xi_{k-1} + c eta_{k-1}
        up.coeffs.assign(nv, 0.0);
        up.coeffs[eta(k)] = -1.0;
        up.coeffs[xi(k - 1)] = -s;
        up.coeffs[eta(k - 1)] = c;
        g.rows.ineq.push_back(std::move(up));

        LinearRow dn;  // eta_k >= s xi_{k-1} - c eta_{k-1}
        dn.coeffs.assign(nv, 0.0);
        dn.coeffs[eta(k)] = -1.0;
        dn.coeffs[xi(k - 1)] = s;
        dn.coeffs[eta(k - 1)] = -c;
        g.rows.ineq.push_back(std::move(dn));
    }
    {
        LinearRow r;  // xi_1 >= 0
        r.coeffs.assign(nv, 0.0);
        r.coeffs[xi(1)] = -1.0;
        g.rows.ineq.push_back(std::move(r));
    }
    {
        LinearRow r;  // eta_1 >= 0
        r.coeffs.assign(nv, 0.0);
        r.coeffs[eta(1)] = -1.0;
        g.rows.ineq.push_back(std::move(r));
    }
    {
        LinearRow r;  // xi_m <= 1
        r.coeffs.assign(nv, 0.0);
        r.coeffs[xi(m)] = 1.0;
        r.rhs = 1.0;
        g.rows.ineq.push_back(std::move(r));
    }
    {
        LinearRow r;  // eta_m <= pi / 2^m
        r.coeffs.assign(nv, 0.0);
        r.coeffs[eta(m)] = 1.0;
        r.rhs = kPi / std::pow(2.0, m);
        g.rows.ineq.push_back(std::move(r));
    }

    g.projection.rows = 2;
    g.projection.cols = nv;
    g.projection.a.assign(2 * nv, 0.0);
    g.projection.at(0, xi(1)) = 1.0;
    g.projection.at(1, eta(1)) = 1.0;
    return g;
}

bool quarter_member(const GadgetSpec& g, double xi, double eta, double feastol) {
    return member_projection({xi, eta}, g.rows, g.projection, feastol);
}

namespace {

struct TowerBuilder {
    HPolytope poly;
    int m = 0;
    std::size_t next_var = 0;

    std::size_t alloc() {
        ++poly.dim;
        return next_var++;
    }

    void grow_rows() {
        for (auto& r : poly.ineq) r.coeffs.resize(poly.dim, 0.0);
        for (auto& r : poly.eq) r.coeffs.resize(poly.dim, 0.0);
    }

    LinearRow blank() const {
        LinearRow r;
        r.coeffs.assign(poly.dim, 0.0);
        return r;
    }

    // |x_var| <= bound_var
    void leaf(std::size_t x_var, std::size_t bound_var) {
        LinearRow a = blank();
        a.coeffs[x_var] = 1.0;
        a.coeffs[bound_var] = -1.0;
        poly.ineq.push_back(std::move(a));
        LinearRow b = blank();
        b.coeffs[x_var] = -1.0;
        b.coeffs[bound_var] = -1.0;
        poly.ineq.push_back(std::move(b));
    }

    // Gadget with inputs (xi_1, eta_1) = (u, v); the output bound is the
    // variable `out`, or the constant 1 at the root (out == npos).
    void gadget(std::size_t u, std::size_t v, std::size_t out) {
        std::size_t prev_xi = u, prev_eta = v;
        for (int k = 2; k <= m; ++k) {
            const double c = std::cos(kPi / std::pow(2.0, k));
            const double s = std::sin(kPi / std::pow(2.0, k));
            const std::size_t xk = alloc();
            const std::size_t ek = alloc();
            grow_rows();
            LinearRow rot = blank();
            rot.coeffs[xk] = 1.0;
            rot.coeffs[prev_xi] = -c;
            rot.coeffs[prev_eta] = -s;
            poly.eq.push_back(std::move(rot));
            LinearRow up = blank();
            up.coeffs[ek] = -1.0;
            up.coeffs[prev_xi] = -s;
            up.coeffs[prev_eta] = c;
            poly.ineq.push_back(std::move(up));
            LinearRow dn = blank();
            dn.coeffs[ek] = -1.0;
            dn.coeffs[prev_xi] = s;
            dn.coeffs[prev_eta] = -c;
            poly.ineq.push_back(std::move(dn));
            prev_xi = xk;
            prev_eta = ek;
        }
        const double tip = kPi / std::pow(2.0, m);
        LinearRow top = blank();
        top.coeffs[prev_xi] = 1.0;
        LinearRow side = blank();
        side.coeffs[prev_eta] = 1.0;
        if (out == static_cast<std::size_t>(-1)) {
            top.rhs = 1.0;
            side.rhs = tip;
        } else {
            top.coeffs[out] = -1.0;
            side.coeffs[out] = -tip;
        }
        poly.ineq.push_back(std::move(top));
        poly.ineq.push_back(std::move(side));
    }

    // Builds the cone over the coordinate variables [lo, hi); returns the
    // variable bounding their Euclidean norm.
    std::size_t build(std::size_t lo, std::size_t hi) {
        if (hi - lo == 1) {
            const std::size_t u = alloc();
            grow_rows();
            leaf(lo, u);
            return u;
        }
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        const std::size_t ur = build(lo, mid);
        const std::size_t ub = build(mid, hi);
        const std::size_t t = alloc();
        grow_rows();
        gadget(ur, ub, t);
        return t;
    }
};

}  // namespace

Body ball_bn(std::size_t d, int m) {
    if (d < 1) throw std::invalid_argument("ball_bn: d >= 1");
    if (m < 2 || m > 30) throw std::invalid_argument("ball_bn: 2 <= m <= 30");

    TowerBuilder tb;
    tb.m = m;
    for (std::size_t i = 0; i < d; ++i) tb.alloc();  // x coordinates first

    if (d == 1) {
        tb.grow_rows();
        LinearRow a = tb.blank();
        a.coeffs[0] = 1.0;
        a.rhs = 1.0;
        tb.poly.ineq.push_back(std::move(a));
        LinearRow b = tb.blank();
        b.coeffs[0] = -1.0;
        b.rhs = 1.0;
        tb.poly.ineq.push_back(std::move(b));
    } else {
        const std::size_t mid = (d + 1) / 2;
        const std::size_t ur = tb.build(0, mid);
        const std::size_t ub = tb.build(mid, d);
        tb.gadget(ur, ub, static_cast<std::size_t>(-1));  // root: bound = 1
    }

    ProjectedRep rep;
    rep.poly = std::move(tb.poly);
    rep.map.rows = d;
    rep.map.cols = rep.poly.dim;
    rep.map.a.assign(d * rep.poly.dim, 0.0);
    for (std::size_t i = 0; i < d; ++i) rep.map.at(i, i) = 1.0;

    const std::size_t facets = rep.poly.ineq.size();
    if (facets > 3 * d * static_cast<std::size_t>(m))
        throw std::logic_error("ball_bn: facet count exceeds 3 d m");
    return Body{rep, true};
}

std::size_t ball_bn_facets(const Body& b) {
    const auto* p = std::get_if<ProjectedRep>(&b.rep);
    if (p == nullptr) throw std::invalid_argument("ball_bn_facets: projected body required");
    return p->poly.ineq.size();
}

std::size_t ball_bn_equalities(const Body& b) {
    const auto* p = std::get_if<ProjectedRep>(&b.rep);
    if (p == nullptr) throw std::invalid_argument("ball_bn_equalities: projected body required");
    return p->poly.eq.size();
}

}  // namespace cvx
