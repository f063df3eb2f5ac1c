#include "cvx/polynorm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cvx/ellipsoid.hpp"

namespace cvx {

namespace {

// All exponent vectors alpha with |alpha| = k over d variables, in a
// fixed lexicographic order.
void enumerate_exponents(std::size_t d, std::size_t k, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() + 1 == d) {
        cur.push_back(k - std::accumulate(cur.begin(), cur.end(), std::size_t{0}));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    const std::size_t used = std::accumulate(cur.begin(), cur.end(), std::size_t{0});
    for (std::size_t e = 0; e <= k - used; ++e) {
        cur.push_back(e);
        enumerate_exponents(d, k, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> exponents(std::size_t d, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    enumerate_exponents(d, k, cur, out);
    return out;
}

double multinomial(std::size_t k, const std::vector<std::size_t>& alpha) {
    double r = 1.0;
    std::size_t used = 0;
    for (std::size_t a : alpha) {
        for (std::size_t i = 1; i <= a; ++i) {
            ++used;
            r *= double(used) / double(i);
        }
    }
    (void)k;
    return r;
}

}  // namespace

std::size_t sym_space_dim(std::size_t d, std::size_t k) {
    // C(d+k-1, k)
    double r = 1.0;
    for (std::size_t i = 0; i < k; ++i) r *= double(d + k - 1 - i) / double(k - i);
    return static_cast<std::size_t>(std::llround(r));
}

double alpha_bound(std::size_t d, std::size_t k) {
    if (d < 1 || k < 1) throw std::invalid_argument("alpha_bound: d, k >= 1");
    return std::pow(double(sym_space_dim(d, k)), 1.0 / (2.0 * double(k)));
}

Vector sym_embed(const Vector& v, std::size_t k) {
    const std::size_t d = v.size();
    const auto exps = exponents(d, k);
    Vector out;
    out.reserve(exps.size());
    for (const auto& alpha : exps) {
        double term = std::sqrt(multinomial(k, alpha));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t e = 0; e < alpha[i]; ++e) term *= v[i];
        out.push_back(term);
    }
    return out;
}

double TensorNormSurrogate::evaluate(const Vector& v) const {
    const Vector s = sym_embed(v, k);
    return std::max(0.0, form.quad(s));
}

double TensorNormSurrogate::norm_estimate(const Vector& v) const {
    return std::pow(evaluate(v), 1.0 / (2.0 * double(k)));
}

TensorNormSurrogate tensor_lift(const std::vector<Vector>& bpolar_vertices, std::size_t k,
                                double eps) {
    if (bpolar_vertices.empty()) throw std::invalid_argument("tensor_lift: no polar vertices");
    if (k < 1) throw std::invalid_argument("tensor_lift: k >= 1");
    const std::size_t d = bpolar_vertices[0].size();
    const std::size_t sdim = sym_space_dim(d, k);
    if (sdim > 500) throw std::invalid_argument("tensor_lift: symmetric space dimension above 500");

    {
        const auto span0 = orthonormal_span(bpolar_vertices);
        if (span0.size() < d) {
            for (std::size_t e = 0; e < d; ++e) {
                Vector cand(d, 0.0);
                cand[e] = 1.0;
                for (const auto& s : span0) {
                    const double c = dot(cand, s);
                    for (std::size_t i = 0; i < d; ++i) cand[i] -= c * s[i];
                }
                if (norm2(cand) > 1e-6)
                    throw std::runtime_error(
                        "tensor_lift: polar vertices degenerate, deficient near coordinate " +
                        std::to_string(e));
            }
        }
    }

    std::vector<Vector> tensors;
    tensors.reserve(bpolar_vertices.size());
    for (const auto& l : bpolar_vertices) tensors.push_back(sym_embed(l, k));

    // Work inside the span of the lifted vertices: the John shrink only
    // pays for the dimension the tensors actually occupy.
    const auto span = orthonormal_span(tensors, 1e-11);
    const std::size_t sdim_eff = span.size();
    std::vector<Vector> coords;
    coords.reserve(tensors.size());
    for (const auto& t : tensors) {
        Vector z(sdim_eff);
        for (std::size_t a = 0; a < sdim_eff; ++a) z[a] = dot(span[a], t);
        coords.push_back(std::move(z));
    }

    const MveeResult mv = loewner_mvee(coords, eps, true);
    // form in span coordinates: F'^{-1} / span_dim where F' is the
    // enclosing form; lift back to the ambient symmetric space.
    const SymMatrix finv = inverse_spd(mv.ellipsoid.form);
    TensorNormSurrogate out;
    out.k = k;
    out.dim = d;
    out.sym_dim = sdim;
    out.span_dim = sdim_eff;
    out.factor = std::pow(double(sdim_eff) * (1.0 + mv.gap), 1.0 / (2.0 * double(k)));
    out.form = SymMatrix(sdim);
    for (std::size_t a = 0; a < sdim; ++a)
        for (std::size_t b = a; b < sdim; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < sdim_eff; ++i)
                for (std::size_t j = 0; j < sdim_eff; ++j)
                    s += span[i][a] * finv(i, j) * span[j][b];
            out.form.set(a, b, s / double(sdim_eff));
        }

    // Sampled sandwich verification: gauge_B(v) = max_j <l_j, v> (the
    // vertex list carries both signs for a symmetric polar).
    const auto dirs = sample_unit_sphere(d, 256, Seed{0x7e50ull});
    for (const auto& v : dirs) {
        double g = 0.0;
        for (const auto& l : bpolar_vertices) g = std::max(g, dot(l, v));
        const double pe = out.norm_estimate(v);
        if (pe > g * (1.0 + 1e-9) || g > out.factor * pe * (1.0 + 1e-2))
            throw std::runtime_error("tensor_lift: sampled sandwich verification failed");
    }
    return out;
}

double PowerSumNorm::evaluate(const Vector& v) const {
    if (v.size() != d) throw std::invalid_argument("power_sum: dimension mismatch");
    double s = 0.0;
    for (double x : v) s += std::pow(x * x, double(k));
    return s;
}

double PowerSumNorm::norm_estimate(const Vector& v) const {
    return std::pow(evaluate(v), 1.0 / (2.0 * double(k)));
}

PowerSumNorm power_sum_norm(std::size_t d, std::size_t k) {
    if (d < 1 || k < 1) throw std::invalid_argument("power_sum_norm: d, k >= 1");
    return PowerSumNorm{d, k};
}

EmpiricalMeasure uniform_measure(const std::vector<Vector>& atoms) {
    EmpiricalMeasure m;
    m.atoms = atoms;
    m.weights.assign(atoms.size(), 1.0 / double(atoms.size()));
    return m;
}

EmpiricalMeasure exterior_angle(const Body& k_body, std::size_t n_samples, Seed seed) {
    const auto* v = std::get_if<VRep>(&k_body.rep);
    if (v == nullptr) throw std::invalid_argument("exterior_angle: V-rep body required");
    const std::size_t d = body_dim(k_body);
    const auto dirs = sample_unit_sphere(d, n_samples, seed);
    std::vector<std::size_t> hits(v->points.size(), 0);
    for (const auto& c : dirs) {
        std::size_t best = 0;
        double bestval = dot(c, v->points[0]);
        for (std::size_t j = 1; j < v->points.size(); ++j) {
            const double val = dot(c, v->points[j]);
            if (val > bestval + 0.0) {  // ties keep the lowest index
                bestval = val;
                best = j;
            }
        }
        ++hits[best];
    }
    EmpiricalMeasure m;
    m.atoms = v->points;
    m.weights.resize(hits.size());
    for (std::size_t j = 0; j < hits.size(); ++j)
        m.weights[j] = double(hits[j]) / double(n_samples);
    return m;
}

double MomentNorm::evaluate(const Vector& v) const {
    double s = 0.0;
    for (std::size_t i = 0; i < mu.atoms.size(); ++i)
        s += mu.weights[i] * std::pow(dot(mu.atoms[i], v), 2.0 * double(k));
    return s;
}

double MomentNorm::norm_estimate(const Vector& v) const {
    return std::pow(evaluate(v), 1.0 / (2.0 * double(k)));
}

MomentNorm moment_norm(const EmpiricalMeasure& mu, std::size_t k) {
    if (mu.atoms.empty()) throw std::invalid_argument("moment_norm: empty measure");
    double total = 0.0;
    for (double w : mu.weights) {
        if (w < 0.0) throw std::invalid_argument("moment_norm: negative weight");
        total += w;
    }
    if (std::fabs(total - 1.0) > 1e-12)
        throw std::invalid_argument("moment_norm: weights must sum to 1");
    std::vector<Vector> active;
    for (std::size_t i = 0; i < mu.atoms.size(); ++i)
        if (mu.weights[i] > 0.0) active.push_back(mu.atoms[i]);
    if (orthonormal_span(active).size() < mu.atoms[0].size())
        throw std::runtime_error("moment_norm: atoms do not span the dual space");
    return MomentNorm{mu, k};
}

}  // namespace cvx
