#pragma once

#include "cvx/bodies.hpp"
#include "cvx/numerics.hpp"

namespace cvx {

/// Number of degree-k monomials in d variables: C(d+k-1, k).
std::size_t sym_space_dim(std::size_t d, std::size_t k);

/// C(d+k-1, k)^{1/2k}: the approximation factor of the degree-2k
/// polynomial surrogate.
double alpha_bound(std::size_t d, std::size_t k);

/// Symmetric-power embedding with multinomial weights, so that
/// <embed(u), embed(v)> = <u, v>^k.
Vector sym_embed(const Vector& v, std::size_t k);

/// Degree-2k sum-of-squares surrogate p(v) = s(v)^T A s(v) with
/// p^{1/2k} <= gauge_B <= factor * p^{1/2k}.
struct TensorNormSurrogate {
    std::size_t k = 1;
    std::size_t dim = 0;       // ambient dimension d
    std::size_t sym_dim = 0;   // C(d+k-1, k)
    std::size_t span_dim = 0;  // dimension actually spanned by the lifted vertices
    SymMatrix form;            // A on the full symmetric space, PSD
    double factor = 1.0;       // span_dim^{1/2k} (never above alpha_bound)

    double evaluate(const Vector& v) const;        // p(v)
    double norm_estimate(const Vector& v) const;   // p(v)^{1/2k}
};

/// Tensor lift: embed the polar's vertices as symmetric tensors, enclose
/// them with a centered Loewner ellipsoid inside their span, and read
/// the surrogate off the inscribed (1/sqrt(span_dim)) shrink. The
/// sampled sandwich is verified before returning.
TensorNormSurrogate tensor_lift(const std::vector<Vector>& bpolar_vertices, std::size_t k,
                                double eps);

/// The cube surrogate p(x) = sum x_i^{2k} with factor d^{1/2k}.
struct PowerSumNorm {
    std::size_t d = 0, k = 1;
    double evaluate(const Vector& v) const;
    double norm_estimate(const Vector& v) const;
};
PowerSumNorm power_sum_norm(std::size_t d, std::size_t k);

/// Finitely supported probability measure (atoms on the polar).
struct EmpiricalMeasure {
    std::vector<Vector> atoms;
    Vector weights;  // nonnegative, sums to 1
};

EmpiricalMeasure uniform_measure(const std::vector<Vector>& atoms);

/// Empirical exterior-angle measure of a V-polytope: the fraction of
/// uniformly random unit directions whose maximum over K is attained at
/// each vertex; ties break to the lowest vertex index.
EmpiricalMeasure exterior_angle(const Body& k_body, std::size_t n_samples, Seed seed);

/// p(v) = sum_i w_i <l_i, v>^{2k}: an L^{2k} average of linear
/// functionals, hence an exact norm after the 1/2k power.
struct MomentNorm {
    EmpiricalMeasure mu;
    std::size_t k = 1;
    double evaluate(const Vector& v) const;
    double norm_estimate(const Vector& v) const;
};
MomentNorm moment_norm(const EmpiricalMeasure& mu, std::size_t k);

}  // namespace cvx
