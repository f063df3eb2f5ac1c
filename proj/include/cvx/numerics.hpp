#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvx {

// Dense coordinate vector in R^d. All geometry in this library is
// desk-scale, so plain contiguous doubles are the right tool.
using Vector = std::vector<double>;

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double t, const Vector& a);
Vector& operator+=(Vector& a, const Vector& b);

/// Symmetric d x d matrix. Entries are stored fully but writes through
/// set() keep the two triangles identical, so (i,j) == (j,i) exactly.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}

    std::size_t dim() const { return dim_; }

    double operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    void set(std::size_t i, std::size_t j, double v) {
        a_[i * dim_ + j] = v;
        a_[j * dim_ + i] = v;
    }
    void add(std::size_t i, std::size_t j, double v) { set(i, j, (*this)(i, j) + v); }

    static SymMatrix identity(std::size_t dim);
    /// Gram matrix x*x^T of a single vector.
    static SymMatrix outer(const Vector& x);

    double max_abs() const;
    /// Quadratic form value x^T A x.
    double quad(const Vector& x) const;
    Vector mul(const Vector& x) const;

    bool operator==(const SymMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }

private:
    std::size_t dim_ = 0;
    std::vector<double> a_;
};

struct EigenResult {
    std::vector<double> values;       // descending
    std::vector<Vector> vectors;      // vectors[k] pairs with values[k], orthonormal
    bool converged = true;
    int sweeps = 0;
};

/// Full symmetric eigendecomposition by cyclic Jacobi rotations.
/// Reconstruction satisfies ||A - V diag(w) V^T||_max <= tol * (1 + ||A||_max).
EigenResult sym_eigen(const SymMatrix& m, double tol = 1e-12);

/// PSD test: true iff min eigenvalue >= -tol * (1 + ||m||_max).
/// Decided by pivoted Cholesky on the shifted matrix; sym_eigen is the
/// independent oracle the test suite compares against.
bool is_psd(const SymMatrix& m, double tol = 1e-9);

/// The eigenvalue route for the same decision, kept separate so the two
/// can disagree in tests if one of them is wrong.
bool is_psd_eigen_oracle(const SymMatrix& m, double tol = 1e-9);

/// Solve A x = b for symmetric positive definite A (Cholesky). Throws on
/// non-PD input.
Vector solve_spd(const SymMatrix& a, const Vector& b);

/// Inverse of a symmetric positive definite matrix.
SymMatrix inverse_spd(const SymMatrix& a);

struct Seed {
    std::uint64_t value = 0;
};

/// Counter-based generator: the k-th draw is a pure function of
/// (seed, k), so partitioned parallel callers reproduce the serial
/// stream exactly. Mixing is SplitMix64.
class CounterRng {
public:
    explicit CounterRng(Seed s) : seed_(s.value) {}

    /// Raw 64-bit word for counter k.
    std::uint64_t word(std::uint64_t k) const;
    /// Uniform in [0,1), from counter k.
    double uniform(std::uint64_t k) const;
    /// Uniform in (0,1], never zero (safe under log).
    double uniform_pos(std::uint64_t k) const;
    /// Standard normal via Box-Muller on counters (2k, 2k+1).
    double gaussian(std::uint64_t k) const;

private:
    std::uint64_t seed_;
};

/// n points drawn from the rotation-invariant (Haar) measure on the unit
/// sphere S^{d-1}: normalized Gaussian vectors, deterministic per seed.
std::vector<Vector> sample_unit_sphere(std::size_t d, std::size_t n, Seed seed);

/// Orthonormal basis (Gram-Schmidt) of the span of the given vectors;
/// directions with residual below tol are dropped.
std::vector<Vector> orthonormal_span(const std::vector<Vector>& vs, double tol = 1e-10);

}  // namespace cvx
