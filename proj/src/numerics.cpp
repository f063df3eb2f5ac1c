#include "cvx/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cvx {

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector add: dimension mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sub: dimension mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector operator*(double t, const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

Vector& operator+=(Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector add: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

SymMatrix SymMatrix::identity(std::size_t dim) {
    SymMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::outer(const Vector& x) {
    SymMatrix m(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i; j < x.size(); ++j) m.set(i, j, x[i] * x[j]);
    return m;
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::fabs(v));
    return m;
}

double SymMatrix::quad(const Vector& x) const {
    if (x.size() != dim_) throw std::invalid_argument("quad: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) row += a_[i * dim_ + j] * x[j];
        s += x[i] * row;
    }
    return s;
}

Vector SymMatrix::mul(const Vector& x) const {
    if (x.size() != dim_) throw std::invalid_argument("mul: dimension mismatch");
    Vector r(dim_, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) row += a_[i * dim_ + j] * x[j];
        r[i] = row;
    }
    return r;
}

EigenResult sym_eigen(const SymMatrix& m, double tol) {
    const std::size_t n = m.dim();
    if (n == 0) throw std::invalid_argument("sym_eigen: empty matrix");

    // Work on a dense copy; V accumulates the rotations.
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    const double scale = 1.0 + m.max_abs();
    const double off_target = tol * scale;
    const int max_sweeps = 100;

    EigenResult res;
    res.converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::fabs(a[p * n + q]));
        res.sweeps = sweep;
        if (off <= off_target) {
            res.converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::fabs(apq) <= off_target * 1e-3) continue;
                const double app = a[p * n + p], aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p], vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!res.converged) throw std::runtime_error("sym_eigen: Jacobi did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });
    res.values.resize(n);
    res.vectors.assign(n, Vector(n));
    for (std::size_t k = 0; k < n; ++k) {
        res.values[k] = a[order[k] * n + order[k]];
        for (std::size_t i = 0; i < n; ++i) res.vectors[k][i] = v[i * n + order[k]];
    }
    return res;
}

bool is_psd_eigen_oracle(const SymMatrix& m, double tol) {
    const auto eig = sym_eigen(m, 1e-13);
    return eig.values.back() >= -tol * (1.0 + m.max_abs());
}

bool is_psd(const SymMatrix& m, double tol) {
    // Cholesky with diagonal pivoting on m + shift*I. The shifted matrix is
    // PSD iff min eig(m) >= -shift; factorization failure shows a pivot
    // certifiably below zero.
    const std::size_t n = m.dim();
    const double shift = tol * (1.0 + m.max_abs());
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j) + (i == j ? shift : 0.0);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[perm[i] * n + perm[j]]; };

    // Pivot breakeven: tiny negative values from roundoff are tolerated
    // relative to the shifted scale.
    const double floor = -1e-13 * (1.0 + m.max_abs() + shift);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (at(i, i) > at(best, best)) best = i;
        std::swap(perm[k], perm[best]);
        const double piv = at(k, k);
        if (piv <= 0.0) {
            // All remaining diagonal entries <= piv; PSD fails unless the
            // whole trailing block is numerically zero.
            double rem = 0.0;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j) rem = std::max(rem, std::fabs(at(i, j)));
            return rem <= -floor;
        }
        if (piv < floor) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double l = at(i, k) / piv;
            for (std::size_t j = k + 1; j <= i; ++j) {
                const double upd = at(i, j) - l * at(k, j);
                at(i, j) = upd;
                at(j, i) = upd;
            }
        }
    }
    return true;
}

Vector solve_spd(const SymMatrix& a, const Vector& b) {
    const std::size_t n = a.dim();
    if (b.size() != n) throw std::invalid_argument("solve_spd: dimension mismatch");
    std::vector<double> l(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
            if (i == j) {
                if (s <= 0.0) throw std::runtime_error("solve_spd: matrix not positive definite");
                l[i * n + i] = std::sqrt(s);
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l[i * n + k] * y[k];
        y[i] = s / l[i * n + i];
    }
    Vector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = y[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= l[k * n + ii] * x[k];
        x[ii] = s / l[ii * n + ii];
    }
    return x;
}

SymMatrix inverse_spd(const SymMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Vector> cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector e(n, 0.0);
        e[j] = 1.0;
        cols[j] = solve_spd(a, e);
    }
    // Symmetrize against roundoff from the column solves.
    SymMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) out.set(i, j, 0.5 * (cols[j][i] + cols[i][j]));
    return out;
}

namespace {
std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace

std::uint64_t CounterRng::word(std::uint64_t k) const {
    return splitmix64(splitmix64(seed_) ^ (k * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
}

double CounterRng::uniform(std::uint64_t k) const {
    return static_cast<double>(word(k) >> 11) * 0x1.0p-53;
}

double CounterRng::uniform_pos(std::uint64_t k) const {
    return (static_cast<double>(word(k) >> 11) + 1.0) * 0x1.0p-53;
}

double CounterRng::gaussian(std::uint64_t k) const {
    const double u1 = uniform_pos(2 * k);
    const double u2 = uniform(2 * k + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::vector<Vector> sample_unit_sphere(std::size_t d, std::size_t n, Seed seed) {
    if (d < 1) throw std::invalid_argument("sample_unit_sphere: d >= 1 required");
    CounterRng rng(seed);
    std::vector<Vector> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector x(d);
        std::uint64_t base = static_cast<std::uint64_t>(i) * d;
        double nrm = 0.0;
        do {
            for (std::size_t j = 0; j < d; ++j) x[j] = rng.gaussian(base + j);
            nrm = norm2(x);
            // Resample pathologically short vectors from a shifted substream.
            base += static_cast<std::uint64_t>(n) * d + 1;
        } while (nrm < 1e-8);
        for (std::size_t j = 0; j < d; ++j) x[j] /= nrm;
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Vector> orthonormal_span(const std::vector<Vector>& vs, double tol) {
    std::vector<Vector> basis;
    for (const Vector& v0 : vs) {
        Vector v = v0;
        for (int pass = 0; pass < 2; ++pass)
            for (const Vector& b : basis) {
                const double c = dot(v, b);
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
            }
        const double nrm = norm2(v);
        if (nrm > tol * (1.0 + norm2(v0))) basis.push_back((1.0 / nrm) * v);
    }
    return basis;
}

}  // namespace cvx
