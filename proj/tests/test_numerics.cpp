#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cvx/numerics.hpp"

using namespace cvx;

namespace {

SymMatrix random_sym(const CounterRng& rng, std::size_t d, std::uint64_t base) {
    SymMatrix m(d);
    std::uint64_t k = base;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) m.set(i, j, 2.0 * rng.uniform(k++) - 1.0);
    return m;
}

double reconstruction_error(const SymMatrix& m, const EigenResult& e) {
    const std::size_t n = m.dim();
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += e.vectors[k][i] * e.values[k] * e.vectors[k][j];
            err = std::max(err, std::fabs(s - m(i, j)));
        }
    return err;
}

}  // namespace

TEST_CASE("sym_eigen on the 3x3 identity") {
    const auto e = sym_eigen(SymMatrix::identity(3));
    REQUIRE(e.values.size() == 3);
    for (double v : e.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sym_eigen of [[1,1],[1,1]] has eigenvalues 2 and 0") {
    // Characteristic polynomial x^2 - 2x = 0 by hand.
    SymMatrix m(2);
    m.set(0, 0, 1.0);
    m.set(0, 1, 1.0);
    m.set(1, 1, 1.0);
    const auto e = sym_eigen(m);
    CHECK(e.values[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("sym_eigen of diag(5,-2) is sorted descending") {
    SymMatrix m(2);
    m.set(0, 0, 5.0);
    m.set(1, 1, -2.0);
    const auto e = sym_eigen(m);
    CHECK(e.values[0] == doctest::Approx(5.0));
    CHECK(e.values[1] == doctest::Approx(-2.0));
}

TEST_CASE("sym_eigen reconstruction error on random matrices") {
    CounterRng rng(Seed{7});
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 2 + trial % 9;
        const SymMatrix m = random_sym(rng, d, 1000 * trial);
        const auto e = sym_eigen(m, 1e-12);
        CHECK(reconstruction_error(m, e) <= 1e-10 * (1.0 + m.max_abs()));
        for (std::size_t k = 0; k + 1 < e.values.size(); ++k) CHECK(e.values[k] >= e.values[k + 1]);
    }
}

TEST_CASE("is_psd basic cases") {
    CHECK(is_psd(SymMatrix::identity(4)));

    SymMatrix m(2);
    m.set(0, 0, 1.0);
    m.set(0, 1, 2.0);
    m.set(1, 1, 1.0);
    CHECK_FALSE(is_psd(m));  // eigenvalues 3 and -1

    const Vector x = {1.0, -1.0, 1.0};
    CHECK(is_psd(SymMatrix::outer(x)));
}

TEST_CASE("is_psd agrees with the eigenvalue oracle on 1000 random matrices") {
    CounterRng rng(Seed{11});
    int psd_count = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = 1 + trial % 20;
        SymMatrix m = random_sym(rng, d, 4000ull * trial);
        // Mix in some PSD instances (Gram matrices) so both answers occur.
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
        const bool fast = is_psd(m, 1e-9);
        const bool oracle = is_psd_eigen_oracle(m, 1e-9);
        REQUIRE(fast == oracle);
        psd_count += fast ? 1 : 0;
    }
    CHECK(psd_count > 100);
    CHECK(psd_count < 900);
}

TEST_CASE("sample_unit_sphere basics") {
    SUBCASE("d=1 gives signs") {
        const auto pts = sample_unit_sphere(1, 64, Seed{3});
        for (const auto& p : pts) CHECK(std::fabs(std::fabs(p[0]) - 1.0) < 1e-12);
    }
    SUBCASE("norms are 1 within 1e-12") {
        const auto pts = sample_unit_sphere(5, 200, Seed{4});
        for (const auto& p : pts) CHECK(std::fabs(norm2(p) - 1.0) < 1e-12);
    }
    SUBCASE("empirical mean is near zero (central limit)") {
        const std::size_t n = 100000;
        const auto pts = sample_unit_sphere(3, n, Seed{5});
        Vector mean(3, 0.0);
        for (const auto& p : pts) mean += p;
        for (double& c : mean) c /= static_cast<double>(n);
        for (double c : mean) CHECK(std::fabs(c) < 4.0 / std::sqrt(static_cast<double>(n)));
    }
    SUBCASE("same seed reproduces the stream exactly") {
        const auto a = sample_unit_sphere(4, 50, Seed{42});
        const auto b = sample_unit_sphere(4, 50, Seed{42});
        CHECK(a == b);
        const auto c = sample_unit_sphere(4, 50, Seed{43});
        CHECK(a != c);
    }
}

TEST_CASE("solve_spd and inverse_spd round trip") {
    CounterRng rng(Seed{9});
    SymMatrix m = random_sym(rng, 6, 0);
    SymMatrix g(6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i; j < 6; ++j) {
            double s = i == j ? 0.5 : 0.0;
            for (std::size_t k = 0; k < 6; ++k) s += m(i, k) * m(j, k);
            g.set(i, j, s);
        }
    const Vector b = {1, -2, 3, 0.5, -0.25, 2};
    const Vector x = solve_spd(g, b);
    const Vector gx = g.mul(x);
    for (std::size_t i = 0; i < 6; ++i) CHECK(gx[i] == doctest::Approx(b[i]).epsilon(1e-9));

    const SymMatrix inv = inverse_spd(g);
    const Vector y = inv.mul(b);
    for (std::size_t i = 0; i < 6; ++i) CHECK(y[i] == doctest::Approx(x[i]).epsilon(1e-8));
}

TEST_CASE("orthonormal_span drops dependent directions") {
    const std::vector<Vector> vs = {{1, 0, 0}, {2, 0, 0}, {0, 3, 0}, {1, 1, 0}};
    const auto basis = orthonormal_span(vs);
    REQUIRE(basis.size() == 2);
    CHECK(std::fabs(dot(basis[0], basis[1])) < 1e-12);
    CHECK(norm2(basis[0]) == doctest::Approx(1.0));
}
