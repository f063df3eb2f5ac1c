#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cvx/sdprelax.hpp"

using namespace cvx;

namespace {

SymMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    SymMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("cut_relax_member basics") {
    CHECK(cut_relax_member(SymMatrix::identity(3)));
    for (const auto& v : make_cut_vertices(4)) CHECK(cut_relax_member(v));

    const SymMatrix bad = from_rows({{1, 1, -1}, {1, 1, 1}, {-1, 1, 1}});
    CHECK_FALSE(cut_relax_member(bad));
    CHECK_FALSE(is_psd_eigen_oracle(bad, 1e-9));  // the eigenvalue oracle agrees

    SymMatrix wrong_diag = SymMatrix::identity(2);
    wrong_diag.set(0, 0, 2.0);
    CHECK_THROWS_AS(cut_relax_member(wrong_diag), std::invalid_argument);
}

TEST_CASE("cut_brute_member basics") {
    // The identity is the uniform average of all cut vertices.
    CHECK(cut_brute_member(SymMatrix::identity(3), 3));
    for (const auto& v : make_cut_vertices(3)) CHECK(cut_brute_member(v, 3));
    CHECK_FALSE(cut_brute_member(from_rows({{1, 1, -1}, {1, 1, 1}, {-1, 1, 1}}), 3));
}

TEST_CASE("CUT_n sits inside its PSD relaxation for n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& v : make_cut_vertices(n)) CHECK(cut_relax_member(v));
}

TEST_CASE("the relaxation equals CUT_2 exactly") {
    CounterRng rng(Seed{61});
    int tested = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const double rho = 2.0 * rng.uniform(trial) - 1.0;
        const SymMatrix m = from_rows({{1, rho}, {rho, 1}});
        REQUIRE(cut_relax_member(m));
        CHECK(cut_brute_member(m, 2));
        ++tested;
    }
    CHECK(tested == 200);
}

TEST_CASE("cut_ratio at n=2 is 1 within 1e-6") {
    const double r = cut_ratio(2, 30, Seed{62});
    CHECK(r == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("cut_ratio at n=3 reports a finite sampled value >= 1") {
    const double r = cut_ratio(3, 10, Seed{63});
    CHECK(r >= 1.0);
    CHECK(r < 64.0);
}

TEST_CASE("cut_ratio is nondecreasing in the sample count under nested seeds") {
    const double r1 = cut_ratio(3, 4, Seed{64});
    const double r2 = cut_ratio(3, 8, Seed{64});
    CHECK(r2 >= r1 - 1e-12);
}

TEST_CASE("q_member: asymmetric cut vertices are feasible with a checkable witness") {
    for (int n : {2, 3, 4}) {
        for (const auto& xy : make_acut_vertices(n)) {
            const auto res = q_member(xy, n, 1e-7);
            REQUIRE(res.status == QStatus::Feasible);
            // Witness: PSD, unit diagonal, the right corner.
            CHECK(is_psd(res.witness, 1e-6));
            for (std::size_t i = 0; i < 2 * std::size_t(n); ++i)
                CHECK(res.witness(i, i) == doctest::Approx(1.0));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    CHECK(res.witness(i, n + j) == doctest::Approx(xy[i * n + j]));
        }
    }
}

TEST_CASE("q_member: the zero corner is feasible") {
    const std::vector<double> zero(9, 0.0);
    const auto res = q_member(zero, 3, 1e-7);
    CHECK(res.status == QStatus::Feasible);
}

TEST_CASE("q_member: an entry of magnitude 2 is certified infeasible") {
    std::vector<double> x(4, 0.0);
    x[1] = 2.0;
    const auto res = q_member(x, 2, 1e-7);
    CHECK(res.status == QStatus::Infeasible);
}

TEST_CASE("sampled Q_n points scaled by the inverse Grothendieck bound reach ACUT_n") {
    // Q_n points: corners of random unit-diagonal PSD Gram matrices.
    const int n = 3;
    const auto acut = make_acut_vertices(n);
    std::vector<Vector> flat;
    for (const auto& v : acut) flat.push_back(Vector(v.begin(), v.end()));
    const double kappa = 1.7822;

    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto gram_vecs = sample_unit_sphere(2 * n, 2 * n, Seed{std::uint64_t(700 + trial)});
        Vector corner(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                corner[i * n + j] = dot(gram_vecs[i], gram_vecs[n + j]);
        Vector scaled = (1.0 / kappa) * corner;
        CHECK(member_vrep(scaled, flat, 1e-9));
        ++checked;
    }
    CHECK(checked == 20);
}

TEST_CASE("qv_certify on the square with cross-polytope atoms") {
    const EmpiricalMeasure mu = uniform_measure({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});

    SUBCASE("v = 0 gives a PSD moment matrix") {
        CHECK(qv_certify(mu, 1, {0.0, 0.0}));
        CHECK(qv_certify(mu, 2, {0.0, 0.0}));
    }
    SUBCASE("vertices of the square are accepted") {
        for (const Vector v : {Vector{1, 1}, Vector{1, -1}, Vector{-1, 1}, Vector{-1, -1}})
            CHECK(qv_certify(mu, 1, v));
    }
    SUBCASE("v = (3,0) is rejected at k=1, matching the hand-computed gram") {
        const QvForm f = build_qv(mu, 1, {3.0, 0.0});
        REQUIRE(f.basis.size() == 3);
        // Locate the constant and the x monomial in the enumerated basis.
        std::size_t c_idx = 3, x_idx = 3;
        for (std::size_t a = 0; a < 3; ++a) {
            if (f.basis[a] == std::vector<std::size_t>{0, 0}) c_idx = a;
            if (f.basis[a] == std::vector<std::size_t>{1, 0}) x_idx = a;
        }
        REQUIRE(c_idx < 3);
        REQUIRE(x_idx < 3);
        // By direct summation over the four atoms.
        CHECK(f.gram(c_idx, c_idx) == doctest::Approx(1.0));
        CHECK(f.gram(c_idx, x_idx) == doctest::Approx(-1.5));
        CHECK(f.gram(x_idx, x_idx) == doctest::Approx(0.5));
        CHECK_FALSE(qv_certify(mu, 1, {3.0, 0.0}));
        CHECK_FALSE(is_psd_eigen_oracle(f.gram, 1e-9));
    }
    SUBCASE("X_2 is contained in X_1 on a grid") {
        for (int gx = 0; gx <= 40; ++gx)
            for (int gy = 0; gy <= 40; ++gy) {
                const Vector v = {-2.0 + gx * 0.1, -2.0 + gy * 0.1};
                if (qv_certify(mu, 2, v)) CHECK(qv_certify(mu, 1, v));
            }
    }
}

TEST_CASE("qv_certify rejects degenerate atom sets") {
    const EmpiricalMeasure thin = uniform_measure({{1, 0}, {-1, 0}});
    CHECK_THROWS(qv_certify(thin, 1, {0.0, 0.0}));
}
