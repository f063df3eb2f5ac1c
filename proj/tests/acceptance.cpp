// Acceptance suite: runs every criterion of the library contract at its
// stated tolerance and prints one PASS/FAIL line each. Exit status is
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "cvx/experiments.hpp"

namespace {

struct Criterion {
    int id;
    const char* label;
    const char* suite;
    double time_limit_s;
};

const Criterion kCriteria[] = {
    {1, "John/Loewner sandwich: cube d=2..6 factor sqrt(d) within 1e-3", "john-cube", 10.0},
    {2, "TSP inscribed ellipsoid: n=5,6 outer factor <= (n-3)sqrt(n)/2 + 1e-3", "tsp-ellipsoid", 60.0},
    {3, "eps-net bounds: cardinality, outer factor, ball lower bound", "net-bounds", 30.0},
    {4, "ball lift: twofold error decay, m=6 error <= 2e-3, facets <= 3dm, inner containment",
     "bn-gadget", 60.0},
    {5, "tensor-lift norm: O3 k=2 ratios within [1-1e-9, 6^{1/4} * 1.01]; interval exact",
     "tensor-lift", 60.0},
    {6, "cube power norm: d=4 k=2 ratios in [1, 4^{1/4}], worst direction exact", "power-norm", 5.0},
    {7, "CUT relaxation: n=2 ratio 1 +- 1e-6; n=3..5 vertices inside, finite sampled ratio",
     "cut-ratio", 120.0},
    {8, "Grothendieck sandwich: ACUT vertices complete; scaled Q_n corners in ACUT",
     "groth-sandwich", 120.0},
    {9, "soft approximation: 210 generators, bounded by 1, quadratic error, completeness",
     "soft-approx", 60.0},
    {10, "type-2 estimator: ball -> 1, cross -> sqrt(d), exact to 1e-12 for d <= 10", "type2", 5.0},
    {11, "q_v construction: square accepted, X2 inside X1, (3,0) rejected", "qv-grid", 30.0},
    {12, "oracle equivalences: barycentric membership and PSD decisions", "oracle-equiv", 30.0},
};

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    int failures = 0;
    for (const Criterion& c : kCriteria) {
        cvx::ExperimentConfig cfg;
        cfg.name = c.suite;
        cfg.seed = 2026;
        const auto start = Clock::now();
        bool pass = false;
        std::string detail;
        try {
            const cvx::Report rep = cvx::run_experiment(cfg);
            pass = rep.all_pass();
            int shown = 0;
            for (const auto& row : rep.rows) {
                if (row.pass || shown >= 3) continue;
                detail += " [" + row.instance + " " + row.metric + "=" + std::to_string(row.value) +
                          " bound=" + std::to_string(row.bound) + "]";
                ++shown;
            }
        } catch (const std::exception& e) {
            detail = std::string(" [exception: ") + e.what() + "]";
        }
        const double secs =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count() /
            1000.0;
        if (secs > c.time_limit_s) {
            pass = false;
            detail += " [runtime " + std::to_string(secs) + "s over limit " +
                      std::to_string(c.time_limit_s) + "s]";
        }
        if (!pass) ++failures;
        std::printf("%s criterion %2d (%.2fs): %s%s\n", pass ? "PASS" : "FAIL", c.id, secs,
                    c.label, detail.c_str());
        std::fflush(stdout);
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", std::size(kCriteria));
    return failures == 0 ? 0 : 1;
}
