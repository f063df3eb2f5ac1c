#pragma once

#include <map>
#include <string>
#include <vector>

#include "cvx/numerics.hpp"

namespace cvx {

struct ExperimentConfig {
    std::string name;
    std::map<std::string, double> params;
    std::uint64_t seed = 2026;
    double tol = 1e-6;
    double feastol = 1e-9;
};

struct ReportRow {
    std::string experiment;
    std::string instance;
    std::string metric;    // "certified-..." or "sampled-..." per the label rule
    double value = 0.0;
    double bound = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
    double tol = 0.0;
    long runtime_ms = 0;
};

struct Report {
    std::vector<ReportRow> rows;
    bool all_pass() const;
};

/// Names accepted by run_experiment.
std::vector<std::string> experiment_names();

/// Runs a registered suite; deterministic given the config (the
/// runtime_ms column is wall time and is excluded from that guarantee).
/// Throws on unknown names, listing the registry.
Report run_experiment(const ExperimentConfig& cfg);

/// CSV with the exact column set
/// experiment,instance,metric,value,bound,pass,seed,tol,runtime_ms.
std::string emit_csv(const Report& r);
std::string emit_json(const Report& r);
Report parse_report_json(const std::string& text);

}  // namespace cvx
