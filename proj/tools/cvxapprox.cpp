#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "cvx/body_json.hpp"
#include "cvx/ellipsoid.hpp"
#include "cvx/experiments.hpp"
#include "cvx/polyapprox.hpp"
#include "cvx/polynorm.hpp"
#include "cvx/sdprelax.hpp"
#include "cvx/socone.hpp"
#include "cvx/softapprox.hpp"

namespace {

using namespace cvx;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Body load_body(const std::string& json_arg, const std::string& file_arg) {
    if (!json_arg.empty()) return parse_body(json_arg);
    if (!file_arg.empty()) return parse_body(slurp(file_arg));
    throw std::runtime_error("a body is required: pass --json or --file");
}

void describe(const Body& b) {
    std::cout << "kind: " << body_kind(b) << "\n";
    std::cout << "dim: " << body_dim(b) << "\n";
    std::cout << "symmetric: " << (b.symmetric ? "yes" : "no") << "\n";
    if (const auto* v = std::get_if<VRep>(&b.rep)) {
        std::cout << "vertices: " << v->points.size() << "\n";
        std::cout << "affine-hull-dim: " << [&] {
            std::vector<Vector> diffs;
            for (std::size_t i = 1; i < v->points.size(); ++i)
                diffs.push_back(v->points[i] - v->points[0]);
            return orthonormal_span(diffs).size();
        }() << "\n";
    } else if (const auto* h = std::get_if<HRep>(&b.rep)) {
        std::cout << "facets: " << h->ineq.size() << "\n";
        std::cout << "equalities: " << h->eq.size() << "\n";
    } else if (const auto* p = std::get_if<ProjectedRep>(&b.rep)) {
        std::cout << "lifted-dim: " << p->poly.dim << "\n";
        std::cout << "facets: " << p->poly.ineq.size() << "\n";
        std::cout << "equalities: " << p->poly.eq.size() << "\n";
    } else if (const auto* s = std::get_if<SectionedRep>(&b.rep)) {
        std::cout << "lift-vertices: " << s->points.size() << "\n";
        std::cout << "section-dim: " << s->basis.size() << "\n";
    }
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convex body approximation toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = 2026;
    double tol = 1e-6, feastol = 1e-9;
    app.add_option("--seed", seed, "base RNG seed (per-instance streams derive from it)");
    app.add_option("--tol", tol, "certification tolerance");
    app.add_option("--feastol", feastol, "LP feasibility tolerance");

    std::string json_arg, file_arg, out_path, format = "csv";

    // body describe
    auto* body_cmd = app.add_subcommand("body", "body utilities");
    auto* describe_cmd = body_cmd->add_subcommand("describe", "parse and summarize a body");
    describe_cmd->add_option("--json", json_arg, "inline body JSON");
    describe_cmd->add_option("--file", file_arg, "path to body JSON");

    // certify
    std::string x_json, b_json;
    std::size_t dirs = 256;
    auto* certify_cmd = app.add_subcommand("certify", "sandwich certificate X in B in alpha X");
    certify_cmd->add_option("--x", x_json, "inner body JSON")->required();
    certify_cmd->add_option("--b", b_json, "outer body JSON")->required();
    certify_cmd->add_option("--dirs", dirs, "sampled directions");

    // approx group
    auto* approx_cmd = app.add_subcommand("approx", "construct an approximation");
    double eps = 1e-7;
    std::size_t d = 3, k = 2, m_stages = 6, candidates = 2000, stall = 300, samples = 10000;
    std::string zoo = "cross";

    auto* ell_cmd = approx_cmd->add_subcommand("ellipsoid", "inscribed John-type ellipsoid");
    ell_cmd->add_option("--json", json_arg, "symmetric V-rep body JSON");
    ell_cmd->add_option("--file", file_arg, "path to body JSON");
    ell_cmd->add_option("--eps", eps, "Khachiyan duality gap target");

    auto* net_cmd = approx_cmd->add_subcommand("net", "greedy packing net");
    double net_eps = 0.25;
    net_cmd->add_option("--json", json_arg, "symmetric body JSON");
    net_cmd->add_option("--file", file_arg, "path to body JSON");
    net_cmd->add_option("--eps", net_eps, "net separation");
    net_cmd->add_option("--candidates", candidates, "candidate budget");
    net_cmd->add_option("--stall", stall, "consecutive-rejection stop");

    auto* bn_cmd = approx_cmd->add_subcommand("bn", "polyhedral ball lift");
    bn_cmd->add_option("--d", d, "ball dimension")->required();
    bn_cmd->add_option("--m", m_stages, "gadget stages")->required();
    bn_cmd->add_option("--export", out_path, "write the lifted polytope JSON here");

    auto* tensor_cmd = approx_cmd->add_subcommand("tensor", "degree-2k tensor surrogate");
    tensor_cmd->add_option("--zoo", zoo, "cross | cube (polar vertices derived)");
    tensor_cmd->add_option("--d", d, "dimension");
    tensor_cmd->add_option("--k", k, "half degree");
    tensor_cmd->add_option("--polar-json", json_arg, "explicit polar V-rep JSON");
    tensor_cmd->add_option("--out", out_path, "write the surrogate JSON here");

    auto* power_cmd = approx_cmd->add_subcommand("power", "cube power-sum surrogate");
    power_cmd->add_option("--d", d, "dimension")->required();
    power_cmd->add_option("--k", k, "half degree")->required();
    power_cmd->add_option("--samples", samples, "ratio sample count");

    auto* moment_cmd = approx_cmd->add_subcommand("moment", "exterior-angle moment surrogate");
    moment_cmd->add_option("--json", json_arg, "V-rep body JSON (the polar K)");
    moment_cmd->add_option("--file", file_arg, "path to body JSON");
    moment_cmd->add_option("--k", k, "half degree");
    moment_cmd->add_option("--samples", samples, "directions for the angle measure");

    auto* soft_cmd = approx_cmd->add_subcommand("soft", "soft-approximation polytope (cube base)");
    soft_cmd->add_option("--d", d, "dimension");
    soft_cmd->add_option("--k", k, "degree cap");

    auto* sdp_cmd = approx_cmd->add_subcommand("sdp", "cut-polytope PSD relaxation summary");
    int cut_n = 3;
    std::size_t cut_samples = 10;
    std::string corner_json;
    sdp_cmd->add_option("--n", cut_n, "matrix size")->required();
    sdp_cmd->add_option("--samples", cut_samples, "boundary samples for the ratio");
    sdp_cmd->add_option("--corner", corner_json,
                        "n x n corner matrix (JSON array of rows): run the completion test and "
                        "print the witness");

    // experiment group
    auto* exp_cmd = app.add_subcommand("experiment", "run registered experiment suites");
    auto* list_cmd = exp_cmd->add_subcommand("list", "list suite names");
    auto* run_cmd = exp_cmd->add_subcommand("run", "run one suite");
    std::string exp_name;
    std::vector<std::string> param_kv;
    run_cmd->add_option("name", exp_name, "suite name")->required();
    run_cmd->add_option("--param", param_kv, "key=value suite parameters");
    run_cmd->add_option("--out", out_path, "write the report here (default stdout)");
    run_cmd->add_option("--format", format, "csv | json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*describe_cmd) {
            describe(load_body(json_arg, file_arg));
            return 0;
        }
        if (*certify_cmd) {
            const Body x = parse_body(x_json);
            const Body b = parse_body(b_json);
            const auto cert = certify_sandwich(x, b, dirs, Seed{seed}, tol);
            std::cout << "alpha: " << cert.alpha << "\n";
            std::cout << "valid: " << (cert.valid ? "yes" : "no") << "\n";
            std::cout << "inner-mode: " << cert.inner_mode << "\n";
            std::cout << "outer-mode: " << cert.outer_mode << "\n";
            std::cout << "worst-inner-gauge: " << cert.worst_inner_gauge << "\n";
            return cert.valid ? 0 : 1;
        }
        if (*ell_cmd) {
            const Body b = load_body(json_arg, file_arg);
            const Ellipsoid e = john_inner_symmetric(b, eps);
            const auto cert = certify_sandwich(Body{e, true}, b, dirs, Seed{seed}, tol);
            std::cout << body_to_json(Body{e, true}) << "\n";
            std::cerr << "certified alpha: " << cert.alpha << " (valid: " << cert.valid << ")\n";
            return cert.valid ? 0 : 1;
        }
        if (*net_cmd) {
            const Body b = load_body(json_arg, file_arg);
            const auto net = greedy_net(b, net_eps, candidates, stall, Seed{seed});
            std::cout << body_to_json(Body{VRep{net.points}, b.symmetric}) << "\n";
            std::cerr << "points: " << net.points.size() << ", sampled alpha: " << net.cert.alpha
                      << "\n";
            return 0;
        }
        if (*bn_cmd) {
            const Body b = ball_bn(d, int(m_stages));
            std::cerr << "facets: " << ball_bn_facets(b)
                      << ", equalities: " << ball_bn_equalities(b) << "\n";
            write_out(out_path, body_to_json(b) + "\n");
            return 0;
        }
        if (*tensor_cmd) {
            std::vector<Vector> polar;
            if (!json_arg.empty()) {
                const Body pb = parse_body(json_arg);
                const auto* v = std::get_if<VRep>(&pb.rep);
                if (v == nullptr) throw std::runtime_error("--polar-json must be a V-rep body");
                polar = v->points;
            } else if (zoo == "cross") {
                polar = std::get<VRep>(make_cube_vrep(d).rep).points;
            } else if (zoo == "cube") {
                polar = std::get<VRep>(make_cross(d).rep).points;
            } else {
                throw std::runtime_error("tensor: --zoo must be cross or cube");
            }
            const auto s = tensor_lift(polar, k, eps);
            nlohmann::json j;
            j["k"] = s.k;
            j["sym_dim"] = s.sym_dim;
            j["span_dim"] = s.span_dim;
            j["factor"] = s.factor;
            nlohmann::json form = nlohmann::json::array();
            for (std::size_t i = 0; i < s.form.dim(); ++i) {
                nlohmann::json rowj = nlohmann::json::array();
                for (std::size_t jj = 0; jj < s.form.dim(); ++jj) rowj.push_back(s.form(i, jj));
                form.push_back(rowj);
            }
            j["form"] = form;
            write_out(out_path, j.dump(2) + "\n");
            std::cerr << "certified factor: " << s.factor << "\n";
            return 0;
        }
        if (*power_cmd) {
            const auto p = power_sum_norm(d, k);
            const Body cube = make_cube(d);
            const auto dirs2 = sample_unit_sphere(d, samples, Seed{seed});
            double lo = 1e300, hi = 0.0;
            for (const auto& v : dirs2) {
                const double ratio = p.norm_estimate(v) / gauge(cube, v);
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
            std::cout << "ratio-min: " << lo << "\n";
            std::cout << "ratio-max: " << hi << "\n";
            std::cout << "bound: " << std::pow(double(d), 0.5 / double(k)) << "\n";
            return 0;
        }
        if (*moment_cmd) {
            const Body b = load_body(json_arg, file_arg);
            const auto mu = exterior_angle(b, samples, Seed{seed});
            const auto mn = moment_norm(mu, k);
            const auto dirs2 = sample_unit_sphere(body_dim(b), 200, Seed{seed + 1});
            double lo = 1e300, hi = 0.0;
            for (const auto& v : dirs2) {
                const double r = mn.norm_estimate(v);
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
            std::cout << "atoms: " << mu.atoms.size() << "\n";
            std::cout << "norm-min: " << lo << "\nnorm-max: " << hi << "\n";
            return 0;
        }
        if (*soft_cmd) {
            HRep h;
            for (std::size_t i = 0; i < d; ++i) {
                Vector a(d, 0.0);
                a[i] = 1.0;
                h.ineq.push_back(LinearRow{a, 1.0});
                a[i] = -1.0;
                h.ineq.push_back(LinearRow{a, 1.0});
            }
            const auto sp = build_soft(h, LinearMap::identity(d), k, 500, Seed{seed});
            std::cout << "generators: " << sp.generators.size() << "\n";
            std::cout << "cap: " << multiset_count(2 * d, k) << "\n";
            return 0;
        }
        if (*sdp_cmd) {
            if (!corner_json.empty()) {
                const auto j = nlohmann::json::parse(corner_json);
                std::vector<double> corner;
                for (const auto& r : j)
                    for (const auto& v : r) corner.push_back(v.get<double>());
                if (corner.size() != std::size_t(cut_n) * std::size_t(cut_n))
                    throw std::runtime_error("--corner must be an n x n matrix");
                const auto res = q_member(corner, cut_n, tol);
                std::cout << "status: "
                          << (res.status == QStatus::Feasible
                                  ? "feasible"
                                  : res.status == QStatus::Infeasible ? "infeasible"
                                                                      : "undetermined")
                          << "\n";
                if (res.status == QStatus::Feasible) {
                    nlohmann::json w = nlohmann::json::array();
                    for (std::size_t i = 0; i < res.witness.dim(); ++i) {
                        nlohmann::json rowj = nlohmann::json::array();
                        for (std::size_t jj = 0; jj < res.witness.dim(); ++jj)
                            rowj.push_back(res.witness(i, jj));
                        w.push_back(rowj);
                    }
                    std::cout << nlohmann::json{{"witness", w}}.dump() << "\n";
                }
                return res.status == QStatus::Feasible ? 0 : 1;
            }
            const double r = cut_ratio(cut_n, cut_samples, Seed{seed}, feastol);
            std::cout << "sampled-ratio-lower-bound: " << r << "\n";
            int violations = 0;
            for (const auto& v : make_cut_vertices(cut_n))
                if (!cut_relax_member(v, feastol)) ++violations;
            std::cout << "vertex-violations: " << violations << "\n";
            return violations == 0 ? 0 : 1;
        }
        if (*list_cmd) {
            for (const auto& name : experiment_names()) std::cout << name << "\n";
            return 0;
        }
        if (*run_cmd) {
            ExperimentConfig cfg;
            cfg.name = exp_name;
            cfg.seed = seed;
            cfg.tol = tol;
            cfg.feastol = feastol;
            for (const auto& kv : param_kv) {
                const auto pos = kv.find('=');
                if (pos == std::string::npos)
                    throw std::runtime_error("--param expects key=value, got: " + kv);
                cfg.params[kv.substr(0, pos)] = std::stod(kv.substr(pos + 1));
            }
            const Report rep = run_experiment(cfg);
            write_out(out_path, format == "json" ? emit_json(rep) : emit_csv(rep));
            for (const auto& rw : rep.rows)
                if (!rw.pass)
                    std::cerr << "FAIL: " << rw.experiment << "/" << rw.instance << " " << rw.metric
                              << " = " << rw.value << " vs " << rw.bound << "\n";
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
