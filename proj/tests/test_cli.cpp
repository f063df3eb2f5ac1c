#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cvx/body_json.hpp"
#include "cvx/experiments.hpp"

using namespace cvx;

TEST_CASE("zoo shorthands parse") {
    const Body cross = parse_body(R"({"zoo":"cross","d":3})");
    CHECK(body_kind(cross) == "vrep");
    CHECK(std::get<VRep>(cross.rep).points.size() == 6);
    CHECK(body_dim(cross) == 3);

    const Body tsp = parse_body(R"({"zoo":"tsp","n":5})");
    CHECK(std::get<VRep>(tsp.rep).points.size() == 12);
    CHECK(body_dim(tsp) == 5);

    const Body cube = parse_body(R"({"zoo":"cube","d":4})");
    CHECK(body_kind(cube) == "hrep");
    CHECK(std::get<HRep>(cube.rep).ineq.size() == 8);

    CHECK(body_kind(parse_body(R"({"zoo":"lpball","d":2,"p":1})")) == "vrep");
    CHECK(body_kind(parse_body(R"({"zoo":"ball","d":5})")) == "ball");
}

TEST_CASE("schema violations name the offending field") {
    CHECK_THROWS_WITH_AS(parse_body(R"({"type":"vrep","points":[[1]]})"),
                         doctest::Contains("points"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_body(R"({"zoo":"lpball","d":2,"p":3})"), doctest::Contains("p"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_body(R"({"foo":1})"), doctest::Contains("type"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_body(R"({"type":"hrep","rows":[[1,0]],"rhs":[1,2]})"),
                         doctest::Contains("rhs"), std::invalid_argument);
    CHECK_THROWS(parse_body("not json"));
}

TEST_CASE("body JSON round trips preserve geometry") {
    for (const char* text : {
             R"({"zoo":"cross","d":3})",
             R"({"zoo":"cube","d":2})",
             R"({"type":"ellipsoid","center":[0,0],"form":[[2,0],[0,1]]})",
         }) {
        const Body b = parse_body(text);
        const Body b2 = parse_body(body_to_json(b));
        CHECK(body_kind(b) == body_kind(b2));
        CHECK(body_dim(b) == body_dim(b2));
        const auto dirs = sample_unit_sphere(body_dim(b), 16, Seed{3});
        for (const auto& c : dirs)
            CHECK(support(b, c) == doctest::Approx(support(b2, c)).epsilon(1e-12));
    }
}

TEST_CASE("experiment registry rejects unknown names helpfully") {
    ExperimentConfig cfg;
    cfg.name = "does-not-exist";
    CHECK_THROWS_WITH_AS(run_experiment(cfg), doctest::Contains("john-cube"),
                         std::invalid_argument);
    CHECK(experiment_names().size() == 13);
}

TEST_CASE("CSV format is exactly the pinned column set") {
    Report r;
    CHECK(emit_csv(r) == "experiment,instance,metric,value,bound,pass,seed,tol,runtime_ms\n");

    ReportRow row;
    row.experiment = "demo";
    row.instance = "a";
    row.metric = "certified-x";
    row.value = 1.5;
    row.bound = 2.0;
    row.pass = true;
    row.seed = 7;
    row.tol = 1e-6;
    row.runtime_ms = 3;
    r.rows.push_back(row);
    const std::string csv = emit_csv(r);
    CHECK(csv == "experiment,instance,metric,value,bound,pass,seed,tol,runtime_ms\n"
                 "demo,a,certified-x,1.5,2,true,7,1e-06,3\n");
}

TEST_CASE("JSON reports round trip") {
    ExperimentConfig cfg;
    cfg.name = "power-norm";
    cfg.params["dirs"] = 500;
    const Report rep = run_experiment(cfg);
    const Report back = parse_report_json(emit_json(rep));
    REQUIRE(back.rows.size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(back.rows[i].experiment == rep.rows[i].experiment);
        CHECK(back.rows[i].metric == rep.rows[i].metric);
        CHECK(back.rows[i].value == rep.rows[i].value);
        CHECK(back.rows[i].pass == rep.rows[i].pass);
    }
}

TEST_CASE("reports are deterministic for identical configs (runtime column aside)") {
    ExperimentConfig cfg;
    cfg.name = "power-norm";
    cfg.seed = 99;
    cfg.params["dirs"] = 800;
    const Report a = run_experiment(cfg);
    const Report b = run_experiment(cfg);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].value == b.rows[i].value);
        CHECK(a.rows[i].bound == b.rows[i].bound);
        CHECK(a.rows[i].pass == b.rows[i].pass);
        CHECK(a.rows[i].seed == b.rows[i].seed);
        CHECK(a.rows[i].instance == b.rows[i].instance);
    }
}
