#include <doctest.h>

#include "caslab/harness.hpp"

using namespace caslab;

TEST_CASE("sweep over A2 passes every check") {
    SweepConfig cfg;
    cfg.types = {parse_type("A2")};
    SweepResult res = run_sweep(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.report["summary"]["by_status"].value("fail", 0) == 0);
    // 4 parabolic subsets x all checks, aggregated per context
    CHECK(res.report["results"].size() ==
          4 * harness_check_names().size());
    for (const auto& r : res.report["results"])
        if (r["status"] == "fail") FAIL(r.dump());
}

TEST_CASE("sweep reports the expected negative witness on D4") {
    SweepConfig cfg;
    cfg.types = {parse_type("D4")};
    cfg.all_subsets = false;
    cfg.listed_parabolic = 0b10u;
    SweepResult res = run_sweep(cfg);
    CHECK(res.exit_code == 0);
    bool saw_witness = false;
    for (const auto& r : res.report["results"]) {
        CHECK(r["status"] != "fail");
        if (r["check"] == "admissibility" && r["status"] == "open-case") {
            saw_witness = true;
            CHECK(r["witness"]["detail"].get<std::string>().find("sigma=-2") !=
                  std::string::npos);
            CHECK(r["witness"]["repro"].get<std::string>().find("--type D4") !=
                  std::string::npos);
        }
    }
    CHECK(saw_witness);
}

TEST_CASE("grid validation") {
    SweepConfig cfg;
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
    cfg.types = {parse_type("A2")};
    cfg.checks = {"no-such-check"};
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
    cfg.checks.clear();
    cfg.all_subsets = false;
    cfg.listed_parabolic = 0b100u; // index 3 exceeds rank 2
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
    SweepConfig cfg;
    cfg.types = {parse_type("A3"), parse_type("B2")};
    cfg.checks = {"maxroots", "lifting", "certificate", "cascade-structure"};
    cfg.jobs = 1;
    std::string one = run_sweep(cfg).report.dump(2);
    cfg.jobs = 7;
    std::string many = run_sweep(cfg).report.dump(2);
    CHECK(one == many);
    cfg.jobs = 1;
    CHECK(run_sweep(cfg).report.dump(2) == one);
}

TEST_CASE("types beyond the cap are skipped with nonzero exit") {
    SweepConfig cfg;
    cfg.types = {parse_type("A2"), parse_type("E7")};
    cfg.checks = {"maxroots"};
    SweepResult res = run_sweep(cfg);
    CHECK(res.exit_code == 1);
    int skipped = 0;
    for (const auto& r : res.report["results"])
        if (r["status"] == "skipped") {
            ++skipped;
            CHECK(r["type"] == "E7");
            CHECK(r["witness"]["detail"].get<std::string>().rfind("cap", 0) == 0);
        }
    CHECK(skipped == (1 << 7));
}

TEST_CASE("the D-series counting table matches the closed forms") {
    bool ok = false;
    Json table = golden_counts(ok);
    CHECK(ok);
    REQUIRE(table["rows"].size() == 6);
    const std::vector<std::pair<int, std::string>> expect = {
        {2, "1"}, {4, "6"}, {4, "3"}, {6, "30"}, {6, "15"}, {8, "210"}};
    for (size_t i = 0; i < expect.size(); ++i) {
        CHECK(table["rows"][i]["r"].get<int>() == expect[i].first);
        CHECK(table["rows"][i]["N"].get<std::string>() == expect[i].second);
        CHECK(table["rows"][i]["match"].get<bool>());
    }
}
