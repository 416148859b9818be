#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "io/config.hpp"
#include "io/csv.hpp"
#include "io/synth.hpp"
#include "run/run.hpp"
#include "support.hpp"

using namespace ehplan;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("ehplan_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("synthetic year: determinism, night irradiance, round trip") {
    const YearSeries a = synth_year(123, "industrial-park-default");
    const YearSeries b = synth_year(123, "industrial-park-default");
    const YearSeries c = synth_year(124, "industrial-park-default");
    REQUIRE(a.records.size() == 8760);
    bool identical = true, differs = false;
    for (size_t i = 0; i < a.records.size(); ++i) {
        identical = identical && a.records[i].load_e == b.records[i].load_e &&
                    a.records[i].wind_speed == b.records[i].wind_speed;
        differs = differs || a.records[i].load_e != c.records[i].load_e;
    }
    CHECK(identical);
    CHECK(differs);

    for (int day = 0; day < 365; ++day) {
        for (int hour = 0; hour < 24; ++hour) {
            if (solar_elevation_deg(day, hour, 38.0) <= 0.0) {
                CHECK(a.records[day * 24 + hour].irradiance == 0.0);
            }
        }
    }

    TempDir tmp;
    write_year_csv(a, tmp.file("year.csv"));
    const YearSeries back = ingest_year(tmp.file("year.csv"));
    REQUIRE(back.records.size() == a.records.size());
    CHECK(back.records[5000].load_h ==
          doctest::Approx(a.records[5000].load_h).epsilon(1e-5));

    // byte-identical on same seed
    write_year_csv(b, tmp.file("year2.csv"));
    std::ifstream f1(tmp.file("year.csv")), f2(tmp.file("year2.csv"));
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);

    CHECK_THROWS_AS(synth_year(1, "no-such-profile"), Error);
}

TEST_CASE("year ingestion rejects malformed input") {
    TempDir tmp;
    auto write = [&](const char* name, const std::string& text) {
        std::ofstream out(tmp.file(name));
        out << text;
        return tmp.file(name);
    };
    CHECK_THROWS_AS(ingest_year(tmp.file("missing.csv")), Error);
    CHECK_THROWS_AS(ingest_year(write("empty.csv", std::string(kYearCsvHeader) + "\n")), Error);
    CHECK_THROWS_AS(ingest_year(write("header.csv", "hour,nope\n0,1\n")), Error);
    const std::string h(kYearCsvHeader);
    CHECK_THROWS_AS(ingest_year(write("negwind.csv", h + "\n0,1,1,1,-1,0,500\n")), Error);
    CHECK_THROWS_AS(ingest_year(write("badnum.csv", h + "\n0,1,1,x,5,0,500\n")), Error);
    CHECK_THROWS_AS(ingest_year(write("fields.csv", h + "\n0,1,1\n")), Error);
    CHECK_THROWS_AS(ingest_year(write("seq.csv", h + "\n1,1,1,1,5,0,500\n")), Error);
    // error message carries the line number
    try {
        ingest_year(write("line.csv", h + "\n0,1,1,1,5,0,500\n1,1,-2,1,5,0,500\n"));
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("catalog round trip and defaults") {
    const Catalog cat = default_catalog();
    CHECK(cat.devices.size() == 20);
    CHECK(cat.res_options.size() == 2);
    CHECK(cat.ess_options.size() == 3);

    TempDir tmp;
    write_catalog(cat, tmp.file("cat.json"));
    const Catalog back = load_catalog(tmp.file("cat.json"));
    REQUIRE(back.devices.size() == cat.devices.size());
    CHECK(back.devices[0].invest_cost == cat.devices[0].invest_cost);
    CHECK(back.devices[0].coupling.c[1][1] == cat.devices[0].coupling.c[1][1]);
    CHECK(back.res_options[0].rated_power == cat.res_options[0].rated_power);
    CHECK(back.ess_options[2].maintenance_rate == cat.ess_options[2].maintenance_rate);
    CHECK_THROWS_AS(load_catalog(tmp.file("nope.json")), Error);
}

TEST_CASE("run config: load, override, unknown keys") {
    TempDir tmp;
    {
        std::ofstream out(tmp.file("cfg.json"));
        out << R"({"alpha":0.9,"beta":0.8,"beta_list":[0.1,0.5],"case_preset":"case2"})";
    }
    RunConfig cfg = load_run_config(tmp.file("cfg.json"));
    CHECK(cfg.alpha == 0.9);
    CHECK(cfg.beta == 0.8);
    CHECK(cfg.beta_list == std::vector<double>{0.1, 0.5});
    CHECK(cfg.case_preset == "case2");
    CHECK(cfg.gas_price_rmb_per_mwh() == doctest::Approx(340.0).epsilon(1e-12));

    apply_override(cfg, "beta", "0.25");
    CHECK(cfg.beta == 0.25);
    apply_override(cfg, "alpha_list", "0.9,0.95,0.99");
    CHECK(cfg.alpha_list.size() == 3);
    CHECK_THROWS_AS(apply_override(cfg, "no_such_key", "1"), Error);
    CHECK_THROWS_AS(apply_override(cfg, "beta", "2.0"), Error);
    CHECK_THROWS_AS(apply_override(cfg, "alpha", "abc"), Error);

    {
        std::ofstream out(tmp.file("bad.json"));
        out << R"({"alfa":0.9})";
    }
    CHECK_THROWS_AS(load_run_config(tmp.file("bad.json")), Error);
}

TEST_CASE("case presets filter the pool") {
    const Catalog cat = default_catalog();
    CHECK(apply_case_preset(cat, "case1").res_options.empty());
    CHECK(apply_case_preset(cat, "case1").ess_options.empty());
    CHECK(apply_case_preset(cat, "case2").res_options.size() == 2);
    CHECK(apply_case_preset(cat, "case2").ess_options.empty());
    CHECK(apply_case_preset(cat, "case3").res_options.empty());
    CHECK(apply_case_preset(cat, "case3").ess_options.size() == 3);
    CHECK(apply_case_preset(cat, "case4").res_options.size() == 2);
    CHECK(apply_case_preset(cat, "case4").ess_options.size() == 3);
}

TEST_CASE("reduction trace csv") {
    TempDir tmp;
    write_reduction_trace_csv({{1, 7, 3, 0.25}}, tmp.file("trace.csv"));
    std::ifstream in(tmp.file("trace.csv"));
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "iteration,removed_id,absorbed_by,pd_value");
    CHECK(row == "1,7,3,0.25");
}
