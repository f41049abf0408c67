#include <cstdio>
#include <filesystem>
#include <fstream>

#include "config.hpp"
#include "csv.hpp"
#include "doctest.h"
#include "errors.hpp"

using namespace adcsim;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

} // namespace

TEST_CASE("defaults are the design point") {
    const RunConfig rc = build_run_config(KeyValueDoc{});
    CHECK(rc.adc.vref == 0.6);
    CHECK(rc.adc.fs == 166.6e6);
    CHECK(rc.adc.ota_sharing);
    CHECK(rc.adc.noise_sigma == 0.0);
    for (const auto& p : rc.adc.stages) {
        CHECK(p.gain_error == 0.0);
        CHECK(p.tau == 0.0);
    }
    CHECK(rc.seed == 1);
    CHECK(rc.tone_amp() == 0.6);
    CHECK(rc.ramp_lo() == -0.6);
    CHECK(rc.ramp_hi() == 0.6);
}

TEST_CASE("file parsing with comments and overrides") {
    const std::string path = write_temp("adcsim_cfg_ok.cfg",
                                        "# comment line\n"
                                        "adc.vref = 0.5   # trailing comment\n"
                                        "\n"
                                        "adc.stages.3.tau = 1.2e-9\n"
                                        "adc.stages.3.gain_error = -0.004\n"
                                        "tone.amplitude = 0.44\n"
                                        "seed = 77\n");
    KeyValueDoc doc;
    doc.load_file(path);
    RunConfig rc = build_run_config(doc);
    CHECK(rc.adc.vref == 0.5);
    CHECK(rc.adc.stages[2].tau == 1.2e-9);
    CHECK(rc.adc.stages[2].gain_error == -0.004);
    CHECK(rc.tone_amp() == 0.44);
    CHECK(rc.seed == 77);

    // later set() beats the file value
    doc.set("adc.vref", "0.6");
    CHECK(build_run_config(doc).adc.vref == 0.6);
}

TEST_CASE("unknown keys and bad values name the offender") {
    KeyValueDoc doc;
    doc.set("adc.vreff", "0.6");
    try {
        build_run_config(doc);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("adc.vreff") != std::string::npos);
    }

    KeyValueDoc bad_value;
    bad_value.set("adc.fs", "fast");
    try {
        build_run_config(bad_value);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("adc.fs") != std::string::npos);
        CHECK(std::string(e.what()).find("fast") != std::string::npos);
    }

    KeyValueDoc bad_stage;
    bad_stage.set("adc.stages.7.tau", "1e-9");
    CHECK_THROWS_AS(build_run_config(bad_stage), ConfigError);

    KeyValueDoc bad_line;
    const std::string path = write_temp("adcsim_cfg_bad.cfg", "this is not a pair\n");
    CHECK_THROWS_AS(bad_line.load_file(path), ConfigError);

    KeyValueDoc missing;
    CHECK_THROWS_AS(missing.load_file("/nonexistent/adcsim.cfg"), ConfigError);
}

TEST_CASE("make_ideal zeroes every error knob") {
    KeyValueDoc doc;
    doc.set("adc.sha.tau", "1e-10");
    doc.set("adc.stages.2.gain_error", "-0.007");
    doc.set("adc.flash.shift_1", "0.01");
    doc.set("adc.noise_sigma", "0.002");
    RunConfig rc = build_run_config(doc);
    make_ideal(rc.adc);
    CHECK(rc.adc.sha.tau == 0.0);
    CHECK(rc.adc.stages[1].gain_error == 0.0);
    CHECK(rc.adc.flash_threshold_shifts[0] == 0.0);
    CHECK(rc.adc.noise_sigma == 0.0);
    CHECK(rc.adc.vref == 0.6);  // design point survives
}

TEST_CASE("sweep configuration") {
    KeyValueDoc doc;
    doc.set("sweep.param", "adc.ota_sharing");
    doc.set("sweep.values", "true, false");
    doc.set("sweep.run", "power");
    const RunConfig rc = build_run_config(doc);
    CHECK(rc.sweep_param == "adc.ota_sharing");
    REQUIRE(rc.sweep_values.size() == 2);
    CHECK(rc.sweep_values[0] == "true");
    CHECK(rc.sweep_values[1] == "false");
}

TEST_CASE("format_double is plain and locale-free") {
    CHECK(format_double(0.6) == "0.6");
    CHECK(format_double(38.9, 6) == "38.9");
    CHECK(format_double(-1.25e-9, 6) == "-1.25e-09");
    CHECK(format_double(0.0) == "0");
}
