// Exercises the shared-library surface exactly as an external client would:
// only adcsim.h, opaque handles, status codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "adcsim.h"
#include "doctest.h"

namespace {

struct Cfg {
    adcsim_config* h = adcsim_config_new();
    ~Cfg() { adcsim_config_free(h); }
    operator adcsim_config*() { return h; }
};

std::string out_path(const char* name) {
    const auto dir = std::filesystem::temp_directory_path() / "adcsim_capi_out";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

} // namespace

TEST_CASE("version and argument guards") {
    CHECK(std::string(adcsim_version()).size() > 0);
    CHECK(adcsim_convert(nullptr, nullptr, 0, nullptr) == ADCSIM_ERR_ARGUMENT);
    CHECK(adcsim_run_setup(nullptr, nullptr) == ADCSIM_ERR_ARGUMENT);
}

TEST_CASE("config set: valid, invalid key, invalid value") {
    Cfg cfg;
    CHECK(adcsim_config_set(cfg, "adc.vref", "0.6") == ADCSIM_OK);
    CHECK(adcsim_config_set(cfg, "no.such.key", "1") == ADCSIM_ERR_CONFIG);
    CHECK(std::string(adcsim_last_error()).find("no.such.key") != std::string::npos);
    CHECK(adcsim_config_set(cfg, "adc.fs", "not-a-number") == ADCSIM_ERR_CONFIG);
    // failed sets leave the config usable
    uint8_t code = 0;
    const double v = 0.0;
    CHECK(adcsim_convert(cfg, &v, 1, &code) == ADCSIM_OK);
    CHECK(code == 128);
}

TEST_CASE("convert through the ideal pipeline") {
    Cfg cfg;
    const double volts[3] = {-0.6, 0.0, 0.6};
    uint8_t codes[3] = {0, 0, 0};
    REQUIRE(adcsim_convert(cfg, volts, 3, codes) == ADCSIM_OK);
    CHECK(codes[0] == 0);
    CHECK(codes[1] == 128);
    CHECK(codes[2] == 255);
}

TEST_CASE("setup report rows") {
    Cfg cfg;
    adcsim_setup_report* rep = nullptr;
    REQUIRE(adcsim_run_setup(cfg, &rep) == ADCSIM_OK);
    REQUIRE(rep != nullptr);
    CHECK(adcsim_setup_rows(rep) == 8);
    const char* name = nullptr;
    double ideal = 0, sim = 0, err = 0;
    REQUIRE(adcsim_setup_row(rep, 0, &name, &ideal, &sim, &err) == ADCSIM_OK);
    CHECK(std::string(name) == "Vin");
    CHECK(ideal == doctest::Approx(600.0));
    CHECK(err == doctest::Approx(0.0));
    const std::string csv = out_path("setup.csv");
    CHECK(adcsim_setup_write_csv(rep, csv.c_str()) == ADCSIM_OK);
    CHECK(slurp(csv).rfind("stage,ideal_mv,sim_mv,error_pct\n", 0) == 0);
    adcsim_setup_free(rep);
}

TEST_CASE("ramp metrics on the ideal converter") {
    Cfg cfg;
    adcsim_static_metrics* m = nullptr;
    REQUIRE(adcsim_run_ramp(cfg, &m) == ADCSIM_OK);
    double dnl[254], inl[254];
    REQUIRE(adcsim_static_arrays(m, dnl, inl) == ADCSIM_OK);
    double mdnl = 0, minl = 0;
    int cdnl = 0, cinl = 0;
    REQUIRE(adcsim_static_maxima(m, &mdnl, &cdnl, &minl, &cinl) == ADCSIM_OK);
    CHECK(mdnl <= 0.02);
    CHECK(minl <= 0.02);
    CHECK(cdnl >= 1);
    CHECK(cinl <= 254);
    adcsim_static_free(m);
}

TEST_CASE("ramp precondition failures surface as runtime status") {
    Cfg cfg;
    REQUIRE(adcsim_config_set(cfg, "ramp.n", "100") == ADCSIM_OK);
    adcsim_static_metrics* m = nullptr;
    CHECK(adcsim_run_ramp(cfg, &m) == ADCSIM_ERR_RUNTIME);
    CHECK(m == nullptr);
}

TEST_CASE("tone metrics on the ideal converter") {
    Cfg cfg;
    adcsim_dynamic_result* r = nullptr;
    REQUIRE(adcsim_run_tone(cfg, &r) == ADCSIM_OK);
    double sndr = 0, sfdr = 0, thd = 0, enob = 0, fin = 0;
    int kf = 0, ks = 0;
    REQUIRE(adcsim_dynamic_metrics(r, &sndr, &sfdr, &thd, &enob, &kf, &ks) == ADCSIM_OK);
    REQUIRE(adcsim_dynamic_fin(r, &fin) == ADCSIM_OK);
    CHECK(sndr == doctest::Approx(49.9).epsilon(0.01));
    CHECK(enob == doctest::Approx(8.0).epsilon(0.01));
    CHECK(kf == 513);
    CHECK(fin == doctest::Approx(166.6e6 * 513.0 / 8192.0));
    adcsim_dynamic_free(r);

    REQUIRE(adcsim_config_set(cfg, "tone.amplitude", "0") == ADCSIM_OK);
    adcsim_dynamic_result* r2 = nullptr;
    CHECK(adcsim_run_tone(cfg, &r2) == ADCSIM_ERR_RUNTIME);
}

TEST_CASE("power values") {
    Cfg cfg;
    adcsim_power_report* rep = nullptr;
    REQUIRE(adcsim_run_power(cfg, &rep) == ADCSIM_OK);
    int count = 0;
    double total = 0, fom = 0;
    REQUIRE(adcsim_power_values(rep, &count, nullptr, nullptr, nullptr, &total, &fom) ==
            ADCSIM_OK);
    CHECK(count == 4);
    CHECK(total == doctest::Approx(38.9));
    CHECK(fom == doctest::Approx(1.45).epsilon(0.01));
    adcsim_power_free(rep);
}

TEST_CASE("ideal flag zeroes error knobs") {
    Cfg cfg;
    REQUIRE(adcsim_config_set(cfg, "adc.stages.2.gain_error", "-0.007") == ADCSIM_OK);
    REQUIRE(adcsim_config_set(cfg, "adc.noise_sigma", "0.002") == ADCSIM_OK);
    REQUIRE(adcsim_config_set_ideal(cfg) == ADCSIM_OK);
    adcsim_setup_report* rep = nullptr;
    REQUIRE(adcsim_run_setup(cfg, &rep) == ADCSIM_OK);
    for (size_t i = 0; i < adcsim_setup_rows(rep); ++i) {
        double err = 0;
        adcsim_setup_row(rep, i, nullptr, nullptr, nullptr, &err);
        CHECK(err == doctest::Approx(0.0));
    }
    adcsim_setup_free(rep);
}

TEST_CASE("compare table shape") {
    Cfg cfg;
    REQUIRE(adcsim_config_set(cfg, "compare.flash_trials", "50") == ADCSIM_OK);
    adcsim_table* t = nullptr;
    REQUIRE(adcsim_run_compare(cfg, &t) == ADCSIM_OK);
    CHECK(adcsim_table_rows(t) == 3);
    CHECK(adcsim_table_cols(t) == 4);
    CHECK(std::string(adcsim_table_header(t, 0)) == "architecture");
    bool saw_pipeline = false;
    for (size_t r = 0; r < adcsim_table_rows(t); ++r)
        if (std::string(adcsim_table_cell(t, r, 0)) == "pipeline") saw_pipeline = true;
    CHECK(saw_pipeline);
    CHECK(adcsim_table_cell(t, 9, 0) == nullptr);
    const std::string txt = out_path("compare.txt");
    CHECK(adcsim_table_write_text(t, txt.c_str()) == ADCSIM_OK);
    CHECK(slurp(txt).find("pipeline") != std::string::npos);
    adcsim_table_free(t);
}

TEST_CASE("sweep over OTA sharing") {
    Cfg cfg;
    REQUIRE(adcsim_config_set(cfg, "sweep.param", "adc.ota_sharing") == ADCSIM_OK);
    REQUIRE(adcsim_config_set(cfg, "sweep.values", "true,false") == ADCSIM_OK);
    REQUIRE(adcsim_config_set(cfg, "sweep.run", "power") == ADCSIM_OK);
    adcsim_table* t = nullptr;
    REQUIRE(adcsim_run_sweep(cfg, &t) == ADCSIM_OK);
    REQUIRE(adcsim_table_rows(t) == 2);
    const double on = std::strtod(adcsim_table_cell(t, 0, 3), nullptr);
    const double off = std::strtod(adcsim_table_cell(t, 1, 3), nullptr);
    CHECK(off - on == doctest::Approx(3.0 * 38.9 * 0.70 / 4.0).epsilon(1e-9));
    adcsim_table_free(t);

    Cfg empty;
    REQUIRE(adcsim_config_set(empty, "sweep.param", "adc.vref") == ADCSIM_OK);
    adcsim_table* t2 = nullptr;
    CHECK(adcsim_run_sweep(empty, &t2) == ADCSIM_ERR_CONFIG);  // no values -> empty grid
}

TEST_CASE("config file loading via the C API") {
    const std::string path = out_path("roundtrip.cfg");
    {
        std::ofstream f(path);
        f << "adc.vref = 0.5\nadc.stages.1.tau = 2e-10\n";
    }
    Cfg cfg;
    REQUIRE(adcsim_config_load_file(cfg, path.c_str()) == ADCSIM_OK);
    CHECK(adcsim_config_load_file(cfg, "/nonexistent/x.cfg") == ADCSIM_ERR_CONFIG);

    const std::string bad = out_path("bad.cfg");
    {
        std::ofstream f(bad);
        f << "adc.vref == oops\n";
    }
    Cfg cfg2;
    CHECK(adcsim_config_load_file(cfg2, bad.c_str()) == ADCSIM_ERR_CONFIG);
}
