// End-to-end CLI checks: exit codes per subcommand, output files, CSV shape.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
}

int run(const std::string& args) {
    const std::string cmd = std::string(ADC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

bool is_lf_csv_with_header(const fs::path& p, const std::string& header) {
    const std::string body = slurp(p);
    if (body.rfind(header + "\n", 0) != 0) return false;
    if (body.find('\r') != std::string::npos) return false;
    return body.find(',') != std::string::npos;
}

} // namespace

int main() {
    const fs::path base = fs::temp_directory_path() / "adcsim_cli_tests";
    fs::remove_all(base);
    fs::create_directories(base);
    const std::string cfgdir = ADCSIM_CONFIG_DIR;
    const std::string paper = cfgdir + "/paper_point.cfg";

    // a malformed config for exit-code checks
    const fs::path badcfg = base / "bad.cfg";
    {
        std::ofstream f(badcfg);
        f << "adc.nonsense = 1\n";
    }

    check(run("tone --config " + cfgdir + "/ideal.cfg --out " + (base / "ideal").string()) == 0,
          "ideal.cfg tone exits 0");

    const std::string out_setup = (base / "setup").string();
    check(run("setup --config " + paper + " --out " + out_setup) == 0, "setup exits 0");
    check(is_lf_csv_with_header(fs::path(out_setup) / "setup.csv",
                                "stage,ideal_mv,sim_mv,error_pct"),
          "setup.csv header/LF format");
    check(run("setup --config " + badcfg.string()) == 2, "setup bad config exits 2");

    const std::string out_ramp = (base / "ramp").string();
    check(run("ramp --config " + paper + " --out " + out_ramp) == 0, "ramp exits 0");
    check(is_lf_csv_with_header(fs::path(out_ramp) / "static.csv", "code,dnl_lsb,inl_lsb"),
          "static.csv header/LF format");
    check(is_lf_csv_with_header(fs::path(out_ramp) / "static_summary.csv",
                                "metric,value_lsb,code"),
          "static_summary.csv header/LF format");
    check(run("ramp ramp.n=200 --out " + (base / "rampfail").string()) == 3,
          "ramp with too few samples exits 3");

    const std::string out_tone = (base / "tone").string();
    check(run("tone --config " + paper + " --out " + out_tone) == 0, "tone exits 0");
    check(is_lf_csv_with_header(fs::path(out_tone) / "dynamic.csv",
                                "sndr_db,sfdr_db,thd_db,enob"),
          "dynamic.csv header/LF format");
    check(is_lf_csv_with_header(fs::path(out_tone) / "spectrum.csv", "bin,freq_hz,db"),
          "spectrum.csv header/LF format");
    check(run("tone tone.amplitude=0 --out " + (base / "tonefail").string()) == 3,
          "tone with zero amplitude exits 3");

    const std::string out_cmp = (base / "compare").string();
    check(run("compare compare.flash_trials=50 --out " + out_cmp) == 0, "compare exits 0");
    check(is_lf_csv_with_header(fs::path(out_cmp) / "compare.csv",
                                "architecture,sample_rate,resolution_limit,note"),
          "compare.csv header/LF format");
    check(fs::exists(fs::path(out_cmp) / "compare.txt"), "compare.txt written");
    check(run("compare adc.fs=0 --out " + (base / "cmpfail").string()) == 3,
          "compare with fs=0 exits 3");

    const std::string out_power = (base / "power").string();
    check(run("power --out " + out_power) == 0, "power exits 0");
    check(is_lf_csv_with_header(fs::path(out_power) / "power.csv",
                                "ota_count,p_ota_mw,p_comparators_mw,p_digital_clock_mw,"
                                "total_mw,fom_pj_per_step"),
          "power.csv header/LF format");

    const std::string out_sweep = (base / "sweep").string();
    check(run("sweep sweep.param=adc.ota_sharing sweep.values=true,false sweep.run=power "
              "--out " + out_sweep) == 0,
          "sweep exits 0");
    check(is_lf_csv_with_header(fs::path(out_sweep) / "sweep.csv",
                                "param,value,ota_count,total_mw,fom_pj_per_step"),
          "sweep.csv header/LF format");
    check(run("sweep sweep.param=adc.vref --out " + (base / "sweepfail").string()) == 2,
          "sweep with empty grid exits 2");

    check(run("bogus") == 2, "unknown subcommand exits 2");
    check(run("tone --frobnicate") == 2, "unknown flag exits 2");
    check(run("tone definitely-not-an-override") == 2, "stray argument exits 2");
    check(run("setup --config /nonexistent.cfg") == 2, "missing config file exits 2");
    check(run("ramp no.such.key=1") == 2, "unknown override key exits 2");

    std::cout << (failures == 0 ? "ALL CLI CHECKS PASSED\n" : "CLI CHECKS FAILED\n");
    return failures == 0 ? 0 : 1;
}
