// adc — command-line front end over the adcsim C API.
//
// usage: adc <setup|ramp|tone|compare|power|sweep>
//            [--config <path>] [--out <dir>] [--seed <u64>] [--ideal]
//            [key=value ...]
//
// Exit codes: 0 success, 2 configuration/usage error, 3 runtime error.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "adcsim.h"

namespace {

void usage(std::FILE* to) {
    std::fprintf(to,
                 "usage: adc <setup|ramp|tone|compare|power|sweep> [options] [key=value ...]\n"
                 "\n"
                 "subcommands:\n"
                 "  setup    stage settling report            -> setup.csv\n"
                 "  ramp     histogram INL/DNL from a ramp    -> static.csv, static_summary.csv\n"
                 "  tone     coherent-tone SNDR/SFDR/ENOB     -> spectrum.csv, dynamic.csv\n"
                 "  compare  sigma-delta / flash / pipeline   -> compare.csv, compare.txt\n"
                 "  power    OTA-count power and Walden FOM   -> power.csv\n"
                 "  sweep    one run type over a value grid   -> sweep.csv\n"
                 "\n"
                 "options:\n"
                 "  --config <path>   flat key=value config file\n"
                 "  --out <dir>       output directory (default .)\n"
                 "  --seed <u64>      override the run seed\n"
                 "  --ideal           zero every error knob\n"
                 "  key=value         override a single config key\n");
}

int status_to_exit(adcsim_status st) {
    switch (st) {
        case ADCSIM_OK: return 0;
        case ADCSIM_ERR_RUNTIME: return 3;
        default: return 2;
    }
}

int fail(adcsim_status st) {
    std::fprintf(stderr, "adc: error: %s\n", adcsim_last_error());
    return status_to_exit(st);
}

struct ConfigDeleter {
    void operator()(adcsim_config* c) const { adcsim_config_free(c); }
};

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        usage(stderr);
        return 2;
    }
    const std::string cmd = argv[1];
    if (cmd == "--help" || cmd == "-h" || cmd == "help") {
        usage(stdout);
        return 0;
    }
    if (cmd != "setup" && cmd != "ramp" && cmd != "tone" && cmd != "compare" && cmd != "power" &&
        cmd != "sweep") {
        std::fprintf(stderr, "adc: unknown subcommand '%s'\n", cmd.c_str());
        usage(stderr);
        return 2;
    }

    std::unique_ptr<adcsim_config, ConfigDeleter> cfg(adcsim_config_new());
    if (!cfg) {
        std::fprintf(stderr, "adc: out of memory\n");
        return 2;
    }

    std::string outdir = ".";
    for (int i = 2; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config") {
            if (++i >= argc) {
                std::fprintf(stderr, "adc: --config needs a path\n");
                return 2;
            }
            if (adcsim_status st = adcsim_config_load_file(cfg.get(), argv[i])) return fail(st);
        } else if (arg == "--out") {
            if (++i >= argc) {
                std::fprintf(stderr, "adc: --out needs a directory\n");
                return 2;
            }
            outdir = argv[i];
        } else if (arg == "--seed") {
            if (++i >= argc) {
                std::fprintf(stderr, "adc: --seed needs a value\n");
                return 2;
            }
            char* end = nullptr;
            const uint64_t seed = std::strtoull(argv[i], &end, 10);
            if (end == argv[i] || *end != '\0') {
                std::fprintf(stderr, "adc: --seed needs an unsigned integer\n");
                return 2;
            }
            adcsim_config_set_seed(cfg.get(), seed);
        } else if (arg == "--ideal") {
            adcsim_config_set_ideal(cfg.get());
        } else if (arg.rfind("--", 0) == 0) {
            std::fprintf(stderr, "adc: unknown option '%s'\n", arg.c_str());
            return 2;
        } else if (arg.find('=') != std::string::npos) {
            const size_t eq = arg.find('=');
            if (adcsim_status st = adcsim_config_set(cfg.get(), arg.substr(0, eq).c_str(),
                                                     arg.substr(eq + 1).c_str()))
                return fail(st);
        } else {
            std::fprintf(stderr, "adc: stray argument '%s' (overrides use key=value)\n",
                         arg.c_str());
            return 2;
        }
    }

    std::error_code ec;
    std::filesystem::create_directories(outdir, ec);
    if (ec) {
        std::fprintf(stderr, "adc: cannot create output directory '%s': %s\n", outdir.c_str(),
                     ec.message().c_str());
        return 2;
    }
    auto path = [&](const char* name) { return outdir + "/" + name; };

    if (cmd == "setup") {
        adcsim_setup_report* rep = nullptr;
        if (adcsim_status st = adcsim_run_setup(cfg.get(), &rep)) return fail(st);
        if (adcsim_status st = adcsim_setup_write_csv(rep, path("setup.csv").c_str())) {
            adcsim_setup_free(rep);
            return fail(st);
        }
        std::printf("%-8s %10s %10s %8s\n", "stage", "ideal/mV", "sim/mV", "error%");
        for (size_t i = 0; i < adcsim_setup_rows(rep); ++i) {
            const char* name = nullptr;
            double ideal = 0, sim = 0, err = 0;
            adcsim_setup_row(rep, i, &name, &ideal, &sim, &err);
            std::printf("%-8s %10.4f %10.4f %8.4f\n", name, ideal, sim, err);
        }
        std::printf("wrote %s\n", path("setup.csv").c_str());
        adcsim_setup_free(rep);
        return 0;
    }

    if (cmd == "ramp") {
        adcsim_static_metrics* m = nullptr;
        if (adcsim_status st = adcsim_run_ramp(cfg.get(), &m)) return fail(st);
        if (adcsim_status st = adcsim_static_write_csv(m, path("static.csv").c_str(),
                                                       path("static_summary.csv").c_str())) {
            adcsim_static_free(m);
            return fail(st);
        }
        double mdnl = 0, minl = 0;
        int cdnl = 0, cinl = 0;
        adcsim_static_maxima(m, &mdnl, &cdnl, &minl, &cinl);
        std::printf("max_inl,%.6g,%d\n", minl, cinl);
        std::printf("max_dnl,%.6g,%d\n", mdnl, cdnl);
        std::printf("wrote %s and %s\n", path("static.csv").c_str(),
                    path("static_summary.csv").c_str());
        adcsim_static_free(m);
        return 0;
    }

    if (cmd == "tone") {
        adcsim_dynamic_result* r = nullptr;
        if (adcsim_status st = adcsim_run_tone(cfg.get(), &r)) return fail(st);
        if (adcsim_status st = adcsim_dynamic_write_csv(r, path("spectrum.csv").c_str(),
                                                        path("dynamic.csv").c_str())) {
            adcsim_dynamic_free(r);
            return fail(st);
        }
        double sndr = 0, sfdr = 0, thd = 0, enob = 0, fin = 0;
        int kf = 0, ks = 0;
        adcsim_dynamic_metrics(r, &sndr, &sfdr, &thd, &enob, &kf, &ks);
        adcsim_dynamic_fin(r, &fin);
        std::printf("fin_hz=%.6g sndr_db=%.4f sfdr_db=%.4f thd_db=%.4f enob=%.4f "
                    "fundamental_bin=%d worst_spur_bin=%d\n",
                    fin, sndr, sfdr, thd, enob, kf, ks);
        std::printf("wrote %s and %s\n", path("spectrum.csv").c_str(),
                    path("dynamic.csv").c_str());
        adcsim_dynamic_free(r);
        return 0;
    }

    if (cmd == "power") {
        adcsim_power_report* rep = nullptr;
        if (adcsim_status st = adcsim_run_power(cfg.get(), &rep)) return fail(st);
        if (adcsim_status st = adcsim_power_write_csv(rep, path("power.csv").c_str())) {
            adcsim_power_free(rep);
            return fail(st);
        }
        int count = 0;
        double pota = 0, pcmp = 0, pdig = 0, total = 0, fom = 0;
        adcsim_power_values(rep, &count, &pota, &pcmp, &pdig, &total, &fom);
        std::printf("ota_count=%d total_mw=%.6g fom_pj_per_step=%.6g\n", count, total, fom);
        std::printf("wrote %s\n", path("power.csv").c_str());
        adcsim_power_free(rep);
        return 0;
    }

    // compare and sweep both print a table
    adcsim_table* t = nullptr;
    adcsim_status st =
        (cmd == "compare") ? adcsim_run_compare(cfg.get(), &t) : adcsim_run_sweep(cfg.get(), &t);
    if (st) return fail(st);

    const std::string csv_name = (cmd == "compare") ? "compare.csv" : "sweep.csv";
    if ((st = adcsim_table_write_csv(t, path(csv_name.c_str()).c_str()))) {
        adcsim_table_free(t);
        return fail(st);
    }
    if (cmd == "compare") {
        if ((st = adcsim_table_write_text(t, path("compare.txt").c_str()))) {
            adcsim_table_free(t);
            return fail(st);
        }
    }
    for (size_t c = 0; c < adcsim_table_cols(t); ++c)
        std::printf("%s%s", c ? "," : "", adcsim_table_header(t, c));
    std::printf("\n");
    for (size_t rix = 0; rix < adcsim_table_rows(t); ++rix) {
        for (size_t c = 0; c < adcsim_table_cols(t); ++c)
            std::printf("%s%s", c ? "," : "", adcsim_table_cell(t, rix, c));
        std::printf("\n");
    }
    std::printf("wrote %s\n", path(csv_name.c_str()).c_str());
    adcsim_table_free(t);
    return 0;
}
