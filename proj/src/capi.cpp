#include "adcsim.h"

#include <cstring>
#include <string>

#include "config.hpp"
#include "errors.hpp"
#include "pipeline.hpp"
#include "runners.hpp"

using namespace adcsim;

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& msg) { t_last_error = msg; }

// Runs fn, translating C++ exceptions into status codes.
template <typename Fn>
adcsim_status guarded(Fn&& fn) {
    try {
        fn();
        return ADCSIM_OK;
    } catch (const ConfigError& e) {
        set_error(e.what());
        return ADCSIM_ERR_CONFIG;
    } catch (const PreconditionError& e) {
        set_error(e.what());
        return ADCSIM_ERR_RUNTIME;
    } catch (const std::exception& e) {
        set_error(e.what());
        return ADCSIM_ERR_RUNTIME;
    }
}

} // namespace

// Handles wrap the C++ result types; definitions stay in this translation
// unit so the ABI exposes only opaque pointers.
struct adcsim_config {
    KeyValueDoc doc;
    bool ideal = false;
    bool seed_override = false;
    uint64_t seed = 0;

    RunConfig resolve() const {
        RunConfig rc = build_run_config(doc);
        if (ideal) make_ideal(rc.adc);
        if (seed_override) rc.seed = seed;
        return rc;
    }
};
struct adcsim_setup_report {
    SetupReport rep;
};
struct adcsim_static_metrics {
    StaticMetrics m;
};
struct adcsim_dynamic_result {
    ToneRunResult r;
};
struct adcsim_power_report {
    PowerReport rep;
};
struct adcsim_table {
    ComparisonTable t;
};

extern "C" {

const char* adcsim_version(void) { return "1.0.0"; }

const char* adcsim_last_error(void) { return t_last_error.c_str(); }

adcsim_config* adcsim_config_new(void) { return new (std::nothrow) adcsim_config(); }

void adcsim_config_free(adcsim_config* cfg) { delete cfg; }

adcsim_status adcsim_config_load_file(adcsim_config* cfg, const char* path) {
    if (!cfg || !path) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] {
        cfg->doc.load_file(path);
        build_run_config(cfg->doc);  // validate eagerly so errors surface here
    });
}

adcsim_status adcsim_config_set(adcsim_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] {
        KeyValueDoc trial = cfg->doc;
        trial.set(key, value);
        build_run_config(trial);
        cfg->doc = std::move(trial);
    });
}

adcsim_status adcsim_config_set_seed(adcsim_config* cfg, uint64_t seed) {
    if (!cfg) return ADCSIM_ERR_ARGUMENT;
    cfg->seed_override = true;
    cfg->seed = seed;
    return ADCSIM_OK;
}

adcsim_status adcsim_config_set_ideal(adcsim_config* cfg) {
    if (!cfg) return ADCSIM_ERR_ARGUMENT;
    cfg->ideal = true;
    return ADCSIM_OK;
}

adcsim_status adcsim_convert(const adcsim_config* cfg, const double* volts, size_t n,
                             uint8_t* codes_out) {
    if (!cfg || !volts || !codes_out || n == 0) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] {
        const RunConfig rc = cfg->resolve();
        const CodeStream cs = convert_waveform(std::span<const double>(volts, n), rc.adc, rc.seed);
        std::memcpy(codes_out, cs.codes.data(), n);
    });
}

/* ---- setup --------------------------------------------------------------- */

adcsim_status adcsim_run_setup(const adcsim_config* cfg, adcsim_setup_report** out) {
    if (!cfg || !out) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] { *out = new adcsim_setup_report{run_setup(cfg->resolve())}; });
}

size_t adcsim_setup_rows(const adcsim_setup_report* rep) {
    return rep ? rep->rep.rows.size() : 0;
}

adcsim_status adcsim_setup_row(const adcsim_setup_report* rep, size_t index, const char** name,
                               double* ideal_mv, double* sim_mv, double* error_pct) {
    if (!rep || index >= rep->rep.rows.size()) return ADCSIM_ERR_ARGUMENT;
    const SetupRow& r = rep->rep.rows[index];
    if (name) *name = r.name.c_str();
    if (ideal_mv) *ideal_mv = r.ideal_mv;
    if (sim_mv) *sim_mv = r.sim_mv;
    if (error_pct) *error_pct = r.error_pct;
    return ADCSIM_OK;
}

adcsim_status adcsim_setup_write_csv(const adcsim_setup_report* rep, const char* path) {
    if (!rep || !path) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] { write_setup_csv(rep->rep, path); });
}

void adcsim_setup_free(adcsim_setup_report* rep) { delete rep; }

/* ---- static linearity ---------------------------------------------------- */

adcsim_status adcsim_run_ramp(const adcsim_config* cfg, adcsim_static_metrics** out) {
    if (!cfg || !out) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] { *out = new adcsim_static_metrics{run_ramp(cfg->resolve()).metrics}; });
}

adcsim_status adcsim_static_arrays(const adcsim_static_metrics* m, double* dnl, double* inl) {
    if (!m) return ADCSIM_ERR_ARGUMENT;
    if (dnl) std::memcpy(dnl, m->m.dnl.data(), sizeof(double) * 254);
    if (inl) std::memcpy(inl, m->m.inl.data(), sizeof(double) * 254);
    return ADCSIM_OK;
}

adcsim_status adcsim_static_maxima(const adcsim_static_metrics* m, double* max_dnl,
                                   int* max_dnl_code, double* max_inl, int* max_inl_code) {
    if (!m) return ADCSIM_ERR_ARGUMENT;
    if (max_dnl) *max_dnl = m->m.max_dnl;
    if (max_dnl_code) *max_dnl_code = m->m.max_dnl_code;
    if (max_inl) *max_inl = m->m.max_inl;
    if (max_inl_code) *max_inl_code = m->m.max_inl_code;
    return ADCSIM_OK;
}

adcsim_status adcsim_static_write_csv(const adcsim_static_metrics* m, const char* data_path,
                                      const char* summary_path) {
    if (!m || !data_path) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] {
        write_static_csv(m->m, data_path);
        if (summary_path) write_static_summary_csv(m->m, summary_path);
    });
}

void adcsim_static_free(adcsim_static_metrics* m) { delete m; }

/* ---- dynamic ------------------------------------------------------------- */

adcsim_status adcsim_run_tone(const adcsim_config* cfg, adcsim_dynamic_result** out) {
    if (!cfg || !out) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] { *out = new adcsim_dynamic_result{run_tone(cfg->resolve())}; });
}

adcsim_status adcsim_dynamic_metrics(const adcsim_dynamic_result* r, double* sndr_db,
                                     double* sfdr_db, double* thd_db, double* enob,
                                     int* fundamental_bin, int* worst_spur_bin) {
    if (!r) return ADCSIM_ERR_ARGUMENT;
    const DynamicMetrics& m = r->r.spectrum.metrics;
    if (sndr_db) *sndr_db = m.sndr_db;
    if (sfdr_db) *sfdr_db = m.sfdr_db;
    if (thd_db) *thd_db = m.thd_db;
    if (enob) *enob = m.enob_bits;
    if (fundamental_bin) *fundamental_bin = m.fundamental_bin;
    if (worst_spur_bin) *worst_spur_bin = m.worst_spur_bin;
    return ADCSIM_OK;
}

adcsim_status adcsim_dynamic_fin(const adcsim_dynamic_result* r, double* fin_hz) {
    if (!r || !fin_hz) return ADCSIM_ERR_ARGUMENT;
    *fin_hz = r->r.fin;
    return ADCSIM_OK;
}

adcsim_status adcsim_dynamic_write_csv(const adcsim_dynamic_result* r, const char* spectrum_path,
                                       const char* metrics_path) {
    if (!r) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] {
        if (spectrum_path) write_spectrum_csv(r->r, spectrum_path);
        if (metrics_path) write_dynamic_csv(r->r, metrics_path);
    });
}

void adcsim_dynamic_free(adcsim_dynamic_result* r) { delete r; }

/* ---- power --------------------------------------------------------------- */

adcsim_status adcsim_run_power(const adcsim_config* cfg, adcsim_power_report** out) {
    if (!cfg || !out) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] { *out = new adcsim_power_report{run_power(cfg->resolve())}; });
}

adcsim_status adcsim_power_values(const adcsim_power_report* rep, int* ota_count,
                                  double* p_ota_mw, double* p_comparators_mw,
                                  double* p_digital_clock_mw, double* total_mw,
                                  double* fom_pj_per_step) {
    if (!rep) return ADCSIM_ERR_ARGUMENT;
    if (ota_count) *ota_count = rep->rep.ota_count;
    if (p_ota_mw) *p_ota_mw = rep->rep.p_ota_mw;
    if (p_comparators_mw) *p_comparators_mw = rep->rep.p_comparators_mw;
    if (p_digital_clock_mw) *p_digital_clock_mw = rep->rep.p_digital_clock_mw;
    if (total_mw) *total_mw = rep->rep.total_mw;
    if (fom_pj_per_step) *fom_pj_per_step = rep->rep.fom_pj_per_step;
    return ADCSIM_OK;
}

adcsim_status adcsim_power_write_csv(const adcsim_power_report* rep, const char* path) {
    if (!rep || !path) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] { write_power_csv(rep->rep, path); });
}

void adcsim_power_free(adcsim_power_report* rep) { delete rep; }

/* ---- compare / sweep ------------------------------------------------------ */

adcsim_status adcsim_run_compare(const adcsim_config* cfg, adcsim_table** out) {
    if (!cfg || !out) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] { *out = new adcsim_table{run_compare(cfg->resolve()).table}; });
}

adcsim_status adcsim_run_sweep(const adcsim_config* cfg, adcsim_table** out) {
    if (!cfg || !out) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] {
        KeyValueDoc base = cfg->doc;
        const RunConfig rc = cfg->resolve();
        if (cfg->seed_override) base.set("seed", std::to_string(cfg->seed));
        // --ideal zeroes the error knobs for every grid point
        if (cfg->ideal) {
            for (const auto& [key, value] : cfg->doc.entries())
                if (key.rfind("adc.sha.", 0) == 0 || key.rfind("adc.stages.", 0) == 0 ||
                    key.rfind("adc.flash.", 0) == 0 || key == "adc.noise_sigma" ||
                    key == "adc.sharing_memory")
                    base.set(key, "0");
        }
        *out = new adcsim_table{run_sweep(rc, base).table};
    });
}

size_t adcsim_table_rows(const adcsim_table* t) { return t ? t->t.rows.size() : 0; }

size_t adcsim_table_cols(const adcsim_table* t) { return t ? t->t.header.size() : 0; }

const char* adcsim_table_header(const adcsim_table* t, size_t col) {
    if (!t || col >= t->t.header.size()) return nullptr;
    return t->t.header[col].c_str();
}

const char* adcsim_table_cell(const adcsim_table* t, size_t row, size_t col) {
    if (!t || row >= t->t.rows.size() || col >= t->t.rows[row].size()) return nullptr;
    return t->t.rows[row][col].c_str();
}

adcsim_status adcsim_table_write_csv(const adcsim_table* t, const char* path) {
    if (!t || !path) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] { write_table_csv(t->t, path); });
}

adcsim_status adcsim_table_write_text(const adcsim_table* t, const char* path) {
    if (!t || !path) return ADCSIM_ERR_ARGUMENT;
    return guarded([&] { write_table_text(t->t, path); });
}

void adcsim_table_free(adcsim_table* t) { delete t; }

} // extern "C"
