/*
 * adcsim — behavioral simulator and characterization toolkit for an 8-bit
 * 166.6 MS/s OTA-sharing pipelined ADC (SHA + six 1.5-bit stages + 2-bit
 * flash), with sigma-delta and flash comparison models.
 *
 * C API over the C++ core: opaque handles, integer status codes, no
 * exceptions across the boundary. Every handle returned through an out
 * parameter is owned by the caller and released with the matching *_free.
 * On failure the out parameter is left untouched and adcsim_last_error()
 * returns a message for the calling thread.
 */
#ifndef ADCSIM_H
#define ADCSIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adcsim_status {
    ADCSIM_OK = 0,
    ADCSIM_ERR_ARGUMENT = 1, /* null pointer / malformed call */
    ADCSIM_ERR_CONFIG = 2,   /* bad configuration file, key, or value */
    ADCSIM_ERR_RUNTIME = 3   /* violated runtime precondition */
} adcsim_status;

typedef struct adcsim_config adcsim_config;
typedef struct adcsim_setup_report adcsim_setup_report;
typedef struct adcsim_static_metrics adcsim_static_metrics;
typedef struct adcsim_dynamic_result adcsim_dynamic_result;
typedef struct adcsim_power_report adcsim_power_report;
typedef struct adcsim_table adcsim_table;

const char* adcsim_version(void);
/* Message for the most recent failing call on this thread ("" if none). */
const char* adcsim_last_error(void);

/* ---- configuration ----------------------------------------------------- */

/* New configuration at the default design point (8 bits, 166.6 MHz,
 * vref 0.6 V, OTA sharing on, all error knobs zero). */
adcsim_config* adcsim_config_new(void);
void adcsim_config_free(adcsim_config* cfg);

/* Merge a flat `key = value` config file into cfg (later values win). */
adcsim_status adcsim_config_load_file(adcsim_config* cfg, const char* path);
/* Set one dotted key, e.g. ("adc.stages.2.gain_error", "-0.007"). */
adcsim_status adcsim_config_set(adcsim_config* cfg, const char* key, const char* value);
adcsim_status adcsim_config_set_seed(adcsim_config* cfg, uint64_t seed);
/* Zero all error knobs, keeping vref/fs/sharing. */
adcsim_status adcsim_config_set_ideal(adcsim_config* cfg);

/* ---- direct conversion -------------------------------------------------- */

/* Convert n voltage samples through the configured pipeline; codes_out must
 * hold n bytes. Settling memory carries across the waveform. */
adcsim_status adcsim_convert(const adcsim_config* cfg, const double* volts, size_t n,
                             uint8_t* codes_out);

/* ---- stage settling experiment ------------------------------------------ */

adcsim_status adcsim_run_setup(const adcsim_config* cfg, adcsim_setup_report** out);
size_t adcsim_setup_rows(const adcsim_setup_report* rep);
adcsim_status adcsim_setup_row(const adcsim_setup_report* rep, size_t index, const char** name,
                               double* ideal_mv, double* sim_mv, double* error_pct);
adcsim_status adcsim_setup_write_csv(const adcsim_setup_report* rep, const char* path);
void adcsim_setup_free(adcsim_setup_report* rep);

/* ---- static linearity (histogram INL/DNL from a ramp) ------------------- */

adcsim_status adcsim_run_ramp(const adcsim_config* cfg, adcsim_static_metrics** out);
/* dnl/inl cover codes 1..254; either pointer may be NULL. Buffers take 254
 * doubles. */
adcsim_status adcsim_static_arrays(const adcsim_static_metrics* m, double* dnl, double* inl);
adcsim_status adcsim_static_maxima(const adcsim_static_metrics* m, double* max_dnl,
                                   int* max_dnl_code, double* max_inl, int* max_inl_code);
adcsim_status adcsim_static_write_csv(const adcsim_static_metrics* m, const char* data_path,
                                      const char* summary_path);
void adcsim_static_free(adcsim_static_metrics* m);

/* ---- dynamic performance (coherent tone + DFT) --------------------------- */

adcsim_status adcsim_run_tone(const adcsim_config* cfg, adcsim_dynamic_result** out);
adcsim_status adcsim_dynamic_metrics(const adcsim_dynamic_result* r, double* sndr_db,
                                     double* sfdr_db, double* thd_db, double* enob,
                                     int* fundamental_bin, int* worst_spur_bin);
/* Actual (coherence-adjusted) input frequency of the run, in Hz. */
adcsim_status adcsim_dynamic_fin(const adcsim_dynamic_result* r, double* fin_hz);
adcsim_status adcsim_dynamic_write_csv(const adcsim_dynamic_result* r, const char* spectrum_path,
                                       const char* metrics_path);
void adcsim_dynamic_free(adcsim_dynamic_result* r);

/* ---- power / figure of merit -------------------------------------------- */

adcsim_status adcsim_run_power(const adcsim_config* cfg, adcsim_power_report** out);
adcsim_status adcsim_power_values(const adcsim_power_report* rep, int* ota_count,
                                  double* p_ota_mw, double* p_comparators_mw,
                                  double* p_digital_clock_mw, double* total_mw,
                                  double* fom_pj_per_step);
adcsim_status adcsim_power_write_csv(const adcsim_power_report* rep, const char* path);
void adcsim_power_free(adcsim_power_report* rep);

/* ---- architecture comparison and parameter sweeps ------------------------ */

/* Both produce string tables: row 0..rows-1, col 0..cols-1, header
 * addressed separately via adcsim_table_header. */
adcsim_status adcsim_run_compare(const adcsim_config* cfg, adcsim_table** out);
adcsim_status adcsim_run_sweep(const adcsim_config* cfg, adcsim_table** out);
size_t adcsim_table_rows(const adcsim_table* t);
size_t adcsim_table_cols(const adcsim_table* t);
const char* adcsim_table_header(const adcsim_table* t, size_t col);
const char* adcsim_table_cell(const adcsim_table* t, size_t row, size_t col);
adcsim_status adcsim_table_write_csv(const adcsim_table* t, const char* path);
/* Space-aligned plain-text rendering (used by the compare subcommand). */
adcsim_status adcsim_table_write_text(const adcsim_table* t, const char* path);
void adcsim_table_free(adcsim_table* t);

#ifdef __cplusplus
}
#endif

#endif /* ADCSIM_H */
