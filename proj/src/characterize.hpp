#pragma once

#include <string>
#include <vector>

#include "pipeline.hpp"

namespace adcsim {

// Per-code static linearity over the interior codes 1..254 (index 0 maps to
// code 1). End codes 0 and 255 are saturation bins and excluded. dnl is the
// raw normalized code-density DNL (sums to zero); inl is its cumulative sum
// referenced to the line through the first and last interior points.
struct StaticMetrics {
    std::array<double, 254> dnl{};
    std::array<double, 254> inl{};
    double max_dnl = 0.0;  // magnitude of the extremal DNL
    int max_dnl_code = 1;
    double max_inl = 0.0;
    int max_inl_code = 1;
};

struct DynamicMetrics {
    double sndr_db = 0.0;
    double sfdr_db = 0.0;
    double thd_db = 0.0;  // harmonic power relative to the fundamental (dBc, negative)
    double enob_bits = 0.0;
    int fundamental_bin = 0;
    int worst_spur_bin = 0;
};

// Full spectral analysis result; psd_db holds bins 1..n/2 in dB relative to
// the fundamental.
struct SpectrumData {
    DynamicMetrics metrics;
    std::vector<double> psd_db;
    double bin_hz = 0.0;
};

struct SetupRow {
    std::string name;
    double ideal_mv;
    double sim_mv;
    double error_pct;
};

// Tab-style settling report: Vin, SHA, Stage1..Stage6; each row's ideal
// value is the previous row's simulated output.
struct SetupReport {
    std::vector<SetupRow> rows;
};

double enob_from_sndr(double sndr_db);

// Linear ramp, endpoints inclusive. n >= 2 required.
std::vector<double> gen_ramp(size_t n, double vmin, double vmax);

struct ToneResult {
    std::vector<double> samples;
    double fin;  // actual tone frequency after coherence adjustment
};

// Sine generator. With coherent = true, n must be a power of two and the
// frequency snaps to fs*M/n with M the odd integer nearest n*target_fin/fs,
// so the record holds an integer number of periods with every sample at a
// distinct phase.
ToneResult gen_tone(size_t n, double fs, double target_fin, double amplitude, bool coherent);

// Histogram (code-density) INL/DNL from a full-scale ramp capture.
// Requires a mean of at least 64 hits per interior code; individual missing
// codes are reported as DNL = -1, not an error.
StaticMetrics inl_dnl(const CodeStream& codes);

// Spectral metrics of a coherent capture (no window). Length must be a
// power of two >= 1024. THD uses the first n_harmonics harmonics aliased
// into the first Nyquist zone.
DynamicMetrics spectrum(const CodeStream& codes, int n_harmonics = 5);
SpectrumData spectrum_analyze(const std::vector<double>& values, double fs, int n_harmonics = 5);

// Full-swing alternating-pulse settling experiment: each block tracks the
// previous block's output with its own time constant over half a clock
// period. Rows report the steady-state +full-scale cycle. Only the settling
// time constants act here; gain errors and offsets are characterized by the
// static/dynamic tests.
SetupReport setup_test(const AdcConfig& cfg, int cycles = 64);

} // namespace adcsim
