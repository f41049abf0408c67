#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core_model.hpp"

namespace adcsim {

// First-order single-bit sigma-delta modulator settings.
struct SdConfig {
    int osr = 64;                 // oversampling ratio, power of two >= 4
    size_t n_samples = 1 << 16;   // power of two
    double input_amplitude = 0.5; // normalized, <= 0.9 for loop stability
};

// Simulates y[n] = y[n-1] + x[n] - q[n-1], q = sign(y), and returns the SNR
// over the signal band [0, fs/(2*osr)] for a coherent tone at fin_over_fs.
double sd_first_order_snr(const SdConfig& cfg, double fin_over_fs);

// Raw +-1 modulator output for the same loop (amplitude 0 allowed).
std::vector<double> sd_first_order_bitstream(const SdConfig& cfg, double fin_over_fs);

// Convenience: coherent in-band tone placement (quarter of the band edge).
double sd_inband_tone(const SdConfig& cfg);

struct FlashConfig {
    int n_bits = 8;
    double ladder_sigma = 0.01;  // relative resistor mismatch
    int n_trials = 1000;
    uint64_t rng_seed = 1;
};

struct FlashMcSummary {
    double mean_max_inl = 0.0;  // LSB
    double max_max_inl = 0.0;   // LSB
};

// Monte Carlo of flash resistor-ladder mismatch: per trial, draw 2^n_bits
// resistors R(1+e), e ~ N(0, sigma), form thresholds from normalized
// cumulative sums and take max |INL| of the threshold deviations.
FlashMcSummary flash_montecarlo(const FlashConfig& cfg);

struct PowerParams {
    // Defaults calibrated so the sharing-on total is 38.9 mW with OTA power
    // at 70% of the budget.
    double p_ota_mw = 38.9 * 0.70 / 4.0;
    double p_comparators_mw = 38.9 * 0.15;
    double p_digital_clock_mw = 38.9 * 0.15;
    double enob = 7.33;  // used for the Walden figure of merit
};

struct PowerReport {
    int ota_count = 0;
    double p_ota_mw = 0.0;
    double p_comparators_mw = 0.0;
    double p_digital_clock_mw = 0.0;
    double total_mw = 0.0;
    double fom_pj_per_step = 0.0;  // total / (2^enob * fs)
};

PowerReport power_model(const AdcConfig& cfg, const PowerParams& cal);

struct ComparisonTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Quantitative three-way architecture comparison at the target design point.
struct ArchComparison {
    double pipeline_fs = 0.0;
    double pipeline_enob = 0.0;      // ideal-converter simulation at fs
    int sd_required_osr = 0;         // smallest power-of-two OSR reaching the SNR goal
    double sd_snr_at_osr = 0.0;
    double sd_internal_clock_hz = 0.0;
    double sd_snr_goal_db = 0.0;
    int flash_n_bits = 0;
    double flash_sigma = 0.0;
    double flash_mean_max_inl = 0.0;
    ComparisonTable table;
};

struct CompareSettings {
    int n_bits = 8;
    double fs = 166.6e6;
    double flash_sigma = 0.01;
    int flash_trials = 200;
    double sd_amplitude = 0.9;
    uint64_t seed = 1;
};

ArchComparison compare_architectures(const CompareSettings& s);

} // namespace adcsim
