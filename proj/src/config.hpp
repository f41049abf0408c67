#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arch_compare.hpp"
#include "core_model.hpp"

namespace adcsim {

// Flat key/value document: one `key = value` pair per line, '#' comments,
// later assignments win. Keys are dotted paths (adc.vref, stages.3.tau, ...).
class KeyValueDoc {
public:
    // throws ConfigError naming the offending line/key
    void load_file(const std::string& path);
    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;
    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
};

// Everything a run needs, resolved from defaults + config file + overrides.
// Defaults are the target design point: 8 bits, 166.6 MHz, vref 0.6 V,
// OTA sharing on, all error knobs zero.
struct RunConfig {
    AdcConfig adc;
    uint64_t seed = 1;

    size_t ramp_n = 32768;
    double ramp_vmin = 0.0;  // resolved to -vref/+vref when unset
    double ramp_vmax = 0.0;
    bool ramp_range_set = false;

    size_t tone_n = 8192;
    double tone_freq = 10.417e6;
    double tone_amplitude = 0.0;  // resolved to vref when unset
    bool tone_amplitude_set = false;
    bool tone_coherent = true;

    int spectrum_harmonics = 5;
    int setup_cycles = 64;

    PowerParams power;

    double compare_flash_sigma = 0.01;
    int compare_flash_trials = 200;
    double compare_sd_amplitude = 0.9;

    std::string sweep_param;
    std::vector<std::string> sweep_values;
    std::string sweep_run = "power";

    double ramp_lo() const { return ramp_range_set ? ramp_vmin : -adc.vref; }
    double ramp_hi() const { return ramp_range_set ? ramp_vmax : adc.vref; }
    double tone_amp() const { return tone_amplitude_set ? tone_amplitude : adc.vref; }
};

// Builds a RunConfig from a document; rejects unknown keys and unparsable
// values with a diagnostic naming the key.
RunConfig build_run_config(const KeyValueDoc& doc);

// Zero every error knob (gain errors, offsets, taus, comparator and flash
// shifts, noise, sharing memory), keeping the design point.
void make_ideal(AdcConfig& adc);

} // namespace adcsim
