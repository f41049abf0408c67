#pragma once

#include <array>
#include <cstdint>

namespace adcsim {

// Two-phase non-overlapping clock; each phase lasts half the sample period.
enum class ClockPhase { Ck1, Ck2 };

// Per-stage non-idealities. gain_error is the fractional deviation of the
// residue gain from its ideal value (2.0 for a 1.5-bit stage, 1.0 for the
// SHA). cmp_shift_* displace the two sub-ADC comparator thresholds from
// their nominal +-Vref/4 positions, in volts.
struct StageParams {
    double gain_error = 0.0;
    double offset = 0.0;        // volts, output-referred
    double tau = 0.0;           // seconds; 0 = instantaneous settling
    double cmp_shift_lo = 0.0;  // volts, shift of the -Vref/4 comparator
    double cmp_shift_hi = 0.0;  // volts, shift of the +Vref/4 comparator
};

// Full converter description: SHA + six 1.5-bit stages + 2-bit flash.
struct AdcConfig {
    double vref = 0.6;                                  // volts, full scale is +-vref
    StageParams sha;                                    // comparator shifts unused
    std::array<StageParams, 6> stages{};
    std::array<double, 3> flash_threshold_shifts{};     // volts
    double fs = 166.6e6;                                // hertz
    bool ota_sharing = true;
    double noise_sigma = 0.0;                           // volts, input-referred additive noise
    double sharing_memory = 0.0;                        // fraction of partner-stage residue
                                                        // coupled into the settling start

    double sample_period() const { return 1.0 / fs; }
    // throws PreconditionError on an invalid configuration
    void validate() const;
};

// Sub-ADC decision of a 1.5-bit stage. x and the shifts are normalized to
// [-1,1]; nominal thresholds sit at +-1/4. Inputs exactly on a threshold go
// to the middle code.
int stage_decide(double x, double shift_lo, double shift_hi);

// Instantaneous MDAC output: r = 2(1+gain_error)*x - d + offset/vref with
// d = c - 1. Settling is applied separately.
double mdac_residue(double x, int c, const StageParams& p, double vref);

// Single-pole exponential settling over a window of t_avail seconds.
// tau = 0 returns the target exactly.
double settle(double target, double previous, double tau, double t_avail);

struct ShaResult {
    double held;   // volts
    bool clipped;  // input exceeded +-vref and was saturated
};

// Switched-capacitor sample/hold: clips the input to +-vref, applies the SHA
// gain error and offset, then settles over half a clock period starting from
// the previously held value.
ShaResult sha_sample(double vin, const AdcConfig& cfg, double previous_held);

// 2-bit flash backend. Thresholds nominally at -1/2, 0, +1/2 (normalized);
// returns the count of thresholds at or below x (ties go to the upper code).
int flash2b_quantize(double x, const std::array<double, 3>& threshold_shifts);

} // namespace adcsim
