#include "core_model.hpp"

#include <cmath>

#include "errors.hpp"

namespace adcsim {

void AdcConfig::validate() const {
    if (!(vref > 0.0)) throw PreconditionError("adc.vref must be positive");
    if (!(fs > 0.0)) throw PreconditionError("adc.fs must be positive");
    if (!(sha.tau >= 0.0)) throw PreconditionError("adc.sha.tau must be >= 0");
    for (size_t i = 0; i < stages.size(); ++i) {
        const StageParams& p = stages[i];
        if (!(p.tau >= 0.0))
            throw PreconditionError("adc.stages." + std::to_string(i + 1) + ".tau must be >= 0");
        if (!(std::abs(p.gain_error) < 0.5))
            throw PreconditionError("adc.stages." + std::to_string(i + 1) +
                                    ".gain_error out of range (|e| < 0.5)");
    }
    if (!(noise_sigma >= 0.0)) throw PreconditionError("adc.noise_sigma must be >= 0");
    if (!std::isfinite(vref) || !std::isfinite(fs)) throw PreconditionError("non-finite config value");
}

int stage_decide(double x, double shift_lo, double shift_hi) {
    if (x > 0.25 + shift_hi) return 2;
    if (x < -0.25 + shift_lo) return 0;
    return 1;
}

double mdac_residue(double x, int c, const StageParams& p, double vref) {
    const double d = c - 1;
    return (2.0 + 2.0 * p.gain_error) * x - d + p.offset / vref;
}

double settle(double target, double previous, double tau, double t_avail) {
    if (tau <= 0.0) return target;
    return target - (target - previous) * std::exp(-t_avail / tau);
}

ShaResult sha_sample(double vin, const AdcConfig& cfg, double previous_held) {
    bool clipped = false;
    if (vin > cfg.vref) {
        vin = cfg.vref;
        clipped = true;
    } else if (vin < -cfg.vref) {
        vin = -cfg.vref;
        clipped = true;
    }
    const double target = vin * (1.0 + cfg.sha.gain_error) + cfg.sha.offset;
    const double held = settle(target, previous_held, cfg.sha.tau, 0.5 * cfg.sample_period());
    return {held, clipped};
}

int flash2b_quantize(double x, const std::array<double, 3>& threshold_shifts) {
    int f = 0;
    f += x >= -0.5 + threshold_shifts[0];
    f += x >= 0.0 + threshold_shifts[1];
    f += x >= 0.5 + threshold_shifts[2];
    return f;
}

} // namespace adcsim
