#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core_model.hpp"
#include "rng.hpp"

namespace adcsim {

// Uncorrected per-stage decisions of one conversion.
struct RawStageCodes {
    std::array<int, 6> c{};  // 1.5-bit sub-codes, each in {0,1,2}
    int f = 0;               // 2-bit flash code in {0..3}
    bool valid() const;
};

// Overlap-and-add alignment of the redundant stage codes into the 8-bit
// output word: C = clamp(128 + sum (c_i - 1)*2^(7-i) + (f - 2), 0, 255).
uint8_t digital_error_correction(const RawStageCodes& raw);

// Debug/inspection record of a single conversion.
struct ConversionTrace {
    double input = 0.0;                  // volts, before clipping
    double held = 0.0;                   // volts at the SHA output
    std::array<double, 6> residues{};    // volts, settled stage outputs
    RawStageCodes raw;
    uint8_t code = 0;
    bool clipped = false;
};

struct CodeStream {
    std::vector<uint8_t> codes;
    double fs = 0.0;
    int n_bits = 8;
};

// One amplify-mode client of one OTA in one clock phase.
// Block ids: 0 = SHA, 1..6 = pipeline stages.
struct OtaAssignment {
    int ota;
    int block;
};

struct OtaSchedule {
    int ota_count = 0;
    std::array<std::vector<OtaAssignment>, 2> amplifying;  // index by ClockPhase
    // at most one amplify client per OTA per phase
    bool valid() const;
};

// Stage pairs (1,2), (3,4), (5,6) share an OTA when sharing is enabled;
// paired stages amplify in opposite phases (odd stages in CK1, even in CK2,
// SHA in CK2).
OtaSchedule build_ota_schedule(const AdcConfig& cfg);

// Stateful converter. Settling memory: each block's settling starts from its
// own previous-cycle output; with OTA sharing and a nonzero sharing_memory
// coefficient, a fraction of the partner stage's previous output is added to
// the start point.
class PipelineConverter {
public:
    explicit PipelineConverter(const AdcConfig& cfg, uint64_t seed = 1);

    ConversionTrace convert_sample(double vin);
    void reset();

    const AdcConfig& config() const { return cfg_; }

private:
    AdcConfig cfg_;
    double held_prev_ = 0.0;
    std::array<double, 6> residue_prev_{};  // normalized
    NormalRng noise_;
};

// Sequential conversion of a waveform; settling memory carries between
// samples. Rejects empty input.
CodeStream convert_waveform(std::span<const double> samples, const AdcConfig& cfg,
                            uint64_t seed = 1);

// Round-robin time-interleaving of several pixel streams through one
// converter running at cfg.fs; codes are de-interleaved back per stream.
// All streams must have equal length; at least one stream required.
std::vector<CodeStream> mux_pixels(const std::vector<std::vector<double>>& pixel_streams,
                                   const AdcConfig& cfg, uint64_t seed = 1);

} // namespace adcsim
