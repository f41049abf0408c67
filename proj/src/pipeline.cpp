#include "pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "errors.hpp"

namespace adcsim {

bool RawStageCodes::valid() const {
    for (int ci : c)
        if (ci < 0 || ci > 2) return false;
    return f >= 0 && f <= 3;
}

uint8_t digital_error_correction(const RawStageCodes& raw) {
    int code = 128;
    for (int i = 0; i < 6; ++i) code += (raw.c[i] - 1) * (1 << (6 - i));
    code += raw.f - 2;
    return static_cast<uint8_t>(std::clamp(code, 0, 255));
}

bool OtaSchedule::valid() const {
    for (const auto& phase : amplifying) {
        std::set<int> seen;
        for (const auto& a : phase) {
            if (a.ota < 0 || a.ota >= ota_count) return false;
            if (!seen.insert(a.ota).second) return false;
        }
    }
    return true;
}

OtaSchedule build_ota_schedule(const AdcConfig& cfg) {
    OtaSchedule s;
    auto& ck1 = s.amplifying[static_cast<int>(ClockPhase::Ck1)];
    auto& ck2 = s.amplifying[static_cast<int>(ClockPhase::Ck2)];
    // SHA samples in CK1 and drives its output in CK2; each following stage
    // runs half a cycle later, so odd stages amplify in CK1, even in CK2.
    if (cfg.ota_sharing) {
        s.ota_count = 4;
        ck2.push_back({0, 0});
        for (int stage = 1; stage <= 6; ++stage) {
            const int ota = 1 + (stage - 1) / 2;
            (stage % 2 == 1 ? ck1 : ck2).push_back({ota, stage});
        }
    } else {
        s.ota_count = 7;
        ck2.push_back({0, 0});
        for (int stage = 1; stage <= 6; ++stage)
            (stage % 2 == 1 ? ck1 : ck2).push_back({stage, stage});
    }
    return s;
}

PipelineConverter::PipelineConverter(const AdcConfig& cfg, uint64_t seed)
    : cfg_(cfg), noise_(seed) {
    cfg_.validate();
}

void PipelineConverter::reset() {
    held_prev_ = 0.0;
    residue_prev_.fill(0.0);
}

ConversionTrace PipelineConverter::convert_sample(double vin) {
    if (!std::isfinite(vin)) throw PreconditionError("non-finite input sample");
    ConversionTrace t;
    t.input = vin;

    if (cfg_.noise_sigma > 0.0) vin += cfg_.noise_sigma * noise_.next();

    const ShaResult sha = sha_sample(vin, cfg_, held_prev_);
    held_prev_ = sha.held;
    t.held = sha.held;
    t.clipped = sha.clipped;

    const double window = 0.5 * cfg_.sample_period();
    double x = sha.held / cfg_.vref;
    std::array<double, 6> residue_new{};
    for (int i = 0; i < 6; ++i) {
        const StageParams& p = cfg_.stages[i];
        const int c = stage_decide(x, p.cmp_shift_lo / cfg_.vref, p.cmp_shift_hi / cfg_.vref);
        t.raw.c[i] = c;
        const double target = mdac_residue(x, c, p, cfg_.vref);
        double start = residue_prev_[i];
        if (cfg_.ota_sharing && cfg_.sharing_memory != 0.0) {
            const int partner = (i % 2 == 0) ? i + 1 : i - 1;
            start += cfg_.sharing_memory * residue_prev_[partner];
        }
        const double r = settle(target, start, p.tau, window);
        residue_new[i] = r;
        t.residues[i] = r * cfg_.vref;
        x = r;
    }
    residue_prev_ = residue_new;

    std::array<double, 3> fshift{};
    for (int k = 0; k < 3; ++k) fshift[k] = cfg_.flash_threshold_shifts[k] / cfg_.vref;
    t.raw.f = flash2b_quantize(x, fshift);
    t.code = digital_error_correction(t.raw);
    return t;
}

CodeStream convert_waveform(std::span<const double> samples, const AdcConfig& cfg,
                            uint64_t seed) {
    if (samples.empty()) throw PreconditionError("empty input waveform");
    PipelineConverter conv(cfg, seed);
    CodeStream out;
    out.fs = cfg.fs;
    out.codes.reserve(samples.size());
    for (double v : samples) out.codes.push_back(conv.convert_sample(v).code);
    return out;
}

std::vector<CodeStream> mux_pixels(const std::vector<std::vector<double>>& pixel_streams,
                                   const AdcConfig& cfg, uint64_t seed) {
    if (pixel_streams.empty()) throw PreconditionError("mux_pixels requires at least one stream");
    const size_t len = pixel_streams.front().size();
    for (const auto& s : pixel_streams)
        if (s.size() != len) throw PreconditionError("mux_pixels requires equal-length streams");
    if (len == 0) throw PreconditionError("empty input waveform");

    const size_t k = pixel_streams.size();
    std::vector<double> interleaved;
    interleaved.reserve(k * len);
    for (size_t t = 0; t < k * len; ++t) interleaved.push_back(pixel_streams[t % k][t / k]);

    const CodeStream all = convert_waveform(interleaved, cfg, seed);

    std::vector<CodeStream> out(k);
    for (size_t s = 0; s < k; ++s) {
        out[s].fs = cfg.fs / static_cast<double>(k);  // effective per-pixel rate
        out[s].codes.reserve(len);
    }
    for (size_t t = 0; t < all.codes.size(); ++t) out[t % k].codes.push_back(all.codes[t]);
    return out;
}

} // namespace adcsim
