#include "arch_compare.hpp"

#include <cmath>

#include "characterize.hpp"
#include "csv.hpp"
#include "dsp.hpp"
#include "errors.hpp"
#include "pipeline.hpp"
#include "rng.hpp"

namespace adcsim {

static void validate_sd(const SdConfig& cfg) {
    if (cfg.osr < 4 || !is_power_of_two(static_cast<size_t>(cfg.osr)))
        throw PreconditionError("sd osr must be a power of two >= 4");
    if (!is_power_of_two(cfg.n_samples) || cfg.n_samples < 1024)
        throw PreconditionError("sd n_samples must be a power of two >= 1024");
    if (cfg.input_amplitude > 0.9)
        throw PreconditionError("sd amplitude above 0.9 risks loop instability");
    if (cfg.input_amplitude < 0.0) throw PreconditionError("sd amplitude must be >= 0");
}

std::vector<double> sd_first_order_bitstream(const SdConfig& cfg, double fin_over_fs) {
    validate_sd(cfg);
    const size_t n = cfg.n_samples;
    const size_t band = n / (2 * static_cast<size_t>(cfg.osr));
    if (fin_over_fs < 0.0 || fin_over_fs * 2.0 * cfg.osr >= 1.0)
        throw PreconditionError("sd tone must lie inside the decimated band");

    long m = 2 * std::lround((static_cast<double>(n) * fin_over_fs - 1.0) / 2.0) + 1;
    m = std::max(1L, std::min(m, static_cast<long>(band) - 1));

    std::vector<double> q(n);
    double integ = 0.0;
    double fb = 1.0;
    for (size_t i = 0; i < n; ++i) {
        const double x = cfg.input_amplitude *
            std::sin(2.0 * M_PI * static_cast<double>(m) * static_cast<double>(i) /
                     static_cast<double>(n));
        integ = integ + x - fb;
        fb = integ >= 0.0 ? 1.0 : -1.0;
        q[i] = fb;
    }
    return q;
}

double sd_first_order_snr(const SdConfig& cfg, double fin_over_fs) {
    if (cfg.input_amplitude <= 0.0)
        throw PreconditionError("no fundamental: sd amplitude is zero");
    const std::vector<double> q = sd_first_order_bitstream(cfg, fin_over_fs);
    const size_t n = cfg.n_samples;
    const size_t band = n / (2 * static_cast<size_t>(cfg.osr));

    long m = 2 * std::lround((static_cast<double>(n) * fin_over_fs - 1.0) / 2.0) + 1;
    m = std::max(1L, std::min(m, static_cast<long>(band) - 1));

    const std::vector<double> p = power_spectrum(q);
    const double psig = p[static_cast<size_t>(m)];
    double pn = 0.0;
    for (size_t k = 1; k <= band; ++k)
        if (k != static_cast<size_t>(m)) pn += p[k];
    if (psig <= 0.0 || pn <= 0.0) throw PreconditionError("degenerate sigma-delta spectrum");
    return 10.0 * std::log10(psig / pn);
}

double sd_inband_tone(const SdConfig& cfg) {
    const size_t band = cfg.n_samples / (2 * static_cast<size_t>(cfg.osr));
    long m = 2 * std::lround((static_cast<double>(band) / 4.0 - 1.0) / 2.0) + 1;
    m = std::max(1L, m);
    return static_cast<double>(m) / static_cast<double>(cfg.n_samples);
}

FlashMcSummary flash_montecarlo(const FlashConfig& cfg) {
    if (cfg.n_bits < 1 || cfg.n_bits > 8)
        throw PreconditionError("flash n_bits must be in [1, 8]");
    if (cfg.n_trials < 1) throw PreconditionError("flash n_trials must be >= 1");
    if (cfg.ladder_sigma < 0.0) throw PreconditionError("flash ladder_sigma must be >= 0");

    const int n = 1 << cfg.n_bits;
    FlashMcSummary out;
    double sum = 0.0;
    for (int t = 0; t < cfg.n_trials; ++t) {
        NormalRng rng(derive_seed(cfg.rng_seed, static_cast<uint64_t>(t)));
        std::vector<double> r(n);
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            r[i] = 1.0 + cfg.ladder_sigma * (cfg.ladder_sigma > 0.0 ? rng.next() : 0.0);
            total += r[i];
        }
        double cum = 0.0;
        double worst = 0.0;
        for (int k = 1; k < n; ++k) {
            cum += r[k - 1];
            const double inl = (cum / total - static_cast<double>(k) / n) * n;
            worst = std::max(worst, std::abs(inl));
        }
        sum += worst;
        out.max_max_inl = std::max(out.max_max_inl, worst);
    }
    out.mean_max_inl = sum / cfg.n_trials;
    return out;
}

PowerReport power_model(const AdcConfig& cfg, const PowerParams& cal) {
    cfg.validate();
    if (cal.p_ota_mw < 0.0 || cal.p_comparators_mw < 0.0 || cal.p_digital_clock_mw < 0.0)
        throw PreconditionError("power components must be non-negative");
    PowerReport rep;
    rep.ota_count = build_ota_schedule(cfg).ota_count;
    rep.p_ota_mw = cal.p_ota_mw;
    rep.p_comparators_mw = cal.p_comparators_mw;
    rep.p_digital_clock_mw = cal.p_digital_clock_mw;
    rep.total_mw = rep.ota_count * cal.p_ota_mw + cal.p_comparators_mw + cal.p_digital_clock_mw;
    rep.fom_pj_per_step = rep.total_mw * 1e9 / (std::pow(2.0, cal.enob) * cfg.fs);
    return rep;
}

ArchComparison compare_architectures(const CompareSettings& s) {
    if (!(s.fs > 0.0)) throw PreconditionError("compare needs fs > 0");
    if (s.n_bits < 1 || s.n_bits > 8) throw PreconditionError("compare n_bits must be in [1, 8]");

    ArchComparison out;
    out.pipeline_fs = s.fs;

    // pipeline: ideal converter driven with a full-scale coherent tone
    AdcConfig ideal;
    ideal.fs = s.fs;
    const ToneResult tone = gen_tone(8192, s.fs, s.fs / 16.0, ideal.vref, true);
    const CodeStream codes = convert_waveform(tone.samples, ideal, s.seed);
    out.pipeline_enob = spectrum(codes).enob_bits;

    // sigma-delta: smallest OSR whose first-order loop reaches the n-bit SNR goal
    out.sd_snr_goal_db = 6.02 * s.n_bits + 1.76;
    for (int osr = 4; osr <= 1 << 14; osr *= 2) {
        SdConfig sd;
        sd.osr = osr;
        sd.input_amplitude = s.sd_amplitude;
        const double snr = sd_first_order_snr(sd, sd_inband_tone(sd));
        if (snr >= out.sd_snr_goal_db || osr == 1 << 14) {
            out.sd_required_osr = osr;
            out.sd_snr_at_osr = snr;
            out.sd_internal_clock_hz = s.fs * osr;
            break;
        }
    }

    // flash: mismatch-limited linearity at the requested ladder sigma
    FlashConfig fc;
    fc.n_bits = s.n_bits;
    fc.ladder_sigma = s.flash_sigma;
    fc.n_trials = s.flash_trials;
    fc.rng_seed = s.seed;
    out.flash_n_bits = s.n_bits;
    out.flash_sigma = s.flash_sigma;
    out.flash_mean_max_inl = flash_montecarlo(fc).mean_max_inl;

    out.table.header = {"architecture", "sample_rate", "resolution_limit", "note"};
    out.table.rows.push_back(
        {"sigma-delta",
         "internal clock " + format_double(out.sd_internal_clock_hz / 1e9, 4) + " GHz for OSR " +
             std::to_string(out.sd_required_osr),
         "SNR " + format_double(out.sd_snr_at_osr, 4) + " dB at OSR " +
             std::to_string(out.sd_required_osr) + " (first-order)",
         "oversampling limits the usable output rate"});
    out.table.rows.push_back(
        {"flash", "single-step conversion at any fs",
         "mean max|INL| " + format_double(out.flash_mean_max_inl, 4) + " LSB at " +
             format_double(s.flash_sigma * 100.0, 3) + "% ladder sigma, " +
             std::to_string(s.n_bits) + " bits",
         "resolution limited by resistor-ladder mismatch"});
    out.table.rows.push_back(
        {"pipeline", format_double(s.fs / 1e6, 4) + " MS/s",
         "simulated ENOB " + format_double(out.pipeline_enob, 4) + " (ideal stages)",
         "per-stage redundancy absorbs comparator error"});
    return out;
}

} // namespace adcsim
