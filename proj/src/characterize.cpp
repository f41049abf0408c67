#include "characterize.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dsp.hpp"
#include "errors.hpp"

namespace adcsim {

double enob_from_sndr(double sndr_db) { return (sndr_db - 1.76) / 6.02; }

std::vector<double> gen_ramp(size_t n, double vmin, double vmax) {
    if (n < 2) throw PreconditionError("ramp needs at least 2 samples");
    if (!(vmax > vmin)) throw PreconditionError("ramp needs vmax > vmin");
    std::vector<double> v(n);
    const double step = (vmax - vmin) / static_cast<double>(n - 1);
    for (size_t i = 0; i < n; ++i) v[i] = vmin + step * static_cast<double>(i);
    v.back() = vmax;
    return v;
}

ToneResult gen_tone(size_t n, double fs, double target_fin, double amplitude, bool coherent) {
    if (n < 2) throw PreconditionError("tone needs at least 2 samples");
    if (!(target_fin > 0.0) || target_fin >= 0.5 * fs)
        throw PreconditionError("tone frequency must lie in (0, fs/2)");
    if (amplitude < 0.0) throw PreconditionError("tone amplitude must be >= 0");

    ToneResult out;
    if (coherent) {
        if (!is_power_of_two(n))
            throw PreconditionError("coherent tone needs a power-of-two length");
        // nearest odd cycle count; odd M is coprime with the power-of-two n
        const double cycles = static_cast<double>(n) * target_fin / fs;
        long m = 2 * std::lround((cycles - 1.0) / 2.0) + 1;
        m = std::max(1L, m);
        out.fin = fs * static_cast<double>(m) / static_cast<double>(n);
        out.samples.resize(n);
        for (size_t k = 0; k < n; ++k)
            out.samples[k] = amplitude *
                std::sin(2.0 * M_PI * static_cast<double>(m) * static_cast<double>(k) /
                         static_cast<double>(n));
    } else {
        out.fin = target_fin;
        out.samples.resize(n);
        for (size_t k = 0; k < n; ++k)
            out.samples[k] =
                amplitude * std::sin(2.0 * M_PI * target_fin / fs * static_cast<double>(k));
    }
    return out;
}

StaticMetrics inl_dnl(const CodeStream& codes) {
    std::array<double, 256> hist{};
    for (uint8_t c : codes.codes) hist[c] += 1.0;

    double total = 0.0;
    for (int k = 1; k <= 254; ++k) total += hist[k];
    const double mean = total / 254.0;
    if (mean < 64.0)
        throw PreconditionError("insufficient ramp coverage: mean interior hit count below 64");

    StaticMetrics m;
    for (int k = 0; k < 254; ++k) m.dnl[k] = hist[k + 1] / mean - 1.0;

    std::array<double, 254> raw{};
    double acc = 0.0;
    for (int k = 0; k < 254; ++k) {
        acc += m.dnl[k];
        raw[k] = acc;
    }
    // reference line through the first and last interior points
    const double i0 = raw[0];
    const double slope = (raw[253] - i0) / 253.0;
    for (int k = 0; k < 254; ++k) m.inl[k] = raw[k] - (i0 + slope * k);

    for (int k = 0; k < 254; ++k) {
        if (std::abs(m.dnl[k]) > m.max_dnl) {
            m.max_dnl = std::abs(m.dnl[k]);
            m.max_dnl_code = k + 1;
        }
        if (std::abs(m.inl[k]) > m.max_inl) {
            m.max_inl = std::abs(m.inl[k]);
            m.max_inl_code = k + 1;
        }
    }
    return m;
}

SpectrumData spectrum_analyze(const std::vector<double>& values, double fs, int n_harmonics) {
    const size_t n = values.size();
    if (n < 1024 || !is_power_of_two(n))
        throw PreconditionError("spectrum needs a power-of-two record of at least 1024 samples");
    if (n_harmonics < 1) throw PreconditionError("spectrum needs n_harmonics >= 1");

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);
    std::vector<double> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = values[i] - mean;

    const std::vector<double> p = power_spectrum(x);  // bins 0..n/2
    const size_t half = n / 2;

    size_t k0 = 1;
    for (size_t k = 2; k <= half; ++k)
        if (p[k] > p[k0]) k0 = k;
    const double psig = p[k0];
    if (psig <= 0.0) throw PreconditionError("no fundamental: input has no AC content");

    double pnd = 0.0;
    size_t kspur = (k0 == 1) ? 2 : 1;
    for (size_t k = 1; k <= half; ++k) {
        if (k == k0) continue;
        pnd += p[k];
        if (p[k] > p[kspur]) kspur = k;
    }

    // alias harmonics of the fundamental into the first Nyquist zone
    std::set<size_t> harm_bins;
    for (int h = 2; h <= n_harmonics + 1; ++h) {
        size_t b = (static_cast<size_t>(h) * k0) % n;
        if (b > half) b = n - b;
        if (b != 0 && b != k0) harm_bins.insert(b);
    }
    double ph = 0.0;
    for (size_t b : harm_bins) ph += p[b];

    SpectrumData out;
    out.metrics.sndr_db = 10.0 * std::log10(psig / pnd);
    out.metrics.sfdr_db = 10.0 * std::log10(psig / p[kspur]);
    out.metrics.thd_db = ph > 0.0 ? 10.0 * std::log10(ph / psig) : -300.0;
    out.metrics.enob_bits = enob_from_sndr(out.metrics.sndr_db);
    out.metrics.fundamental_bin = static_cast<int>(k0);
    out.metrics.worst_spur_bin = static_cast<int>(kspur);
    out.bin_hz = fs / static_cast<double>(n);
    out.psd_db.resize(half);
    for (size_t k = 1; k <= half; ++k)
        out.psd_db[k - 1] = p[k] > 0.0 ? 10.0 * std::log10(p[k] / psig) : -300.0;
    return out;
}

DynamicMetrics spectrum(const CodeStream& codes, int n_harmonics) {
    std::vector<double> v(codes.codes.begin(), codes.codes.end());
    return spectrum_analyze(v, codes.fs, n_harmonics).metrics;
}

SetupReport setup_test(const AdcConfig& cfg, int cycles) {
    cfg.validate();
    if (cycles < 2) throw PreconditionError("setup test needs at least 2 cycles");
    if (cycles % 2 != 0) ++cycles;  // end on a +full-scale cycle

    const double window = 0.5 * cfg.sample_period();
    const std::array<double, 7> taus = {cfg.sha.tau,           cfg.stages[0].tau,
                                        cfg.stages[1].tau,     cfg.stages[2].tau,
                                        cfg.stages[3].tau,     cfg.stages[4].tau,
                                        cfg.stages[5].tau};
    std::array<double, 7> v{};
    for (int cyc = 0; cyc < cycles; ++cyc) {
        const double vin = (cyc % 2 == 1) ? cfg.vref : -cfg.vref;
        double prev_out = vin;
        for (int b = 0; b < 7; ++b) {
            v[b] = settle(prev_out, v[b], taus[b], window);
            prev_out = v[b];
        }
    }

    static const char* kNames[7] = {"SHA",    "Stage1", "Stage2", "Stage3",
                                    "Stage4", "Stage5", "Stage6"};
    SetupReport rep;
    rep.rows.push_back({"Vin", cfg.vref * 1e3, cfg.vref * 1e3, 0.0});
    double ideal = cfg.vref * 1e3;
    for (int b = 0; b < 7; ++b) {
        const double sim = v[b] * 1e3;
        rep.rows.push_back({kNames[b], ideal, sim, std::abs(ideal - sim) / ideal * 100.0});
        ideal = sim;
    }
    return rep;
}

} // namespace adcsim
