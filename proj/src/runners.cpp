#include "runners.hpp"

#include "errors.hpp"
#include "pipeline.hpp"

namespace adcsim {

SetupReport run_setup(const RunConfig& rc) { return setup_test(rc.adc, rc.setup_cycles); }

void write_setup_csv(const SetupReport& rep, const std::string& path) {
    CsvWriter csv({"stage", "ideal_mv", "sim_mv", "error_pct"});
    for (const auto& row : rep.rows)
        csv.add_row({row.name, format_double(row.ideal_mv, 6), format_double(row.sim_mv, 6),
                     format_double(row.error_pct, 4)});
    csv.write_file(path);
}

RampResult run_ramp(const RunConfig& rc) {
    rc.adc.validate();
    const std::vector<double> ramp = gen_ramp(rc.ramp_n, rc.ramp_lo(), rc.ramp_hi());
    const CodeStream codes = convert_waveform(ramp, rc.adc, rc.seed);
    return {inl_dnl(codes)};
}

void write_static_csv(const StaticMetrics& m, const std::string& data_path) {
    CsvWriter csv({"code", "dnl_lsb", "inl_lsb"});
    for (int k = 0; k < 254; ++k)
        csv.add_row({std::to_string(k + 1), format_double(m.dnl[k], 8),
                     format_double(m.inl[k], 8)});
    csv.write_file(data_path);
}

void write_static_summary_csv(const StaticMetrics& m, const std::string& path) {
    CsvWriter csv({"metric", "value_lsb", "code"});
    csv.add_row({"max_inl", format_double(m.max_inl, 6), std::to_string(m.max_inl_code)});
    csv.add_row({"max_dnl", format_double(m.max_dnl, 6), std::to_string(m.max_dnl_code)});
    csv.write_file(path);
}

std::string static_summary_lines(const StaticMetrics& m) {
    return "max_inl," + format_double(m.max_inl, 6) + "," + std::to_string(m.max_inl_code) +
           "\nmax_dnl," + format_double(m.max_dnl, 6) + "," + std::to_string(m.max_dnl_code) +
           "\n";
}

ToneRunResult run_tone(const RunConfig& rc) {
    rc.adc.validate();
    const ToneResult tone =
        gen_tone(rc.tone_n, rc.adc.fs, rc.tone_freq, rc.tone_amp(), rc.tone_coherent);
    const CodeStream codes = convert_waveform(tone.samples, rc.adc, rc.seed);
    std::vector<double> vals(codes.codes.begin(), codes.codes.end());
    ToneRunResult out;
    out.spectrum = spectrum_analyze(vals, rc.adc.fs, rc.spectrum_harmonics);
    out.fin = tone.fin;
    return out;
}

void write_spectrum_csv(const ToneRunResult& r, const std::string& path) {
    CsvWriter csv({"bin", "freq_hz", "db"});
    for (size_t k = 0; k < r.spectrum.psd_db.size(); ++k)
        csv.add_row({std::to_string(k + 1),
                     format_double(static_cast<double>(k + 1) * r.spectrum.bin_hz, 8),
                     format_double(r.spectrum.psd_db[k], 6)});
    csv.write_file(path);
}

void write_dynamic_csv(const ToneRunResult& r, const std::string& path) {
    const DynamicMetrics& m = r.spectrum.metrics;
    CsvWriter csv({"sndr_db", "sfdr_db", "thd_db", "enob"});
    csv.add_row({format_double(m.sndr_db, 6), format_double(m.sfdr_db, 6),
                 format_double(m.thd_db, 6), format_double(m.enob_bits, 6)});
    csv.write_file(path);
}

ArchComparison run_compare(const RunConfig& rc) {
    CompareSettings s;
    s.fs = rc.adc.fs;
    s.flash_sigma = rc.compare_flash_sigma;
    s.flash_trials = rc.compare_flash_trials;
    s.sd_amplitude = rc.compare_sd_amplitude;
    s.seed = rc.seed;
    return compare_architectures(s);
}

void write_table_csv(const ComparisonTable& t, const std::string& path) {
    CsvWriter csv(t.header);
    for (const auto& row : t.rows) csv.add_row(row);
    csv.write_file(path);
}

void write_table_text(const ComparisonTable& t, const std::string& path) {
    write_text_file(path, render_aligned(t.header, t.rows));
}

PowerReport run_power(const RunConfig& rc) { return power_model(rc.adc, rc.power); }

void write_power_csv(const PowerReport& rep, const std::string& path) {
    CsvWriter csv({"ota_count", "p_ota_mw", "p_comparators_mw", "p_digital_clock_mw", "total_mw",
                   "fom_pj_per_step"});
    csv.add_row({std::to_string(rep.ota_count), format_double(rep.p_ota_mw, 6),
                 format_double(rep.p_comparators_mw, 6),
                 format_double(rep.p_digital_clock_mw, 6), format_double(rep.total_mw, 6),
                 format_double(rep.fom_pj_per_step, 6)});
    csv.write_file(path);
}

SweepResult run_sweep(const RunConfig& rc, const KeyValueDoc& base_doc) {
    if (rc.sweep_param.empty()) throw ConfigError("sweep requires sweep.param");
    if (rc.sweep_values.empty()) throw ConfigError("sweep requires a non-empty sweep.values list");

    SweepResult out;
    const std::string& run = rc.sweep_run;
    if (run == "power") {
        out.table.header = {"param", "value", "ota_count", "total_mw", "fom_pj_per_step"};
    } else if (run == "tone") {
        out.table.header = {"param", "value", "sndr_db", "sfdr_db", "thd_db", "enob"};
    } else if (run == "ramp") {
        out.table.header = {"param", "value", "max_dnl_lsb", "max_dnl_code", "max_inl_lsb",
                            "max_inl_code"};
    } else if (run == "setup") {
        out.table.header = {"param", "value", "worst_error_pct"};
    } else {
        throw ConfigError("config key 'sweep.run': unknown run type '" + run + "'");
    }

    for (const std::string& value : rc.sweep_values) {
        KeyValueDoc doc = base_doc;
        doc.set(rc.sweep_param, value);
        const RunConfig point = build_run_config(doc);
        std::vector<std::string> row = {rc.sweep_param, value};
        if (run == "power") {
            const PowerReport p = run_power(point);
            row.insert(row.end(), {std::to_string(p.ota_count), format_double(p.total_mw, 6),
                                   format_double(p.fom_pj_per_step, 6)});
        } else if (run == "tone") {
            const DynamicMetrics m = run_tone(point).spectrum.metrics;
            row.insert(row.end(),
                       {format_double(m.sndr_db, 6), format_double(m.sfdr_db, 6),
                        format_double(m.thd_db, 6), format_double(m.enob_bits, 6)});
        } else if (run == "ramp") {
            const StaticMetrics m = run_ramp(point).metrics;
            row.insert(row.end(),
                       {format_double(m.max_dnl, 6), std::to_string(m.max_dnl_code),
                        format_double(m.max_inl, 6), std::to_string(m.max_inl_code)});
        } else {
            const SetupReport rep = run_setup(point);
            double worst = 0.0;
            for (const auto& r : rep.rows) worst = std::max(worst, r.error_pct);
            row.push_back(format_double(worst, 6));
        }
        out.table.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace adcsim
