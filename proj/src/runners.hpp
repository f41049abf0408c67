#pragma once

#include <string>

#include "arch_compare.hpp"
#include "characterize.hpp"
#include "config.hpp"
#include "csv.hpp"

namespace adcsim {

// One result type per CLI subcommand, each with its file emitters. All
// numeric output is routed through format_double so identical runs produce
// byte-identical files.

SetupReport run_setup(const RunConfig& rc);
void write_setup_csv(const SetupReport& rep, const std::string& path);

struct RampResult {
    StaticMetrics metrics;
};
RampResult run_ramp(const RunConfig& rc);
void write_static_csv(const StaticMetrics& m, const std::string& data_path);
void write_static_summary_csv(const StaticMetrics& m, const std::string& path);
std::string static_summary_lines(const StaticMetrics& m);

struct ToneRunResult {
    SpectrumData spectrum;
    double fin = 0.0;
};
ToneRunResult run_tone(const RunConfig& rc);
void write_spectrum_csv(const ToneRunResult& r, const std::string& path);
void write_dynamic_csv(const ToneRunResult& r, const std::string& path);

ArchComparison run_compare(const RunConfig& rc);
void write_table_csv(const ComparisonTable& t, const std::string& path);
void write_table_text(const ComparisonTable& t, const std::string& path);

PowerReport run_power(const RunConfig& rc);
void write_power_csv(const PowerReport& rep, const std::string& path);

struct SweepResult {
    ComparisonTable table;  // header + one row per grid point
};
SweepResult run_sweep(const RunConfig& rc, const KeyValueDoc& base_doc);

} // namespace adcsim
