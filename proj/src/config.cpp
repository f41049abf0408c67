#include "config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>

#include "errors.hpp"

namespace adcsim {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        throw ConfigError("config key '" + key + "': expected a number, got '" + value + "'");
    return v;
}

uint64_t parse_u64(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE ||
        value.find('-') != std::string::npos)
        throw ConfigError("config key '" + key + "': expected an unsigned integer, got '" +
                          value + "'");
    return v;
}

size_t parse_count(const std::string& key, const std::string& value) {
    return static_cast<size_t>(parse_u64(key, value));
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "on" || value == "1") return true;
    if (value == "false" || value == "off" || value == "0") return false;
    throw ConfigError("config key '" + key + "': expected true/false, got '" + value + "'");
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : value) {
        if (ch == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
    out.erase(std::remove(out.begin(), out.end(), std::string()), out.end());
    return out;
}

// keys addressing StageParams fields; stage index 0 means the SHA
bool apply_stage_key(StageParams& p, const std::string& field, const std::string& key,
                     const std::string& value, bool allow_cmp) {
    if (field == "gain_error") {
        p.gain_error = parse_double(key, value);
    } else if (field == "offset") {
        p.offset = parse_double(key, value);
    } else if (field == "tau") {
        p.tau = parse_double(key, value);
    } else if (allow_cmp && field == "cmp_shift_lo") {
        p.cmp_shift_lo = parse_double(key, value);
    } else if (allow_cmp && field == "cmp_shift_hi") {
        p.cmp_shift_hi = parse_double(key, value);
    } else {
        return false;
    }
    return true;
}

} // namespace

void KeyValueDoc::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
        entries_[key] = value;
    }
}

void KeyValueDoc::set(const std::string& key, const std::string& value) {
    if (key.empty()) throw ConfigError("empty config key");
    entries_[key] = value;
}

bool KeyValueDoc::has(const std::string& key) const { return entries_.count(key) != 0; }

void make_ideal(AdcConfig& adc) {
    adc.sha = StageParams{};
    adc.stages.fill(StageParams{});
    adc.flash_threshold_shifts.fill(0.0);
    adc.noise_sigma = 0.0;
    adc.sharing_memory = 0.0;
}

RunConfig build_run_config(const KeyValueDoc& doc) {
    RunConfig rc;
    for (const auto& [key, value] : doc.entries()) {
        if (key == "seed") {
            rc.seed = parse_u64(key, value);
        } else if (key == "adc.vref") {
            rc.adc.vref = parse_double(key, value);
        } else if (key == "adc.fs") {
            rc.adc.fs = parse_double(key, value);
        } else if (key == "adc.ota_sharing") {
            rc.adc.ota_sharing = parse_bool(key, value);
        } else if (key == "adc.noise_sigma") {
            rc.adc.noise_sigma = parse_double(key, value);
        } else if (key == "adc.sharing_memory") {
            rc.adc.sharing_memory = parse_double(key, value);
        } else if (key.rfind("adc.sha.", 0) == 0) {
            if (!apply_stage_key(rc.adc.sha, key.substr(8), key, value, false))
                throw ConfigError("unknown config key '" + key + "'");
        } else if (key.rfind("adc.stages.", 0) == 0) {
            const std::string rest = key.substr(11);
            const size_t dot = rest.find('.');
            if (dot == std::string::npos)
                throw ConfigError("unknown config key '" + key + "'");
            const std::string idx = rest.substr(0, dot);
            if (idx.size() != 1 || idx[0] < '1' || idx[0] > '6')
                throw ConfigError("config key '" + key + "': stage index must be 1..6");
            StageParams& p = rc.adc.stages[static_cast<size_t>(idx[0] - '1')];
            if (!apply_stage_key(p, rest.substr(dot + 1), key, value, true))
                throw ConfigError("unknown config key '" + key + "'");
        } else if (key == "adc.flash.shift_1") {
            rc.adc.flash_threshold_shifts[0] = parse_double(key, value);
        } else if (key == "adc.flash.shift_2") {
            rc.adc.flash_threshold_shifts[1] = parse_double(key, value);
        } else if (key == "adc.flash.shift_3") {
            rc.adc.flash_threshold_shifts[2] = parse_double(key, value);
        } else if (key == "ramp.n") {
            rc.ramp_n = parse_count(key, value);
        } else if (key == "ramp.vmin") {
            rc.ramp_vmin = parse_double(key, value);
            rc.ramp_range_set = true;
        } else if (key == "ramp.vmax") {
            rc.ramp_vmax = parse_double(key, value);
            rc.ramp_range_set = true;
        } else if (key == "tone.n") {
            rc.tone_n = parse_count(key, value);
        } else if (key == "tone.freq") {
            rc.tone_freq = parse_double(key, value);
        } else if (key == "tone.amplitude") {
            rc.tone_amplitude = parse_double(key, value);
            rc.tone_amplitude_set = true;
        } else if (key == "tone.coherent") {
            rc.tone_coherent = parse_bool(key, value);
        } else if (key == "spectrum.harmonics") {
            rc.spectrum_harmonics = static_cast<int>(parse_u64(key, value));
        } else if (key == "setup.cycles") {
            rc.setup_cycles = static_cast<int>(parse_u64(key, value));
        } else if (key == "power.p_ota_mw") {
            rc.power.p_ota_mw = parse_double(key, value);
        } else if (key == "power.p_comparators_mw") {
            rc.power.p_comparators_mw = parse_double(key, value);
        } else if (key == "power.p_digital_mw") {
            rc.power.p_digital_clock_mw = parse_double(key, value);
        } else if (key == "power.enob") {
            rc.power.enob = parse_double(key, value);
        } else if (key == "compare.flash_sigma") {
            rc.compare_flash_sigma = parse_double(key, value);
        } else if (key == "compare.flash_trials") {
            rc.compare_flash_trials = static_cast<int>(parse_u64(key, value));
        } else if (key == "compare.sd_amplitude") {
            rc.compare_sd_amplitude = parse_double(key, value);
        } else if (key == "sweep.param") {
            rc.sweep_param = value;
        } else if (key == "sweep.values") {
            rc.sweep_values = split_list(value);
        } else if (key == "sweep.run") {
            rc.sweep_run = value;
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }

    if (rc.ramp_range_set && !(rc.ramp_hi() > rc.ramp_lo()))
        throw ConfigError("config key 'ramp.vmax': must exceed ramp.vmin");
    return rc;
}

} // namespace adcsim
