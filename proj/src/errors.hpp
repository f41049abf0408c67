#pragma once

#include <stdexcept>
#include <string>

namespace adcsim {

// Bad configuration input (unknown key, unparsable value, invalid combination).
// Maps to exit code / status 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Violated runtime precondition (too few samples, no fundamental, ...).
// Maps to exit code / status 3.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace adcsim
