#pragma once

#include <stdexcept>
#include <string>

namespace bulb {

/// Bad user-supplied configuration: file syntax, unknown keys, invalid values.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Snapshot file does not parse: bad magic, unsupported version, truncation.
struct format_error : std::runtime_error {
    explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The time integrator produced a non-finite value.
struct integrator_fault : std::runtime_error {
    explicit integrator_fault(const std::string& msg) : std::runtime_error(msg) {}
};

/// Blow-up time estimation is impossible (too few usable points).
struct estimation_error : std::runtime_error {
    explicit estimation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Shooting bracket endpoints do not classify differently.
struct bracketing_error : std::runtime_error {
    explicit bracketing_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bulb
