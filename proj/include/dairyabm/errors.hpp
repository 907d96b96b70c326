#pragma once

#include <stdexcept>
#include <string>

namespace dairyabm {

/// Bad scenario or constants input; the message names the offending field.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Inconsistent agent definition detected while simulating.
class SimulationError : public std::runtime_error {
  public:
    explicit SimulationError(const std::string& what) : std::runtime_error(what) {}
};

/// Calibration cannot proceed (degenerate reference data, incompatible base).
class CalibrationError : public std::runtime_error {
  public:
    explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dairyabm
