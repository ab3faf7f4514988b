// Exception types thrown by the solver. All carry plain-text diagnostics that
// name the offending quantity (region index, interface index, config path).
#pragma once

#include <stdexcept>
#include <string>

namespace floq {

// Invalid user input: malformed config, inconsistent device geometry,
// out-of-range parameters. Maps to CLI exit code 1.
class config_error : public std::invalid_argument {
  public:
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

// A solve that cannot proceed for physical or numerical reasons at a given
// scan point: closed incident channel, ill-conditioned matching matrix,
// truncation cap exceeded. Scan points record these per-row.
class solver_error : public std::runtime_error {
  public:
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

// Violation of an internal invariant (gauge residual, non-periodic phase
// integrand). Indicates a bug or an unusable waveform, not bad user input.
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace floq
