#pragma once

#include <stdexcept>
#include <string>

namespace fintool {

/// Configuration or usage problem: unreadable/ill-formed config files,
/// duplicate profile names, propagated validation violations. Maps to CLI
/// exit status 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// The model has no feasible answer for the given inputs (e.g. the fin is
/// fully submerged in STI). Maps to CLI exit status 1.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, double raw_height_nm)
        : std::runtime_error(what), raw_height_nm_(raw_height_nm) {}

    /// The computed pre-STI height that triggered the infeasibility.
    double raw_height_nm() const { return raw_height_nm_; }

private:
    double raw_height_nm_ = 0.0;
};

}  // namespace fintool
