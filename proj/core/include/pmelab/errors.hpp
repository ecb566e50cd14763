#pragma once

#include <stdexcept>
#include <string>

namespace pmelab {

/// Bad user input: malformed config file, invalid parameter combination.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Parameters outside the validity regime of the scenario being requested
/// (e.g. the transformed diffusion exponent leaving (1,2)).
class RegimeError : public ConfigError {
public:
    explicit RegimeError(const std::string& what) : ConfigError(what) {}
};

/// A run that started fine but cannot continue (distinct from a failed check).
class SolverAbort : public std::runtime_error {
public:
    SolverAbort(const std::string& what, double time)
        : std::runtime_error(what), time_(time) {}
    double time() const { return time_; }

private:
    double time_;
};

/// Support reached the guard band near the box edge; the domain truncation
/// would become visible in the solution.
class DomainTooSmall : public SolverAbort {
public:
    DomainTooSmall(const std::string& what, double time) : SolverAbort(what, time) {}
};

/// NaN/Inf detected mid-run.
class NumericsError : public SolverAbort {
public:
    NumericsError(const std::string& what, double time) : SolverAbort(what, time) {}
};

} // namespace pmelab
