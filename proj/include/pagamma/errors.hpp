#pragma once

#include <stdexcept>
#include <string>

namespace pagamma {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI error line.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain_error", what) {}
};

/// GrowthParams or other structural parameters violate their invariants.
class InvalidParams : public Error {
public:
    explicit InvalidParams(const std::string& what) : Error("invalid_params", what) {}
};

/// A root bracket did not contain a sign change, or a solver failed to converge.
class SolverFailure : public Error {
public:
    explicit SolverFailure(const std::string& what) : Error("solver_failure", what) {}
};

/// Input data for which an estimator is undefined (e.g. all degrees equal).
class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& what) : Error("degenerate_input", what) {}
};

class InsufficientPoints : public Error {
public:
    explicit InsufficientPoints(const std::string& what) : Error("insufficient_points", what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error("config_error", what) {}
};

/// Wraps a failure inside an experiment run with the task that produced it.
class ExperimentError : public Error {
public:
    ExperimentError(const std::string& inner_kind, const std::string& what)
        : Error(inner_kind, what) {}
};

} // namespace pagamma
