#pragma once

#include <stdexcept>
#include <string>

namespace h2plan {

/// Failure categories. The CLI maps each category onto a process exit code.
enum class ErrorKind {
    usage,
    domain,
    data,
    range,
    config,
    convergence,
    infeasible,
    numeric,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define H2PLAN_DEFINE_ERROR(Name, Kind)                                         \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
    };

H2PLAN_DEFINE_ERROR(UsageError, usage)
H2PLAN_DEFINE_ERROR(DomainError, domain)
H2PLAN_DEFINE_ERROR(DataError, data)
H2PLAN_DEFINE_ERROR(RangeError, range)
H2PLAN_DEFINE_ERROR(ConfigError, config)
H2PLAN_DEFINE_ERROR(ConvergenceError, convergence)
H2PLAN_DEFINE_ERROR(InfeasibleError, infeasible)
H2PLAN_DEFINE_ERROR(NumericError, numeric)

#undef H2PLAN_DEFINE_ERROR

}  // namespace h2plan
