#pragma once

#include <stdexcept>
#include <string>

namespace pizza {

/// Input violates a geometric constraint (pole outside the circle, bad chord ordering, ...).
class DomainError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature hit its recursion limit before meeting the tolerance.
class QuadratureError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class SolverError : public std::runtime_error
{
public:
    enum class Kind
    {
        no_sign_change,
        ordering_violated,
        max_iterations,
        tolerance_unmet,
        degenerate,
        no_interior_solution,
    };

    SolverError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

}  // namespace pizza
