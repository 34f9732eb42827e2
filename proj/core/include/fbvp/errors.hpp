#pragma once

#include <stdexcept>
#include <string>

namespace fbvp {

/// Base class for runtime failures of the backward sweep.
class solver_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Runge-Kutta stage or step produced a non-finite value.
class non_finite_state : public solver_error {
public:
    non_finite_state()
        : solver_error("non-finite state during integration"), step_index_(-1) {}
    explicit non_finite_state(long step_index)
        : solver_error("non-finite state at integration step " + std::to_string(step_index)),
          step_index_(step_index) {}

    /// Index of the failing step, or -1 when the failure is not tied to a mesh index.
    long step_index() const noexcept { return step_index_; }

private:
    long step_index_;
};

/// The boundary residual never changed sign within the step budget.
class event_not_found : public solver_error {
public:
    explicit event_not_found(long max_steps)
        : solver_error("no boundary event within " + std::to_string(max_steps) +
                       " steps; bad problem data or unbounded trajectory"),
          max_steps_(max_steps) {}

    long max_steps() const noexcept { return max_steps_; }

private:
    long max_steps_;
};

/// The terminal data already satisfies the left boundary condition,
/// which would make the free boundary collapse to zero length.
class degenerate_boundary : public solver_error {
public:
    using solver_error::solver_error;
};

/// String geometry that admits no detachment point.
class infeasible_geometry : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace fbvp
