#pragma once

#include "fbvp/core.hpp"

namespace fbvp {

/// One trajectory sample.
struct step_record {
    double x;
    state_type state;
};

/// Single classical fourth order Runge-Kutta step of signed size h.
/// Backward integration is just h < 0. For an autonomous field the x
/// argument only labels the step. Throws non_finite_state if any stage
/// or the result leaves the finite range, std::invalid_argument on h == 0.
state_type rk4_step(const vector_field& f, double x, const state_type& y, double h);

/// n repeated RK4 steps from (x0, y0). The result includes the initial
/// record, and record i carries x = x0 + i*h. Throws non_finite_state
/// carrying the failing step index.
std::vector<step_record> integrate_n(const vector_field& f, double x0,
                                     const state_type& y0, double h, long n);

} // namespace fbvp
