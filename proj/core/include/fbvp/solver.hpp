#pragma once

#include "fbvp/core.hpp"
#include "fbvp/event_locator.hpp"

namespace fbvp {

/// Configuration of the backward sweep.
struct solver_config {
    /// Freely chosen starred right boundary. Any value gives the same
    /// solution; 0 keeps magnitudes small.
    double s_star = 0.0;
    /// Signed step size; must be negative (the sweep runs right to left).
    double dx = -0.1;
    long max_steps = 1'000'000;
    /// Iterate the final interpolated step (see locator_options::refine).
    bool refine_event = false;
};

/// Result of one backward solve, translated back to original coordinates.
struct solution {
    double s = 0.0;             ///< recovered free boundary
    double mu = 0.0;            ///< translation parameter (the event abscissa)
    state_type initial_state;   ///< state recovered at x = 0
    double residual0 = 0.0;     ///< left boundary residual achieved at x = 0
    /// Trajectory in original coordinates, from x = s down to x = 0; the
    /// first record carries the imposed terminal data exactly and the last
    /// one is the shortened event step.
    std::vector<step_record> trajectory;
    event_result event;         ///< diagnostics, in starred coordinates

    double u0() const { return initial_state.at(0); }
    double du0() const { return initial_state.at(1); }
};

/// Generic entry point. Imposes terminal_state at x = cfg.s_star, integrates
/// backward until left_residual crosses zero, and translates so the event
/// lands at x = 0: with mu the event abscissa, s = s_star - mu and the
/// missing initial conditions are the state at the event. residual_zero_tol
/// is the absolute tolerance under which the terminal data counts as already
/// satisfying the left condition (throws degenerate_boundary).
solution solve_field(const vector_field& f, const residual_fn& left_residual,
                     const state_type& terminal_state, const solver_config& cfg,
                     double residual_zero_tol);

/// Solves a scalar free BVP: terminal data (b, c), left residual
/// a1*u + a2*u' - a3. The result does not depend on cfg.s_star.
solution solve_scalar(const scalar_free_bvp& p, const solver_config& cfg = {});

/// Solves a first order system free BVP: terminal data u_s, left residual
/// u_j - u_j0.
solution solve_system(const system_free_bvp& p, const solver_config& cfg = {});

} // namespace fbvp
