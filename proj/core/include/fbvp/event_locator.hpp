#pragma once

#include <functional>

#include "fbvp/integrator.hpp"

namespace fbvp {

/// Scalar function of the state whose zero marks the left boundary.
using residual_fn = std::function<double(const state_type&)>;

struct locator_options {
    /// Absolute tolerance below which the starting residual counts as zero
    /// (degenerate event at the start point).
    double zero_tol = 1e-14;
    /// Iterate the interpolated final step until |residual| < refine_tol.
    /// Off by default: a single interpolation pass is the method.
    bool refine = false;
    double refine_tol = 1e-13;
    int max_refine_iters = 100;
};

/// Outcome of the event search, in the coordinates of the sweep.
struct event_result {
    double x0_star = 0.0;        ///< located event abscissa
    state_type state_at_event;   ///< state at x0_star
    long k = 0;                  ///< index of the first post-crossing mesh point
    double dx0_star = 0.0;       ///< signed size of the final, shortened step
    double residual_at_event = 0.0;
    bool degenerate = false;     ///< residual was already zero at the start point
    /// Accepted mesh points followed by the event point. The overshooting
    /// mesh point k is replaced by the shortened step taken from k-1.
    std::vector<step_record> trajectory;
};

/// Marches from (x_start, y_start) with fixed RK4 steps of signed size dx
/// until the residual changes sign against its starting sign, then repeats
/// the last step from the pre-crossing mesh point with the linearly
/// interpolated size
///
///     dx0 = dx * (-r_{k-1}) / (r_k - r_{k-1}),
///
/// which is never larger in magnitude than dx, and returns the event at
/// x0* = x_{k-1} + dx0. An exact zero at a mesh point is returned as-is
/// with dx0 = dx. Sign-change detection is strict, so a residual that
/// touches zero between mesh points and retreats is not seen.
///
/// Throws event_not_found after max_steps sign-preserving steps, and
/// non_finite_state if the trajectory blows up first.
event_result locate_event(const vector_field& f, const residual_fn& residual,
                          double x_start, const state_type& y_start,
                          double dx, long max_steps,
                          const locator_options& opts = {});

} // namespace fbvp
