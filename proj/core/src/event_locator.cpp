#include "fbvp/event_locator.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fbvp {

namespace {

int sign_of(double r) { return r > 0.0 ? 1 : (r < 0.0 ? -1 : 0); }

double checked_residual(const residual_fn& residual, const state_type& y, long k) {
    const double r = residual(y);
    if (!std::isfinite(r))
        throw non_finite_state(k);
    return r;
}

} // namespace

event_result locate_event(const vector_field& f, const residual_fn& residual,
                          double x_start, const state_type& y_start,
                          double dx, long max_steps,
                          const locator_options& opts) {
    if (dx == 0.0)
        throw std::invalid_argument("locate_event: dx must be nonzero");
    if (max_steps < 1)
        throw std::invalid_argument("locate_event: max_steps must be >= 1");

    event_result out;
    out.trajectory.push_back({x_start, y_start});

    double r_prev = checked_residual(residual, y_start, 0);
    if (std::abs(r_prev) <= opts.zero_tol) {
        out.x0_star = x_start;
        out.state_at_event = y_start;
        out.k = 0;
        out.dx0_star = 0.0;
        out.residual_at_event = r_prev;
        out.degenerate = true;
        return out;
    }

    const int sigma = sign_of(r_prev);
    state_type y_prev = y_start;

    for (long k = 1; k <= max_steps; ++k) {
        state_type y;
        try {
            y = rk4_step(f, x_start + static_cast<double>(k - 1) * dx, y_prev, dx);
        } catch (const non_finite_state&) {
            throw non_finite_state(k);
        }
        const double r = checked_residual(residual, y, k);
        const double x_k = x_start + static_cast<double>(k) * dx;

        if (sign_of(r) == sigma) {
            out.trajectory.push_back({x_k, y});
            y_prev = std::move(y);
            r_prev = r;
            continue;
        }

        // crossing in (x_{k-1}, x_k]
        out.k = k;
        if (r == 0.0) {
            // landed on the zero; keep the full step
            out.trajectory.push_back({x_k, y});
            out.x0_star = x_k;
            out.state_at_event = std::move(y);
            out.dx0_star = dx;
            out.residual_at_event = 0.0;
            return out;
        }

        const double x_prev = x_start + static_cast<double>(k - 1) * dx;
        double dx0 = dx * (-r_prev) / (r - r_prev);
        if (dx0 == 0.0) {
            // interpolation underflowed; the pre-crossing point is the event
            out.x0_star = x_prev;
            out.state_at_event = y_prev;
            out.dx0_star = 0.0;
            out.residual_at_event = r_prev;
            return out;
        }
        state_type y_event = rk4_step(f, x_prev, y_prev, dx0);
        double r_event = checked_residual(residual, y_event, k);

        if (opts.refine && std::abs(r_event) > opts.refine_tol) {
            // false position (Illinois) on the step size taken from x_{k-1},
            // bracketed by 0 (residual r_prev) and dx (residual r)
            double a_lo = 0.0, r_lo = r_prev;
            double a_hi = dx, r_hi = r;
            int last_side = 0;
            for (int it = 0; it < opts.max_refine_iters; ++it) {
                if (sign_of(r_event) == sign_of(r_lo)) {
                    a_lo = dx0;
                    r_lo = r_event;
                    if (last_side == -1) r_hi *= 0.5;
                    last_side = -1;
                } else {
                    a_hi = dx0;
                    r_hi = r_event;
                    if (last_side == +1) r_lo *= 0.5;
                    last_side = +1;
                }
                const double a_next = (a_lo * r_hi - a_hi * r_lo) / (r_hi - r_lo);
                if (a_next == 0.0 || a_next == dx0)
                    break;
                dx0 = a_next;
                y_event = rk4_step(f, x_prev, y_prev, dx0);
                r_event = checked_residual(residual, y_event, k);
                if (std::abs(r_event) <= opts.refine_tol)
                    break;
            }
        }

        out.x0_star = x_prev + dx0;
        out.trajectory.push_back({out.x0_star, y_event});
        out.state_at_event = std::move(y_event);
        out.dx0_star = dx0;
        out.residual_at_event = r_event;
        return out;
    }

    throw event_not_found(max_steps);
}

} // namespace fbvp
