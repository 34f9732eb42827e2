#include "fbvp/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fbvp {

namespace {

void check_config(const solver_config& cfg) {
    if (!std::isfinite(cfg.s_star))
        throw std::invalid_argument("solver_config: s_star must be finite");
    if (!(cfg.dx < 0.0))
        throw std::invalid_argument(
            "solver_config: dx must be negative (the sweep integrates backward)");
    if (cfg.max_steps < 1)
        throw std::invalid_argument("solver_config: max_steps must be >= 1");
}

} // namespace

solution solve_field(const vector_field& f, const residual_fn& left_residual,
                     const state_type& terminal_state, const solver_config& cfg,
                     double residual_zero_tol) {
    check_config(cfg);

    locator_options opts;
    opts.zero_tol = residual_zero_tol;
    opts.refine = cfg.refine_event;

    event_result ev = locate_event(f, left_residual, cfg.s_star, terminal_state,
                                   cfg.dx, cfg.max_steps, opts);
    if (ev.degenerate)
        throw degenerate_boundary(
            "terminal data already satisfies the left boundary condition; "
            "the free boundary would have zero length");

    solution sol;
    sol.mu = ev.x0_star;
    sol.s = cfg.s_star - sol.mu;
    sol.initial_state = ev.state_at_event;
    sol.residual0 = ev.residual_at_event;
    sol.trajectory.reserve(ev.trajectory.size());
    for (const step_record& rec : ev.trajectory)
        sol.trajectory.push_back({rec.x - sol.mu, rec.state});
    sol.event = std::move(ev);
    return sol;
}

solution solve_scalar(const scalar_free_bvp& p, const solver_config& cfg) {
    const double a1 = p.a1(), a2 = p.a2(), a3 = p.a3();
    auto residual = [a1, a2, a3](const state_type& y) {
        return a1 * y[0] + a2 * y[1] - a3;
    };
    const double zero_tol = 1e-14 * (1.0 + std::abs(a3));
    return solve_field(as_system(p), residual, {p.b_right(), p.c_right()}, cfg,
                       zero_tol);
}

solution solve_system(const system_free_bvp& p, const solver_config& cfg) {
    const std::size_t j = static_cast<std::size_t>(p.j_index()) - 1;
    const double target = p.u_j0();
    auto residual = [j, target](const state_type& y) { return y[j] - target; };
    const double zero_tol = 1e-14 * (1.0 + std::abs(target));
    return solve_field(p.q(), residual, p.u_s(), cfg, zero_tol);
}

} // namespace fbvp
