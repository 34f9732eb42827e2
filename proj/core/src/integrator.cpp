#include "fbvp/integrator.hpp"

#include <cmath>
#include <stdexcept>

namespace fbvp {

namespace {

bool all_finite(const state_type& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

void eval_field(const vector_field& f, const state_type& y, state_type& dydx) {
    dydx.resize(y.size());
    f(y, dydx);
    if (dydx.size() != y.size())
        throw std::logic_error("vector field changed the state dimension");
    if (!all_finite(dydx))
        throw non_finite_state();
}

} // namespace

state_type rk4_step(const vector_field& f, double /*x*/, const state_type& y, double h) {
    if (h == 0.0)
        throw std::invalid_argument("rk4_step: step size h must be nonzero");
    if (!all_finite(y))
        throw non_finite_state();

    const std::size_t n = y.size();
    state_type k1, k2, k3, k4;
    state_type tmp(n);

    eval_field(f, y, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    eval_field(f, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    eval_field(f, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    eval_field(f, tmp, k4);

    state_type out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (!all_finite(out))
        throw non_finite_state();
    return out;
}

std::vector<step_record> integrate_n(const vector_field& f, double x0,
                                     const state_type& y0, double h, long n) {
    if (n < 0)
        throw std::invalid_argument("integrate_n: step count must be >= 0");

    std::vector<step_record> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back({x0, y0});
    for (long i = 1; i <= n; ++i) {
        state_type next;
        try {
            next = rk4_step(f, x0 + static_cast<double>(i - 1) * h, out.back().state, h);
        } catch (const non_finite_state&) {
            throw non_finite_state(i);
        }
        out.push_back({x0 + static_cast<double>(i) * h, std::move(next)});
    }
    return out;
}

} // namespace fbvp
