#include "fbvp/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fbvp {

namespace {

void check_string_params(const string_params& p) {
    if (!(p.theta > 0.0))
        throw std::invalid_argument("string problem: theta > 0 is required");
    if (!(p.u0_target > 0.0))
        throw std::invalid_argument("string problem: u0 > 0 is required");
}

} // namespace

scalar_free_bvp make_string(const string_params& p) {
    check_string_params(p);
    if (p.length && p.span) {
        const double need = p.u0_target * p.u0_target + *p.span * *p.span;
        if (!(*p.length * *p.length > need))
            throw infeasible_geometry(
                "string geometry: L^2 > u0^2 + b^2 is required for the string "
                "to detach from the obstacle");
    }
    const double theta = p.theta;
    return scalar_free_bvp(
        "string",
        [theta](double, double du) { return theta * std::sqrt(1.0 + du * du); },
        1.0, 0.0, p.u0_target, 0.0, 0.0);
}

string_reference string_exact(const string_params& p) {
    check_string_params(p);
    const double theta = p.theta;
    const double w = theta * p.u0_target + 1.0;
    const double s = std::log(w + std::sqrt(w * w - 1.0)) / theta;
    const double du0 = std::sinh(-theta * s);
    return {s, du0,
            [theta, s](double x) { return (std::cosh(theta * (x - s)) - 1.0) / theta; }};
}

scalar_free_bvp make_dynamical() {
    return scalar_free_bvp(
        "dynamical",
        [](double u, double du) { return -1.0 - u - du * du; },
        1.0, 0.0, 0.0, 1.0, 0.0);
}

scalar_free_bvp make_na_variant() {
    return scalar_free_bvp(
        "na-variant",
        [](double u, double) { return -u * std::exp(-u); },
        1.0, 0.0, 0.0, 1.0, 0.0);
}

double na_variant_slope_exact() {
    return std::sqrt(2.0 * (1.0 - 2.0 / std::numbers::e));
}

scalar_free_bvp make_reactor(const reactor_params& p) {
    if (!(p.n_pe > 0.0))
        throw std::invalid_argument("reactor problem: n_pe > 0 is required");
    if (!(p.r_rate > 0.0))
        throw std::invalid_argument("reactor problem: r > 0 is required");
    if (!(p.tau > 0.0 && p.tau < 1.0))
        throw std::invalid_argument("reactor problem: 0 < tau < 1 is required");
    const double n_pe = p.n_pe;
    const double rate = p.r_rate;
    const double order = p.order_n;
    return scalar_free_bvp(
        "reactor",
        [n_pe, rate, order](double u, double du) {
            return n_pe * (du + rate * std::pow(u, order));
        },
        1.0, -1.0 / n_pe, 1.0, p.tau, 0.0);
}

} // namespace fbvp
