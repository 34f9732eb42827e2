#pragma once

#include <functional>
#include <optional>

#include "fbvp/core.hpp"

namespace fbvp {

/// Hanging string against an obstacle: u'' = theta*sqrt(1 + u'^2) with
/// u(0) = u0 and u(s) = u'(s) = 0, s the detachment point.
struct string_params {
    double theta = 0.1;       ///< string property, > 0
    double u0_target = 1.0;   ///< prescribed left height, > 0
    /// Total string length and horizontal anchor distance. Optional; only
    /// used for the feasibility check L^2 > u0^2 + b^2 when both are given.
    std::optional<double> length = {};
    std::optional<double> span = {};
};

scalar_free_bvp make_string(const string_params& p);

/// Closed-form reference for the string problem.
struct string_reference {
    double s_exact;
    double du0_exact;
    std::function<double(double)> u_eval;  ///< exact profile, u(s_exact) = 0
};

/// s = ln(w + sqrt(w^2 - 1))/theta with w = theta*u0 + 1, u'(0) = sinh(-theta*s),
/// u(x) = (cosh(theta*(x - s)) - 1)/theta.
string_reference string_exact(const string_params& p);

/// Unit mass moving against the force -1 - u - u'^2 from u(0) = 0 to rest at
/// u(s) = 1; s is the travel time.
scalar_free_bvp make_dynamical();

/// Variant with force -u*exp(-u) and the same boundary data. Has countably
/// many solutions; the solver finds the first event.
scalar_free_bvp make_na_variant();

/// |u'(0)| for the na variant from the energy balance
/// u'(0)^2/2 = integral of u*exp(-u) over [0,1] = 1 - 2/e,
/// i.e. sqrt(2*(1 - 2/e)) = 0.726967836506...
double na_variant_slope_exact();

/// Tubular flow reactor of unknown length s: u'' = n_pe*(u' + r_rate*u^n)
/// with u(0) - u'(0)/n_pe = 1 and u(s) = tau, u'(s) = 0.
struct reactor_params {
    double n_pe = 6.0;     ///< Peclet group, > 0
    double r_rate = 2.0;   ///< reaction rate group, > 0
    double order_n = 2.0;  ///< reaction order; may be non-integer
    double tau = 0.1;      ///< residual reactant fraction at exit, in (0, 1)
};

/// Non-integer orders use a real power, so a trajectory that drives the
/// concentration negative surfaces as non_finite_state during the sweep.
scalar_free_bvp make_reactor(const reactor_params& p);

} // namespace fbvp
