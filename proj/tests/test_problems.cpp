#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fbvp/problems.hpp"
#include "fbvp/solver.hpp"

using namespace fbvp;

TEST_CASE("make_string wires the obstacle problem") {
    const auto p = make_string({.theta = 0.1, .u0_target = 1.0});
    CHECK(p.omega(0.0, 0.0) == doctest::Approx(0.1));
    CHECK(p.a1() == 1.0);
    CHECK(p.a2() == 0.0);
    CHECK(p.a3() == 1.0);
    CHECK(p.b_right() == 0.0);
    CHECK(p.c_right() == 0.0);
}

TEST_CASE("string parameter validation") {
    CHECK_THROWS_AS(make_string({.theta = -1.0, .u0_target = 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_string({.theta = 0.1, .u0_target = 0.0}), std::invalid_argument);

    // L^2 <= u0^2 + b^2 leaves no slack for a detachment point
    CHECK_THROWS_AS(
        make_string({.theta = 0.1, .u0_target = 1.0, .length = 4.6, .span = 4.5}),
        infeasible_geometry);
    // anchors at height 1 and distance 4.5 with plenty of rope
    CHECK_NOTHROW(
        make_string({.theta = 0.1, .u0_target = 1.0, .length = 8.0, .span = 4.5}));
    // a lone geometry field is metadata only
    CHECK_NOTHROW(make_string({.theta = 0.1, .u0_target = 1.0, .span = 4.5}));
}

TEST_CASE("string_exact closed form") {
    const string_params sp{.theta = 0.1, .u0_target = 1.0};
    const auto ref = string_exact(sp);

    CHECK(std::abs(ref.s_exact - 4.435682543851) <= 1e-9);
    CHECK(std::abs(ref.du0_exact + std::sqrt(0.21)) <= 1e-12);
    CHECK(std::abs(ref.du0_exact + 0.458257569) <= 5e-10);

    CHECK(std::abs(ref.u_eval(ref.s_exact)) <= 1e-12);
    CHECK(std::abs(ref.u_eval(0.0) - sp.u0_target) <= 1e-12);

    // the profile is flat where it meets the obstacle
    const double h = 1e-6;
    const double fd = (ref.u_eval(ref.s_exact + h) - ref.u_eval(ref.s_exact - h)) / (2.0 * h);
    CHECK(std::abs(fd) <= 1e-8);
}

TEST_CASE("string_exact is self-consistent across parameters") {
    for (double theta : {0.05, 0.3, 2.0}) {
        for (double u0 : {0.5, 1.0, 7.0}) {
            const string_params sp{.theta = theta, .u0_target = u0};
            const auto ref = string_exact(sp);
            CAPTURE(theta);
            CAPTURE(u0);
            CHECK(std::abs(ref.u_eval(ref.s_exact)) <= 1e-12 * (1.0 + u0));
            CHECK(std::abs(ref.u_eval(0.0) - u0) <= 1e-12 * (1.0 + u0));
        }
    }
}

TEST_CASE("make_dynamical right hand side values") {
    const auto p = make_dynamical();
    CHECK(p.omega(0.0, 0.0) == -1.0);
    CHECK(p.omega(1.0, 0.0) == -2.0);
    CHECK(p.omega(0.0, 1.0) == -2.0);
    CHECK(p.b_right() == 1.0);
    CHECK(p.c_right() == 0.0);
}

TEST_CASE("make_na_variant right hand side values") {
    const auto p = make_na_variant();
    CHECK(p.omega(0.0, 123.0) == 0.0);
    CHECK(p.omega(1.0, 0.0) == doctest::Approx(-std::exp(-1.0)));
}

TEST_CASE("na variant slope from the energy balance") {
    const double slope = na_variant_slope_exact();

    // energy identity: slope^2 / 2 == 1 - 2/e
    CHECK(std::abs(slope * slope / 2.0 - (1.0 - 2.0 / std::numbers::e)) <= 1e-16);

    // midpoint quadrature oracle for the work integral
    const long panels = 1'000'000;
    const double h = 1.0 / static_cast<double>(panels);
    double quad = 0.0;
    for (long i = 0; i < panels; ++i) {
        const double u = (static_cast<double>(i) + 0.5) * h;
        quad += u * std::exp(-u);
    }
    quad *= h;
    CHECK(std::abs(quad - 0.264241118) <= 1e-9);
    CHECK(std::abs(quad - (1.0 - 2.0 / std::numbers::e)) <= 1e-9);
    CHECK(std::abs(std::sqrt(2.0 * quad) - slope) <= 1e-9);

    CHECK(std::abs(slope - 0.726967811) <= 5e-8);
}

TEST_CASE("na variant backward solve matches the energy slope") {
    solver_config cfg;
    cfg.dx = -0.001;
    const auto sol = solve_scalar(make_na_variant(), cfg);
    CHECK(sol.du0() > 0.0);  // first crossing rises through u = 0
    CHECK(std::abs(std::abs(sol.du0()) - na_variant_slope_exact()) <= 1e-5);
}

TEST_CASE("make_reactor wires the tubular reactor") {
    const auto p = make_reactor({.n_pe = 6.0, .r_rate = 2.0, .order_n = 2.0, .tau = 0.1});
    CHECK(p.omega(0.1, 0.0) == doctest::Approx(0.12));
    CHECK(p.a1() == 1.0);
    CHECK(p.a2() == -1.0 / 6.0);
    CHECK(p.a3() == 1.0);
    CHECK(p.b_right() == 0.1);
    CHECK(p.c_right() == 0.0);
}

TEST_CASE("reactor parameter validation") {
    CHECK_THROWS_AS(make_reactor({.n_pe = 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_reactor({.r_rate = -2.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_reactor({.tau = 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_reactor({.tau = 1.0}), std::invalid_argument);
}

TEST_CASE("reactor accepts non-integer reaction orders") {
    // concentration stays positive along the sweep, so a real power is fine
    const auto p = make_reactor({.n_pe = 6.0, .r_rate = 2.0, .order_n = 1.5, .tau = 0.1});
    solver_config cfg;
    cfg.dx = -0.05;
    const auto sol = solve_scalar(p, cfg);
    CHECK(sol.s > 0.0);
    CHECK(sol.u0() > 0.0);
}

TEST_CASE("a fractional power of a negative concentration aborts the sweep") {
    // terminal slope +1 sends u negative immediately on the backward sweep,
    // and pow(u, 2.5) then yields NaN; the unreachable left target keeps the
    // locator running until the blow-up is reported
    const scalar_free_bvp p(
        "frac",
        [](double u, double du) { return 6.0 * (du + 2.0 * std::pow(u, 2.5)); },
        1.0, 0.0, -100.0, 0.1, 1.0);
    solver_config cfg;
    cfg.dx = -0.05;
    CHECK_THROWS_AS(solve_scalar(p, cfg), non_finite_state);
}

TEST_CASE("string solve reproduces the coarse convergence row") {
    solver_config cfg;
    cfg.dx = -0.1;
    const auto sol = solve_scalar(make_string({.theta = 0.1, .u0_target = 1.0}), cfg);
    CHECK(std::abs(sol.du0() + 0.458227362) <= 1e-8);
    CHECK(std::abs(sol.s - 4.435407932) <= 1e-8);
}

TEST_CASE("reactor solve reproduces the coarse convergence row") {
    solver_config cfg;
    cfg.dx = -0.1;
    const auto sol = solve_scalar(make_reactor({}), cfg);
    CHECK(std::abs(sol.u0() - 0.829314641) <= 1e-8);
    CHECK(std::abs(sol.du0() + 1.008175212) <= 1e-8);
    CHECK(std::abs(sol.s - 5.117905669) <= 1e-8);
}

TEST_CASE("dynamical solve reproduces the coarse convergence row") {
    solver_config cfg;
    cfg.dx = -0.1;
    const auto sol = solve_scalar(make_dynamical(), cfg);
    CHECK(std::abs(sol.du0() - 3.212263787) <= 1e-8);
    CHECK(std::abs(sol.s - 0.867662139) <= 1e-8);
    CHECK(std::abs(sol.residual0) == doctest::Approx(1.16e-2).epsilon(0.01));
}
