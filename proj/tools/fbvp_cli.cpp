// Command line front end: single solves, convergence studies, closed-form
// reference values and the reactor comparison table.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fbvp/fbvp.hpp"

using namespace fbvp;

namespace {

struct problem_flags {
    std::string name;
    double theta = 0.1;
    double u0 = 1.0;
    double npe = 6.0;
    double r = 2.0;
    double n = 2.0;
    double tau = 0.1;
};

struct sweep_flags {
    double dx = -0.1;
    double s_star = 0.0;
    long max_steps = 1'000'000;
    bool refine = false;
};

scalar_free_bvp build_problem(const problem_flags& pf) {
    if (pf.name == "string")
        return make_string({.theta = pf.theta, .u0_target = pf.u0});
    if (pf.name == "dynamical")
        return make_dynamical();
    if (pf.name == "na-variant")
        return make_na_variant();
    if (pf.name == "reactor")
        return make_reactor({.n_pe = pf.npe, .r_rate = pf.r, .order_n = pf.n, .tau = pf.tau});
    throw std::invalid_argument("unknown problem '" + pf.name + "'");
}

void add_problem_options(CLI::App* cmd, problem_flags& pf) {
    cmd->add_option("--problem", pf.name, "one of: string, dynamical, na-variant, reactor")
        ->required()
        ->check(CLI::IsMember({"string", "dynamical", "na-variant", "reactor"}));
    cmd->add_option("--theta", pf.theta, "string property theta (string problem)");
    cmd->add_option("--u0", pf.u0, "prescribed left height u(0) (string problem)");
    cmd->add_option("--npe", pf.npe, "Peclet group (reactor problem)");
    cmd->add_option("--r", pf.r, "reaction rate group (reactor problem)");
    cmd->add_option("--n", pf.n, "reaction order (reactor problem)");
    cmd->add_option("--tau", pf.tau, "residual reactant fraction at exit (reactor problem)");
}

void add_sweep_options(CLI::App* cmd, sweep_flags& sf) {
    cmd->add_option("--dx", sf.dx, "signed step size; negative (the sweep runs backward)");
    cmd->add_option("--sstar", sf.s_star, "freely chosen starred right boundary");
    cmd->add_option("--max-steps", sf.max_steps, "step budget for the event search");
    cmd->add_flag("--refine-event", sf.refine, "iterate the final interpolated step");
}

solver_config to_config(const sweep_flags& sf) {
    solver_config cfg;
    cfg.dx = sf.dx;
    cfg.s_star = sf.s_star;
    cfg.max_steps = sf.max_steps;
    cfg.refine_event = sf.refine;
    return cfg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    f << content;
    f.flush();
    if (!f.good())
        throw std::runtime_error("failed while writing '" + path + "'");
}

double mean_finite(const std::vector<double>& values) {
    double sum = 0.0;
    int count = 0;
    for (double v : values) {
        if (std::isfinite(v)) {
            sum += v;
            ++count;
        }
    }
    return count > 0 ? sum / count : 0.0;
}

void run_solve(const problem_flags& pf, const sweep_flags& sf, int digits,
               const std::string& out) {
    const auto p = build_problem(pf);
    const auto sol = solve_scalar(p, to_config(sf));
    std::cout << "problem = " << p.name() << '\n'
              << "s = " << format_fixed(sol.s, digits) << '\n'
              << "u(0) = " << format_fixed(sol.u0(), digits) << '\n'
              << "du/dx(0) = " << format_fixed(sol.du0(), digits) << '\n'
              << "residual(0) = " << format_sci(sol.residual0) << '\n';
    if (!out.empty()) {
        // ascending x, from the located left boundary up to the free one;
        // the shortened event step shows up as the first interval
        output_table t({"x", "u", "du"});
        for (auto it = sol.trajectory.rbegin(); it != sol.trajectory.rend(); ++it)
            t.add_row({format_full(it->x), format_full(it->state[0]),
                       format_full(it->state[1])});
        write_file(out, t.to_csv());
    }
}

void run_converge(const problem_flags& pf, const sweep_flags& sf, int levels,
                  int digits, const std::string& out) {
    const auto p = build_problem(pf);
    std::optional<study_reference> ref;
    if (pf.name == "string") {
        const auto ex = string_exact({.theta = pf.theta, .u0_target = pf.u0});
        ref = study_reference{ex.du0_exact, ex.s_exact, "closed form"};
    }
    auto st = run_study(p, sf.dx, levels, ref, to_config(sf));
    if (!st.reference)
        st = with_self_reference(std::move(st));

    const std::vector<std::string> header{"dx", "u0", "du0", "s", "e_r_du0", "e_r_s"};
    output_table text(header);
    output_table csv(header);
    for (const auto& row : st.rows) {
        text.add_row({format_full(row.dx), format_fixed(row.u0, digits),
                      format_fixed(row.du0, digits), format_fixed(row.s, digits),
                      row.e_r_du0 ? format_sci(*row.e_r_du0) : "",
                      row.e_r_s ? format_sci(*row.e_r_s) : ""});
        csv.add_row({format_full(row.dx), format_full(row.u0), format_full(row.du0),
                     format_full(row.s),
                     row.e_r_du0 ? format_full(*row.e_r_du0) : "",
                     row.e_r_s ? format_full(*row.e_r_s) : ""});
    }

    std::cout << "# " << st.problem << " convergence, reference: " << st.reference->note
              << '\n'
              << text.to_text();
    if (st.rows.size() >= 3) {
        std::cout << "# observed order, du/dx(0): mean "
                  << format_fixed(mean_finite(observed_orders(st, error_field::du0)), 2)
                  << '\n'
                  << "# observed order, s: mean "
                  << format_fixed(mean_finite(observed_orders(st, error_field::s)), 2)
                  << '\n';
    }
    if (!out.empty())
        write_file(out, csv.to_csv());
}

void run_exact(const problem_flags& pf, int digits) {
    if (pf.name == "string") {
        const auto ex = string_exact({.theta = pf.theta, .u0_target = pf.u0});
        std::cout << "s = " << format_fixed(ex.s_exact, digits) << '\n'
                  << "du/dx(0) = " << format_fixed(ex.du0_exact, digits) << '\n';
    } else if (pf.name == "na-variant") {
        std::cout << "|du/dx(0)| = " << format_fixed(na_variant_slope_exact(), digits)
                  << '\n';
    } else {
        throw std::invalid_argument("no closed form reference for problem '" + pf.name +
                                    "'");
    }
}

void run_compare(const problem_flags& pf, const sweep_flags& sf, int digits) {
    const auto p = make_reactor(
        {.n_pe = pf.npe, .r_rate = pf.r, .order_n = pf.n, .tau = pf.tau});
    const auto sol = solve_scalar(p, to_config(sf));
    output_table t({"method", "u(0)", "du/dx(0)", "s"});
    t.add_row({"iterative TM (published)", "0.831280", "-1.012298", "5.121648"});
    t.add_row({"shooting method (published)", "0.831274", "-1.012354", "5.119832"});
    t.add_row({"non-iterative TM (this solver)", format_fixed(sol.u0(), digits),
               format_fixed(sol.du0(), digits), format_fixed(sol.s, digits)});
    std::cout << t.to_text();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-iterative solver for free boundary problems of autonomous "
                 "second order ODEs"};
    app.require_subcommand(1);

    problem_flags solve_pf, conv_pf, exact_pf, cmp_pf;
    sweep_flags solve_sf, conv_sf, cmp_sf;
    cmp_sf.dx = -0.0001953125;
    int solve_digits = 9, conv_digits = 9, exact_digits = 9, cmp_digits = 6;
    int conv_levels = 7;
    std::string solve_out, conv_out;

    auto* solve_cmd =
        app.add_subcommand("solve", "solve one problem at a fixed step size");
    add_problem_options(solve_cmd, solve_pf);
    add_sweep_options(solve_cmd, solve_sf);
    solve_cmd->add_option("--digits", solve_digits, "printed decimal places")
        ->check(CLI::Range(1, 17));
    solve_cmd->add_option("--out", solve_out, "write the trajectory as CSV (x,u,du)");
    solve_cmd->callback([&] { run_solve(solve_pf, solve_sf, solve_digits, solve_out); });

    auto* conv_cmd = app.add_subcommand(
        "converge", "run a step-halving study and report relative errors");
    add_problem_options(conv_cmd, conv_pf);
    add_sweep_options(conv_cmd, conv_sf);
    conv_cmd->add_option("--levels", conv_levels, "number of halving levels");
    conv_cmd->add_option("--digits", conv_digits, "printed decimal places")
        ->check(CLI::Range(1, 17));
    conv_cmd->add_option("--out", conv_out, "write the study as CSV");
    conv_cmd->callback(
        [&] { run_converge(conv_pf, conv_sf, conv_levels, conv_digits, conv_out); });

    auto* exact_cmd = app.add_subcommand("exact", "print closed-form reference values");
    add_problem_options(exact_cmd, exact_pf);
    exact_cmd->add_option("--digits", exact_digits, "printed decimal places")
        ->check(CLI::Range(1, 17));
    exact_cmd->callback([&] { run_exact(exact_pf, exact_digits); });

    auto* cmp_cmd = app.add_subcommand(
        "compare", "reactor result next to the published comparison rows");
    cmp_cmd->add_option("--npe", cmp_pf.npe, "Peclet group");
    cmp_cmd->add_option("--r", cmp_pf.r, "reaction rate group");
    cmp_cmd->add_option("--n", cmp_pf.n, "reaction order");
    cmp_cmd->add_option("--tau", cmp_pf.tau, "residual reactant fraction at exit");
    add_sweep_options(cmp_cmd, cmp_sf);
    cmp_cmd->add_option("--digits", cmp_digits, "printed decimal places")
        ->check(CLI::Range(1, 17));
    cmp_cmd->callback([&] { run_compare(cmp_pf, cmp_sf, cmp_digits); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const solver_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
