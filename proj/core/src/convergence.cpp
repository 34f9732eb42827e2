#include "fbvp/convergence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "fbvp/table.hpp"

namespace fbvp {

namespace {

void fill_errors(convergence_row& row, const study_reference& ref) {
    row.e_r_du0 = std::abs(row.du0 - ref.du0_ref) / std::abs(ref.du0_ref);
    row.e_r_s = std::abs(row.s - ref.s_ref) / std::abs(ref.s_ref);
}

} // namespace

study run_study(const scalar_free_bvp& p, double dx_start, int levels,
                std::optional<study_reference> reference,
                const solver_config& base_cfg) {
    if (!(dx_start < 0.0))
        throw std::invalid_argument("run_study: dx_start must be negative");
    if (levels < 1)
        throw std::invalid_argument("run_study: levels must be >= 1");

    study st;
    st.problem = p.name();
    st.reference = std::move(reference);
    st.rows.reserve(static_cast<std::size_t>(levels));

    for (int i = 0; i < levels; ++i) {
        solver_config cfg = base_cfg;
        cfg.dx = std::ldexp(dx_start, -i);  // exact halving
        try {
            const solution sol = solve_scalar(p, cfg);
            convergence_row row{cfg.dx, sol.u0(), sol.du0(), sol.s, {}, {}};
            if (st.reference)
                fill_errors(row, *st.reference);
            st.rows.push_back(row);
        } catch (const solver_error& e) {
            throw solver_error("study level " + std::to_string(i) + " (dx = " +
                               format_full(cfg.dx) + "): " + e.what());
        }
    }
    return st;
}

study with_self_reference(study st) {
    if (st.rows.empty())
        throw std::invalid_argument("with_self_reference: study has no rows");
    const convergence_row& finest = st.rows.back();
    st.reference = study_reference{finest.du0, finest.s, "self-referenced (finest level)"};
    for (convergence_row& row : st.rows)
        fill_errors(row, *st.reference);
    return st;
}

std::vector<double> observed_orders(const study& st, error_field field) {
    if (!st.reference)
        throw std::invalid_argument("observed_orders: study has no reference");
    if (st.rows.size() < 3)
        throw std::invalid_argument("observed_orders: at least 3 rows are required");

    auto err = [field](const convergence_row& r) {
        return field == error_field::du0 ? *r.e_r_du0 : *r.e_r_s;
    };

    std::vector<double> orders;
    orders.reserve(st.rows.size() - 1);
    for (std::size_t i = 0; i + 1 < st.rows.size(); ++i) {
        const double coarse = err(st.rows[i]);
        const double fine = err(st.rows[i + 1]);
        if (coarse == 0.0 && fine == 0.0)
            orders.push_back(0.0);
        else if (fine == 0.0)
            orders.push_back(std::numeric_limits<double>::infinity());
        else
            orders.push_back(std::log2(coarse / fine));
    }
    return orders;
}

} // namespace fbvp
