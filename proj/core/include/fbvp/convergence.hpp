#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbvp/solver.hpp"

namespace fbvp {

/// One refinement level of a step-size study.
struct convergence_row {
    double dx;
    double u0;     ///< achieved u at x = 0
    double du0;
    double s;
    std::optional<double> e_r_du0;  ///< relative error when a reference exists
    std::optional<double> e_r_s;
};

/// Reference values relative errors are measured against.
struct study_reference {
    double du0_ref;
    double s_ref;
    std::string note;  ///< provenance, e.g. "closed form" or "self-referenced"
};

struct study {
    std::string problem;
    /// Ordered by level; |dx| is exactly halved from row to row.
    std::vector<convergence_row> rows;
    std::optional<study_reference> reference;
};

/// Which error column of a study to read.
enum class error_field { du0, s };

/// One solve per level i with dx = dx_start / 2^i. Relative errors are
/// filled in when a reference is given. Solver failures are rethrown with
/// the failing level in the message.
study run_study(const scalar_free_bvp& p, double dx_start, int levels,
                std::optional<study_reference> reference = {},
                const solver_config& base_cfg = {});

/// Rebinds the study's relative errors against its own finest-level row,
/// for problems with no closed form.
study with_self_reference(study st);

/// log2(e_i / e_{i+1}) for consecutive halvings. A finer error of exactly
/// zero reports an infinite order; two identical errors report 0.
std::vector<double> observed_orders(const study& st, error_field field);

} // namespace fbvp
