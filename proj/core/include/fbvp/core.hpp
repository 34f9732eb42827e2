#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fbvp/errors.hpp"

namespace fbvp {

/// Dense state vector; the dimension is fixed by the problem.
using state_type = std::vector<double>;

/// Autonomous vector field: writes dy/dx into dydx (same length as y).
/// Must not depend on the independent variable.
using vector_field = std::function<void(const state_type& y, state_type& dydx)>;

/// Value and first derivative of the dependent variable at one abscissa.
struct state2 {
    double u;
    double du;
};

/// A free boundary value problem for a second order autonomous equation
///
///     u'' = omega(u, u'),   x in (0, s),   s > 0 unknown,
///
/// with a Robin condition a1*u(0) + a2*u'(0) = a3 on the left and the full
/// state u(s) = b, u'(s) = c prescribed on the unknown right boundary.
///
/// Because omega never sees x, the problem is invariant under translations
/// of x, which is what lets a single backward integration solve it.
/// Instances are immutable; omega must be a pure function.
class scalar_free_bvp {
public:
    using rhs_type = std::function<double(double u, double du)>;

    scalar_free_bvp(std::string name, rhs_type omega,
                    double a1, double a2, double a3,
                    double b_right, double c_right);

    const std::string& name() const noexcept { return name_; }
    double omega(double u, double du) const { return omega_(u, du); }
    const rhs_type& omega_fn() const noexcept { return omega_; }
    double a1() const noexcept { return a1_; }
    double a2() const noexcept { return a2_; }
    double a3() const noexcept { return a3_; }
    double b_right() const noexcept { return b_right_; }
    double c_right() const noexcept { return c_right_; }

    /// Left boundary residual a1*u + a2*u' - a3; zero exactly when the
    /// left condition holds.
    double bc_residual(const state2& st) const noexcept {
        return a1_ * st.u + a2_ * st.du - a3_;
    }

private:
    std::string name_;
    rhs_type omega_;
    double a1_;
    double a2_;
    double a3_;
    double b_right_;
    double c_right_;
};

/// Order reduction of a scalar problem to the 2-dimensional autonomous field
/// (u, u') -> (u', omega(u, u')), so the integration machinery stays
/// dimension-generic.
vector_field as_system(const scalar_free_bvp& p);

/// A free boundary value problem for a first order autonomous system
///
///     u' = q(u),   u_j(0) = u_j0,   u(s) = u_s,   s > 0 unknown,
///
/// with one known left component (j is 1-based) and the full right state given.
class system_free_bvp {
public:
    system_free_bvp(std::string name, int dim, vector_field q,
                    int j_index, double u_j0, state_type u_s);

    const std::string& name() const noexcept { return name_; }
    int dim() const noexcept { return dim_; }
    const vector_field& q() const noexcept { return q_; }
    int j_index() const noexcept { return j_index_; }
    double u_j0() const noexcept { return u_j0_; }
    const state_type& u_s() const noexcept { return u_s_; }

private:
    std::string name_;
    int dim_;
    vector_field q_;
    int j_index_;
    double u_j0_;
    state_type u_s_;
};

} // namespace fbvp
