#include "fbvp/core.hpp"

#include <stdexcept>
#include <utility>

namespace fbvp {

scalar_free_bvp::scalar_free_bvp(std::string name, rhs_type omega,
                                 double a1, double a2, double a3,
                                 double b_right, double c_right)
    : name_(std::move(name)), omega_(std::move(omega)),
      a1_(a1), a2_(a2), a3_(a3), b_right_(b_right), c_right_(c_right) {
    if (!omega_)
        throw std::invalid_argument("scalar_free_bvp: omega must be callable");
    if (a1_ == 0.0 && a2_ == 0.0)
        throw std::invalid_argument(
            "scalar_free_bvp: left boundary coefficients (a1, a2) must not both be "
            "zero; the event condition would be vacuous");
}

vector_field as_system(const scalar_free_bvp& p) {
    // captures the RHS by value so the field outlives the problem object
    auto omega = p.omega_fn();
    return [omega](const state_type& y, state_type& dydx) {
        dydx[0] = y[1];
        dydx[1] = omega(y[0], y[1]);
    };
}

system_free_bvp::system_free_bvp(std::string name, int dim, vector_field q,
                                 int j_index, double u_j0, state_type u_s)
    : name_(std::move(name)), dim_(dim), q_(std::move(q)),
      j_index_(j_index), u_j0_(u_j0), u_s_(std::move(u_s)) {
    if (dim_ < 1)
        throw std::invalid_argument("system_free_bvp: dim must be >= 1");
    if (!q_)
        throw std::invalid_argument("system_free_bvp: q must be callable");
    if (j_index_ < 1 || j_index_ > dim_)
        throw std::invalid_argument("system_free_bvp: j_index must lie in 1..dim");
    if (u_s_.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("system_free_bvp: u_s must have exactly dim components");
}

} // namespace fbvp
