#pragma once

#include <array>
#include <stdexcept>

#include "derf/basis.hpp"
#include "derf/field.hpp"

namespace derf {

struct NegativeDiscriminant : std::runtime_error {
    explicit NegativeDiscriminant(const std::string& m) : std::runtime_error(m) {}
};

// Pointwise quadratic systems for the stress coefficients.  The epsilon input
// is the in-plane symmetric perturbation; outputs are one gamma field per
// direction of the tier's basis.
//
// diamond:   sum_d 2 gamma_d^2 f_d (x) f_d = (2/3) delta_1 + eps   (3 directions)
// overline:  sum_{f in F_R} 2 gamma^2 f (x) f = delta_var + eps    (6 signed waves,
//            i.e. 4 gamma_d^2 per direction; eps = 0 gives gamma = 1/2)

struct StressCoefficients {
    std::array<ScalarField, 3> gamma;
    double min_gamma = 0, max_gamma = 0;
};

// eps given by its in-plane components (uu, ww, uw) on the plane (u_axis, w_axis)
StressCoefficients solve_diamond_stress(const std::array<const ScalarField*, 3>& eps_uuwwuw,
                                        const std::array<Vec3, 3>& dirs, int u_axis,
                                        int w_axis);

StressCoefficients solve_overline_stress(const std::array<const ScalarField*, 3>& eps_uuwwuw,
                                         const std::array<Vec3, 3>& dirs, int u_axis,
                                         int w_axis, const Sym3& delta_variant);

// Current (trilinear cascade) coefficients.  Passive gammas are the stated
// constants; actives solve
//   sum_dirs 2*3! gamma_a gamma_p^2 f_d = - e^{-3/2} phi_target
// pointwise, per direction:
//   gamma_a,d = - e^{-3/2} (f_d . phi) / (2*3! * gamma_p^2).
// Where the energy profile vanishes the active coefficient is set to zero.
struct CurrentCoefficients {
    std::array<ScalarField, 2> gamma_active; // per phi direction
    double passive_gamma = 0;
};

CurrentCoefficients solve_current(const VectorField3& phi_target,
                                  const ScalarField& e_profile, // e(t,x) as a field
                                  const std::array<Vec3, 2>& dirs, double passive_gamma);

// brute-force check helper: residual of the defining reconstruction
double diamond_reconstruction_residual(const StressCoefficients& sc,
                                       const std::array<const ScalarField*, 3>& eps,
                                       const std::array<Vec3, 3>& dirs, int u, int w);
double overline_reconstruction_residual(const StressCoefficients& sc,
                                        const std::array<const ScalarField*, 3>& eps,
                                        const std::array<Vec3, 3>& dirs, int u, int w,
                                        const Sym3& delta_variant);

} // namespace derf
