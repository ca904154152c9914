#pragma once

#include <functional>

#include "derf/field.hpp"
#include "derf/mollifier.hpp"
#include "derf/spectral.hpp"

namespace derf {

// Coarse-scale flow of a (stationary) mollified velocity field.  Trajectories
// are classical RK4; for velocities with shear structure (v2 = v3 = 0 and
// d1 v1 = 0) the integration and all displaced evaluations are exact.
class CoarseFlow {
  public:
    enum class Kind { zero, constant, shear1, general };

    CoarseFlow() = default;
    explicit CoarseFlow(VectorField3 v_eps, double dt_hint);

    Kind kind() const { return kind_; }
    const VectorField3& velocity() const { return veps_; }
    double grad_norm() const { return grad_norm_; } // max |grad v_eps|

    // displacement field d with back/forward-trace position x + d(x), flowing
    // from time t to time t + s (s of either sign)
    VectorField3 displacement(double s) const;

    // single trajectory point: position after flowing s from (t, x)
    Vec3 flow_map(const Vec3& x, double s) const;

  private:
    Kind kind_ = Kind::zero;
    VectorField3 veps_;
    double dt_hint_ = 0;
    double grad_norm_ = 0;
    Vec3 const_v_;
};

// gather f at x + disp(x); exact spectral line shift when the displacement is
// along x1 and constant in x1, order-8 Lagrange interpolation otherwise
ScalarField evaluate_displaced(const ScalarField& f, const VectorField3& disp,
                               bool line_shift_ok);

// order-8 periodic Lagrange interpolation at one point
double interpolate(const ScalarField& f, const Vec3& x);

// F_eps(t) = sum_q w(q) F_x(t + q dt) evaluated along the flow, with the
// one-sided kernel blend chi(t) eta+ + (1-chi(t)) eta- near interval ends.
// provider(q) returns the spatially mollified field at sample offset q.
ScalarField mollify_along_flow(const std::function<ScalarField(int)>& provider,
                               const CoarseFlow& cf, const TimeWeights& plus,
                               const TimeWeights& minus, double chi_blend, double dt);

// Q_eps[v,F] = v_m . grad(M F) - M(v . grad F), M the vanishing-moment mollifier
ScalarField advective_commutator(const VectorField3& v, const ScalarField& F, double eps_x,
                                 int L);

} // namespace derf
