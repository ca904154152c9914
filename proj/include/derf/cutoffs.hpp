#pragma once

#include <cmath>

#include "derf/frequency.hpp"

namespace derf {

// base cutoff eta-bar: supported on [-1,1], equal to (sum_k eta6(t-k))^{-1/6}
// normalized so that sum_k eta_bar^6(t - k) == 1 for all t
double eta_bar(double s);
// per-family cutoff at slot k on the tau-hat lattice: R waves use eta_bar^3,
// phi waves eta_bar^2 (so squares / cubes tile via the sixth-power partition)
double eta_cutoff(Tier tier, double t_over_tau, int k);
double eta_cutoff_dt(Tier tier, double t_over_tau, int k, double tau); // d/dt

// monotone C^2 plateau -> 0 profile: value = amp for t <= edge, 0 for
// t >= edge + width; sqrt_at is the mollified-indicator form of the profile
struct StepProfile {
    double amp = 0;    // plateau value of the profile itself
    double edge = 0;   // plateau holds for t <= edge (exact equality)
    double width = 0;  // transition width

    double ramp(double t) const { // 1 -> 0, C^2 monotone
        if (t <= edge) return 1.0;
        if (t >= edge + width) return 0.0;
        const double u = (t - edge) / width;
        return 1.0 - u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
    }
    double sqrt_at(double t) const { return std::sqrt(amp) * ramp(t); }
    double at(double t) const {
        const double r = ramp(t);
        return amp * r * r;
    }
};

} // namespace derf
