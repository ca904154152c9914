#include "derf/cutoffs.hpp"

namespace derf {

namespace {

// smooth bump: 1 on |s| <= 2/3, 0 at |s| >= 1, quintic ramp between
double eta_tilde(double s) {
    const double a = std::abs(s);
    if (a >= 1.0) return 0.0;
    if (a <= 2.0 / 3.0) return 1.0;
    const double u = (a - 2.0 / 3.0) * 3.0;
    return 1.0 - u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

double pow6(double x) {
    const double x2 = x * x;
    return x2 * x2 * x2;
}

} // namespace

double eta_bar(double s) {
    const double e = eta_tilde(s);
    if (e == 0.0) return 0.0;
    // only nearby integer shifts contribute to the normalizer
    double norm6 = 0.0;
    const int k0 = int(std::floor(s));
    for (int k = k0 - 1; k <= k0 + 2; ++k) norm6 += pow6(eta_tilde(s - k));
    return e / std::pow(norm6, 1.0 / 6.0);
}

double eta_cutoff(Tier tier, double t_over_tau, int k) {
    const double e = eta_bar(t_over_tau - k);
    return is_R(tier) ? e * e * e : e * e;
}

double eta_cutoff_dt(Tier tier, double t_over_tau, int k, double tau) {
    // centered difference at fine resolution; used for diagnostics only
    const double h = 1e-6;
    return (eta_cutoff(tier, t_over_tau + h, k) - eta_cutoff(tier, t_over_tau - h, k)) /
           (2 * h * tau);
}

} // namespace derf
