#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace derf {

struct BurgersDomainError : std::runtime_error {
    explicit BurgersDomainError(const std::string& m) : std::runtime_error(m) {}
};

// Closed-form family of compactly supported weak solutions on (0,2] x R:
//   u_a(t,x) = a                on 0 < x < a t
//            = x / t            on a t <= x < t
//            = 1                on t <= x <= 1 + t/2
//            = 0                on x > 1 + t/2
// extended odd in x.  Each member solves u_t + (u^2/2)_x = 0 weakly with data
// 1_{0<x<=1} - 1_{-1<=x<0}; only a = 0 satisfies the entropy inequality
// (u^2/2)_t + (u^3/3)_x <= 0.
struct BurgersProfile {
    double alpha = 0;
    explicit BurgersProfile(double a);
    double operator()(double t, double x) const; // DomainError unless 0 < t <= 2
};

// discontinuities and kinks at time t, positive side
struct JumpInfo {
    double x;          // location
    double speed;      // shock speed
    double u_left;
    double u_right;
    double production; // entropy production for eta = u^2/2: [q] - s [eta], [] = R-L
};
std::vector<JumpInfo> jumps(const BurgersProfile& u, double t);

// |integral of u psi_t + (u^2/2) psi_x| over a battery of smooth, compactly
// supported test functions; quadrature panels are fitted to the jump curves
struct TestFunction {
    double tc, xc, rt, rx; // bump centers/radii
    double value(double t, double x) const;
    double dt(double t, double x) const;
    double dx(double t, double x) const;
};
std::vector<TestFunction> default_battery();
double weak_residual(const BurgersProfile& u, const std::vector<TestFunction>& battery);
double weak_residual_single(const BurgersProfile& u, const TestFunction& psi);

// residual of an arbitrary profile (same jump-fitted panels as u_alpha);
// used to confirm that perturbed non-solutions are flagged
double weak_residual_functional(const std::function<double(double, double)>& u,
                                double alpha_for_panels,
                                const std::vector<TestFunction>& battery);

struct EnergyReport {
    double total_rate;                   // d/dt of integral of u^2 (exact, t-independent)
    double total_rate_quadrature;        // same, measured by quadrature
    std::vector<JumpInfo> jump_list;     // at t = 1
    double rankine_hugoniot_residual;    // max |s [u] - [u^2/2]| over jumps
    bool violates_local_inequality;      // any positive production
};
EnergyReport energy_accounting(double alpha);

// sign-scan threshold: largest alpha with total dissipation still >= 0
double dissipation_threshold(double tol = 1e-6);

// integral of u^2 dx at time t by jump-fitted Gauss quadrature
double energy_at(const BurgersProfile& u, double t);

} // namespace derf
