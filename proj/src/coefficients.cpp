#include "derf/coefficients.hpp"

#include <cmath>

namespace derf {

namespace {

StressCoefficients solve_plane(const std::array<const ScalarField*, 3>& eps,
                               const std::array<Vec3, 3>& dirs, int u, int w,
                               const Sym3& target0, double weight) {
    // weight * gamma_d^2 = dual coefficients of target0 + eps
    Grid3 g = eps[0]->grid();
    PlaneSolve ps = plane_solve_for(dirs, u, w);
    const double b0[3] = {target0.at(u, u), target0.at(w, w), target0.at(u, w)};

    StressCoefficients out;
    for (int d = 0; d < 3; ++d) out.gamma[d] = ScalarField(g);
    double gmin = 1e300, gmax = -1e300;
    const double* e0 = eps[0]->data();
    const double* e1 = eps[1]->data();
    const double* e2 = eps[2]->data();
    double* gd[3] = {out.gamma[0].data(), out.gamma[1].data(), out.gamma[2].data()};
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double rhs[3] = {b0[0] + e0[i], b0[1] + e1[i], b0[2] + e2[i]};
        for (int d = 0; d < 3; ++d) {
            const double x =
                ps.inv[d][0] * rhs[0] + ps.inv[d][1] * rhs[1] + ps.inv[d][2] * rhs[2];
            const double gsq = x / weight;
            if (gsq <= 0)
                throw NegativeDiscriminant("stress coefficient squared nonpositive: " +
                                           std::to_string(gsq));
            const double gam = std::sqrt(gsq);
            gd[d][i] = gam;
            gmin = std::min(gmin, gam);
            gmax = std::max(gmax, gam);
        }
    }
    out.min_gamma = gmin;
    out.max_gamma = gmax;
    return out;
}

} // namespace

StressCoefficients solve_diamond_stress(const std::array<const ScalarField*, 3>& eps,
                                        const std::array<Vec3, 3>& dirs, int u, int w) {
    Sym3 t0 = delta_1() * (2.0 / 3.0);
    return solve_plane(eps, dirs, u, w, t0, 2.0);
}

StressCoefficients solve_overline_stress(const std::array<const ScalarField*, 3>& eps,
                                         const std::array<Vec3, 3>& dirs, int u, int w,
                                         const Sym3& delta_variant) {
    return solve_plane(eps, dirs, u, w, delta_variant, 4.0);
}

CurrentCoefficients solve_current(const VectorField3& phi_target,
                                  const ScalarField& e_profile,
                                  const std::array<Vec3, 2>& dirs, double passive_gamma) {
    Grid3 g = phi_target.grid();
    CurrentCoefficients out;
    out.passive_gamma = passive_gamma;
    const double denom = 2.0 * 6.0 * passive_gamma * passive_gamma; // 2 * 3!
    const double* p0 = phi_target[0].data();
    const double* p1 = phi_target[1].data();
    const double* p2 = phi_target[2].data();
    const double* ep = e_profile.data();
    for (int d = 0; d < 2; ++d) {
        out.gamma_active[d] = ScalarField(g);
        double* gd = out.gamma_active[d].data();
        const Vec3 f = dirs[d];
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (ep[i] <= 0) {
                gd[i] = 0;
                continue;
            }
            const double proj = f[0] * p0[i] + f[1] * p1[i] + f[2] * p2[i];
            gd[i] = -proj / (std::pow(ep[i], 1.5) * denom);
        }
    }
    return out;
}

namespace {

double plane_residual(const StressCoefficients& sc,
                      const std::array<const ScalarField*, 3>& eps,
                      const std::array<Vec3, 3>& dirs, int u, int w, const Sym3& t0,
                      double weight) {
    Grid3 g = eps[0]->grid();
    const double* e[3] = {eps[0]->data(), eps[1]->data(), eps[2]->data()};
    const double* gd[3] = {sc.gamma[0].data(), sc.gamma[1].data(), sc.gamma[2].data()};
    const double b0[3] = {t0.at(u, u), t0.at(w, w), t0.at(u, w)};
    double worst = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        double rec[3] = {0, 0, 0};
        for (int d = 0; d < 3; ++d) {
            const double s = weight * gd[d][i] * gd[d][i];
            rec[0] += s * dirs[d][u] * dirs[d][u];
            rec[1] += s * dirs[d][w] * dirs[d][w];
            rec[2] += s * dirs[d][u] * dirs[d][w];
        }
        for (int m = 0; m < 3; ++m)
            worst = std::max(worst, std::abs(rec[m] - b0[m] - e[m][i]));
    }
    return worst;
}

} // namespace

double diamond_reconstruction_residual(const StressCoefficients& sc,
                                       const std::array<const ScalarField*, 3>& eps,
                                       const std::array<Vec3, 3>& dirs, int u, int w) {
    return plane_residual(sc, eps, dirs, u, w, delta_1() * (2.0 / 3.0), 2.0);
}

double overline_reconstruction_residual(const StressCoefficients& sc,
                                        const std::array<const ScalarField*, 3>& eps,
                                        const std::array<Vec3, 3>& dirs, int u, int w,
                                        const Sym3& delta_variant) {
    return plane_residual(sc, eps, dirs, u, w, delta_variant, 4.0);
}

} // namespace derf
