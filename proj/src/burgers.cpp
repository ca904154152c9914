#include "derf/burgers.hpp"

#include <algorithm>
#include <cmath>

namespace derf {

namespace {

// 12-point Gauss-Legendre on [-1,1]
const double gl_x[12] = {-0.9815606342467192, -0.9041172563704749, -0.7699026741943047,
                         -0.5873179542866175, -0.3678314989981802, -0.1252334085114689,
                         0.1252334085114689,  0.3678314989981802,  0.5873179542866175,
                         0.7699026741943047,  0.9041172563704749,  0.9815606342467192};
const double gl_w[12] = {0.0471753363865118, 0.1069393259953184, 0.1600783285433462,
                         0.2031674267230659, 0.2334925365383548, 0.2491470458134028,
                         0.2491470458134028, 0.2334925365383548, 0.2031674267230659,
                         0.1600783285433462, 0.1069393259953184, 0.0471753363865118};

template <class F>
double gauss(double a, double b, F&& f, int panels = 1) {
    double s = 0;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double m = a + (p + 0.5) * h, r = 0.5 * h;
        for (int q = 0; q < 12; ++q) s += gl_w[q] * f(m + r * gl_x[q]) * r;
    }
    return s;
}

} // namespace

BurgersProfile::BurgersProfile(double a) : alpha(a) {
    if (a < 0 || a > 1) throw BurgersDomainError("alpha must lie in [0,1]");
}

double BurgersProfile::operator()(double t, double x) const {
    if (!(t > 0 && t <= 2)) throw BurgersDomainError("time outside (0,2]");
    const double s = x < 0 ? -1.0 : 1.0;
    const double ax = std::abs(x);
    double u;
    if (x == 0)
        u = 0; // midpoint of the odd jump
    else if (ax < alpha * t)
        u = alpha;
    else if (ax < t)
        u = ax / t;
    else if (ax <= 1 + 0.5 * t)
        u = 1;
    else
        u = 0;
    return s * u;
}

std::vector<JumpInfo> jumps(const BurgersProfile& u, double t) {
    std::vector<JumpInfo> out;
    auto add = [&](double x, double s, double ul, double ur) {
        const double eta_l = 0.5 * ul * ul, eta_r = 0.5 * ur * ur;
        const double q_l = ul * ul * ul / 3.0, q_r = ur * ur * ur / 3.0;
        out.push_back(JumpInfo{x, s, ul, ur, (q_r - q_l) - s * (eta_r - eta_l)});
    };
    if (u.alpha > 0) add(0.0, 0.0, -u.alpha, u.alpha);
    add(1 + 0.5 * t, 0.5, 1.0, 0.0);
    add(-(1 + 0.5 * t), -0.5, 0.0, -1.0);
    return out;
}

double TestFunction::value(double t, double x) const {
    auto bump = [](double u) {
        const double u2 = u * u;
        if (u2 >= 1) return 0.0;
        return std::exp(-u2 / (1 - u2));
    };
    return bump((t - tc) / rt) * bump((x - xc) / rx);
}

namespace {
double bump_d(double u) { // d/du exp(-u^2/(1-u^2))
    const double u2 = u * u;
    if (u2 >= 1) return 0.0;
    const double den = 1 - u2;
    return std::exp(-u2 / den) * (-2 * u / (den * den));
}
double bump_v(double u) {
    const double u2 = u * u;
    if (u2 >= 1) return 0.0;
    return std::exp(-u2 / (1 - u2));
}
} // namespace

double TestFunction::dt(double t, double x) const {
    return bump_d((t - tc) / rt) / rt * bump_v((x - xc) / rx);
}
double TestFunction::dx(double t, double x) const {
    return bump_v((t - tc) / rt) * bump_d((x - xc) / rx) / rx;
}

std::vector<TestFunction> default_battery() {
    std::vector<TestFunction> b;
    const double xs[5] = {-2.0, -0.6, 0.0, 0.9, 1.7};
    const double ts[2] = {0.7, 1.3};
    for (double tc : ts)
        for (double xc : xs) {
            b.push_back(TestFunction{tc, xc, 0.55, 0.8});
            b.push_back(TestFunction{tc, xc, 0.35, 1.6});
        }
    return b;
}

namespace {

// space-time quadrature of u psi_t + (u^2/2) psi_x with x-panels split at the
// discontinuity/kink curves and t-panels split where those curves cross the
// support edges of psi (the inner integral has derivative kinks there)
double residual_quadrature(const std::function<double(double, double)>& u, double alpha,
                           const TestFunction& psi) {
    const double t0 = std::max(1e-9, psi.tc - psi.rt), t1 = std::min(2.0, psi.tc + psi.rt);
    if (t1 <= t0) return 0.0;
    const double lo = psi.xc - psi.rx, hi = psi.xc + psi.rx;

    auto inner = [&](double t) {
        double br[9] = {-(1 + 0.5 * t), -t, -alpha * t, 0.0, alpha * t, t, 1 + 0.5 * t,
                        lo, hi};
        std::sort(std::begin(br), std::end(br));
        double s = 0;
        double prev = lo;
        auto seg = [&](double a2, double b2) {
            if (b2 > a2)
                s += gauss(a2, b2, [&](double x) {
                    const double uu = u(t, x);
                    return uu * psi.dt(t, x) + 0.5 * uu * uu * psi.dx(t, x);
                }, 4);
        };
        for (double b : br) {
            const double nxt = std::clamp(b, lo, hi);
            seg(prev, nxt);
            prev = std::max(prev, nxt);
        }
        seg(prev, hi);
        return s;
    };

    // crossing times of the breakpoint curves with the x-support edges
    std::vector<double> knots = {t0, t1};
    auto add_knot = [&](double t) {
        if (t > t0 + 1e-13 && t < t1 - 1e-13) knots.push_back(t);
    };
    for (double edge : {lo, hi}) {
        for (double c : {alpha, -alpha, 1.0, -1.0})
            if (c != 0.0) add_knot(edge / c);
        add_knot(2.0 * (edge - 1.0));  // curve 1 + t/2
        add_knot(-2.0 * (edge + 1.0)); // curve -(1 + t/2)
    }
    std::sort(knots.begin(), knots.end());
    double total = 0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        if (knots[i + 1] > knots[i])
            total += gauss(knots[i], knots[i + 1], inner, 12);
    return total;
}

} // namespace

double weak_residual_single(const BurgersProfile& u, const TestFunction& psi) {
    return residual_quadrature([&](double t, double x) { return u(t, x); }, u.alpha, psi);
}

double weak_residual(const BurgersProfile& u, const std::vector<TestFunction>& battery) {
    double worst = 0;
    for (const auto& psi : battery)
        worst = std::max(worst, std::abs(weak_residual_single(u, psi)));
    return worst;
}

double weak_residual_functional(const std::function<double(double, double)>& u,
                                double alpha_for_panels,
                                const std::vector<TestFunction>& battery) {
    double worst = 0;
    for (const auto& psi : battery) {
        const double t0 = std::max(1e-9, psi.tc - psi.rt),
                     t1 = std::min(2.0, psi.tc + psi.rt);
        if (t1 <= t0) continue;
        auto inner = [&](double t) {
            const double a = alpha_for_panels;
            double br[9] = {-(1 + 0.5 * t), -t, -a * t, 0.0, a * t, t, 1 + 0.5 * t,
                            psi.xc - psi.rx, psi.xc + psi.rx};
            std::sort(std::begin(br), std::end(br));
            const double lo = psi.xc - psi.rx, hi = psi.xc + psi.rx;
            double s = 0;
            double prev = lo;
            auto seg = [&](double a2, double b2) {
                if (b2 > a2)
                    s += gauss(a2, b2, [&](double x) {
                        const double uu = u(t, x);
                        return uu * psi.dt(t, x) + 0.5 * uu * uu * psi.dx(t, x);
                    }, 2);
            };
            for (double b : br) {
                const double nxt = std::clamp(b, lo, hi);
                seg(prev, nxt);
                prev = std::max(prev, nxt);
            }
            seg(prev, hi);
            return s;
        };
        worst = std::max(worst, std::abs(gauss(t0, t1, inner, 24)));
    }
    return worst;
}

double energy_at(const BurgersProfile& u, double t) {
    const double a = u.alpha;
    auto u2 = [&](double x) {
        const double v = u(t, x);
        return v * v;
    };
    double s = 0;
    s += gauss(0.0, a * t, u2, 2);
    s += gauss(a * t, t, u2, 4);
    s += gauss(t, 1 + 0.5 * t, u2, 2);
    return 2.0 * s; // odd symmetry
}

EnergyReport energy_accounting(double alpha) {
    BurgersProfile u(alpha);
    EnergyReport r;
    // E(t) is linear in t for this family; a two-point slope is exact
    const double e1 = energy_at(u, 0.8), e2 = energy_at(u, 1.2);
    r.total_rate_quadrature = (e2 - e1) / 0.4;
    // productions for eta = u^2 are twice those of u^2/2
    r.jump_list = jumps(u, 1.0);
    double rate = 0, rh = 0;
    bool viol = false;
    for (const auto& j : r.jump_list) {
        rate += 2.0 * j.production;
        const double rh_res =
            j.speed * (j.u_right - j.u_left) -
            0.5 * (j.u_right * j.u_right - j.u_left * j.u_left);
        rh = std::max(rh, std::abs(rh_res));
        if (j.production > 1e-14) viol = true;
    }
    r.total_rate = rate;
    r.rankine_hugoniot_residual = rh;
    r.violates_local_inequality = viol;
    return r;
}

double dissipation_threshold(double tol) {
    // bisect the sign of -dE/dt measured by quadrature
    auto dissipating = [&](double a) {
        return -energy_accounting(a).total_rate_quadrature >= 0.0;
    };
    double lo = 0.0, hi = 1.0;
    if (!dissipating(lo)) return 0.0;
    if (dissipating(hi)) return 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (dissipating(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace derf
