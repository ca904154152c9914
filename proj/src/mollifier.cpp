#include "derf/mollifier.hpp"

#include <cassert>
#include <cmath>

namespace derf {

namespace {

double smoothstep5(double u) {
    if (u <= 0) return 0;
    if (u >= 1) return 1;
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

ScalarField apply_radial_symbol(const ScalarField& f, double (*sym)(double, double, int),
                                double eps, int L) {
    Grid3 g = f.grid();
    std::vector<cplx> s = f.spectrum();
    const int n = g.n, nh = n / 2 + 1;
    std::size_t at = 0;
    for (int j3 = 0; j3 < n; ++j3) {
        const int k3 = g.mode(j3);
        for (int j2 = 0; j2 < n; ++j2) {
            const int k2 = g.mode(j2);
            for (int j1 = 0; j1 < nh; ++j1, ++at) {
                const double kabs =
                    std::sqrt(double(j1) * j1 + double(k2) * k2 + double(k3) * k3);
                s[at] *= sym(kabs, eps, L);
            }
        }
    }
    ScalarField out(g);
    out.assign_spectrum(std::move(s));
    return out;
}

double vel_sym_wrap(double kabs, double eps, int) { return velocity_symbol(kabs, eps); }

} // namespace

double velocity_symbol(double kabs, double eps_v) {
    const double p = two_pi * kabs * eps_v; // |xi| * eps
    double one;
    if (p <= 1.0)
        one = 1.0;
    else if (p >= 2.0)
        one = 0.0;
    else
        one = 1.0 - smoothstep5(p - 1.0);
    return one * one; // chi * chi
}

double space_symbol(double kabs, double eps_x, int L) {
    const double p = two_pi * kabs * eps_x;
    const double u = (p / 2.0) * (p / 2.0); // support p <= 2
    if (u >= 1.0) return 0.0;
    const int q = (L + 2) / 2; // ceil((L+1)/2)
    double uq = 1.0;
    for (int i = 0; i < q; ++i) uq *= u;
    const double b = 1.0 - uq;
    return b * b * b;
}

ScalarField mollify_velocity_scalar(const ScalarField& f, double eps_v) {
    return apply_radial_symbol(f, vel_sym_wrap, eps_v, 0);
}

VectorField3 mollify_velocity(const VectorField3& v, double eps_v) {
    VectorField3 out(v.grid());
    for (int a = 0; a < 3; ++a) out[a] = mollify_velocity_scalar(v[a], eps_v);
    return out;
}

ScalarField mollify_space(const ScalarField& f, double eps_x, int L) {
    return apply_radial_symbol(f, space_symbol, eps_x, L);
}

VectorField3 mollify_space(const VectorField3& f, double eps_x, int L) {
    VectorField3 out(f.grid());
    for (int a = 0; a < 3; ++a) out[a] = mollify_space(f[a], eps_x, L);
    return out;
}

SymTensorField3 mollify_space(const SymTensorField3& f, double eps_x, int L) {
    SymTensorField3 out(f.grid());
    for (int k = 0; k < 6; ++k) out[k] = mollify_space(f[k], eps_x, L);
    return out;
}

double kernel_moment(Grid3 g, const MollifierSpec& spec, int a1, int a2, int a3) {
    // kernel = inverse DFT of the symbol; moment by midpoint quadrature with
    // h wrapped to [-1/2, 1/2)
    ScalarField delta(g);
    delta.data()[0] = double(g.size()); // unit-mass discrete delta at h=0
    ScalarField kern = (spec.kind == MollKind::velocity)
                           ? mollify_velocity_scalar(delta, spec.length_scale)
                           : mollify_space(delta, spec.length_scale, spec.moment_order);
    const double* kd = kern.data();
    double s = 0;
    const double cell = 1.0 / double(g.size());
    for (int i3 = 0; i3 < g.n; ++i3) {
        double h3 = g.x1(i3);
        if (h3 >= 0.5) h3 -= 1.0;
        for (int i2 = 0; i2 < g.n; ++i2) {
            double h2 = g.x1(i2);
            if (h2 >= 0.5) h2 -= 1.0;
            for (int i1 = 0; i1 < g.n; ++i1) {
                double h1 = g.x1(i1);
                if (h1 >= 0.5) h1 -= 1.0;
                double m = 1.0;
                for (int r = 0; r < a1; ++r) m *= h1;
                for (int r = 0; r < a2; ++r) m *= h2;
                for (int r = 0; r < a3; ++r) m *= h3;
                s += m * kd[g.idx(i1, i2, i3)] * cell;
            }
        }
    }
    return s;
}

TimeWeights make_time_weights(double eps_t, double dt, int side) {
    assert(eps_t > 0 && dt > 0);
    const int qmax = std::max(1, int(std::floor(eps_t / dt - 1e-12)));
    auto bump = [](double u) { // C^2 bump on (0,1)
        if (u <= 0 || u >= 1) return 0.0;
        const double p = u * (1.0 - u);
        return p * p * p;
    };
    TimeWeights tw;
    std::vector<double> w;
    if (side == 0) {
        tw.q_min = -qmax;
        for (int q = -qmax; q <= qmax; ++q)
            w.push_back(bump(0.5 + 0.5 * q * dt / eps_t));
        // enforce exact symmetry
        for (std::size_t i = 0; i < w.size() / 2; ++i) {
            const double m = 0.5 * (w[i] + w[w.size() - 1 - i]);
            w[i] = w[w.size() - 1 - i] = m;
        }
    } else if (side > 0) {
        tw.q_min = 1;
        for (int q = 1; q <= qmax; ++q) w.push_back(bump(q * dt / eps_t));
    } else {
        tw.q_min = -qmax;
        for (int q = -qmax; q <= -1; ++q) w.push_back(bump(-q * dt / eps_t));
    }
    double s = 0;
    for (double x : w) s += x;
    assert(s > 0);
    for (double& x : w) x /= s;
    // renormalize once more so the sum is exactly 1 in floating point
    double s2 = 0;
    for (double x : w) s2 += x;
    w[w.size() / 2] += 1.0 - s2;
    tw.w = std::move(w);
    return tw;
}

} // namespace derf
