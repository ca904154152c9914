#include "derf/coarse_flow.hpp"

#include <cassert>
#include <cmath>

#include <fftw3.h>

namespace derf {

CoarseFlow::CoarseFlow(VectorField3 v_eps, double dt_hint)
    : veps_(std::move(v_eps)), dt_hint_(dt_hint) {
    Grid3 g = veps_.grid();
    const double m0 = veps_[0].max_abs(), m1 = veps_[1].max_abs(), m2 = veps_[2].max_abs();
    double gn = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) gn = std::max(gn, derivative(veps_[a], b).max_abs());
    grad_norm_ = gn;
    if (m0 == 0 && m1 == 0 && m2 == 0) {
        kind_ = Kind::zero;
    } else if (gn == 0) {
        kind_ = Kind::constant;
        const_v_ = Vec3{veps_[0].data()[0], veps_[1].data()[0], veps_[2].data()[0]};
    } else if (m1 == 0 && m2 == 0 && derivative(veps_[0], 0).max_abs() == 0) {
        kind_ = Kind::shear1;
    } else {
        kind_ = Kind::general;
    }
}

VectorField3 CoarseFlow::displacement(double s) const {
    Grid3 g = veps_.grid();
    VectorField3 d(g);
    switch (kind_) {
        case Kind::zero:
            return d;
        case Kind::constant: {
            for (int a = 0; a < 3; ++a) {
                double* p = d[a].data();
                for (std::size_t i = 0; i < d[a].size(); ++i) p[i] = s * const_v_[a];
            }
            return d;
        }
        case Kind::shear1: {
            // characteristics keep (x2,x3) fixed: d1 = s * v1(x2,x3) exactly
            d[0] = veps_[0];
            d[0] *= s;
            return d;
        }
        case Kind::general:
            break;
    }
    // RK4 with displacement composition; order-8 interpolation for off-grid reads
    const int nst = std::max(1, int(std::ceil(std::abs(s) /
                        std::max(1e-300, std::min(dt_hint_, 0.1 / std::max(grad_norm_, 1e-12))))));
    const double h = s / nst;
    const double gh = g.h();
    // trace each grid point independently
    std::vector<Vec3> pos(g.size());
    for (int i3 = 0; i3 < g.n; ++i3)
        for (int i2 = 0; i2 < g.n; ++i2)
            for (int i1 = 0; i1 < g.n; ++i1)
                pos[g.idx(i1, i2, i3)] = Vec3{i1 * gh, i2 * gh, i3 * gh};
    auto vel = [&](const Vec3& x) {
        return Vec3{interpolate(veps_[0], x), interpolate(veps_[1], x),
                    interpolate(veps_[2], x)};
    };
    for (int st = 0; st < nst; ++st) {
        for (auto& x : pos) {
            Vec3 k1 = vel(x);
            Vec3 x2{x[0] + 0.5 * h * k1[0], x[1] + 0.5 * h * k1[1], x[2] + 0.5 * h * k1[2]};
            Vec3 k2 = vel(x2);
            Vec3 x3{x[0] + 0.5 * h * k2[0], x[1] + 0.5 * h * k2[1], x[2] + 0.5 * h * k2[2]};
            Vec3 k3 = vel(x3);
            Vec3 x4{x[0] + h * k3[0], x[1] + h * k3[1], x[2] + h * k3[2]};
            Vec3 k4 = vel(x4);
            for (int a = 0; a < 3; ++a)
                x[a] += h / 6.0 * (k1[a] + 2 * k2[a] + 2 * k3[a] + k4[a]);
        }
    }
    for (int i3 = 0; i3 < g.n; ++i3)
        for (int i2 = 0; i2 < g.n; ++i2)
            for (int i1 = 0; i1 < g.n; ++i1) {
                const std::size_t id = g.idx(i1, i2, i3);
                d[0].data()[id] = pos[id][0] - i1 * gh;
                d[1].data()[id] = pos[id][1] - i2 * gh;
                d[2].data()[id] = pos[id][2] - i3 * gh;
            }
    return d;
}

Vec3 CoarseFlow::flow_map(const Vec3& x0, double s) const {
    if (kind_ == Kind::zero) return x0;
    if (kind_ == Kind::constant)
        return Vec3{x0[0] + s * const_v_[0], x0[1] + s * const_v_[1], x0[2] + s * const_v_[2]};
    const int nst = std::max(1, int(std::ceil(std::abs(s) /
                        std::max(1e-300, std::min(dt_hint_, 0.1 / std::max(grad_norm_, 1e-12))))));
    const double h = s / nst;
    auto vel = [&](const Vec3& x) {
        return Vec3{interpolate(veps_[0], x), interpolate(veps_[1], x),
                    interpolate(veps_[2], x)};
    };
    Vec3 x = x0;
    for (int st = 0; st < nst; ++st) {
        Vec3 k1 = vel(x);
        Vec3 x2{x[0] + 0.5 * h * k1[0], x[1] + 0.5 * h * k1[1], x[2] + 0.5 * h * k1[2]};
        Vec3 k2 = vel(x2);
        Vec3 x3{x[0] + 0.5 * h * k2[0], x[1] + 0.5 * h * k2[1], x[2] + 0.5 * h * k2[2]};
        Vec3 k3 = vel(x3);
        Vec3 x4{x[0] + h * k3[0], x[1] + h * k3[1], x[2] + h * k3[2]};
        Vec3 k4 = vel(x4);
        for (int a = 0; a < 3; ++a)
            x[a] += h / 6.0 * (k1[a] + 2 * k2[a] + 2 * k3[a] + k4[a]);
    }
    return x;
}

double interpolate(const ScalarField& f, const Vec3& x) {
    Grid3 g = f.grid();
    const int n = g.n;
    const double* d = f.data();
    // 8-point Lagrange per axis around the containing cell
    double u[3];
    int base[3];
    for (int a = 0; a < 3; ++a) {
        double xa = x[a] - std::floor(x[a]);
        double s = xa * n;
        base[a] = int(std::floor(s));
        u[a] = s - base[a];
    }
    double wx[3][8];
    for (int a = 0; a < 3; ++a) {
        // nodes at offsets -3..4 relative to base
        for (int i = 0; i < 8; ++i) {
            double w = 1.0;
            const double xi = i - 3;
            for (int j = 0; j < 8; ++j) {
                if (j == i) continue;
                const double xj = j - 3;
                w *= (u[a] - xj) / (xi - xj);
            }
            wx[a][i] = w;
        }
    }
    double acc = 0;
    for (int c = 0; c < 8; ++c) {
        const int i3 = ((base[2] + c - 3) % n + n) % n;
        for (int b = 0; b < 8; ++b) {
            const int i2 = ((base[1] + b - 3) % n + n) % n;
            double rowacc = 0;
            for (int a = 0; a < 8; ++a) {
                const int i1 = ((base[0] + a - 3) % n + n) % n;
                rowacc += wx[0][a] * d[g.idx(i1, i2, i3)];
            }
            acc += rowacc * wx[1][b] * wx[2][c];
        }
    }
    return acc;
}

ScalarField evaluate_displaced(const ScalarField& f, const VectorField3& disp,
                               bool line_shift_ok) {
    Grid3 g = f.grid();
    if (line_shift_ok) {
        // slide each x1-line spectrally by the (line-constant) displacement
        const int n = g.n, nh = n / 2 + 1;
        ScalarField out(g);
        std::vector<double> line(n);
        std::vector<cplx> ls(nh);
        fftw_plan pf = fftw_plan_dft_r2c_1d(n, line.data(),
                                            reinterpret_cast<fftw_complex*>(ls.data()),
                                            FFTW_ESTIMATE);
        fftw_plan pb = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(ls.data()),
                                            line.data(), FFTW_ESTIMATE);
        const double* fd = f.data();
        const double* dd = disp[0].data();
        double* od = out.data();
        for (int i3 = 0; i3 < n; ++i3)
            for (int i2 = 0; i2 < n; ++i2) {
                const std::size_t row = g.idx(0, i2, i3);
                const double shift = dd[row];
                for (int i1 = 0; i1 < n; ++i1) line[i1] = fd[row + i1];
                fftw_execute(pf);
                for (int k = 0; k < nh; ++k)
                    ls[k] *= std::polar(1.0 / n, two_pi * k * shift);
                fftw_execute(pb);
                for (int i1 = 0; i1 < n; ++i1) od[row + i1] = line[i1];
            }
        fftw_destroy_plan(pf);
        fftw_destroy_plan(pb);
        return out;
    }
    ScalarField out(g);
    double* od = out.data();
    const double h = g.h();
    for (int i3 = 0; i3 < g.n; ++i3)
        for (int i2 = 0; i2 < g.n; ++i2)
            for (int i1 = 0; i1 < g.n; ++i1) {
                const std::size_t id = g.idx(i1, i2, i3);
                Vec3 x{i1 * h + disp[0].data()[id], i2 * h + disp[1].data()[id],
                       i3 * h + disp[2].data()[id]};
                od[id] = interpolate(f, x);
            }
    return out;
}

ScalarField mollify_along_flow(const std::function<ScalarField(int)>& provider,
                               const CoarseFlow& cf, const TimeWeights& plus,
                               const TimeWeights& minus, double chi_blend, double dt) {
    const bool line_ok = cf.kind() != CoarseFlow::Kind::general;
    Grid3 g = cf.velocity().grid();
    ScalarField acc(g);
    auto add_side = [&](const TimeWeights& tw, double scale) {
        if (scale == 0) return;
        for (int i = 0; i < int(tw.w.size()); ++i) {
            const int q = tw.q_min + i;
            const double w = tw.w[i] * scale;
            if (w == 0) continue;
            ScalarField fq = provider(q);
            if (q != 0) {
                VectorField3 d = cf.displacement(q * dt);
                fq = evaluate_displaced(fq, d, line_ok);
            }
            acc.axpy(w, fq);
        }
    };
    add_side(plus, chi_blend);
    add_side(minus, 1.0 - chi_blend);
    return acc;
}

ScalarField advective_commutator(const VectorField3& v, const ScalarField& F, double eps_x,
                                 int L) {
    VectorField3 vm = mollify_space(v, eps_x, L);
    ScalarField MF = mollify_space(F, eps_x, L);
    VectorField3 gMF = gradient(MF);
    ScalarField term1 = gprod(vm[0], gMF[0]);
    term1 += gprod(vm[1], gMF[1]);
    term1 += gprod(vm[2], gMF[2]);
    VectorField3 gF = gradient(F);
    ScalarField adv = gprod(v[0], gF[0]);
    adv += gprod(v[1], gF[1]);
    adv += gprod(v[2], gF[2]);
    ScalarField term2 = mollify_space(adv, eps_x, L);
    term1 -= term2;
    return term1;
}

} // namespace derf
