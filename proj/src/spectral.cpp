#include "derf/spectral.hpp"

#include <cassert>
#include <cmath>

namespace derf {

namespace {

double smoothstep5(double u) {
    if (u <= 0) return 0;
    if (u >= 1) return 1;
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

// iterate the r2c half-spectrum with signed modes
template <class F>
void for_each_mode(Grid3 g, std::vector<cplx>& spec, F&& f) {
    const int n = g.n, nh = n / 2 + 1;
    std::size_t at = 0;
    for (int j3 = 0; j3 < n; ++j3) {
        int k3 = g.mode(j3);
        for (int j2 = 0; j2 < n; ++j2) {
            int k2 = g.mode(j2);
            for (int j1 = 0; j1 < nh; ++j1, ++at) f(spec[at], j1, k2, k3);
        }
    }
}

template <class F>
void for_each_mode_const(Grid3 g, const std::vector<cplx>& spec, F&& f) {
    const int n = g.n, nh = n / 2 + 1;
    std::size_t at = 0;
    for (int j3 = 0; j3 < n; ++j3) {
        int k3 = g.mode(j3);
        for (int j2 = 0; j2 < n; ++j2) {
            int k2 = g.mode(j2);
            for (int j1 = 0; j1 < nh; ++j1, ++at) f(spec[at], j1, k2, k3);
        }
    }
}

} // namespace

double BandMultiplier::symbol(double k1, double k2, double k3) const {
    const double d1 = k1 - center[0], d2 = k2 - center[1], d3 = k3 - center[2];
    const double d = std::sqrt(d1 * d1 + d2 * d2 + d3 * d3);
    if (d <= inner_radius) return 1.0;
    if (d >= outer_radius) return 0.0;
    return 1.0 - smoothstep5((d - inner_radius) / (outer_radius - inner_radius));
}

void BandMultiplier::validate(Grid3 g) const {
    const double reach = std::sqrt(dot(center, center)) + outer_radius;
    if (reach >= g.nyquist())
        throw AliasError("band multiplier reaches Nyquist: |center|+outer = " +
                         std::to_string(reach) + " vs " + std::to_string(g.nyquist()));
}

double AnnulusMultiplier::symbol(double kabs) const {
    if (kabs <= k_lo || kabs >= k_hi) return 0.0;
    if (kabs < k_lo_flat)
        return smoothstep5((kabs - k_lo) / (k_lo_flat - k_lo));
    if (kabs > k_hi_flat)
        return 1.0 - smoothstep5((kabs - k_hi_flat) / (k_hi - k_hi_flat));
    return 1.0;
}

AnnulusMultiplier AnnulusMultiplier::all_nonzero(Grid3 g) {
    AnnulusMultiplier a;
    a.k_lo = 0.0;
    a.k_lo_flat = 1.0;
    a.k_hi_flat = std::sqrt(3.0) * g.nyquist() + 1;
    a.k_hi = a.k_hi_flat + 1;
    return a;
}

// derivatives ---------------------------------------------------------------

ScalarField derivative(const ScalarField& f, int axis) {
    Grid3 g = f.grid();
    std::vector<cplx> s = f.spectrum();
    for_each_mode(g, s, [&](cplx& c, int k1, int k2, int k3) {
        const int k[3] = {k1, k2, k3};
        c *= cplx(0.0, two_pi * k[axis]);
    });
    ScalarField out(g);
    out.assign_spectrum(std::move(s));
    return out;
}

VectorField3 gradient(const ScalarField& f) {
    VectorField3 out(f.grid());
    for (int a = 0; a < 3; ++a) out[a] = derivative(f, a);
    return out;
}

ScalarField divergence(const VectorField3& v) {
    Grid3 g = v.grid();
    std::vector<cplx> acc(Transformer::get(g).spec_size(), cplx(0, 0));
    for (int a = 0; a < 3; ++a) {
        const auto& s = v[a].spectrum();
        std::size_t at = 0;
        for_each_mode_const(g, s, [&](const cplx& c, int k1, int k2, int k3) {
            const int k[3] = {k1, k2, k3};
            acc[at++] += c * cplx(0.0, two_pi * k[a]);
        });
    }
    ScalarField out(g);
    out.assign_spectrum(std::move(acc));
    return out;
}

VectorField3 divergence(const SymTensorField3& t) {
    Grid3 g = t.grid();
    const auto& tr = Transformer::get(g);
    std::array<std::vector<cplx>, 3> acc;
    for (auto& a : acc) a.assign(tr.spec_size(), cplx(0, 0));
    for (int k = 0; k < 6; ++k) {
        const auto& s = t[k].spectrum();
        const int i = sym_row[k], j = sym_col[k];
        std::size_t at = 0;
        for_each_mode_const(g, s, [&](const cplx& c, int k1, int k2, int k3) {
            const int kk[3] = {k1, k2, k3};
            // t^{ij}: contributes d_i to component j; if i != j also d_j to i
            acc[j][at] += c * cplx(0.0, two_pi * kk[i]);
            if (i != j) acc[i][at] += c * cplx(0.0, two_pi * kk[j]);
            ++at;
        });
    }
    VectorField3 out(g);
    for (int a = 0; a < 3; ++a) out[a].assign_spectrum(std::move(acc[a]));
    return out;
}

VectorField3 curl(const VectorField3& v) {
    VectorField3 out(v.grid());
    out[0] = derivative(v[2], 1);
    out[0] -= derivative(v[1], 2);
    out[1] = derivative(v[0], 2);
    out[1] -= derivative(v[2], 0);
    out[2] = derivative(v[1], 0);
    out[2] -= derivative(v[0], 1);
    return out;
}

SymTensorField3 sym_grad(const VectorField3& v) {
    SymTensorField3 out(v.grid());
    for (int k = 0; k < 6; ++k) {
        const int i = sym_row[k], j = sym_col[k];
        ScalarField a = derivative(v[j], i);
        ScalarField b = derivative(v[i], j);
        a += b;
        a *= 0.5;
        out[k] = std::move(a);
    }
    return out;
}

ScalarField laplacian(const ScalarField& f) {
    Grid3 g = f.grid();
    std::vector<cplx> s = f.spectrum();
    for_each_mode(g, s, [&](cplx& c, int k1, int k2, int k3) {
        c *= -two_pi * two_pi * (double(k1) * k1 + double(k2) * k2 + double(k3) * k3);
    });
    ScalarField out(g);
    out.assign_spectrum(std::move(s));
    return out;
}

void derivative_c(const CScalarField& f, int axis, CScalarField& out) {
    Grid3 g = f.grid();
    const auto& tr = Transformer::get(g);
    std::vector<cplx> s(g.size());
    tr.forward_c(f.data(), s.data());
    const int n = g.n;
    std::size_t at = 0;
    for (int j3 = 0; j3 < n; ++j3)
        for (int j2 = 0; j2 < n; ++j2)
            for (int j1 = 0; j1 < n; ++j1, ++at) {
                const int k[3] = {g.mode(j1), g.mode(j2), g.mode(j3)};
                s[at] *= cplx(0.0, two_pi * k[axis]);
            }
    tr.inverse_c(s.data(), out.data());
}

// projections ----------------------------------------------------------------

namespace {

// apply symbol(k) * (leray projection) to a triple of half-spectra
void leray_band_spec(Grid3 g, std::array<std::vector<cplx>, 3>& s,
                     const BandMultiplier* band) {
    const int n = g.n, nh = n / 2 + 1;
    std::size_t at = 0;
    for (int j3 = 0; j3 < n; ++j3) {
        const int k3 = g.mode(j3);
        for (int j2 = 0; j2 < n; ++j2) {
            const int k2 = g.mode(j2);
            for (int j1 = 0; j1 < nh; ++j1, ++at) {
                const double k1 = j1;
                const double ksq = k1 * k1 + double(k2) * k2 + double(k3) * k3;
                cplx a = s[0][at], b = s[1][at], c = s[2][at];
                if (ksq > 0) {
                    const cplx kd = (a * k1 + b * double(k2) + c * double(k3)) / ksq;
                    a -= kd * k1;
                    b -= kd * double(k2);
                    c -= kd * double(k3);
                }
                double sym = band ? band->symbol(k1, k2, k3) : 1.0;
                s[0][at] = a * sym;
                s[1][at] = b * sym;
                s[2][at] = c * sym;
            }
        }
    }
}

} // namespace

VectorField3 leray(const VectorField3& v) {
    Grid3 g = v.grid();
    std::array<std::vector<cplx>, 3> s{v[0].spectrum(), v[1].spectrum(), v[2].spectrum()};
    leray_band_spec(g, s, nullptr);
    VectorField3 out(g);
    for (int a = 0; a < 3; ++a) out[a].assign_spectrum(std::move(s[a]));
    return out;
}

VectorField3 band_leray_project(const VectorField3& v, const BandMultiplier& b) {
    Grid3 g = v.grid();
    b.validate(g);
    std::array<std::vector<cplx>, 3> s{v[0].spectrum(), v[1].spectrum(), v[2].spectrum()};
    // real field: the r2c half-spectrum represents k1>=0; the symbol must be
    // applied symmetrically, which holds only if band.symbol is even in k.
    // Real-field band projection is used with centered-at-zero bands only;
    // wave projectors act on complex fields below.
    leray_band_spec(g, s, &b);
    VectorField3 out(g);
    for (int a = 0; a < 3; ++a) out[a].assign_spectrum(std::move(s[a]));
    return out;
}

CVectorField3 band_leray_project(const CVectorField3& v, const BandMultiplier& b) {
    Grid3 g = v.grid();
    b.validate(g);
    const auto& tr = Transformer::get(g);
    std::array<std::vector<cplx>, 3> s;
    for (int a = 0; a < 3; ++a) {
        s[a].resize(g.size());
        tr.forward_c(v[a].data(), s[a].data());
    }
    const int n = g.n;
    std::size_t at = 0;
    for (int j3 = 0; j3 < n; ++j3) {
        const int k3 = g.mode(j3);
        for (int j2 = 0; j2 < n; ++j2) {
            const int k2 = g.mode(j2);
            for (int j1 = 0; j1 < n; ++j1, ++at) {
                const int k1 = g.mode(j1);
                const double ksq = double(k1) * k1 + double(k2) * k2 + double(k3) * k3;
                cplx a = s[0][at], bb = s[1][at], c = s[2][at];
                if (ksq > 0) {
                    const cplx kd = (a * double(k1) + bb * double(k2) + c * double(k3)) / ksq;
                    a -= kd * double(k1);
                    bb -= kd * double(k2);
                    c -= kd * double(k3);
                }
                const double sym = b.symbol(k1, k2, k3);
                s[0][at] = a * sym;
                s[1][at] = bb * sym;
                s[2][at] = c * sym;
            }
        }
    }
    CVectorField3 out(g);
    for (int a = 0; a < 3; ++a) tr.inverse_c(s[a].data(), out[a].data());
    return out;
}

ScalarField apply_multiplier(const ScalarField& f, const BandMultiplier& b) {
    Grid3 g = f.grid();
    std::vector<cplx> s = f.spectrum();
    for_each_mode(g, s, [&](cplx& c, int k1, int k2, int k3) {
        c *= b.symbol(k1, k2, k3);
    });
    ScalarField out(g);
    out.assign_spectrum(std::move(s));
    return out;
}

// order -1 inverses -----------------------------------------------------------

namespace {

double annulus_leak(Grid3 g, const std::array<const std::vector<cplx>*, 3>& s,
                    const AnnulusMultiplier& ann) {
    double inside = 0, outside = 0;
    const int n = g.n, nh = n / 2 + 1;
    std::size_t at = 0;
    for (int j3 = 0; j3 < n; ++j3) {
        const int k3 = g.mode(j3);
        for (int j2 = 0; j2 < n; ++j2) {
            const int k2 = g.mode(j2);
            for (int j1 = 0; j1 < nh; ++j1, ++at) {
                const double kabs =
                    std::sqrt(double(j1) * j1 + double(k2) * k2 + double(k3) * k3);
                double e = 0;
                for (int a = 0; a < 3; ++a)
                    if (s[a]) e += std::norm((*s[a])[at]);
                if (ann.symbol(kabs) >= 1.0)
                    inside += e;
                else
                    outside += e;
            }
        }
    }
    const double tot = inside + outside;
    return tot > 0 ? outside / tot : 0.0;
}

} // namespace

SymTensorField3 inverse_divergence_sym(const VectorField3& U, const AnnulusMultiplier& ann,
                                       double support_tol) {
    Grid3 g = U.grid();
    std::array<const std::vector<cplx>*, 3> sp = {&U[0].spectrum(), &U[1].spectrum(),
                                                  &U[2].spectrum()};
    const double leak = annulus_leak(g, sp, ann);
    if (leak > support_tol)
        throw SupportError("inverse_divergence_sym: input energy outside annulus: " +
                           std::to_string(leak));

    const auto& tr = Transformer::get(g);
    std::array<std::vector<cplx>, 6> out;
    for (auto& o : out) o.assign(tr.spec_size(), cplx(0, 0));

    const int n = g.n, nh = n / 2 + 1;
    std::size_t at = 0;
    for (int j3 = 0; j3 < n; ++j3) {
        const int k3 = g.mode(j3);
        for (int j2 = 0; j2 < n; ++j2) {
            const int k2 = g.mode(j2);
            for (int j1 = 0; j1 < nh; ++j1, ++at) {
                const double p[3] = {two_pi * j1, two_pi * k2, two_pi * k3};
                const double psq = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
                if (psq == 0) continue;
                const double kabs =
                    std::sqrt(double(j1) * j1 + double(k2) * k2 + double(k3) * k3);
                const double sym = ann.symbol(kabs);
                if (sym == 0) continue;
                const cplx u[3] = {(*sp[0])[at], (*sp[1])[at], (*sp[2])[at]};
                for (int c6 = 0; c6 < 6; ++c6) {
                    const int j = sym_row[c6], l = sym_col[c6];
                    cplx acc(0, 0);
                    for (int a = 0; a < 3; ++a) {
                        // Qhat_a^{jl}(p) = -i [ p_a d^{jl}/|p|^2
                        //   + (p^j d_a^l + d_a^j p^l)/|p|^2 - 2 p^j p^l p_a/|p|^4 ]
                        double q = 0;
                        if (j == l) q += p[a] / psq;
                        if (a == l) q += p[j] / psq;
                        if (a == j) q += p[l] / psq;
                        q -= 2.0 * p[j] * p[l] * p[a] / (psq * psq);
                        acc += cplx(0, -q) * u[a];
                    }
                    out[c6][at] = acc * sym;
                }
            }
        }
    }
    SymTensorField3 R(g);
    for (int c6 = 0; c6 < 6; ++c6) R[c6].assign_spectrum(std::move(out[c6]));
    return R;
}

VectorField3 inverse_divergence_vec(const ScalarField& U, const AnnulusMultiplier& ann,
                                    double support_tol) {
    Grid3 g = U.grid();
    std::array<const std::vector<cplx>*, 3> sp = {&U.spectrum(), nullptr, nullptr};
    const double leak = annulus_leak(g, sp, ann);
    if (leak > support_tol)
        throw SupportError("inverse_divergence_vec: input energy outside annulus: " +
                           std::to_string(leak));

    const auto& tr = Transformer::get(g);
    std::array<std::vector<cplx>, 3> out;
    for (auto& o : out) o.assign(tr.spec_size(), cplx(0, 0));
    const auto& s = U.spectrum();
    const int n = g.n, nh = n / 2 + 1;
    std::size_t at = 0;
    for (int j3 = 0; j3 < n; ++j3) {
        const int k3 = g.mode(j3);
        for (int j2 = 0; j2 < n; ++j2) {
            const int k2 = g.mode(j2);
            for (int j1 = 0; j1 < nh; ++j1, ++at) {
                const double p[3] = {two_pi * j1, two_pi * k2, two_pi * k3};
                const double psq = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
                if (psq == 0) continue;
                const double kabs =
                    std::sqrt(double(j1) * j1 + double(k2) * k2 + double(k3) * k3);
                const double sym = ann.symbol(kabs);
                if (sym == 0) continue;
                // Qhat^j(p) = -i p^j / |p|^2
                for (int j = 0; j < 3; ++j)
                    out[j][at] = cplx(0, -p[j] / psq) * s[at] * sym;
            }
        }
    }
    VectorField3 V(g);
    for (int j = 0; j < 3; ++j) V[j].assign_spectrum(std::move(out[j]));
    return V;
}

// dealiasing -------------------------------------------------------------------

void mask_dealias(ScalarField& f) {
    Grid3 g = f.grid();
    const int lim = g.dealias_limit();
    std::vector<cplx> s = f.spectrum();
    for_each_mode(g, s, [&](cplx& c, int k1, int k2, int k3) {
        if (std::abs(k1) > lim || std::abs(k2) > lim || std::abs(k3) > lim) c = cplx(0, 0);
    });
    f.assign_spectrum(std::move(s));
}

void mask_dealias(VectorField3& v) {
    for (int a = 0; a < 3; ++a) mask_dealias(v[a]);
}

void mask_dealias(SymTensorField3& t) {
    for (int k = 0; k < 6; ++k) mask_dealias(t[k]);
}

ScalarField gprod(const ScalarField& a, const ScalarField& b) {
    assert(a.grid() == b.grid());
    ScalarField out(a.grid());
    const double* pa = a.data();
    const double* pb = b.data();
    double* po = out.data();
    for (std::size_t i = 0; i < out.size(); ++i) po[i] = pa[i] * pb[i];
    mask_dealias(out);
    return out;
}

// diagnostics -------------------------------------------------------------------

double parseval_gap(const ScalarField& f) {
    Grid3 g = f.grid();
    const auto& s = f.spectrum();
    double e = 0;
    const int n = g.n, nh = n / 2 + 1;
    std::size_t at = 0;
    for (int j3 = 0; j3 < n; ++j3)
        for (int j2 = 0; j2 < n; ++j2)
            for (int j1 = 0; j1 < nh; ++j1, ++at) {
                const double w = (j1 == 0 || (n % 2 == 0 && j1 == n / 2)) ? 1.0 : 2.0;
                e += w * std::norm(s[at]);
            }
    const double spec_l2 = std::sqrt(e);
    const double phys_l2 = f.l2();
    const double denom = std::max(spec_l2, phys_l2);
    return denom > 0 ? std::abs(spec_l2 - phys_l2) / denom : 0.0;
}

double energy_fraction_outside(const ScalarField& f,
                               const std::function<bool(int, int, int)>& pred) {
    Grid3 g = f.grid();
    const auto& s = f.spectrum();
    double inside = 0, outside = 0;
    const int n = g.n, nh = n / 2 + 1;
    std::size_t at = 0;
    for (int j3 = 0; j3 < n; ++j3) {
        const int k3 = g.mode(j3);
        for (int j2 = 0; j2 < n; ++j2) {
            const int k2 = g.mode(j2);
            for (int j1 = 0; j1 < nh; ++j1, ++at) {
                const double w = (j1 == 0 || (n % 2 == 0 && j1 == n / 2)) ? 1.0 : 2.0;
                const double e = w * std::norm(s[at]);
                // r2c half-spectrum: k1 >= 0 entry also represents (-k1,-k2,-k3)
                if (pred(j1, k2, k3) && (j1 != 0 || pred(-j1, -k2, -k3)))
                    inside += e;
                else
                    outside += e;
            }
        }
    }
    const double tot = inside + outside;
    return tot > 0 ? outside / tot : 0.0;
}

double energy_fraction_outside(const VectorField3& f,
                               const std::function<bool(int, int, int)>& pred) {
    double num = 0, den = 0;
    for (int a = 0; a < 3; ++a) {
        const double l = f[a].l2();
        const double frac = energy_fraction_outside(f[a], pred);
        num += frac * l * l;
        den += l * l;
    }
    return den > 0 ? num / den : 0.0;
}

} // namespace derf
