#include "doctest.h"

#include <cstdio>
#include <random>

#include "derf/io.hpp"
#include "derf/spectral.hpp"

using namespace derf;

namespace {

// random real field band-limited to |k_i| <= kmax
ScalarField random_band_limited(Grid3 g, int kmax, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1, 1);
    struct Mode {
        int k1, k2, k3;
        double a, b;
    };
    std::vector<Mode> modes;
    for (int k3 = -kmax; k3 <= kmax; ++k3)
        for (int k2 = -kmax; k2 <= kmax; ++k2)
            for (int k1 = 0; k1 <= kmax; ++k1) {
                if (k1 == 0 && (k2 < 0 || (k2 == 0 && k3 <= 0))) continue;
                if (k1 * k1 + k2 * k2 + k3 * k3 > kmax * kmax) continue;
                modes.push_back({k1, k2, k3, U(rng), U(rng)});
            }
    return make_field(g, [&](double x, double y, double z) {
        double s = 0;
        for (const auto& m : modes) {
            const double ph = two_pi * (m.k1 * x + m.k2 * y + m.k3 * z);
            s += m.a * std::cos(ph) + m.b * std::sin(ph);
        }
        return s;
    });
}

// 8th-order centered finite difference along an axis (periodic)
ScalarField fd8(const ScalarField& f, int axis) {
    Grid3 g = f.grid();
    const int n = g.n;
    static const double c[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
    ScalarField out(g);
    const double* fd = f.data();
    double* od = out.data();
    const double invh = n;
    for (int i3 = 0; i3 < n; ++i3)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i1 = 0; i1 < n; ++i1) {
                double s = 0;
                int idx[3] = {i1, i2, i3};
                for (int j = 1; j <= 4; ++j) {
                    int ip[3] = {i1, i2, i3}, im[3] = {i1, i2, i3};
                    ip[axis] = (idx[axis] + j) % n;
                    im[axis] = (idx[axis] - j + 8 * n) % n;
                    s += c[j - 1] * (fd[g.idx(ip[0], ip[1], ip[2])] -
                                     fd[g.idx(im[0], im[1], im[2])]);
                }
                od[g.idx(i1, i2, i3)] = s * invh;
            }
    return out;
}

} // namespace

TEST_CASE("spectral derivative: analytic and trivial cases") {
    Grid3 g(32);
    ScalarField f = make_field(g, [](double x, double, double) { return std::sin(two_pi * x); });
    ScalarField dx = derivative(f, 0);
    ScalarField expect =
        make_field(g, [](double x, double, double) { return two_pi * std::cos(two_pi * x); });
    expect -= dx;
    CHECK(expect.max_abs() < 1e-11);

    ScalarField c(g, 3.25);
    CHECK(derivative(c, 1).max_abs() < 1e-12);
}

TEST_CASE("spectral derivative matches 8th-order finite differences") {
    Grid3 g(128);
    ScalarField f = random_band_limited(g, 8, 7);
    for (int axis : {0, 2}) {
        ScalarField ds = derivative(f, axis);
        ScalarField dfd = fd8(f, axis);
        dfd -= ds;
        CHECK(dfd.l2() / ds.l2() < 1e-6);
    }
}

TEST_CASE("divergence identities and finite-difference oracle") {
    Grid3 g(32);
    // shear is divergence-free
    VectorField3 shear(g);
    shear[0] = make_field(g, [](double, double y, double) { return std::sin(two_pi * y); });
    CHECK(divergence(shear).max_abs() < 1e-12);

    // div grad f = laplacian f
    ScalarField f = random_band_limited(g, 5, 11);
    ScalarField gap = divergence(gradient(f));
    gap -= laplacian(f);
    CHECK(gap.max_abs() / laplacian(f).max_abs() < 1e-12);

    Grid3 gbig(128);
    VectorField3 V(gbig);
    for (int a = 0; a < 3; ++a) V[a] = random_band_limited(gbig, 8, 100 + a);
    ScalarField dd = divergence(V);
    ScalarField dfd = fd8(V[0], 0);
    dfd += fd8(V[1], 1);
    dfd += fd8(V[2], 2);
    dfd -= dd;
    CHECK(dfd.l2() / dd.l2() < 1e-6);
}

TEST_CASE("Parseval agreement physical vs spectral") {
    Grid3 g(32);
    ScalarField f = random_band_limited(g, 9, 3);
    CHECK(parseval_gap(f) < 1e-12);
}

TEST_CASE("Leray projection output is exactly divergence-free") {
    Grid3 g(32);
    VectorField3 V(g);
    for (int a = 0; a < 3; ++a) V[a] = random_band_limited(g, 7, 40 + a);
    VectorField3 P = leray(V);
    CHECK(divergence(P).max_abs() < 1e-12 * std::max(1.0, max_abs(P)) * two_pi * 7);
    // idempotent
    VectorField3 P2 = leray(P);
    P2 = P2 - P;
    CHECK(max_abs(P2) < 1e-13);
}

TEST_CASE("band Leray projector on complex waves") {
    Grid3 g(64);
    const int n0 = 8;
    BandMultiplier band{Vec3{double(n0), 0, 0}, 3.0, 5.0};

    // divergence-free single mode in the band is preserved
    CVectorField3 V(g);
    for (int i3 = 0; i3 < g.n; ++i3)
        for (int i2 = 0; i2 < g.n; ++i2)
            for (int i1 = 0; i1 < g.n; ++i1) {
                const cplx ph = std::polar(1.0, two_pi * n0 * g.x1(i1));
                V[1].data()[g.idx(i1, i2, i3)] = ph;
            }
    CVectorField3 P = band_leray_project(V, band);
    double diff = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        diff = std::max(diff, std::abs(P[1].data()[i] - V[1].data()[i]) +
                                  std::abs(P[0].data()[i]) + std::abs(P[2].data()[i]));
    CHECK(diff < 1e-12);

    // gradient field in band is annihilated
    CVectorField3 G(g);
    for (int i3 = 0; i3 < g.n; ++i3)
        for (int i2 = 0; i2 < g.n; ++i2)
            for (int i1 = 0; i1 < g.n; ++i1)
                G[0].data()[g.idx(i1, i2, i3)] =
                    std::polar(1.0, two_pi * n0 * g.x1(i1)); // grad of e^{2pi i n x}/..
    CVectorField3 PG = band_leray_project(G, band);
    CHECK(PG[0].max_abs() < 1e-12);

    // field outside the band is annihilated
    CVectorField3 W(g);
    for (int i3 = 0; i3 < g.n; ++i3)
        for (int i2 = 0; i2 < g.n; ++i2)
            for (int i1 = 0; i1 < g.n; ++i1)
                W[1].data()[g.idx(i1, i2, i3)] = std::polar(1.0, two_pi * 20 * g.x1(i1));
    CVectorField3 PW = band_leray_project(W, band);
    CHECK(PW[1].max_abs() < 1e-12);

    // reaching past Nyquist raises AliasError
    BandMultiplier bad{Vec3{30, 0, 0}, 2.0, 4.0};
    CHECK_THROWS_AS((void)band_leray_project(V, bad), AliasError);
}

TEST_CASE("inverse divergence, symmetric: right inverse and scaling") {
    Grid3 g(64);
    auto in_band = [&](int kc) {
        VectorField3 U(g);
        U[1] = make_field(g, [kc](double x, double, double) {
            return std::cos(two_pi * kc * x);
        });
        return U;
    };
    AnnulusMultiplier ann;
    ann.k_lo = 2;
    ann.k_lo_flat = 5;
    ann.k_hi_flat = 20;
    ann.k_hi = 21;

    VectorField3 U = in_band(8);
    SymTensorField3 R = inverse_divergence_sym(U, ann);
    VectorField3 back = divergence(R);
    back = back - U;
    CHECK(max_abs(back) / max_abs(U) < 1e-10);

    // U = 0 -> R = 0
    VectorField3 Z(g);
    CHECK(max_abs(inverse_divergence_sym(Z, ann)) == 0.0);

    // norm ratio scales like 1/lambda within 10%
    VectorField3 U2 = in_band(16);
    SymTensorField3 R2 = inverse_divergence_sym(U2, ann);
    auto l2t = [](const SymTensorField3& t) {
        double s = 0;
        for (int k = 0; k < 6; ++k) s += t[k].l2() * t[k].l2();
        return std::sqrt(s);
    };
    const double r1 = l2t(R) / l2(U), r2 = l2t(R2) / l2(U2);
    CHECK(r1 / r2 == doctest::Approx(2.0).epsilon(0.10));

    // energy outside the symbol==1 region raises SupportError
    VectorField3 bad = in_band(3); // in the taper, not in the flat region
    CHECK_THROWS_AS((void)inverse_divergence_sym(bad, ann), SupportError);
}

TEST_CASE("inverse divergence, scalar right-hand side") {
    Grid3 g(64);
    AnnulusMultiplier ann;
    ann.k_lo = 2;
    ann.k_lo_flat = 5;
    ann.k_hi_flat = 20;
    ann.k_hi = 21;
    ScalarField U = make_field(g, [](double x, double y, double) {
        return std::sin(two_pi * (6 * x + 3 * y));
    });
    VectorField3 phi = inverse_divergence_vec(U, ann);
    ScalarField back = divergence(phi);
    back -= U;
    CHECK(back.max_abs() / U.max_abs() < 1e-10);

    ScalarField z(g);
    CHECK(max_abs(inverse_divergence_vec(z, ann)) == 0.0);

    ScalarField U2 = make_field(g, [](double x, double y, double) {
        return std::sin(two_pi * (12 * x + 6 * y));
    });
    VectorField3 phi2 = inverse_divergence_vec(U2, ann);
    const double q1 = l2(phi) / U.l2(), q2 = l2(phi2) / U2.l2();
    CHECK(q1 / q2 == doctest::Approx(2.0).epsilon(0.10));
}

TEST_CASE("dealias mask implements exact Galerkin products") {
    Grid3 g(64); // limit 21
    ScalarField a = make_field(g, [](double x, double, double) {
        return std::cos(two_pi * 20 * x);
    });
    ScalarField b = make_field(g, [](double x, double, double) {
        return std::cos(two_pi * 15 * x);
    });
    // product = 1/2 cos(35) + 1/2 cos(5): mode 35 aliases to 29, both masked
    ScalarField p = gprod(a, b);
    ScalarField expect = make_field(g, [](double x, double, double) {
        return 0.5 * std::cos(two_pi * 5 * x);
    });
    expect -= p;
    CHECK(expect.max_abs() < 1e-13);

    // in-range product is exact
    ScalarField c = make_field(g, [](double x, double, double) {
        return std::cos(two_pi * 3 * x);
    });
    ScalarField q = gprod(b, c); // modes 18 and 12, both <= 21
    ScalarField expect2 = make_field(g, [](double x, double, double) {
        return 0.5 * (std::cos(two_pi * 18 * x) + std::cos(two_pi * 12 * x));
    });
    expect2 -= q;
    CHECK(expect2.max_abs() < 1e-13);
}

TEST_CASE("band multiplier idempotence up to taper energy") {
    Grid3 g(64);
    BandMultiplier band{Vec3{8, 0, 0}, 3.0, 5.0};
    // field supported where the symbol equals 1
    CVectorField3 V(g);
    for (int i3 = 0; i3 < g.n; ++i3)
        for (int i2 = 0; i2 < g.n; ++i2)
            for (int i1 = 0; i1 < g.n; ++i1)
                V[2].data()[g.idx(i1, i2, i3)] =
                    std::polar(1.0, two_pi * (8 * g.x1(i1) + 2 * g.x1(i2)));
    CVectorField3 once = band_leray_project(V, band);
    CVectorField3 twice = band_leray_project(once, band);
    double diff = 0;
    for (int a = 0; a < 3; ++a)
        for (std::size_t i = 0; i < g.size(); ++i)
            diff = std::max(diff, std::abs(twice[a].data()[i] - once[a].data()[i]));
    CHECK(diff < 1e-12);
}

TEST_CASE("field dump round trip") {
    Grid3 g(16);
    FieldDump d;
    d.n_per_axis = 16;
    d.n_time = 2;
    d.n_components = 3;
    d.samples.resize(std::size_t(2) * 3 * g.size());
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-1, 1);
    for (auto& x : d.samples) x = U(rng);
    const std::string path = "/tmp/derf_test_dump.bin";
    write_dump(path, d);
    FieldDump r = read_dump(path);
    REQUIRE(r.n_per_axis == 16);
    REQUIRE(r.n_time == 2);
    REQUIRE(r.n_components == 3);
    CHECK(r.samples == d.samples);
    std::remove(path.c_str());
}
