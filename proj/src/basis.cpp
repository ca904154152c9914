#include "derf/basis.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace derf {

Sym3 outer(const Vec3& f) {
    Sym3 t;
    for (int k = 0; k < 6; ++k) t[k] = f[sym_row[k]] * f[sym_col[k]];
    return t;
}

Sym3 delta_1() {
    Sym3 t;
    t[sym_index(1, 1)] = 1.0;
    t[sym_index(2, 2)] = 0.5;
    return t;
}

Sym3 delta_1star() {
    Sym3 t;
    t[sym_index(2, 2)] = 1.0;
    t[sym_index(1, 1)] = 0.5;
    return t;
}

Sym3 delta_2star() {
    Sym3 t;
    t[sym_index(0, 0)] = 1.0;
    t[sym_index(2, 2)] = 0.5;
    return t;
}

Sym3 identity3() {
    Sym3 t;
    t[0] = t[1] = t[2] = 1.0;
    return t;
}

namespace {

// three vectors in the plane span(u_axis, w_axis) whose squares sum to
// alpha u u + beta w w: a*u and b(cos60 u +- sin60 w)
std::array<Vec3, 3> plane_triple(int u_axis, int w_axis, double alpha, double beta) {
    const double b2 = 2.0 * beta / 3.0;
    const double a2 = alpha - beta / 3.0;
    if (a2 <= 0 || b2 <= 0) throw std::logic_error("plane_triple: bad target");
    const double a = std::sqrt(a2), b = std::sqrt(b2);
    Vec3 f1{}, f2{}, f3{};
    f1[u_axis] = a;
    f2[u_axis] = b * 0.5;
    f2[w_axis] = b * std::sqrt(3.0) / 2.0;
    f3[u_axis] = b * 0.5;
    f3[w_axis] = -b * std::sqrt(3.0) / 2.0;
    return {f1, f2, f3};
}

} // namespace

const BasisSets& basis_sets() {
    static const BasisSets bs = [] {
        BasisSets b;
        b.diamond_R = plane_triple(1, 2, 1.0, 0.5);      // sum = delta_1
        b.star_R = plane_triple(0, 2, 1.0, 0.5);         // sum = delta_2star
        b.overline_R = plane_triple(2, 1, 1.0, 0.5);     // sum = delta_1star
        b.overline_R_alt = plane_triple(1, 2, 1.0, 0.5); // sum = delta_1
        b.diamond_phi = {Vec3{0, 1, 0}, Vec3{0, 0, 1}};
        const double r = 1.0 / std::sqrt(2.0);
        b.overline_phi = {Vec3{0, r, r}, Vec3{0, -r, r}};
        return b;
    }();
    return bs;
}

PlaneSolve plane_solve_for(const std::array<Vec3, 3>& dirs, int u, int w) {
    Eigen::Matrix3d M;
    for (int d = 0; d < 3; ++d) {
        const Vec3& f = dirs[d];
        M(0, d) = f[u] * f[u];
        M(1, d) = f[w] * f[w];
        M(2, d) = f[u] * f[w];
    }
    Eigen::Matrix3d Minv = M.inverse();
    PlaneSolve ps;
    ps.u = u;
    ps.w = w;
    for (int d = 0; d < 3; ++d)
        for (int m = 0; m < 3; ++m) ps.inv[d][m] = Minv(d, m);
    return ps;
}

Vec3 project_ker1(const Vec3& v) { return Vec3{0, v[1], v[2]}; }
Vec3 project_ker2(const Vec3& v) { return Vec3{v[0], 0, 0}; }

Sym3 pi_sym(const Sym3& t, int l) {
    Sym3 r;
    const double half33 = 0.5 * t.at(2, 2);
    if (l == 1) {
        r[sym_index(1, 1)] = t.at(1, 1);
        r[sym_index(1, 2)] = t.at(1, 2);
        r[sym_index(2, 2)] = half33;
    } else if (l == 2) {
        r[sym_index(0, 0)] = t.at(0, 0);
        r[sym_index(0, 2)] = t.at(0, 2);
        r[sym_index(2, 2)] = half33;
    } else {
        r[sym_index(0, 1)] = t.at(0, 1);
    }
    return r;
}

void pi_sym_field(const SymTensorField3& t, int l, SymTensorField3& out) {
    Grid3 g = t.grid();
    for (int k = 0; k < 6; ++k) out[k] = ScalarField(g);
    if (l == 1) {
        out[sym_index(1, 1)] = t.at(1, 1);
        out[sym_index(1, 2)] = t.at(1, 2);
        out[sym_index(2, 2)] = t.at(2, 2);
        out[sym_index(2, 2)] *= 0.5;
    } else if (l == 2) {
        out[sym_index(0, 0)] = t.at(0, 0);
        out[sym_index(0, 2)] = t.at(0, 2);
        out[sym_index(2, 2)] = t.at(2, 2);
        out[sym_index(2, 2)] *= 0.5;
    } else {
        out[sym_index(0, 1)] = t.at(0, 1);
    }
}

void pi1_vec_field(const VectorField3& v, VectorField3& out) {
    Grid3 g = v.grid();
    out[0] = ScalarField(g);
    out[1] = v[1];
    out[2] = v[2];
}

void pi2_vec_field(const VectorField3& v, VectorField3& out) {
    Grid3 g = v.grid();
    out[0] = v[0];
    out[1] = ScalarField(g);
    out[2] = ScalarField(g);
}

} // namespace derf
