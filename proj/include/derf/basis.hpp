#pragma once

#include <array>

#include "derf/field.hpp"

namespace derf {

// 3x3 symmetric tensor as 6 components in sym_index order
struct Sym3 {
    std::array<double, 6> c{};
    double& operator[](int k) { return c[k]; }
    double operator[](int k) const { return c[k]; }
    double at(int i, int j) const { return c[sym_index(i, j)]; }
    Sym3& operator+=(const Sym3& o) {
        for (int k = 0; k < 6; ++k) c[k] += o.c[k];
        return *this;
    }
    Sym3 operator*(double s) const {
        Sym3 r = *this;
        for (int k = 0; k < 6; ++k) r.c[k] *= s;
        return r;
    }
    double trace() const { return c[0] + c[1] + c[2]; }
};

Sym3 outer(const Vec3& f);

// fixed tensors of the construction:
//   delta_1      = e2 e2 + (1/2) e3 e3   (diamond R-basis sum, in ker dx1)
//   delta_1star  = e3 e3 + (1/2) e2 e2   (overline R-basis sum, in ker dx1)
//   delta_2star  = e1 e1 + (1/2) e3 e3   (star  R-basis sum, in ker dx2)
// so that delta_1 + delta_2star = identity.
Sym3 delta_1();
Sym3 delta_1star();
Sym3 delta_2star();
Sym3 identity3();

// Direction sets.  Each R-tier set has three vectors f with sum f (x) f equal
// to the stated tensor and {f (x) f} a basis of the plane's symmetric tensors.
struct BasisSets {
    std::array<Vec3, 3> diamond_R;  // in ker dx1, sum = delta_1
    std::array<Vec3, 3> star_R;     // in ker dx2, sum = delta_2star
    std::array<Vec3, 3> overline_R; // in ker dx1, sum = delta_1star
    std::array<Vec3, 3> overline_R_alt; // in ker dx1, sum = delta_1 (prepare variant)
    std::array<Vec3, 2> diamond_phi;  // {e2, e3}
    std::array<Vec3, 2> overline_phi; // {(0,1,1)/sqrt2, (0,-1,1)/sqrt2}
};

const BasisSets& basis_sets();

// inverse of the 3x3 map (x_d) -> sum_d x_d f_d (x) f_d restricted to the
// plane spanned by (u, w); rows give the dual coefficients of (uu, ww, uw)
struct PlaneSolve {
    int u = 1, w = 2; // plane axes (ker dx1 default)
    std::array<std::array<double, 3>, 3> inv; // x_d = sum inv[d][m] * rhs_m
};
PlaneSolve plane_solve_for(const std::array<Vec3, 3>& dirs, int u, int w);

// vector projections: pi1 + pi2 = Id, ranges ker dx1 / ker dx2
Vec3 project_ker1(const Vec3& v);
Vec3 project_ker2(const Vec3& v);

// symmetric-tensor projections pi_[l], ranges ker dx^l (x) ker dx^l, summing to
// the identity: pi1 keeps (22,23,33/2), pi2 keeps (11,13,33/2), pi3 keeps (12)
Sym3 pi_sym(const Sym3& t, int l);
void pi_sym_field(const SymTensorField3& t, int l, SymTensorField3& out);

// field-level helpers
void pi1_vec_field(const VectorField3& v, VectorField3& out); // (0, v2, v3)
void pi2_vec_field(const VectorField3& v, VectorField3& out); // (v1, 0, 0)

} // namespace derf
