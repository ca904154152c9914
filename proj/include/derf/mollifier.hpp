#pragma once

#include <vector>

#include "derf/field.hpp"
#include "derf/spectral.hpp"

namespace derf {

// Spectral realizations of the three mollifier kinds.  Velocity and space
// mollifiers are Fourier multipliers (compact support in frequency is exact on
// the grid); the time mollifier is a weight table on the sample lattice.

enum class MollKind { velocity, space, time };

struct MollifierSpec {
    MollKind kind = MollKind::space;
    double length_scale = 0; // eps_v / eps_x (per unit length) or eps_t (time)
    int moment_order = 2;    // L, space kind only
};

// symbol of chi_eps * chi_eps for the velocity kind, as a function of the
// integer mode k: equals 1 for 2*pi*|k| <= 1/eps, 0 beyond 2/eps
double velocity_symbol(double kabs, double eps_v);

// symbol of the vanishing-moment space mollifier: 1 - O((eps_x*p)^(2q)) near 0
// with q = ceil((L+1)/2), compactly supported in 2*pi*|k| <= 2/eps_x
double space_symbol(double kabs, double eps_x, int L);

ScalarField mollify_velocity_scalar(const ScalarField& f, double eps_v);
VectorField3 mollify_velocity(const VectorField3& v, double eps_v);

ScalarField mollify_space(const ScalarField& f, double eps_x, int L);
VectorField3 mollify_space(const VectorField3& f, double eps_x, int L);
SymTensorField3 mollify_space(const SymTensorField3& f, double eps_x, int L);

// moments of the (periodized) physical kernel, computed by grid quadrature
// over h in [-1/2,1/2)^3; moment(0,0,0) should be 1, orders 1..L should vanish
double kernel_moment(Grid3 g, const MollifierSpec& spec, int a1, int a2, int a3);

// time kernel: weights on the sample lattice, support within |q*dt| < eps_t.
// side = 0 symmetric, +1 forward (0 < s), -1 backward (s < 0).  Weights are
// normalized to sum exactly to 1; the symmetric table has w[-q] == w[q].
struct TimeWeights {
    int q_min = 0;
    std::vector<double> w; // w[i] multiplies sample at offset q_min + i
    double weight(int q) const {
        int i = q - q_min;
        return (i >= 0 && i < int(w.size())) ? w[i] : 0.0;
    }
    int q_max() const { return q_min + int(w.size()) - 1; }
};

TimeWeights make_time_weights(double eps_t, double dt, int side);

} // namespace derf
