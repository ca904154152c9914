#pragma once

#include <stdexcept>
#include <string>

#include "derf/field.hpp"

namespace derf {

struct AliasError : std::runtime_error {
    explicit AliasError(const std::string& m) : std::runtime_error(m) {}
};
struct SupportError : std::runtime_error {
    explicit SupportError(const std::string& m) : std::runtime_error(m) {}
};

constexpr double two_pi = 6.283185307179586476925286766559;

// Smooth radial cutoff around a center frequency (cycles per unit length):
// symbol = 1 inside inner_radius, 0 outside outer_radius, quintic smoothstep
// in between (C^2).
struct BandMultiplier {
    Vec3 center;
    double inner_radius = 0;
    double outer_radius = 0;

    double symbol(double k1, double k2, double k3) const;
    void validate(Grid3 g) const; // AliasError if the band does not fit below Nyquist
};

// Annulus kmin..kmax (modes), symbol == 1 on [kmin_flat, kmax_flat], quintic
// tapers of the given widths.  Used by the frequency-localized order -1 ops.
struct AnnulusMultiplier {
    double k_lo = 0;        // symbol 0 at |k| <= k_lo
    double k_lo_flat = 0;   // symbol 1 from here ...
    double k_hi_flat = 0;   // ... to here
    double k_hi = 0;        // symbol 0 at |k| >= k_hi
    double symbol(double kabs) const;

    // annulus that is exactly 1 on all nonzero representable modes up to the
    // dealias limit; taper only against the zero mode
    static AnnulusMultiplier all_nonzero(Grid3 g);
};

// derivatives --------------------------------------------------------------

ScalarField derivative(const ScalarField& f, int axis);
VectorField3 gradient(const ScalarField& f);
ScalarField divergence(const VectorField3& v);
VectorField3 divergence(const SymTensorField3& t); // (div t)^l = d_j t^{jl}
VectorField3 curl(const VectorField3& v);
SymTensorField3 sym_grad(const VectorField3& v);
ScalarField laplacian(const ScalarField& f);

void derivative_c(const CScalarField& f, int axis, CScalarField& out);

// projections ---------------------------------------------------------------

VectorField3 leray(const VectorField3& v);
VectorField3 band_leray_project(const VectorField3& v, const BandMultiplier& b);
CVectorField3 band_leray_project(const CVectorField3& v, const BandMultiplier& b);
ScalarField apply_multiplier(const ScalarField& f, const BandMultiplier& b);

// order -1 right inverses ----------------------------------------------------

// Q_{a,~lambda}: symmetric right inverse of the divergence, frequency-localized.
// Throws SupportError if more than support_tol of the input L2 energy lies
// outside the region where the annulus symbol equals 1.
SymTensorField3 inverse_divergence_sym(const VectorField3& U, const AnnulusMultiplier& ann,
                                       double support_tol = 1e-8);
VectorField3 inverse_divergence_vec(const ScalarField& U, const AnnulusMultiplier& ann,
                                    double support_tol = 1e-8);

// dealiasing / Galerkin products ---------------------------------------------

// 2/3-rule mask: zero all modes with any |k_i| > g.dealias_limit().  For inputs
// already below the limit this makes pointwise products exact Galerkin products.
void mask_dealias(ScalarField& f);
void mask_dealias(VectorField3& v);
void mask_dealias(SymTensorField3& t);

// convention used by every quadratic/cubic term in the construction and its
// verifiers: pointwise product followed by the dealias mask
ScalarField gprod(const ScalarField& a, const ScalarField& b);

// diagnostics ----------------------------------------------------------------

double parseval_gap(const ScalarField& f); // |l2_phys - l2_spec| / l2
// fraction of L2 energy at modes where pred(k1,k2,k3) is false
double energy_fraction_outside(const ScalarField& f,
                               const std::function<bool(int, int, int)>& pred);
double energy_fraction_outside(const VectorField3& f,
                               const std::function<bool(int, int, int)>& pred);

} // namespace derf
