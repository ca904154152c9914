#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace derf {

// Log-parameter ledger for the level recursion.  Components of L:
//   [0] L_Z   = log Z
//   [1] L_G   = log e_G
//   [2] L_uG  = log(e_uphi / e_G)
//   [3] L_pu  = log(e_phi / e_uphi)
//   [4] L_vp  = log(e_v / e_phi)
//   [5] L_Xi  = log Xi
struct ParameterLedger {
    std::array<double, 6> L{};
    double L_chat = 0; // log of the measured (or assumed) per-stage constant
    long k = 0;

    std::array<double, 4> reduced() const { return {L[0], L[2], L[3], L[4]}; }
};

ParameterLedger advance(const ParameterLedger& in);

// the 6x6 one-step matrix and its reduced 4x4 block
std::array<std::array<double, 6>, 6> transition_matrix();
std::array<std::array<double, 4>, 4> reduced_matrix();

// residual of the conserved combination
//   15 dL_G + 11 dL_uG + 5 dL_pu + dL_vp + 2 dL_Xi - 13 L_chat
double conservation_residual(const ParameterLedger& before, const ParameterLedger& after);

// exact-rational verification that [0,15,11,5,1,2] is a row null vector of T-1
bool conservation_row_exact();

struct AdmissibilityMargins {
    double m1 = 0; // 2 L_Z - L_pu
    double m2 = 0; // 2 L_Z + 2 L_uG + 2 L_pu - L_vp
    bool ok() const { return m1 >= 0 && m2 >= 0; }
};
AdmissibilityMargins check_admissible(const ParameterLedger& l);

// start on the invariant ray: reduced = L_Z * [1, 3/2, 1, 1]
ParameterLedger sector_start(double L_Z, double L_chat, double e_G0 = 1.0, double Xi0 = 1.0);

struct DecayReport {
    bool amplitude_law_ok = true; // Z^{-3/4} <= e_phi'^{1/2}/e_phi^{1/2} <= Z^{-1/4}
    bool timescale_law_ok = true; // Z <= growth of Xi e_v^{1/2} <= Z^9
    double worst_amp_lo = 1e300, worst_amp_hi = -1e300;
    double worst_ts_lo = 1e300, worst_ts_hi = -1e300;
    double max_identity_residual = 0; // exact per-step identities, see decay_laws
};
DecayReport decay_laws(ParameterLedger start, int steps);

// sup{alpha : sum_k H_alpha(k) < inf} by iterating the ledger and bisecting on
// the sign of the asymptotic per-step decrement of log H_alpha
double holder_exponent(double L_Z, double L_chat, double tol = 1e-6, int burn_in = 1000);

struct SectorSearchResult {
    double r0 = 0;    // largest radius that passed sampled verification
    double Z_bar = 0; // smallest Z found feasible at r0 = 0.45
};
SectorSearchResult sector_search(double L_chat, int samples = 2000, int iterates = 500,
                                 std::uint64_t seed = 20240901);

// sampled invariance check: random starts in the truncated sector, all
// iterates admissible and inside the sector
bool sector_invariance(double L_Z, double L_chat, double r0, int samples, int iterates,
                       std::uint64_t seed, int* failures = nullptr);

// CSV trajectory export: k, L_Z, L_G, L_uG, L_pu, L_vp, L_Xi, margin1, margin2
std::string trajectory_csv(ParameterLedger start, int steps);

} // namespace derf
