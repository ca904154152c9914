#pragma once

#include <cstdint>
#include <stdexcept>

namespace derf {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

// dimension lower bound delta_Z = 4 log 2 / (3 log Z)
double hausdorff_delta(double Z);

// Exact minimum of sum_i 2^{-k*_i} over all cylinder coverings of the
// depth-`depth` prefix tree below the prefix 00, computed by dynamic
// programming over the full (exponential) covering family.  Returned as a
// scaled integer: min_sum * 2^depth.
std::int64_t min_cover_weight_scaled(int depth);

// exhaustive enumeration of every antichain covering of the subtree up to the
// given height (feasible through height 5); returns the minimal scaled weight
std::int64_t min_cover_weight_enumerated(int height);

// companion bound: given radii r_i >= c * e_phi0^{1/2} * Z^{-3(k*_i+1)/4} on a
// covering with depths k*_i, sum_i r_i^{delta_Z} >= a0(c, e_phi0, Z)
double covering_a0(double c, double e_phi0, double Z);

// sampled check of the radii bound on random antichain coverings of depth-10
// trees; returns the worst observed ratio (sum r^delta) / a0  (should be >= 1)
double covering_bound_worst_ratio(double c, double e_phi0, double Z, int n_samples,
                                  std::uint64_t seed);

} // namespace derf
