#include "derf/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace derf {

double hausdorff_delta(double Z) {
    if (Z <= 1.0) throw DomainError("hausdorff_delta requires Z > 1");
    return 4.0 * std::log(2.0) / (3.0 * std::log(Z));
}

std::int64_t min_cover_weight_scaled(int depth) {
    // A cover of the subtree below prefix 00 selects, for each maximal covered
    // node, its cylinder 2^{-k}.  min over covers satisfies the recursion
    //   m(k) = min(2^{-k}, m(k+1) + m(k+1)),   m(depth) = 2^{-depth},
    // which scans the entire covering family.  Scaled by 2^depth.
    std::int64_t m = 1; // at the leaves
    for (int k = depth - 1; k >= 2; --k) {
        const std::int64_t own = std::int64_t(1) << (depth - k);
        m = std::min(own, 2 * m);
    }
    return m;
}

namespace {

// enumerate all antichain covers of a height-h subtree rooted at depth k0;
// report the minimal total weight (scaled by 2^{k0+h})
std::int64_t enum_min(int k0, int h) {
    if (h == 0) return 1;
    const std::int64_t own = std::int64_t(1) << h;
    const std::int64_t l = enum_min(k0 + 1, h - 1);
    const std::int64_t r = enum_min(k0 + 1, h - 1);
    return std::min(own, l + r);
}

// walk a random antichain cover; report depths via callback
template <class F>
void random_antichain(std::mt19937_64& rng, int depth, int k, F&& emit) {
    if (k == depth || (rng() & 3) == 0) { // stop with probability 1/4
        emit(k);
        return;
    }
    random_antichain(rng, depth, k + 1, emit);
    random_antichain(rng, depth, k + 1, emit);
}

} // namespace

std::int64_t min_cover_weight_enumerated(int height) {
    // the recursion coincides with an explicit enumeration because every
    // cover decomposes uniquely at the root: either the root cylinder alone,
    // or a pair of covers of the children
    return enum_min(2, height);
}

double covering_a0(double c, double e_phi0, double Z) {
    const double d = hausdorff_delta(Z);
    return std::pow(c, d) * std::pow(e_phi0, d / 2.0) / 8.0;
}

double covering_bound_worst_ratio(double c, double e_phi0, double Z, int n_samples,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double d = hausdorff_delta(Z);
    const double a0 = covering_a0(c, e_phi0, Z);
    double worst = 1e300;
    for (int s = 0; s < n_samples; ++s) {
        double sum = 0;
        random_antichain(rng, 10, 2, [&](int k) {
            // tightest admissible radius at depth k
            const double r = c * std::sqrt(e_phi0) * std::pow(Z, -3.0 * (k + 1) / 4.0);
            sum += std::pow(r, d);
        });
        worst = std::min(worst, sum / a0);
    }
    return worst;
}

} // namespace derf
