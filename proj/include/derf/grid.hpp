#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace derf {

// Uniform grid on the unit torus [0,1)^3, n points per axis (power of two).
struct Grid3 {
    int n = 0;

    Grid3() = default;
    explicit Grid3(int n_per_axis) : n(n_per_axis) {
        if (n < 8 || (n & (n - 1)) != 0)
            throw std::invalid_argument("Grid3: n_per_axis must be a power of two >= 8");
    }

    std::size_t size() const { return std::size_t(n) * n * n; }
    int nyquist() const { return n / 2; }
    // 2/3-rule mask bound: modes with |k_i| <= dealias_limit survive products exactly.
    int dealias_limit() const { return n / 3; }
    double h() const { return 1.0 / n; }

    std::size_t idx(int i1, int i2, int i3) const {
        return (std::size_t(i3) * n + i2) * n + i1;
    }
    double x1(int i) const { return i * h(); }

    // signed mode number for index j along one axis
    int mode(int j) const { return j <= n / 2 ? j : j - n; }

    bool operator==(const Grid3& o) const { return n == o.n; }
};

// Uniform sample lattice in time: t_i = t0 + i*dt, i = 0..count-1.
struct TimeGrid {
    double t0 = 0.0;
    double dt = 0.0;
    int count = 0;

    double t(int i) const { return t0 + i * dt; }
    double t_end() const { return t(count - 1); }
    bool interior(int i) const { return i >= 1 && i <= count - 2; }
};

} // namespace derf
