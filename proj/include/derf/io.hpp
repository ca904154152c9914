#pragma once

#include <string>
#include <vector>

#include "derf/field.hpp"

namespace derf {

// Binary field dump, normative for cross-implementation comparison:
// little-endian header {magic "CIFLD1", n_per_axis u32, n_time u32,
// n_components u32} followed by float64 samples in (t, component, x3, x2, x1)
// order.
struct FieldDump {
    int n_per_axis = 0;
    int n_time = 0;
    int n_components = 0;
    std::vector<double> samples; // n_time * n_components * n^3

    std::size_t comp_size() const {
        return std::size_t(n_per_axis) * n_per_axis * n_per_axis;
    }
    double* component(int t, int c) {
        return samples.data() + (std::size_t(t) * n_components + c) * comp_size();
    }
    const double* component(int t, int c) const {
        return samples.data() + (std::size_t(t) * n_components + c) * comp_size();
    }
};

void write_dump(const std::string& path, const FieldDump& d);
FieldDump read_dump(const std::string& path);

ScalarField to_field(const FieldDump& d, int t, int c, Grid3 g);
void store_field(FieldDump& d, int t, int c, const ScalarField& f);

} // namespace derf
