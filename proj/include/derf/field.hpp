#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <vector>

#include "derf/fft.hpp"
#include "derf/grid.hpp"

namespace derf {

struct Vec3 {
    double x[3] = {0, 0, 0};
    double& operator[](int i) { return x[i]; }
    double operator[](int i) const { return x[i]; }
};

inline double dot(const Vec3& a, const Vec3& b) {
    return a.x[0] * b.x[0] + a.x[1] * b.x[1] + a.x[2] * b.x[2];
}

// symmetric tensor component order: 11, 22, 33, 23, 13, 12
inline constexpr int sym_row[6] = {0, 1, 2, 1, 0, 0};
inline constexpr int sym_col[6] = {0, 1, 2, 2, 2, 1};
inline int sym_index(int i, int j) {
    if (i == j) return i;
    int s = i + j; // 23->3? 1+2=3 -> 3, 13: 0+2=2 -> 4, 12: 0+1=1 -> 5
    return s == 3 ? 3 : (s == 2 ? 4 : 5);
}

// Real scalar samples on a Grid3 with an optional cached DFT.  The cache is
// dropped on any mutable access to the samples.
class ScalarField {
  public:
    ScalarField() = default;
    explicit ScalarField(Grid3 g, double fill = 0.0)
        : g_(g), v_(g.size(), fill) {}

    Grid3 grid() const { return g_; }
    std::size_t size() const { return v_.size(); }

    const double* data() const { return v_.data(); }
    double* data() {
        spec_.reset();
        return v_.data();
    }
    double operator()(int i1, int i2, int i3) const { return v_[g_.idx(i1, i2, i3)]; }

    // cached half-spectrum (r2c layout, forward-normalized); computed on demand
    const std::vector<cplx>& spectrum() const;
    bool has_spectrum() const { return spec_ != nullptr; }
    // replace samples from a half-spectrum (also primes the cache)
    void assign_spectrum(std::vector<cplx> spec);

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(double c);
    void axpy(double a, const ScalarField& x); // this += a*x

    double max_abs() const;
    double l2() const;   // sqrt of mean of squares (continuum L2 norm on [0,1)^3)
    double mean() const;

  private:
    Grid3 g_;
    std::vector<double> v_;
    mutable std::shared_ptr<std::vector<cplx>> spec_;
};

class CScalarField {
  public:
    CScalarField() = default;
    explicit CScalarField(Grid3 g) : g_(g), v_(g.size()) {}
    Grid3 grid() const { return g_; }
    const cplx* data() const { return v_.data(); }
    cplx* data() { return v_.data(); }
    std::size_t size() const { return v_.size(); }
    double max_abs() const;

  private:
    Grid3 g_;
    std::vector<cplx> v_;
};

template <class S>
struct Vector3Of {
    std::array<S, 3> c;
    Vector3Of() = default;
    explicit Vector3Of(Grid3 g) : c{S(g), S(g), S(g)} {}
    Grid3 grid() const { return c[0].grid(); }
    S& operator[](int i) { return c[i]; }
    const S& operator[](int i) const { return c[i]; }
};

using VectorField3 = Vector3Of<ScalarField>;
using CVectorField3 = Vector3Of<CScalarField>;

// 6 independent components, symmetric by storage
struct SymTensorField3 {
    std::array<ScalarField, 6> c;
    SymTensorField3() = default;
    explicit SymTensorField3(Grid3 g)
        : c{ScalarField(g), ScalarField(g), ScalarField(g),
            ScalarField(g), ScalarField(g), ScalarField(g)} {}
    Grid3 grid() const { return c[0].grid(); }
    ScalarField& operator[](int k) { return c[k]; }
    const ScalarField& operator[](int k) const { return c[k]; }
    const ScalarField& at(int i, int j) const { return c[sym_index(i, j)]; }
};

// pointwise helpers -------------------------------------------------------

ScalarField make_field(Grid3 g, const std::function<double(double, double, double)>& f);

inline VectorField3 operator+(VectorField3 a, const VectorField3& b) {
    for (int i = 0; i < 3; ++i) a[i] += b[i];
    return a;
}
inline VectorField3 operator-(VectorField3 a, const VectorField3& b) {
    for (int i = 0; i < 3; ++i) a[i] -= b[i];
    return a;
}
inline SymTensorField3 operator+(SymTensorField3 a, const SymTensorField3& b) {
    for (int i = 0; i < 6; ++i) a[i] += b[i];
    return a;
}
inline SymTensorField3 operator-(SymTensorField3 a, const SymTensorField3& b) {
    for (int i = 0; i < 6; ++i) a[i] -= b[i];
    return a;
}

double max_abs(const VectorField3& v);
double max_abs(const SymTensorField3& t);
double l2(const VectorField3& v);

ScalarField trace(const SymTensorField3& t);

} // namespace derf
