#include "derf/field.hpp"

#include <algorithm>
#include <cassert>

namespace derf {

const std::vector<cplx>& ScalarField::spectrum() const {
    if (!spec_) {
        const auto& tr = Transformer::get(g_);
        auto s = std::make_shared<std::vector<cplx>>(tr.spec_size());
        tr.forward(v_.data(), s->data());
        spec_ = std::move(s);
    }
    return *spec_;
}

void ScalarField::assign_spectrum(std::vector<cplx> spec) {
    const auto& tr = Transformer::get(g_);
    assert(spec.size() == tr.spec_size());
    auto s = std::make_shared<std::vector<cplx>>(std::move(spec));
    tr.inverse(s->data(), v_.data());
    spec_ = std::move(s);
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    assert(o.size() == size());
    double* a = data();
    const double* b = o.v_.data();
    for (std::size_t i = 0; i < v_.size(); ++i) a[i] += b[i];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    assert(o.size() == size());
    double* a = data();
    const double* b = o.v_.data();
    for (std::size_t i = 0; i < v_.size(); ++i) a[i] -= b[i];
    return *this;
}

ScalarField& ScalarField::operator*=(double cst) {
    double* a = data();
    for (std::size_t i = 0; i < v_.size(); ++i) a[i] *= cst;
    return *this;
}

void ScalarField::axpy(double a, const ScalarField& x) {
    assert(x.size() == size());
    double* d = data();
    const double* s = x.v_.data();
    for (std::size_t i = 0; i < v_.size(); ++i) d[i] += a * s[i];
}

double ScalarField::max_abs() const {
    double m = 0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
}

double ScalarField::l2() const {
    double s = 0;
    for (double x : v_) s += x * x;
    return std::sqrt(s / double(v_.size()));
}

double ScalarField::mean() const {
    double s = 0;
    for (double x : v_) s += x;
    return s / double(v_.size());
}

double CScalarField::max_abs() const {
    double m = 0;
    for (const cplx& x : v_) m = std::max(m, std::abs(x));
    return m;
}

ScalarField make_field(Grid3 g, const std::function<double(double, double, double)>& f) {
    ScalarField out(g);
    double* d = out.data();
    const double h = g.h();
    for (int i3 = 0; i3 < g.n; ++i3)
        for (int i2 = 0; i2 < g.n; ++i2)
            for (int i1 = 0; i1 < g.n; ++i1)
                d[g.idx(i1, i2, i3)] = f(i1 * h, i2 * h, i3 * h);
    return out;
}

double max_abs(const VectorField3& v) {
    return std::max({v[0].max_abs(), v[1].max_abs(), v[2].max_abs()});
}

double max_abs(const SymTensorField3& t) {
    double m = 0;
    for (int k = 0; k < 6; ++k) m = std::max(m, t[k].max_abs());
    return m;
}

double l2(const VectorField3& v) {
    double s = 0;
    for (int i = 0; i < 3; ++i) {
        double li = v[i].l2();
        s += li * li;
    }
    return std::sqrt(s);
}

ScalarField trace(const SymTensorField3& t) {
    ScalarField out = t[0];
    out += t[1];
    out += t[2];
    return out;
}

} // namespace derf
