#include "derf/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>

namespace derf {

Transformer::Transformer(Grid3 g) : g_(g) {
    const int n = g_.n;
    rbuf_.resize(g_.size());
    cbuf_.resize(g_.size());
    cbuf2_.resize(g_.size());
    // dims are (n3, n2, n1) with x1 fastest, matching Grid3::idx
    plan_r2c_ = fftw_plan_dft_r2c_3d(n, n, n, rbuf_.data(),
                                     reinterpret_cast<fftw_complex*>(cbuf_.data()),
                                     FFTW_ESTIMATE);
    plan_c2r_ = fftw_plan_dft_c2r_3d(n, n, n,
                                     reinterpret_cast<fftw_complex*>(cbuf_.data()),
                                     rbuf_.data(), FFTW_ESTIMATE);
    plan_c2c_f_ = fftw_plan_dft_3d(n, n, n,
                                   reinterpret_cast<fftw_complex*>(cbuf_.data()),
                                   reinterpret_cast<fftw_complex*>(cbuf2_.data()),
                                   FFTW_FORWARD, FFTW_ESTIMATE);
    plan_c2c_b_ = fftw_plan_dft_3d(n, n, n,
                                   reinterpret_cast<fftw_complex*>(cbuf_.data()),
                                   reinterpret_cast<fftw_complex*>(cbuf2_.data()),
                                   FFTW_BACKWARD, FFTW_ESTIMATE);
}

Transformer::~Transformer() {
    fftw_destroy_plan(static_cast<fftw_plan>(plan_r2c_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_c2r_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_c2c_f_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_c2c_b_));
}

void Transformer::forward(const double* phys, cplx* spec) const {
    std::lock_guard<std::mutex> lk(mtx_);
    std::memcpy(rbuf_.data(), phys, g_.size() * sizeof(double));
    fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_r2c_), rbuf_.data(),
                         reinterpret_cast<fftw_complex*>(cbuf_.data()));
    const double s = 1.0 / double(g_.size());
    const std::size_t m = spec_size();
    for (std::size_t i = 0; i < m; ++i) spec[i] = cbuf_[i] * s;
}

void Transformer::inverse(const cplx* spec, double* phys) const {
    std::lock_guard<std::mutex> lk(mtx_);
    std::memcpy(cbuf_.data(), spec, spec_size() * sizeof(cplx));
    fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_c2r_),
                         reinterpret_cast<fftw_complex*>(cbuf_.data()), rbuf_.data());
    std::memcpy(phys, rbuf_.data(), g_.size() * sizeof(double));
}

void Transformer::forward_c(const cplx* phys, cplx* spec) const {
    std::lock_guard<std::mutex> lk(mtx_);
    std::memcpy(cbuf_.data(), phys, g_.size() * sizeof(cplx));
    fftw_execute_dft(static_cast<fftw_plan>(plan_c2c_f_),
                     reinterpret_cast<fftw_complex*>(cbuf_.data()),
                     reinterpret_cast<fftw_complex*>(cbuf2_.data()));
    const double s = 1.0 / double(g_.size());
    for (std::size_t i = 0; i < g_.size(); ++i) spec[i] = cbuf2_[i] * s;
}

void Transformer::inverse_c(const cplx* spec, cplx* phys) const {
    std::lock_guard<std::mutex> lk(mtx_);
    std::memcpy(cbuf_.data(), spec, g_.size() * sizeof(cplx));
    fftw_execute_dft(static_cast<fftw_plan>(plan_c2c_b_),
                     reinterpret_cast<fftw_complex*>(cbuf_.data()),
                     reinterpret_cast<fftw_complex*>(cbuf2_.data()));
    std::memcpy(phys, cbuf2_.data(), g_.size() * sizeof(cplx));
}

const Transformer& Transformer::get(Grid3 g) {
    static std::mutex reg_mtx;
    static std::map<int, std::unique_ptr<Transformer>> registry;
    std::lock_guard<std::mutex> lk(reg_mtx);
    auto it = registry.find(g.n);
    if (it == registry.end())
        it = registry.emplace(g.n, std::make_unique<Transformer>(g)).first;
    return *it->second;
}

} // namespace derf
