#pragma once

#include <complex>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "derf/grid.hpp"

namespace derf {

using cplx = std::complex<double>;

// FFTW wrapper bound to one grid size.  Plans use FFTW_ESTIMATE so the chosen
// algorithm is stable across runs (bitwise reproducibility is a contract here).
// All transforms are single-threaded for the same reason.
class Transformer {
  public:
    explicit Transformer(Grid3 g);
    ~Transformer();

    Transformer(const Transformer&) = delete;
    Transformer& operator=(const Transformer&) = delete;

    Grid3 grid() const { return g_; }
    // r2c layout: fastest axis halved, (n/2+1) * n * n complex values
    std::size_t spec_size() const { return std::size_t(g_.n / 2 + 1) * g_.n * g_.n; }
    std::size_t cspec_size() const { return g_.size(); }

    // forward transforms include the 1/n^3 normalization so that a pure mode
    // e^{2*pi*i k.x} has coefficient exactly 1
    void forward(const double* phys, cplx* spec) const;
    void inverse(const cplx* spec, double* phys) const;
    void forward_c(const cplx* phys, cplx* spec) const;
    void inverse_c(const cplx* spec, cplx* phys) const;

    // shared per-grid instance
    static const Transformer& get(Grid3 g);

  private:
    Grid3 g_;
    void* plan_r2c_ = nullptr;
    void* plan_c2r_ = nullptr;
    void* plan_c2c_f_ = nullptr;
    void* plan_c2c_b_ = nullptr;
    mutable std::vector<double> rbuf_;
    mutable std::vector<cplx> cbuf_, cbuf2_;
    mutable std::mutex mtx_;
};

} // namespace derf
