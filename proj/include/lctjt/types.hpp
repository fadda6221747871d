#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace lctjt {

using cplx = std::complex<double>;

// Uniform grid stored as (t0, dt, n) so grid-equality checks are exact.
struct Grid {
    double t0 = 0.0;
    double dt = 1.0;
    std::size_t n = 0;

    double point(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
    bool operator==(const Grid&) const = default;
};

std::vector<double> make_grid(double t0, double dt, std::size_t n);

// Uniformly sampled complex signal. Immutable after construction; transforms
// return new signals.
class SampledSignal {
  public:
    SampledSignal(std::vector<cplx> samples, double t0, double dt);

    const std::vector<cplx>& samples() const { return samples_; }
    const cplx& operator[](std::size_t k) const { return samples_[k]; }
    std::size_t size() const { return samples_.size(); }
    double t0() const { return grid_.t0; }
    double dt() const { return grid_.dt; }
    const Grid& grid() const { return grid_; }

  private:
    std::vector<cplx> samples_;
    Grid grid_;
};

class RealSignal {
  public:
    RealSignal(std::vector<double> samples, double t0, double dt);

    const std::vector<double>& samples() const { return samples_; }
    double operator[](std::size_t k) const { return samples_[k]; }
    std::size_t size() const { return samples_.size(); }
    double t0() const { return grid_.t0; }
    double dt() const { return grid_.dt; }
    const Grid& grid() const { return grid_; }

    SampledSignal to_complex() const;

  private:
    std::vector<double> samples_;
    Grid grid_;
};

// LCT parameter matrix M = (a, b, c, d), ad - bc = 1.
class LctParams {
  public:
    LctParams(double a, double b, double c, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    LctParams inverse() const { return LctParams(d_, -b_, -c_, a_); }
    LctParams conjugate_partner() const { return LctParams(a_, -b_, -c_, d_); }

    // matrix product: this applied after rhs
    LctParams compose_after(const LctParams& rhs) const;

  private:
    double a_, b_, c_, d_;
};

double max_abs_diff(const SampledSignal& x, const SampledSignal& y);

}  // namespace lctjt
