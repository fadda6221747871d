#include "lctjt/types.hpp"

#include <cmath>

namespace lctjt {

std::vector<double> make_grid(double t0, double dt, std::size_t n) {
    if (!(dt > 0.0)) throw std::invalid_argument("make_grid: dt must be positive");
    if (n < 2) throw std::invalid_argument("make_grid: need at least 2 points");
    std::vector<double> g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = t0 + static_cast<double>(k) * dt;
    return g;
}

static void check_grid(double dt, std::size_t n) {
    if (!(dt > 0.0)) throw std::invalid_argument("signal: dt must be positive");
    if (n < 2) throw std::invalid_argument("signal: need at least 2 samples");
}

SampledSignal::SampledSignal(std::vector<cplx> samples, double t0, double dt)
    : samples_(std::move(samples)), grid_{t0, dt, samples_.size()} {
    check_grid(dt, samples_.size());
    for (const cplx& v : samples_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("signal: non-finite sample");
}

RealSignal::RealSignal(std::vector<double> samples, double t0, double dt)
    : samples_(std::move(samples)), grid_{t0, dt, samples_.size()} {
    check_grid(dt, samples_.size());
    for (double v : samples_)
        if (!std::isfinite(v)) throw std::invalid_argument("signal: non-finite sample");
}

SampledSignal RealSignal::to_complex() const {
    std::vector<cplx> s(samples_.size());
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = cplx(samples_[k], 0.0);
    return SampledSignal(std::move(s), grid_.t0, grid_.dt);
}

LctParams::LctParams(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
        throw std::invalid_argument("LctParams: non-finite entry");
    if (std::abs(a * d - b * c - 1.0) > 1e-12)
        throw std::invalid_argument("LctParams: determinant must be 1");
    if (b == 0.0 && d == 0.0) throw std::invalid_argument("LctParams: b=0 requires d != 0");
}

LctParams LctParams::compose_after(const LctParams& rhs) const {
    return LctParams(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                     c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_);
}

double max_abs_diff(const SampledSignal& x, const SampledSignal& y) {
    if (!(x.grid() == y.grid())) throw std::invalid_argument("max_abs_diff: grid mismatch");
    double worst = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) worst = std::max(worst, std::abs(x[k] - y[k]));
    return worst;
}

}  // namespace lctjt
