#include "lctjt/apps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "fft_backend.hpp"
#include "lctjt/joint.hpp"
#include "lctjt/transforms.hpp"

namespace lctjt {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> power_of(const std::vector<cplx>& v) {
    std::vector<double> p(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) p[k] = std::norm(v[k]);
    return p;
}

// zero-pad x into the middle of a 4x buffer so chirp group delays cannot wrap
std::vector<cplx> pad4(const SampledSignal& x) {
    std::vector<cplx> v(4 * x.size(), cplx(0.0, 0.0));
    std::size_t off = 3 * x.size() / 2;
    for (std::size_t k = 0; k < x.size(); ++k) v[off + k] = x[k];
    return v;
}

// multiply the spectrum by e^{-j pi alpha f^2} (horizontal TF shear by alpha)
std::vector<cplx> freq_chirp(std::vector<cplx> v, double alpha, double dt) {
    const std::size_t n = v.size();
    detail::fft(v);
    for (std::size_t k = 0; k < n; ++k) {
        double f = static_cast<double>(k) / (static_cast<double>(n) * dt);
        if (k > n / 2) f -= 1.0 / dt;
        v[k] *= std::polar(1.0, -kPi * alpha * f * f);
    }
    detail::ifft(v);
    return v;
}

std::vector<double> spectrum_power(std::vector<cplx> v) {
    detail::fft(v);
    return power_of(v);
}

}  // namespace

double energy_extent(const std::vector<double>& power, double step, double fraction) {
    double total = 0.0;
    for (double p : power) total += p;
    if (total <= 0.0) throw std::domain_error("energy_extent: zero-energy input");
    const double tail = 0.5 * (1.0 - fraction) * total;
    std::size_t lo = 0, hi = power.size() - 1;
    double acc = 0.0;
    while (lo < hi && acc + power[lo] <= tail) acc += power[lo++];
    acc = 0.0;
    while (hi > lo && acc + power[hi] <= tail) acc += power[hi--];
    return static_cast<double>(hi - lo + 1) * step;
}

std::pair<SampledSignal, SampledSignal> separate(const RealSignal& x, const LctParams& m,
                                                 const LctCutoff& cut) {
    SampledSignal L = la(x, m);
    std::vector<cplx> hiv(L.size()), lov(L.size());
    for (std::size_t k = 0; k < L.size(); ++k) {
        double w = L.t0() + static_cast<double>(k) * L.dt();
        if (w >= cut.omega0) {
            hiv[k] = L[k];
            lov[k] = 0.0;
        } else {
            hiv[k] = 0.0;
            lov[k] = L[k];
        }
    }
    return {SampledSignal(std::move(hiv), L.t0(), L.dt()),
            SampledSignal(std::move(lov), L.t0(), L.dt())};
}

RealSignal lct_filter(const RealSignal& y, const LctParams& m, const FilterSpec& h) {
    SampledSignal L = la(y, m);
    if (h.gain.size() != L.size()) throw std::invalid_argument("lct_filter: mask grid mismatch");
    std::vector<cplx> v(L.size());
    for (std::size_t k = 0; k < L.size(); ++k) v[k] = h.gain[k] * L[k];
    SampledSignal rec = ilct(SampledSignal(std::move(v), L.t0(), L.dt()), m);
    std::vector<double> out(rec.size());
    for (std::size_t k = 0; k < rec.size(); ++k) out[k] = rec[k].real();
    return RealSignal(std::move(out), rec.t0(), rec.dt());
}

ShearResult shear_reduce(const RealSignal& x, double range, std::size_t steps) {
    if (steps < 3) throw std::invalid_argument("shear_reduce: need at least 3 search steps");
    SampledSignal xa = analytic(x);
    const double dt = x.dt();
    std::vector<cplx> padded = pad4(xa);
    const std::size_t np = padded.size();
    const double df = 1.0 / (static_cast<double>(np) * dt);

    auto duration_at = [&](double alpha) {
        return energy_extent(power_of(freq_chirp(padded, alpha, dt)), dt);
    };
    auto search = [&](double center, double half, std::size_t n,
                      const std::function<double(double)>& cost) {
        double best_v = std::numeric_limits<double>::infinity();
        double best_p = center;
        for (std::size_t i = 0; i < n; ++i) {
            double p = center - half + 2.0 * half * static_cast<double>(i) / static_cast<double>(n - 1);
            double v = cost(p);
            if (v < best_v) {
                best_v = v;
                best_p = p;
            }
        }
        return best_p;
    };

    double alpha = search(0.0, range, steps, duration_at);
    alpha = search(alpha, range / static_cast<double>(steps - 1), 21, duration_at);

    std::vector<cplx> sheared = freq_chirp(padded, alpha, dt);
    auto bandwidth_at = [&](double beta) {
        std::vector<cplx> z(sheared);
        std::size_t off = 3 * xa.size() / 2;
        for (std::size_t k = 0; k < np; ++k) {
            double t = xa.t0() + (static_cast<double>(k) - static_cast<double>(off)) * dt;
            z[k] *= std::polar(1.0, kPi * beta * t * t);
        }
        return energy_extent(spectrum_power(std::move(z)), df);
    };
    double beta = search(0.0, range, steps, bandwidth_at);
    beta = search(beta, range / static_cast<double>(steps - 1), 21, bandwidth_at);

    std::vector<cplx> compacted(sheared);
    {
        std::size_t off = 3 * xa.size() / 2;
        for (std::size_t k = 0; k < np; ++k) {
            double t = xa.t0() + (static_cast<double>(k) - static_cast<double>(off)) * dt;
            compacted[k] *= std::polar(1.0, kPi * beta * t * t);
        }
    }

    auto bt_of = [&](const std::vector<cplx>& sig) {
        double T = energy_extent(power_of(sig), dt);
        double B = energy_extent(spectrum_power(sig), df);
        return T * B;
    };
    std::vector<cplx> xr(np, cplx(0.0, 0.0));
    {
        std::size_t off = 3 * x.size() / 2;
        for (std::size_t k = 0; k < x.size(); ++k) xr[off + k] = cplx(x[k], 0.0);
    }
    ShearResult res{
        ShearParams{alpha, beta},
        LctParams(1.0, alpha, beta, 1.0 + alpha * beta),
        SampledSignal(compacted, xa.t0() - static_cast<double>(3 * xa.size() / 2) * dt, dt),
        bt_of(xr),
        2.0 * bt_of(padded),
        2.0 * bt_of(compacted),
    };
    return res;
}

std::vector<std::pair<double, double>> if_estimate(const SampledSignal& LXA, const LctParams& m) {
    if (m.b() == 0.0) throw std::domain_error("if_estimate: b != 0 required");
    const std::size_t n = LXA.size();
    double peak = 0.0;
    for (std::size_t k = 0; k < n; ++k) peak = std::max(peak, std::abs(LXA[k]));
    const double gate = 0.05 * peak;
    // unwrapped phase
    std::vector<double> phase(n);
    double prev = std::arg(LXA[0]);
    double offset = 0.0;
    phase[0] = prev;
    for (std::size_t k = 1; k < n; ++k) {
        double p = std::arg(LXA[k]);
        double d = p - prev;
        if (d > kPi) offset -= 2.0 * kPi;
        if (d < -kPi) offset += 2.0 * kPi;
        phase[k] = p + offset;
        prev = p;
    }
    std::vector<std::pair<double, double>> pts;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (std::abs(LXA[k]) < gate || std::abs(LXA[k - 1]) < gate || std::abs(LXA[k + 1]) < gate)
            continue;
        double w = LXA.t0() + static_cast<double>(k) * LXA.dt();
        double nu = (phase[k + 1] - phase[k - 1]) / (2.0 * LXA.dt()) / (2.0 * kPi);
        double t = m.d() * w - m.b() * nu;
        double f = -m.c() * w + m.a() * nu;
        pts.emplace_back(t, f);
    }
    return pts;
}

RealSignal ssb_modulate(const RealSignal& x, const SsbKey& key) {
    if (!(key.fc > 0.0)) throw std::domain_error("ssb: carrier must be positive");
    SampledSignal L = la(x, key.m);
    if (key.fc >= 1.0 / (2.0 * L.dt()))
        throw std::domain_error("ssb: carrier at or above the LCT-grid Nyquist rate");
    std::vector<double> s(L.size());
    for (std::size_t k = 0; k < L.size(); ++k) {
        double w = L.t0() + static_cast<double>(k) * L.dt();
        s[k] = (L[k] * std::polar(1.0, 2.0 * kPi * key.fc * w)).real();
    }
    return RealSignal(std::move(s), L.t0(), L.dt());
}

RealSignal ssb_demodulate(const RealSignal& s, const SsbKey& key) {
    if (!(key.fc > 0.0)) throw std::domain_error("ssb: carrier must be positive");
    if (key.fc >= 1.0 / (2.0 * s.dt()))
        throw std::domain_error("ssb: carrier at or above the grid Nyquist rate");
    SampledSignal sa = analytic(s);
    std::vector<cplx> base(sa.size());
    for (std::size_t k = 0; k < sa.size(); ++k) {
        double w = sa.t0() + static_cast<double>(k) * sa.dt();
        base[k] = sa[k] * std::polar(1.0, -2.0 * kPi * key.fc * w);
    }
    SampledSignal rec = ilct(SampledSignal(std::move(base), sa.t0(), sa.dt()), key.m);
    std::vector<double> out(rec.size());
    for (std::size_t k = 0; k < rec.size(); ++k) out[k] = rec[k].real();
    return RealSignal(std::move(out), rec.t0(), rec.dt());
}

RealSignal ssb_modulate_from_lct(const SampledSignal& LX, const SsbKey& key) {
    if (!(key.fc > 0.0)) throw std::domain_error("ssb: carrier must be positive");
    if (key.fc >= 1.0 / (2.0 * LX.dt()))
        throw std::domain_error("ssb: carrier at or above the LCT-grid Nyquist rate");
    SampledSignal H = lhl_inv(LX, key.m);
    std::vector<double> s(LX.size());
    for (std::size_t k = 0; k < LX.size(); ++k) {
        double w = LX.t0() + static_cast<double>(k) * LX.dt();
        cplx one_sided = LX[k] + cplx(0.0, 1.0) * H[k];
        s[k] = (one_sided * std::polar(1.0, 2.0 * kPi * key.fc * w)).real();
    }
    return RealSignal(std::move(s), LX.t0(), LX.dt());
}

TfdMatrix stft_tfd(const SampledSignal& x, std::size_t window_len, std::size_t hop) {
    const std::size_t n = x.size();
    if (window_len < 4 || window_len > n || hop < 1)
        throw std::invalid_argument("stft_tfd: degenerate window/hop");
    std::vector<double> win(window_len);
    const double mid = 0.5 * static_cast<double>(window_len - 1);
    const double sigma = static_cast<double>(window_len) / 6.0;
    for (std::size_t i = 0; i < window_len; ++i) {
        double u = (static_cast<double>(i) - mid) / sigma;
        win[i] = std::exp(-0.5 * u * u);
    }
    TfdMatrix tfd;
    tfd.window_len = window_len;
    tfd.hop = hop;
    const std::size_t h = window_len / 2;
    for (std::size_t k = 0; k < window_len; ++k)
        tfd.bin_freqs.push_back((static_cast<double>(k) - static_cast<double>(h)) /
                                (static_cast<double>(window_len) * x.dt()));
    for (std::size_t start = 0; start + window_len <= n; start += hop) {
        std::vector<cplx> seg(window_len);
        for (std::size_t i = 0; i < window_len; ++i) seg[i] = x[start + i] * win[i];
        detail::fft(seg);
        std::vector<double> row(window_len);
        for (std::size_t k = 0; k < window_len; ++k)
            row[k] = std::abs(seg[(k + h) % window_len]);  // fftshift to centered bins
        tfd.magnitudes.push_back(std::move(row));
        tfd.frame_times.push_back(x.t0() + (static_cast<double>(start) + mid) * x.dt());
    }
    if (tfd.magnitudes.empty()) throw std::invalid_argument("stft_tfd: window longer than signal");
    return tfd;
}

}  // namespace lctjt
