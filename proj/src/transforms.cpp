#include "lctjt/transforms.hpp"

#include <cmath>

#include "fft_backend.hpp"
#include "lctjt/special.hpp"
#include "parallel.hpp"

namespace lctjt {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<cplx> to_vec(const RealSignal& x) {
    std::vector<cplx> v(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) v[k] = cplx(x[k], 0.0);
    return v;
}

}  // namespace

SampledSignal fourier(const SampledSignal& x) {
    const std::size_t n = x.size();
    const std::size_t h = n / 2;
    const double dt = x.dt();
    const double df = 1.0 / (static_cast<double>(n) * dt);
    std::vector<cplx> y(n);
    for (std::size_t k = 0; k < n; ++k) {
        // premodulation shifts the FFT origin to the centered bin layout
        double ph = 2.0 * kPi * static_cast<double>(h) * static_cast<double>(k) / static_cast<double>(n);
        y[k] = x[k] * std::polar(1.0, ph);
    }
    detail::fft(y);
    std::vector<cplx> X(n);
    const double f0 = -static_cast<double>(h) * df;
    for (std::size_t k = 0; k < n; ++k) {
        double f = f0 + static_cast<double>(k) * df;
        X[k] = dt * std::polar(1.0, -2.0 * kPi * f * x.t0()) * y[k];
    }
    return SampledSignal(std::move(X), f0, df);
}

SampledSignal hilbert(const SampledSignal& x) {
    const std::size_t n = x.size();
    std::vector<cplx> y(x.samples());
    detail::fft(y);
    y[0] = 0.0;  // sgn(0) = 0
    if (n % 2 == 0) y[n / 2] = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        if (n % 2 == 0 && k == n / 2) continue;
        // bins below n/2 are positive frequencies, above are negative
        double s = (k < (n + 1) / 2) ? 1.0 : -1.0;
        y[k] *= cplx(0.0, -s);
    }
    detail::ifft(y);
    return SampledSignal(std::move(y), x.t0(), x.dt());
}

RealSignal hilbert_real(const RealSignal& x) {
    SampledSignal h = hilbert(x.to_complex());
    std::vector<double> v(h.size());
    for (std::size_t k = 0; k < h.size(); ++k) v[k] = h[k].real();
    return RealSignal(std::move(v), x.t0(), x.dt());
}

SampledSignal analytic(const SampledSignal& x) {
    SampledSignal h = hilbert(x);
    std::vector<cplx> v(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) v[k] = x[k] + cplx(0.0, 1.0) * h[k];
    return SampledSignal(std::move(v), x.t0(), x.dt());
}

SampledSignal analytic(const RealSignal& x) { return analytic(x.to_complex()); }

Grid lct_output_grid(const Grid& in, const LctParams& m) {
    if (m.b() == 0.0) {
        if (m.d() <= 0.0) throw std::domain_error("lct: b=0 requires d > 0");
        return Grid{in.t0 / m.d(), in.dt / m.d(), in.n};
    }
    const double dw = std::abs(m.b()) / (static_cast<double>(in.n) * in.dt);
    return Grid{-static_cast<double>(in.n / 2) * dw, dw, in.n};
}

namespace {

SampledSignal lct_form1(const SampledSignal& x, const LctParams& m) {
    const std::size_t n = x.size();
    const double a = m.a(), b = m.b(), d = m.d();
    std::vector<cplx> xc(n);
    for (std::size_t k = 0; k < n; ++k) {
        double t = x.t0() + static_cast<double>(k) * x.dt();
        xc[k] = x[k] * std::polar(1.0, kPi * (a / b) * t * t);
    }
    SampledSignal X = fourier(SampledSignal(std::move(xc), x.t0(), x.dt()));
    Grid og = lct_output_grid(x.grid(), m);
    const cplx pref = sqrt_inv_jb(b);
    std::vector<cplx> L(n);
    for (std::size_t k = 0; k < n; ++k) {
        double w = og.point(k);
        // omega/b lands exactly on the FFT bin grid; b < 0 reverses the order
        // with the single Nyquist bin wrapping periodically
        std::size_t fidx = (b > 0.0) ? k : (n - k) % n;
        L[k] = pref * std::polar(1.0, kPi * (d / b) * w * w) * X[fidx];
    }
    return SampledSignal(std::move(L), og.t0, og.dt);
}

SampledSignal lct_form2(const SampledSignal& x, const LctParams& m) {
    const std::size_t n = x.size();
    const double a = m.a(), b = m.b(), c = m.c();
    Grid og = lct_output_grid(x.grid(), m);
    const cplx pref = sqrt_inv_jb(b);
    std::vector<cplx> L(n);
    for (std::size_t k = 0; k < n; ++k) {
        double w = og.point(k);
        double tau = w / a;
        cplx s(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            double t = x.t0() + static_cast<double>(j) * x.dt();
            s += x[j] * g1_at(tau - t, a, b);
        }
        L[k] = pref * std::polar(1.0, kPi * (c / a) * w * w) * s * x.dt();
    }
    return SampledSignal(std::move(L), og.t0, og.dt);
}

SampledSignal lct_form3(const SampledSignal& x, const LctParams& m) {
    const std::size_t n = x.size();
    const double b = m.b(), c = m.c(), d = m.d();
    if (d == 0.0) throw std::domain_error("lct: FormIII needs d != 0");
    Grid og = lct_output_grid(x.grid(), m);
    const cplx pref = sqrt_inv_jb(b);
    // integration substitution u = t/d keeps x on its own samples
    std::vector<cplx> xch(n);
    std::vector<double> u(n);
    for (std::size_t j = 0; j < n; ++j) {
        double t = x.t0() + static_cast<double>(j) * x.dt();
        u[j] = t / d;
        xch[j] = x[j] * std::polar(1.0, kPi * c * d * u[j] * u[j]);
    }
    std::vector<cplx> L(n);
    for (std::size_t k = 0; k < n; ++k) {
        double w = og.point(k);
        cplx s(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            double dif = w - u[j];
            s += xch[j] * std::polar(1.0, kPi * (d / b) * dif * dif);
        }
        L[k] = pref * s * x.dt();
    }
    return SampledSignal(std::move(L), og.t0, og.dt);
}

SampledSignal lct_form4(const SampledSignal& x, const LctParams& m) {
    const std::size_t n = x.size();
    const double a = m.a(), b = m.b(), c = m.c();
    Grid og = lct_output_grid(x.grid(), m);
    // the df-weighted sum over X(f) is periodic in omega with period |a| T;
    // zero-pad the time window until one period covers the output grid
    double wmax = std::max(std::abs(og.t0), std::abs(og.point(og.n - 1)));
    std::size_t r = 1;
    double span = static_cast<double>(n) * x.dt();
    while (std::abs(a) * static_cast<double>(r) * span < 2.0 * wmax + 2.0 * og.dt && r < 64)
        r *= 2;
    const std::size_t np = r * n;
    std::vector<cplx> padded(np, cplx(0.0, 0.0));
    const std::size_t off = (np - n) / 2;
    for (std::size_t j = 0; j < n; ++j) padded[off + j] = x[j];
    SampledSignal X = fourier(SampledSignal(
        std::move(padded), x.t0() - static_cast<double>(off) * x.dt(), x.dt()));
    // sqrt(b / (-ja)) with the principal branch, kept as its own factor
    const cplx root2 = principal_sqrt(cplx(b, 0.0) / cplx(0.0, -a));
    std::vector<cplx> Xch(np);
    std::vector<double> f(np);
    for (std::size_t j = 0; j < np; ++j) {
        f[j] = X.t0() + static_cast<double>(j) * X.dt();
        Xch[j] = X[j] * std::polar(1.0, -kPi * (b / a) * f[j] * f[j]);
    }
    std::vector<cplx> L(n);
    detail::parallel_for(n, [&](std::size_t k) {
        double w = og.point(k);
        cplx s(0.0, 0.0);
        for (std::size_t j = 0; j < np; ++j)
            s += Xch[j] * std::polar(1.0, 2.0 * kPi * (w / a) * f[j]);
        L[k] = sqrt_inv_jb(b) * root2 * std::polar(1.0, kPi * (c / a) * w * w) * s * X.dt();
    });
    return SampledSignal(std::move(L), og.t0, og.dt);
}

SampledSignal lct_b0(const SampledSignal& x, const LctParams& m) {
    if (m.d() <= 0.0) throw std::domain_error("lct: b=0 with d <= 0 unsupported (sqrt(d) complex)");
    Grid og = lct_output_grid(x.grid(), m);
    const double sd = std::sqrt(m.d());
    std::vector<cplx> L(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        double w = og.point(k);  // w = t_k / d, so x(d w) = x[k] exactly
        L[k] = sd * std::polar(1.0, kPi * m.c() * m.d() * w * w) * x[k];
    }
    return SampledSignal(std::move(L), og.t0, og.dt);
}

}  // namespace

SampledSignal lct(const SampledSignal& x, const LctParams& m, LctForm form) {
    if (form == LctForm::Auto) form = (m.b() != 0.0) ? LctForm::FormI : LctForm::Auto;
    if (m.b() == 0.0) {
        if (form != LctForm::Auto)
            throw std::domain_error("lct: Forms I-IV all need b != 0");
        return lct_b0(x, m);
    }
    switch (form) {
        case LctForm::FormI:
            return lct_form1(x, m);
        case LctForm::FormII:
            if (m.a() == 0.0) throw std::domain_error("lct: FormII needs a != 0");
            return lct_form2(x, m);
        case LctForm::FormIII:
            return lct_form3(x, m);
        case LctForm::FormIV:
            if (m.a() == 0.0) throw std::domain_error("lct: FormIV needs a != 0");
            return lct_form4(x, m);
        default:
            throw std::invalid_argument("lct: unknown form");
    }
}

SampledSignal lct(const RealSignal& x, const LctParams& m, LctForm form) {
    return lct(x.to_complex(), m, form);
}

SampledSignal ilct(const SampledSignal& x, const LctParams& m, LctForm form) {
    return lct(x, m.inverse(), form);
}

double lct_conjugate_identity_check(const SampledSignal& z, const LctParams& m) {
    if (m.b() == 0.0) throw std::domain_error("conjugation check needs b != 0");
    SampledSignal lhs = lct(z, m);
    std::vector<cplx> lv(lhs.size());
    for (std::size_t k = 0; k < lhs.size(); ++k) lv[k] = std::conj(lhs[k]);
    std::vector<cplx> zc(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) zc[k] = std::conj(z[k]);
    SampledSignal rhs = lct(SampledSignal(std::move(zc), z.t0(), z.dt()), m.conjugate_partner());
    return max_abs_diff(SampledSignal(std::move(lv), lhs.t0(), lhs.dt()), rhs);
}

std::vector<cplx> sinc_interp(const SampledSignal& x, const std::vector<double>& points) {
    const std::size_t n = x.size();
    std::vector<cplx> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        double idx = (points[i] - x.t0()) / x.dt();
        double nearest = std::round(idx);
        if (std::abs(idx - nearest) < 1e-12 && nearest >= 0 && nearest < static_cast<double>(n)) {
            out[i] = x[static_cast<std::size_t>(nearest)];
            continue;
        }
        // sin(pi(idx - m)) = sin(pi idx) (-1)^m collapses the sinc row to one sine
        double sp = std::sin(kPi * idx) / kPi;
        cplx s(0.0, 0.0);
        double sign = 1.0;
        for (std::size_t mi = 0; mi < n; ++mi) {
            s += sign * x[mi] / (idx - static_cast<double>(mi));
            sign = -sign;
        }
        out[i] = sp * s;
    }
    return out;
}

SampledSignal fft_oversample(const SampledSignal& x, std::size_t factor) {
    if (factor < 1) throw std::invalid_argument("fft_oversample: factor must be >= 1");
    const std::size_t n = x.size();
    if (factor == 1) return x;
    std::vector<cplx> S(x.samples());
    detail::fft(S);
    std::vector<cplx> S2(n * factor, cplx(0.0, 0.0));
    const std::size_t h = n / 2;
    const std::size_t nf = n * factor;
    for (std::size_t k = 0; k < h; ++k) S2[k] = S[k];
    for (std::size_t k = (n + 1) / 2 + (n % 2 == 0 ? 1 : 0); k < n; ++k) S2[nf - n + k] = S[k];
    if (n % 2 == 0) {
        // split the Nyquist bin symmetrically
        S2[h] = 0.5 * S[h];
        S2[nf - h] = 0.5 * S[h];
    }
    detail::ifft(S2);
    std::vector<cplx> out(n * factor);
    const double scale = static_cast<double>(factor);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = S2[k] * scale;
    return SampledSignal(std::move(out), x.t0(), x.dt() / scale);
}

}  // namespace lctjt
