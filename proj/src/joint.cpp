#include "lctjt/joint.hpp"

#include <cmath>

#include "lctjt/special.hpp"
#include "lctjt/transforms.hpp"
#include "parallel.hpp"

namespace lctjt {

namespace {

constexpr double kPi = 3.14159265358979323846;

void need_b(const LctParams& m) {
    if (m.b() == 0.0) throw std::domain_error("joint transform needs b != 0");
}

// sgn(omega_k / b) on the centered omega grid, zero at DC and at the grid-edge
// (Nyquist image) bin, matching the discrete Hilbert multiplier convention.
double sgn_disc(std::size_t k, std::size_t n, double b) {
    if (2 * k == n) return 0.0;  // omega = 0
    if (k == 0) return 0.0;      // |omega| = (n/2) Dw, the wrapped Nyquist bin
    double s = (k > n / 2) ? 1.0 : -1.0;
    return (b > 0.0) ? s : -s;
}

SampledSignal conj_signal(const SampledSignal& x) {
    std::vector<cplx> v(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) v[k] = std::conj(x[k]);
    return SampledSignal(std::move(v), x.t0(), x.dt());
}

// Forward a=0 branches share the FT route: pref * e^{j pi (d/b) w^2} X(w/b) * mask
enum class FwdMask { Analytic, HilbertSgn, ConjAnalytic };

SampledSignal forward_a0(const RealSignal& x, const LctParams& m, FwdMask mask) {
    const std::size_t n = x.size();
    SampledSignal X = fourier(x.to_complex());
    Grid og = lct_output_grid(x.grid(), m);
    const double b = m.b(), d = m.d();
    const cplx pref = sqrt_inv_jb(b);
    std::vector<cplx> L(n);
    for (std::size_t k = 0; k < n; ++k) {
        double w = og.point(k);
        std::size_t fidx = (b > 0.0) ? k : (n - k) % n;
        double s = sgn_disc(k, n, b);
        cplx factor;
        switch (mask) {
            case FwdMask::Analytic: factor = 1.0 + s; break;           // 2u(w/b)
            case FwdMask::HilbertSgn: factor = cplx(0.0, -s); break;   // -j sgn(w/b)
            case FwdMask::ConjAnalytic: factor = 1.0 - s; break;       // 2u(-w/b)
        }
        L[k] = pref * std::polar(1.0, kPi * (d / b) * w * w) * X[fidx] * factor;
    }
    return SampledSignal(std::move(L), og.t0, og.dt);
}

// Forward a!=0 branches share the convolution route:
//   pref * sqrt(1/jb) e^{j pi (c/a) w^2} [x (*) K](w/a),  K built from g1, g
enum class FwdKernel { G, G2, G1MinusG2 };

SampledSignal forward_conv(const RealSignal& x, const LctParams& m, FwdKernel kern, cplx pref) {
    const std::size_t n = x.size();
    const double a = m.a(), b = m.b(), c = m.c();
    Grid og = lct_output_grid(x.grid(), m);
    const cplx zeta = principal_sqrt(cplx(0.0, -kPi * a / b));
    const cplx root = sqrt_inv_jb(b);
    std::vector<cplx> L(n);
    detail::parallel_for(n, [&](std::size_t k) {
        double w = og.point(k);
        double tau = w / a;
        cplx s(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            double dif = tau - (x.t0() + static_cast<double>(j) * x.dt());
            cplx kv;
            switch (kern) {
                case FwdKernel::G:
                    kv = faddeeva(zeta * dif);
                    break;
                case FwdKernel::G2:
                    kv = faddeeva(zeta * dif) - std::polar(1.0, kPi * (a / b) * dif * dif);
                    break;
                case FwdKernel::G1MinusG2:
                    kv = 2.0 * std::polar(1.0, kPi * (a / b) * dif * dif) - faddeeva(zeta * dif);
                    break;
            }
            s += x[j] * kv;
        }
        L[k] = pref * root * std::polar(1.0, kPi * (c / a) * w * w) * s * x.dt();
    });
    return SampledSignal(std::move(L), og.t0, og.dt);
}

// Inverse a!=0 branches: pref * (LX(a t) e^{-j pi a c t^2}) (*) K*,
// K* in {g1* - g2*, g2*}, output on the ILCT time grid.
enum class InvKernel { G1cMinusG2c, G2c };

SampledSignal inverse_conv(const SampledSignal& LX, const LctParams& m, InvKernel kern, cplx pref) {
    const std::size_t n = LX.size();
    const double a = m.a(), b = m.b(), c = m.c();
    Grid tg = lct_output_grid(LX.grid(), m.inverse());
    std::vector<double> at(n);
    for (std::size_t k = 0; k < n; ++k) at[k] = a * tg.point(k);
    std::vector<cplx> LXa = sinc_interp(LX, at);
    std::vector<cplx> integ(n);
    for (std::size_t k = 0; k < n; ++k) {
        double t = tg.point(k);
        integ[k] = LXa[k] * std::polar(1.0, -kPi * a * c * t * t);
    }
    const cplx zeta = principal_sqrt(cplx(0.0, -kPi * a / b));
    std::vector<cplx> out(n);
    detail::parallel_for(n, [&](std::size_t k) {
        cplx s(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            double dif = tg.point(k) - tg.point(j);
            cplx g = std::conj(faddeeva(zeta * dif));
            cplx g1c = std::polar(1.0, -kPi * (a / b) * dif * dif);
            cplx kv = (kern == InvKernel::G1cMinusG2c) ? (2.0 * g1c - g) : (g - g1c);
            s += integ[j] * kv;
        }
        out[k] = pref * s * tg.dt;
    });
    return SampledSignal(std::move(out), tg.t0, tg.dt);
}

// Inverse a=0 branches: pref * sum LX(w) mask e^{-j pi (d/b) w^2} e^{j2pi t w / b} dw
SampledSignal inverse_a0(const SampledSignal& LX, const LctParams& m, bool analytic_mask,
                         cplx pref) {
    const std::size_t n = LX.size();
    const double b = m.b(), d = m.d();
    Grid tg = lct_output_grid(LX.grid(), m.inverse());
    std::vector<cplx> q(n);
    for (std::size_t k = 0; k < n; ++k) {
        double w = LX.t0() + static_cast<double>(k) * LX.dt();
        double s = sgn_disc(k, n, b);
        double mask = analytic_mask ? (1.0 + s) : s;
        q[k] = LX[k] * mask * std::polar(1.0, -kPi * (d / b) * w * w);
    }
    std::vector<cplx> out(n);
    detail::parallel_for(n, [&](std::size_t k) {
        double t = tg.point(k);
        cplx s(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            double w = LX.t0() + static_cast<double>(j) * LX.dt();
            s += q[j] * std::polar(1.0, 2.0 * kPi * t * w / b);
        }
        out[k] = pref * s * LX.dt();
    });
    return SampledSignal(std::move(out), tg.t0, tg.dt);
}

cplx sqrt_inv_neg_jb(double b) { return std::conj(sqrt_inv_jb(b)); }

}  // namespace

std::string joint_kind_name(JointKind k) {
    switch (k) {
        case JointKind::LA: return "LA";
        case JointKind::LH: return "LH";
        case JointKind::ALinv: return "ALinv";
        case JointKind::HLinv: return "HLinv";
        case JointKind::LHLinv: return "LHLinv";
        case JointKind::LcLinv: return "LcLinv";
        case JointKind::LcA: return "LcA";
    }
    return "?";
}

SampledSignal la(const RealSignal& x, const LctParams& m) {
    need_b(m);
    if (m.a() == 0.0) return forward_a0(x, m, FwdMask::Analytic);
    return forward_conv(x, m, FwdKernel::G, cplx(1.0, 0.0));
}

SampledSignal lh(const RealSignal& x, const LctParams& m) {
    need_b(m);
    if (m.a() == 0.0) return forward_a0(x, m, FwdMask::HilbertSgn);
    return forward_conv(x, m, FwdKernel::G2, cplx(0.0, -1.0));
}

SampledSignal lca(const RealSignal& x, const LctParams& m) {
    need_b(m);
    // a=0 factor is +2u(-w/b); the printed -2u(-w/b) is inconsistent with
    // la + lca = 2 lct and with the cascade (verified numerically).
    if (m.a() == 0.0) return forward_a0(x, m, FwdMask::ConjAnalytic);
    return forward_conv(x, m, FwdKernel::G1MinusG2, cplx(1.0, 0.0));
}

SampledSignal al_inv(const SampledSignal& LX, const LctParams& m) {
    need_b(m);
    if (m.a() == 0.0) return inverse_a0(LX, m, true, sqrt_inv_neg_jb(m.b()));
    return inverse_conv(LX, m, InvKernel::G1cMinusG2c, std::abs(m.a()) * sqrt_inv_neg_jb(m.b()));
}

SampledSignal hl_inv(const SampledSignal& LX, const LctParams& m) {
    need_b(m);
    if (m.a() == 0.0) return inverse_a0(LX, m, false, cplx(0.0, -1.0) * sqrt_inv_neg_jb(m.b()));
    return inverse_conv(LX, m, InvKernel::G2c,
                        cplx(0.0, 1.0) * std::abs(m.a()) * sqrt_inv_neg_jb(m.b()));
}

SampledSignal lhl_inv(const SampledSignal& LX, const LctParams& m) {
    need_b(m);
    const std::size_t n = LX.size();
    if (m.a() == 0.0) {
        std::vector<cplx> out(n);
        for (std::size_t k = 0; k < n; ++k)
            out[k] = cplx(0.0, -sgn_disc(k, n, m.b())) * LX[k];
        return SampledSignal(std::move(out), LX.t0(), LX.dt());
    }
    const double a = m.a(), c = m.c();
    std::vector<cplx> ch(n);
    for (std::size_t k = 0; k < n; ++k) {
        double w = LX.t0() + static_cast<double>(k) * LX.dt();
        ch[k] = LX[k] * std::polar(1.0, -kPi * (c / a) * w * w);
    }
    // Discrete PV rule: bandlimited Hilbert kernel (1 - (-1)^i)/(pi i) with the
    // singular i = 0 term zeroed. The raw sampled 1/(pi(w-eta)) kernel droops
    // at Nyquist and fails against the cascade by orders of magnitude.
    const double sa = (a > 0.0) ? 1.0 : -1.0;
    std::vector<cplx> out(n);
    detail::parallel_for(n, [&](std::size_t k) {
        cplx s(0.0, 0.0);
        for (std::size_t j = (k % 2 == 0) ? 1 : 0; j < n; j += 2) {
            // only odd k-j contribute: kernel 2/(pi (k-j))
            double i = static_cast<double>(k) - static_cast<double>(j);
            s += ch[j] * (2.0 / (kPi * i));
        }
        double w = LX.t0() + static_cast<double>(k) * LX.dt();
        out[k] = sa * std::polar(1.0, kPi * (c / a) * w * w) * s;
    });
    return SampledSignal(std::move(out), LX.t0(), LX.dt());
}

SampledSignal lcl_inv(const SampledSignal& LXA, const LctParams& m) {
    need_b(m);
    const std::size_t n = LXA.size();
    const double a = m.a(), b = m.b(), d = m.d();
    if (a == 0.0) {
        std::vector<cplx> out(n);
        const double sb = (b > 0.0) ? 1.0 : -1.0;
        for (std::size_t k = 0; k < n; ++k) {
            double w = LXA.t0() + static_cast<double>(k) * LXA.dt();
            cplx rev = LXA[(n - k) % n];  // LXA(-w), edge bin wraps periodically
            out[k] = cplx(0.0, -sb) * std::polar(1.0, 2.0 * kPi * (d / b) * w * w) * std::conj(rev);
        }
        return SampledSignal(std::move(out), LXA.t0(), LXA.dt());
    }
    const double kap = (2.0 * a * d - 1.0) / (2.0 * a * b);
    const double dw = LXA.dt();
    // The e^{-j pi (w/(ab)) eta} kernel oscillates above the eta-grid Nyquist
    // rate; oversample the integrand until the quadrature resolves it.
    double need = static_cast<double>(n) * dw * dw / (2.0 * std::abs(a * b)) +
                  std::abs(kap) * static_cast<double>(n) * dw * dw + 1.0;
    std::size_t R = 2;
    while (static_cast<double>(R) < need && R < 16) R *= 2;
    SampledSignal fine = fft_oversample(LXA, R);
    const std::size_t nf = fine.size();
    std::vector<cplx> q(nf);
    for (std::size_t j = 0; j < nf; ++j) {
        double eta = fine.t0() + static_cast<double>(j) * fine.dt();
        q[j] = std::conj(fine[j]) * std::polar(1.0, kPi * kap * eta * eta);
    }
    const cplx pref = (1.0 / cplx(0.0, b)) * principal_sqrt(cplx(b, 0.0) / cplx(0.0, -2.0 * a));
    std::vector<cplx> out(n);
    detail::parallel_for(n, [&](std::size_t k) {
        double w = LXA.t0() + static_cast<double>(k) * dw;
        cplx s(0.0, 0.0);
        for (std::size_t j = 0; j < nf; ++j) {
            double eta = fine.t0() + static_cast<double>(j) * fine.dt();
            s += q[j] * std::polar(1.0, -kPi * (w / (a * b)) * eta);
        }
        out[k] = pref * std::polar(1.0, kPi * kap * w * w) * s * fine.dt();
    });
    return SampledSignal(std::move(out), LXA.t0(), dw);
}

SampledSignal cascade_la(const RealSignal& x, const LctParams& m) {
    return lct(analytic(x), m);
}

SampledSignal cascade_lh(const RealSignal& x, const LctParams& m) {
    return lct(hilbert(x.to_complex()), m);
}

SampledSignal cascade_al_inv(const SampledSignal& LX, const LctParams& m) {
    return analytic(ilct(LX, m));
}

SampledSignal cascade_hl_inv(const SampledSignal& LX, const LctParams& m) {
    return hilbert(ilct(LX, m));
}

SampledSignal cascade_lhl_inv(const SampledSignal& LX, const LctParams& m) {
    return lct(hilbert(ilct(LX, m)), m);
}

SampledSignal cascade_lcl_inv(const SampledSignal& LXA, const LctParams& m) {
    return lct(conj_signal(ilct(LXA, m)), m);
}

SampledSignal cascade_lca(const RealSignal& x, const LctParams& m) {
    return lct(conj_signal(analytic(x)), m);
}

}  // namespace lctjt
