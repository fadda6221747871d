#include "lctjt/special.hpp"

#include <array>
#include <cmath>

namespace lctjt {

namespace {

constexpr double kPi = 3.14159265358979323846;

// --- Faddeeva function ---------------------------------------------------
//
// Three regions, all validated against independent quadrature:
//  |z| <= 2           : Maclaurin series  w(z) = sum (jz)^n / Gamma(n/2+1)
//  Im z in [0, 3)     : pole-corrected trapezoid/midpoint rule
//                       w(z) = (jh/pi) sum e^{-t_n^2}/(z - t_n)  +  correction,
//                       correction 2 e^{-z^2}/(1 +- e^{-2 pi j z / h});
//                       the node family (integer vs half-integer multiples of
//                       h) is picked so Re z stays away from the correction
//                       term's poles.
//  Im z >= 3          : plain midpoint sum, correction negligible
//  Im z < 0           : reflection w(z) = 2 e^{-z^2} - w(-z)

constexpr double kH = 0.45;
constexpr int kNodeMax = 27;  // nodes cover |t| <= 12.15

struct NodeTable {
    std::array<double, 2 * kNodeMax> t_mid;      // (n + 1/2) h
    std::array<double, 2 * kNodeMax> e_mid;      // e^{-t^2}
    std::array<double, 2 * kNodeMax + 1> t_trap; // n h
    std::array<double, 2 * kNodeMax + 1> e_trap;
    NodeTable() {
        for (int i = 0; i < 2 * kNodeMax; ++i) {
            double t = (i - kNodeMax + 0.5) * kH;
            t_mid[i] = t;
            e_mid[i] = std::exp(-t * t);
        }
        for (int i = 0; i <= 2 * kNodeMax; ++i) {
            double t = (i - kNodeMax) * kH;
            t_trap[i] = t;
            e_trap[i] = std::exp(-t * t);
        }
    }
};
const NodeTable kNodes;

// 1/Gamma(n/2 + 1) for the series region
struct GammaTable {
    std::array<double, 104> inv;
    GammaTable() {
        for (int n = 0; n < 104; ++n) inv[n] = 1.0 / std::tgamma(0.5 * n + 1.0);
    }
};
const GammaTable kGamma;

cplx faddeeva_series(cplx z) {
    cplx iz(-z.imag(), z.real());
    cplx term(1.0, 0.0);
    cplx s(0.0, 0.0);
    for (int n = 0; n < 104; ++n) {
        s += term * kGamma.inv[n];
        term *= iz;
        if (std::abs(term) < 1e-20 && n > 8) break;
    }
    return s;
}

cplx faddeeva_upper(cplx z) {
    double x = z.real(), y = z.imag();
    if (y >= 3.0) {
        cplx s(0.0, 0.0);
        for (int i = 0; i < 2 * kNodeMax; ++i) s += kNodes.e_mid[i] / (z - kNodes.t_mid[i]);
        return cplx(0.0, kH / kPi) * s;
    }
    // distance of x/h from the two singular sets of the correction term
    double fr = x / kH - std::floor(x / kH);
    double d_int = std::min(fr, 1.0 - fr);
    double d_half = std::abs(fr - 0.5);
    bool use_mid = d_half > d_int;  // midpoint correction has poles at half-integers
    cplx s(0.0, 0.0);
    if (use_mid) {
        for (int i = 0; i < 2 * kNodeMax; ++i) s += kNodes.e_mid[i] / (z - kNodes.t_mid[i]);
    } else {
        for (int i = 0; i <= 2 * kNodeMax; ++i) s += kNodes.e_trap[i] / (z - kNodes.t_trap[i]);
    }
    s *= cplx(0.0, kH / kPi);
    cplx e = std::exp(cplx(0.0, -2.0 * kPi / kH) * z);
    if (use_mid)
        s += 2.0 * std::exp(-z * z) / (1.0 + e);
    else
        s += 2.0 * std::exp(-z * z) / (1.0 - e);
    return s;
}

}  // namespace

cplx faddeeva(cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("faddeeva: non-finite argument");
    if (z.imag() < 0.0) return 2.0 * std::exp(-z * z) - faddeeva(-z);
    if (std::norm(z) <= 4.0) return faddeeva_series(z);
    return faddeeva_upper(z);
}

cplx erf_complex(cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("erf_complex: non-finite argument");
    // odd by construction: evaluate in the right half-plane
    if (z.real() < 0.0 || (z.real() == 0.0 && z.imag() < 0.0)) return -erf_complex(-z);
    double x = z.real(), y = z.imag();
    if (y == 0.0) return cplx(std::erf(x), 0.0);
    if (y * y - x * x > 700.0)
        throw std::range_error("erf_complex: e^{-z^2} overflows for this argument");
    if (std::norm(z) <= 0.25) {
        // Maclaurin series, avoids the 1 - (small) cancellation near 0
        cplx z2 = z * z;
        cplx term = z;
        cplx s(0.0, 0.0);
        double fact = 1.0;
        for (int n = 0; n < 30; ++n) {
            s += term / (fact * (2.0 * n + 1.0));
            term *= -z2;
            fact *= (n + 1.0);
        }
        return s * (2.0 / std::sqrt(kPi));
    }
    // erf(z) = 1 - e^{-z^2} w(jz); Im(jz) = Re z >= 0 keeps w in its good region
    return 1.0 - std::exp(-z * z) * faddeeva(cplx(-y, x));
}

cplx principal_sqrt(cplx z) { return std::sqrt(z); }

cplx sqrt_inv_jb(double b) {
    if (b == 0.0) throw std::invalid_argument("sqrt_inv_jb: b must be nonzero");
    double s = (b > 0.0) ? 1.0 : -1.0;
    return std::polar(1.0 / std::sqrt(std::abs(b)), -kPi / 4.0 * s);
}

static cplx zeta_of(double a, double b) {
    if (a == 0.0 || b == 0.0) throw std::invalid_argument("g kernels need a != 0 and b != 0");
    return principal_sqrt(cplx(0.0, -kPi * a / b));
}

cplx g1_at(double t, double a, double b) {
    if (a == 0.0 || b == 0.0) throw std::invalid_argument("g kernels need a != 0 and b != 0");
    return std::polar(1.0, kPi * (a / b) * t * t);
}

cplx g_at(double t, double a, double b) { return faddeeva(zeta_of(a, b) * t); }

cplx g2_at(double t, double a, double b) { return g_at(t, a, b) - g1_at(t, a, b); }

ChirpKernelPair g_kernels(const Grid& grid, double a, double b) {
    cplx zeta = zeta_of(a, b);
    std::vector<cplx> v1(grid.n), v2(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k) {
        double t = grid.point(k);
        cplx c1 = std::polar(1.0, kPi * (a / b) * t * t);
        v1[k] = c1;
        v2[k] = faddeeva(zeta * t) - c1;
    }
    return ChirpKernelPair{SampledSignal(std::move(v1), grid.t0, grid.dt),
                           SampledSignal(std::move(v2), grid.t0, grid.dt), a / b};
}

}  // namespace lctjt
