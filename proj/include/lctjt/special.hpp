#pragma once

#include "lctjt/types.hpp"

namespace lctjt {

// Faddeeva function w(z) = e^{-z^2} erfc(-jz).
cplx faddeeva(cplx z);

// Complex error function, odd by construction: erf(-z) = -erf(z).
cplx erf_complex(cplx z);

// sqrt with the principal branch made explicit at call sites. Root factors are
// never merged symbolically; sqrt(1/jb)*sqrt(b/-ja) != sqrt(1/a) in general.
cplx principal_sqrt(cplx z);

// e^{-j(pi/4)sgn(b)} / sqrt(|b|), the principal sqrt(1/(jb)) for real b != 0.
cplx sqrt_inv_jb(double b);

// Chirp kernels of the a != 0 joint transforms:
//   g1(t) = e^{j pi (a/b) t^2}
//   g2(t) = g(t) - g1(t),  g(t) = w(zeta t),  zeta = principal sqrt(-j pi a/b)
struct ChirpKernelPair {
    SampledSignal g1;
    SampledSignal g2;
    double chirp_rate;  // a/b
};

ChirpKernelPair g_kernels(const Grid& grid, double a, double b);

// Pointwise kernel evaluators for off-grid arguments (the omega/a and a*t
// substitutions of the joint transforms land between grid points).
cplx g1_at(double t, double a, double b);
cplx g_at(double t, double a, double b);   // g1 + g2, via faddeeva
cplx g2_at(double t, double a, double b);

}  // namespace lctjt
