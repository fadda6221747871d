#pragma once

#include "lctjt/types.hpp"

namespace lctjt {

enum class LctForm { FormI, FormII, FormIII, FormIV, Auto };

// Continuous-FT approximation X(f) = integral x(t) e^{-j2pi f t} dt,
// discretized as a dt-weighted FFT with phase correction for t0.
// Output grid: f_k = (k - N/2) df, df = 1/(N dt).
SampledSignal fourier(const SampledSignal& x);

// Hilbert transform via the -j sgn(f) multiplier. DC and (even N) Nyquist
// bins are zeroed: sgn(0) = 0, and the Nyquist bin has no well-defined sign.
SampledSignal hilbert(const SampledSignal& x);
RealSignal hilbert_real(const RealSignal& x);

// x_A = x + j H{x}
SampledSignal analytic(const RealSignal& x);
SampledSignal analytic(const SampledSignal& x);

// LCT with matrix m. For b != 0 the output lives on the centered grid
// omega_k = (k - N/2) * Dw, Dw = |b| / (N dt). For b = 0 the grid is the
// input grid rescaled by 1/d (exact; no interpolation needed).
SampledSignal lct(const SampledSignal& x, const LctParams& m, LctForm form = LctForm::Auto);
SampledSignal lct(const RealSignal& x, const LctParams& m, LctForm form = LctForm::Auto);

// ILCT: the LCT with M^{-1} = (d, -b, -c, a).
SampledSignal ilct(const SampledSignal& x, const LctParams& m, LctForm form = LctForm::Auto);

// max_abs_diff( conj(lct(z,m)), lct(conj(z), (a,-b,-c,d)) )
double lct_conjugate_identity_check(const SampledSignal& z, const LctParams& m);

// The omega grid the b != 0 LCT of x lands on.
Grid lct_output_grid(const Grid& in, const LctParams& m);

// Band-limited (periodic sinc) interpolation of the signal at arbitrary points.
std::vector<cplx> sinc_interp(const SampledSignal& x, const std::vector<double>& points);

// Zero-padded-spectrum oversampling by an integer factor (Nyquist bin split).
SampledSignal fft_oversample(const SampledSignal& x, std::size_t factor);

}  // namespace lctjt
