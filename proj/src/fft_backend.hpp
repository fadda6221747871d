#pragma once

#include <complex>
#include <vector>

namespace lctjt::detail {

// Unnormalized FFTs (FFTW convention): forward uses e^{-j2pi kn/N},
// inverse returns the plain conjugate-sign sum, NOT divided by N.
void fft(std::vector<std::complex<double>>& data);
void ifft_unscaled(std::vector<std::complex<double>>& data);

// Inverse FFT scaled by 1/N.
void ifft(std::vector<std::complex<double>>& data);

}  // namespace lctjt::detail
