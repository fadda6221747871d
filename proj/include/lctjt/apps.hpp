#pragma once

#include <utility>
#include <vector>

#include "lctjt/types.hpp"

namespace lctjt {

// LCT-domain cutoff line for component separation.
struct LctCutoff {
    double omega0 = 0.0;
};

// Tabulated LCT-domain filter mask; one entry per omega-grid sample.
struct FilterSpec {
    std::vector<cplx> gain;
};

// Shear factors of the TF-plane compaction search.
struct ShearParams {
    double alpha = 0.0;  // horizontal shear
    double beta = 0.0;   // vertical shear
};

struct ShearResult {
    ShearParams shear;
    LctParams m;              // vertical-shear x horizontal-shear, det 1
    SampledSignal compacted;  // the sheared analytic signal
    double bt_a;              // B_a T_a of the real signal
    double bt_b;              // 2 B_b T_b of the analytic signal
    double bt_c;              // 2 B_c T_c of the compacted signal
};

struct SsbKey {
    LctParams m;
    double fc;  // carrier, Hz, in the LCT-domain variable
};

struct TfdMatrix {
    std::vector<std::vector<double>> magnitudes;  // [frame][bin]
    std::vector<double> frame_times;
    std::vector<double> bin_freqs;
    std::size_t window_len = 0;
    std::size_t hop = 0;
};

// Splits the LCT-AS of x at omega0: (L u(w - w0), L u(w0 - w)). The two parts
// sum to la(x, m) exactly; each component is recovered as Re{ilct(part, m)}.
std::pair<SampledSignal, SampledSignal> separate(const RealSignal& x, const LctParams& m,
                                                 const LctCutoff& cut);

// Re{ ilct( H(w) * la(y, m), m ) }
RealSignal lct_filter(const RealSignal& y, const LctParams& m, const FilterSpec& h);

// Grid search: alpha minimizing the 99%-energy time extent of the sheared
// analytic signal, then beta minimizing the 99%-energy bandwidth.
ShearResult shear_reduce(const RealSignal& x, double range = 4.0, std::size_t steps = 81);

// Instantaneous-frequency samples mapped back from the LCT domain:
// nu(w) = (1/2pi) d/dw arg LXA(w), then [t; f] = [d, -b; -c, a] [w; nu].
// Samples with amplitude below 5% of peak are dropped, not returned.
std::vector<std::pair<double, double>> if_estimate(const SampledSignal& LXA, const LctParams& m);

// Keyed single sideband: s(w) = Re{ la(x, m) e^{j2pi fc w} }.
RealSignal ssb_modulate(const RealSignal& x, const SsbKey& key);

// analytic(s) e^{-j2pi fc w} -> ilct -> real part.
RealSignal ssb_demodulate(const RealSignal& s, const SsbKey& key);

// Same modulated signal built from an LCT-domain input via LHL^-1.
RealSignal ssb_modulate_from_lct(const SampledSignal& LX, const SsbKey& key);

// Magnitude STFT with a Gaussian window, for plot emission.
TfdMatrix stft_tfd(const SampledSignal& x, std::size_t window_len, std::size_t hop);

// 99%-energy extent of |x|^2 over the given grid step.
double energy_extent(const std::vector<double>& power, double step, double fraction = 0.99);

}  // namespace lctjt
