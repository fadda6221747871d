#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lctjt/apps.hpp"
#include "lctjt/joint.hpp"
#include "lctjt/transforms.hpp"
#include "lctjt/verify.hpp"

using namespace lctjt;
namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_l2(const RealSignal& got, const std::vector<double>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < got.size(); ++k) {
        num += (got[k] - want[k]) * (got[k] - want[k]);
        den += want[k] * want[k];
    }
    return std::sqrt(num / den);
}

// two linear chirps with distinct rates; the LCT matched to the first rate
// compacts it near omega = a t while the second stays spread out
RealSignal two_chirps(const Grid& g, double r1, double r2, double f1, double f2) {
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        double t = g.point(k);
        double env = std::exp(-0.09 * t * t);
        v[k] = env * (std::cos(2.0 * kPi * (f1 * t + 0.5 * r1 * t * t)) +
                      std::cos(2.0 * kPi * (f2 * t + 0.5 * r2 * t * t)));
    }
    return RealSignal(std::move(v), g.t0, g.dt);
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    auto ranks = [](const std::vector<double>& v) {
        std::vector<std::size_t> idx(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
        std::vector<double> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[idx[i]] = static_cast<double>(i);
        return r;
    };
    std::vector<double> ra = ranks(a), rb = ranks(b);
    double n = static_cast<double>(a.size());
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (ra[i] - rb[i]) * (ra[i] - rb[i]);
    return 1.0 - 6.0 * s / (n * (n * n - 1.0));
}

}  // namespace

TEST_CASE("separation parts add back to the full LCT-domain signal") {
    Grid g = default_grid();
    RealSignal x = test_signal_two_gauss(g);
    LctParams m = builtin_matrix_aneq0();
    auto [hi, lo] = separate(x, m, LctCutoff{0.7});
    SampledSignal full = la(x, m);
    double worst = 0.0;
    for (std::size_t k = 0; k < g.n; ++k)
        worst = std::max(worst, std::abs(hi[k] + lo[k] - full[k]));
    CHECK(worst < 1e-12);
    // parts occupy disjoint halves of the omega grid
    for (std::size_t k = 0; k < g.n; ++k) {
        double w = hi.t0() + static_cast<double>(k) * hi.dt();
        if (w >= 0.7) CHECK(std::abs(lo[k]) == 0.0);
        else CHECK(std::abs(hi[k]) == 0.0);
    }
}

TEST_CASE("separation recovers two chirp components") {
    // two equal-rate chirps at different center frequencies; their in-band
    // instantaneous frequencies stay positive so the analytic step is clean
    Grid g = default_grid(2048);
    double r = 0.3;
    RealSignal mix = two_chirps(g, r, r, 3.0, 6.0);
    std::vector<double> c1(g.n), c2(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        double t = g.point(k);
        double env = std::exp(-0.09 * t * t);
        c1[k] = env * std::cos(2.0 * kPi * (3.0 * t + 0.5 * r * t * t));
        c2[k] = env * std::cos(2.0 * kPi * (6.0 * t + 0.5 * r * t * t));
    }
    // rotation with cot(theta) = -r compacts each chirp to a narrow pulse at
    // omega = f_center sin(theta); cut midway between the two pulses
    double th = std::atan2(1.0, -r);
    LctParams m(std::cos(th), std::sin(th), -std::sin(th), std::cos(th));
    double cut = 4.5 * std::sin(th);
    auto [hi, lo] = separate(mix, m, LctCutoff{cut});
    SampledSignal lo_t = ilct(lo, m), hi_t = ilct(hi, m);
    std::vector<double> lo_re(g.n), hi_re(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        lo_re[k] = lo_t[k].real();
        hi_re[k] = hi_t[k].real();
    }
    RealSignal rlo(std::move(lo_re), g.t0, g.dt), rhi(std::move(hi_re), g.t0, g.dt);
    // one part is the matched chirp, the other the remaining one
    double e1 = std::min(rel_l2(rlo, c1), rel_l2(rhi, c1));
    double e2 = std::min(rel_l2(rlo, c2), rel_l2(rhi, c2));
    CHECK(e1 < 1e-3);
    CHECK(e2 < 1e-3);
}

TEST_CASE("all-pass and all-stop filters") {
    Grid g = default_grid();
    RealSignal x = test_signal_two_gauss(g);
    LctParams m = builtin_matrix_aneq0();
    FilterSpec pass{std::vector<cplx>(g.n, cplx(1.0, 0.0))};
    FilterSpec stop{std::vector<cplx>(g.n, cplx(0.0, 0.0))};
    RealSignal yp = lct_filter(x, m, pass);
    RealSignal ys = lct_filter(x, m, stop);
    double wp = 0.0, ws = 0.0;
    for (std::size_t k = 0; k < g.n; ++k) {
        wp = std::max(wp, std::abs(yp[k] - x[k]));
        ws = std::max(ws, std::abs(ys[k]));
    }
    CHECK(wp < 1e-5);
    CHECK(ws < 1e-14);
}

TEST_CASE("masking a matched chirp interferer gains at least 20 dB") {
    Grid g = default_grid(2048);
    RealSignal clean = test_signal_two_gauss(g);
    LctParams m = builtin_matrix_aneq0();
    // interference chirp whose rate -a/b matches the LCT chirp kernel, so it
    // concentrates in the LCT domain and a narrow mask removes it
    std::vector<double> noisy(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        double t = g.point(k);
        noisy[k] = clean[k] + 0.8 * std::cos(-kPi * (m.a() / m.b()) * t * t + 2.0 * kPi * 7.0 * t);
    }
    RealSignal y(std::move(noisy), g.t0, g.dt);
    // build the mask from where the clean signal's LCT-AS has energy
    SampledSignal LC = la(clean, m);
    double peak = 0.0;
    for (std::size_t k = 0; k < g.n; ++k) peak = std::max(peak, std::abs(LC[k]));
    FilterSpec h{std::vector<cplx>(g.n)};
    for (std::size_t k = 0; k < g.n; ++k)
        h.gain[k] = (std::abs(LC[k]) > 1e-4 * peak) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    RealSignal rec = lct_filter(y, m, h);
    double err_before = 0.0, err_after = 0.0, sig = 0.0;
    for (std::size_t k = 0; k < g.n; ++k) {
        err_before += (y[k] - clean[k]) * (y[k] - clean[k]);
        err_after += (rec[k] - clean[k]) * (rec[k] - clean[k]);
        sig += clean[k] * clean[k];
    }
    double gain_db = 10.0 * std::log10(err_before / err_after);
    CHECK(gain_db > 20.0);
    CHECK(10.0 * std::log10(sig / err_after) > 10.0);  // result is usable, not just better
}

TEST_CASE("shear search compacts a linear chirp") {
    // instantaneous frequency 3 + 0.3 t stays positive across the window, so
    // the analytic step does not clip the chirp
    Grid g = default_grid(1024);
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        double t = g.point(k);
        v[k] = std::exp(-0.08 * t * t) * std::cos(2.0 * kPi * (3.0 * t + 0.15 * t * t));
    }
    ShearResult r = shear_reduce(RealSignal(std::move(v), g.t0, g.dt));
    CHECK(r.bt_c < 0.5 * r.bt_b);          // big win on a chirp
    CHECK(r.bt_c <= r.bt_b + 1e-9);        // never worse than no shear
    CHECK(std::abs(r.m.a() * r.m.d() - r.m.b() * r.m.c() - 1.0) < 1e-12);
    // the focusing shear for chirp rate 0.3 is close to -1/0.3
    CHECK(r.shear.alpha == doctest::Approx(-1.0 / 0.3).epsilon(0.15));
}

TEST_CASE("shear search leaves white noise alone") {
    Grid g = default_grid(1024);
    std::mt19937 rng(99);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        double t = g.point(k);
        v[k] = std::exp(-0.03 * t * t) * nd(rng);
    }
    ShearResult r = shear_reduce(RealSignal(std::move(v), g.t0, g.dt));
    CHECK(r.bt_c > 0.5 * r.bt_b);  // no spurious large compaction
    CHECK(r.bt_c <= r.bt_b + 1e-9);
}

TEST_CASE("instantaneous frequency of a pure tone") {
    Grid g = default_grid(1024);
    double f0 = 2.0;
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        double t = g.point(k);
        v[k] = std::exp(-0.05 * t * t) * std::cos(2.0 * kPi * f0 * t);
    }
    RealSignal x(std::move(v), g.t0, g.dt);
    LctParams m(1.0, 0.5, 0.0, 1.0);
    auto pts = if_estimate(la(x, m), m);
    REQUIRE(pts.size() > 100);
    double fbin = 1.0 / (static_cast<double>(g.n) * g.dt);
    for (const auto& [t, f] : pts) {
        if (std::abs(t) > 3.0) continue;  // keep the well-conditioned center
        CHECK(std::abs(f - f0) < 2.0 * fbin);
    }
}

TEST_CASE("instantaneous frequency of a linear chirp") {
    Grid g = default_grid(1024);
    double f0 = 2.0, rate = 0.5;
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        double t = g.point(k);
        v[k] = std::exp(-0.05 * t * t) * std::cos(2.0 * kPi * (f0 * t + 0.5 * rate * t * t));
    }
    RealSignal x(std::move(v), g.t0, g.dt);
    // rotation matched to the chirp makes the LCT-domain phase slowly varying
    double th = 0.6;
    LctParams m(std::cos(th), std::sin(th), -std::sin(th), std::cos(th));
    auto pts = if_estimate(la(x, m), m);
    REQUIRE(pts.size() > 100);
    double fbin = 1.0 / (static_cast<double>(g.n) * g.dt);
    for (const auto& [t, f] : pts) {
        if (std::abs(t) > 3.0) continue;
        CHECK(std::abs(f - (f0 + rate * t)) < 2.0 * fbin);
    }
}

TEST_CASE("SSB round trip") {
    Grid g{-16.0, 1.0 / 64.0, 2048};
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        double t = g.point(k);
        v[k] = std::exp(-0.1 * t * t) * std::cos(2.0 * kPi * 1.2 * t);
    }
    RealSignal msg(std::move(v), g.t0, g.dt);
    SsbKey key{LctParams(0.8, 1.2, -0.4, 0.65), 8.0};
    RealSignal s = ssb_modulate(msg, key);
    RealSignal rec = ssb_demodulate(s, key);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < g.n; ++k) {
        num += (rec[k] - msg[k]) * (rec[k] - msg[k]);
        den += msg[k] * msg[k];
    }
    CHECK(std::sqrt(num / den) < 1e-4);
}

TEST_CASE("a 5% wrong key degrades SSB recovery") {
    Grid g{-16.0, 1.0 / 64.0, 2048};
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        double t = g.point(k);
        v[k] = std::exp(-0.1 * t * t) * std::cos(2.0 * kPi * 1.2 * t);
    }
    RealSignal msg(std::move(v), g.t0, g.dt);
    SsbKey key{LctParams(0.8, 1.2, -0.4, 0.65), 8.0};
    RealSignal s = ssb_modulate(msg, key);
    double b2 = 1.2 * 1.05;
    SsbKey wrong{LctParams(0.8, b2, (0.8 * 0.65 - 1.0) / b2, 0.65), 8.0};
    RealSignal rec = ssb_demodulate(s, wrong);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < g.n; ++k) {
        num += (rec[k] - msg[k]) * (rec[k] - msg[k]);
        den += msg[k] * msg[k];
    }
    CHECK(std::sqrt(num / den) > 0.3);
}

TEST_CASE("SSB error grows monotonically with key mismatch") {
    Grid g{-16.0, 1.0 / 64.0, 2048};
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        double t = g.point(k);
        v[k] = std::exp(-0.1 * t * t) * std::cos(2.0 * kPi * 1.2 * t);
    }
    RealSignal msg(std::move(v), g.t0, g.dt);
    SsbKey key{LctParams(0.8, 1.2, -0.4, 0.65), 8.0};
    RealSignal s = ssb_modulate(msg, key);
    std::vector<double> deltas{0.01, 0.02, 0.05, 0.10, 0.15, 0.20};
    std::vector<double> errs;
    for (double d : deltas) {
        double b2 = 1.2 * (1.0 + d);
        SsbKey wrong{LctParams(0.8, b2, (0.8 * 0.65 - 1.0) / b2, 0.65), 8.0};
        RealSignal rec = ssb_demodulate(s, wrong);
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < g.n; ++k) {
            num += (rec[k] - msg[k]) * (rec[k] - msg[k]);
            den += msg[k] * msg[k];
        }
        errs.push_back(std::sqrt(num / den));
    }
    CHECK(spearman(deltas, errs) > 0.9);
}

TEST_CASE("SSB modulation from an LCT-domain input matches") {
    Grid g{-16.0, 1.0 / 64.0, 2048};
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        double t = g.point(k);
        v[k] = std::exp(-0.1 * t * t) * std::cos(2.0 * kPi * 1.2 * t);
    }
    RealSignal msg(std::move(v), g.t0, g.dt);
    SsbKey key{LctParams(0.8, 1.2, -0.4, 0.65), 8.0};
    RealSignal direct = ssb_modulate(msg, key);
    RealSignal via_lct = ssb_modulate_from_lct(lct(msg, key.m), key);
    double worst = 0.0;
    for (std::size_t k = 0; k < g.n; ++k)
        worst = std::max(worst, std::abs(direct[k] - via_lct[k]));
    CHECK(worst < 1e-5);
}

TEST_CASE("SSB of the zero message is zero, and bad carriers throw") {
    Grid g{-16.0, 1.0 / 64.0, 256};
    RealSignal z(std::vector<double>(g.n, 0.0), g.t0, g.dt);
    // the LCT-domain step on this grid is 0.3, so carriers must stay below
    // 1/(2*0.3); use one inside and ones outside that range
    SsbKey key{LctParams(0.8, 1.2, -0.4, 0.65), 1.0};
    RealSignal s = ssb_modulate(z, key);
    for (std::size_t k = 0; k < g.n; ++k) CHECK(s[k] == 0.0);
    CHECK_THROWS_AS(ssb_modulate(z, SsbKey{key.m, 0.0}), std::domain_error);
    CHECK_THROWS_AS(ssb_modulate(z, SsbKey{key.m, 2.0}), std::domain_error);
}

TEST_CASE("spectrogram of a tone has a single ridge") {
    Grid g = default_grid(1024);
    double f0 = 3.0;
    std::vector<cplx> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) v[k] = std::polar(1.0, 2.0 * kPi * f0 * g.point(k));
    TfdMatrix tfd = stft_tfd(SampledSignal(std::move(v), g.t0, g.dt), 128, 16);
    REQUIRE(!tfd.magnitudes.empty());
    for (std::size_t fr = 0; fr < tfd.magnitudes.size(); ++fr) {
        std::size_t best = 0;
        for (std::size_t b = 1; b < tfd.magnitudes[fr].size(); ++b)
            if (tfd.magnitudes[fr][b] > tfd.magnitudes[fr][best]) best = b;
        CHECK(std::abs(tfd.bin_freqs[best] - f0) < 2.0 / (128.0 * g.dt));
    }
}

TEST_CASE("spectrogram ridge of a chirp follows its slope") {
    Grid g = default_grid(2048);
    double f0 = 2.0, rate = 0.4;
    std::vector<cplx> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        double t = g.point(k);
        v[k] = std::polar(std::exp(-0.02 * t * t),
                          2.0 * kPi * (f0 * t + 0.5 * rate * t * t));
    }
    TfdMatrix tfd = stft_tfd(SampledSignal(std::move(v), g.t0, g.dt), 128, 16);
    // least-squares slope of the per-frame peak frequency against frame time
    std::vector<double> ts, fs;
    for (std::size_t fr = 0; fr < tfd.magnitudes.size(); ++fr) {
        if (std::abs(tfd.frame_times[fr]) > 4.0) continue;
        std::size_t best = 0;
        for (std::size_t b = 1; b < tfd.magnitudes[fr].size(); ++b)
            if (tfd.magnitudes[fr][b] > tfd.magnitudes[fr][best]) best = b;
        ts.push_back(tfd.frame_times[fr]);
        fs.push_back(tfd.bin_freqs[best]);
    }
    REQUIRE(ts.size() > 10);
    double mt = 0.0, mf = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        mt += ts[i];
        mf += fs[i];
    }
    mt /= static_cast<double>(ts.size());
    mf /= static_cast<double>(ts.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        sxy += (ts[i] - mt) * (fs[i] - mf);
        sxx += (ts[i] - mt) * (ts[i] - mt);
    }
    CHECK(sxy / sxx == doctest::Approx(rate).epsilon(0.10));
}

TEST_CASE("spectrogram argument validation") {
    Grid g = default_grid(256);
    SampledSignal x(std::vector<cplx>(g.n, cplx(1.0, 0.0)), g.t0, g.dt);
    CHECK_THROWS_AS(stft_tfd(x, 2, 16), std::invalid_argument);
    CHECK_THROWS_AS(stft_tfd(x, 512, 16), std::invalid_argument);
    CHECK_THROWS_AS(stft_tfd(x, 128, 0), std::invalid_argument);
}

TEST_CASE("99%-energy extent") {
    // a unit block of 100 samples at step 0.1 spans 10 time units
    std::vector<double> p(300, 0.0);
    for (std::size_t k = 100; k < 200; ++k) p[k] = 1.0;
    double e = energy_extent(p, 0.1);
    CHECK(e == doctest::Approx(10.0).epsilon(0.03));
}
