#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lctjt/special.hpp"
#include "oracles.hpp"

using namespace lctjt;

TEST_CASE("faddeeva at zero") { CHECK(faddeeva(cplx(0, 0)) == cplx(1.0, 0.0)); }

TEST_CASE("faddeeva on the imaginary axis is e erfc(1)") {
    cplx w = faddeeva(cplx(0.0, 1.0));
    double want = std::exp(1.0) * std::erfc(1.0);
    CHECK(w.real() == doctest::Approx(want).epsilon(1e-13));
    CHECK(std::abs(w.imag()) < 1e-15);
}

TEST_CASE("faddeeva at 2+3j vs quadrature oracle") {
    cplx w = faddeeva(cplx(2.0, 3.0));
    cplx ref = oracles::faddeeva_ref(cplx(2.0, 3.0));
    CHECK(std::abs(w - ref) / std::abs(ref) < 1e-12);
}

TEST_CASE("faddeeva matches oracle on 200 points |z| <= 10") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ur(0.0, 10.0), uth(0.0, 2.0 * oracles::kPi);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        cplx z = std::polar(ur(rng), uth(rng));
        cplx w = faddeeva(z);
        cplx ref = oracles::faddeeva_ref(z);
        worst = std::max(worst, std::abs(w - ref) / std::abs(ref));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("faddeeva reflection identity on 100 random points") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> ux(-6.0, 6.0), uy(-4.0, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        cplx z(ux(rng), uy(rng));
        cplx lhs = faddeeva(-z);
        cplx e2 = 2.0 * std::exp(-z * z);
        cplx rhs = e2 - faddeeva(z);
        // normalize by the largest term; when 2e^{-z^2} dwarfs w(-z) the
        // identity's own conditioning limits the achievable agreement
        double scale = std::max({std::abs(lhs), std::abs(e2), 1e-300});
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("faddeeva branches agree on the |z| = 2 seam") {
    // both branches must hit the oracle to 1e-12 just inside and outside the
    // series/quadrature crossover radius
    for (int i = 0; i <= 16; ++i) {
        double th = oracles::kPi * i / 16.0;
        for (double r : {1.999, 2.001}) {
            cplx z = std::polar(r, th);
            cplx ref = oracles::faddeeva_ref(z);
            CHECK(std::abs(faddeeva(z) - ref) / std::abs(ref) < 1e-12);
        }
    }
}

TEST_CASE("faddeeva rejects non-finite input") {
    CHECK_THROWS_AS(faddeeva(cplx(std::nan(""), 0.0)), std::invalid_argument);
}

TEST_CASE("erf at zero and one") {
    CHECK(erf_complex(cplx(0, 0)) == cplx(0.0, 0.0));
    cplx e1 = erf_complex(cplx(1.0, 0.0));
    CHECK(e1.real() == doctest::Approx(0.84270079294971487).epsilon(1e-14));
    CHECK(e1.imag() == 0.0);
}

TEST_CASE("erf matches real erf on the real axis") {
    for (double x = -5.0; x <= 5.0; x += 0.25) {
        cplx e = erf_complex(cplx(x, 0.0));
        CHECK(std::abs(e.real() - std::erf(x)) < 1e-14);
        CHECK(e.imag() == 0.0);
    }
}

TEST_CASE("erf oddness is exact by construction") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        cplx z(u(rng), u(rng));
        CHECK(erf_complex(-z) == -erf_complex(z));
    }
}

TEST_CASE("erf overflow region raises a range error") {
    CHECK_THROWS_AS(erf_complex(cplx(0.0, 40.0)), std::range_error);
}

TEST_CASE("g kernels at the origin") {
    Grid g{-1.0, 1.0, 3};
    auto kp = g_kernels(g, 0.8, 1.2);
    CHECK(kp.g1[1] == cplx(1.0, 0.0));
    CHECK(std::abs(kp.g2[1]) < 1e-15);
    CHECK(kp.chirp_rate == doctest::Approx(0.8 / 1.2));
}

TEST_CASE("g1 is a unit-modulus chirp; value at t=1") {
    Grid g{-4.0, 1.0 / 16.0, 129};
    auto kp = g_kernels(g, 0.8, 1.2);
    for (std::size_t k = 0; k < g.n; ++k) CHECK(std::abs(kp.g1[k]) == doctest::Approx(1.0).epsilon(1e-14));
    cplx at1 = g1_at(1.0, 0.8, 1.2);
    CHECK(at1.real() == doctest::Approx(std::cos(2.0 * oracles::kPi / 3.0)).epsilon(1e-14));
    CHECK(at1.imag() == doctest::Approx(std::sin(2.0 * oracles::kPi / 3.0)).epsilon(1e-14));
}

TEST_CASE("g kernels reject degenerate parameters") {
    Grid g{-1.0, 1.0, 3};
    CHECK_THROWS_AS(g_kernels(g, 0.0, 1.2), std::invalid_argument);
    CHECK_THROWS_AS(g_kernels(g, 0.8, 0.0), std::invalid_argument);
}

TEST_CASE("g2 oddness modulo the chirp") {
    double a = 0.8, b = 1.2;
    for (double t = 0.25; t <= 4.0; t += 0.25) {
        cplx lhs = g2_at(-t, a, b) * std::conj(g1_at(t, a, b));
        cplx rhs = -g2_at(t, a, b) * std::conj(g1_at(t, a, b));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("g identity: g1 + g2 equals the Faddeeva evaluation") {
    double a = 0.8, b = 1.2;
    cplx zeta = principal_sqrt(cplx(0.0, -oracles::kPi * a / b));
    Grid g{-4.0, 1.0 / 8.0, 65};
    auto kp = g_kernels(g, a, b);
    for (std::size_t k = 0; k < g.n; ++k) {
        cplx w = faddeeva(zeta * g.point(k));
        CHECK(std::abs(kp.g1[k] + kp.g2[k] - w) < 1e-14);
    }
}

TEST_CASE("g1 + g2 matches the inverse-FT oracle of G(f)") {
    double a = 0.8, b = 1.2;
    Grid g{-4.0, 1.0 / 8.0, 65};
    auto kp = g_kernels(g, a, b);
    double worst = 0.0;
    for (std::size_t k = 0; k < g.n; ++k) {
        cplx ref = oracles::g_from_spectrum(g.point(k), a, b);
        worst = std::max(worst, std::abs(kp.g1[k] + kp.g2[k] - ref));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("one-sided kernel asymptotics") {
    double a = 0.8, b = 1.2;
    double t = 10.0 / std::sqrt(a / b);
    CHECK(std::abs(g_at(t, a, b)) == doctest::Approx(2.0).epsilon(0.05));
    CHECK(std::abs(g_at(-t, a, b)) < 0.05 * 2.0);
}

TEST_CASE("sqrt(1/jb) principal branch") {
    cplx p = sqrt_inv_jb(1.2);
    CHECK(std::arg(p) == doctest::Approx(-oracles::kPi / 4.0).epsilon(1e-14));
    cplx n = sqrt_inv_jb(-1.2);
    CHECK(std::arg(n) == doctest::Approx(oracles::kPi / 4.0).epsilon(1e-14));
    CHECK(std::abs(p) == doctest::Approx(1.0 / std::sqrt(1.2)).epsilon(1e-14));
}
