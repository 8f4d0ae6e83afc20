#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "support/reference.hpp"
#include "zetapair/kernels.hpp"
#include "zetapair/quadrature.hpp"

using namespace zetapair;
using kernels::KernelId;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

quad::QuadratureConfig cfg(double tol = 1e-12) {
    quad::QuadratureConfig c;
    c.abs_tol = tol;
    c.rel_tol = tol;
    c.max_panels = 40000;
    return c;
}

}  // namespace

TEST_CASE("fejer kernel values") {
    CHECK(kernels::fejer(0.0) == 1.0);
    CHECK(kernels::fejer(0.5) == 0.5);
    CHECK(kernels::fejer(2.0) == 0.0);
    CHECK(kernels::fejer(-0.25) == kernels::fejer(0.25));
    CHECK(kernels::fejer(1.0) == 0.0);  // support is exactly [-1, 1]
    CHECK(kernels::fejer(std::nextafter(1.0, 2.0)) == 0.0);
}

TEST_CASE("fejer transform values") {
    CHECK(kernels::fejer_hat(0.0) == 1.0);
    CHECK(std::abs(kernels::fejer_hat(1.0)) < 1e-30);
    CHECK(std::abs(kernels::fejer_hat(0.5) - 4.0 / (kPi * kPi)) < 1e-15);
    for (double t = -5.0; t <= 5.0; t += 0.037) CHECK(kernels::fejer_hat(t) >= 0.0);
}

TEST_CASE("montgomery-taylor kernel values") {
    CHECK(kernels::mt(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(kernels::mt(1.5) == 0.0);
    CHECK(std::abs(kernels::mt(0.0) - refmath::mt_at_zero_reference()) < 1e-15);
    CHECK(kernels::mt(0.3) == kernels::mt(-0.3));
}

TEST_CASE("montgomery-taylor transform") {
    const double peak = std::sqrt(2.0) / kTwoPi;
    CHECK(std::abs(kernels::mt_hat(peak) - refmath::mt_hat_at_peak_reference()) <
          1e-12);
    // sanity on the quoted magnitude
    CHECK(kernels::mt_hat(peak) == doctest::Approx(0.8544).epsilon(1e-4));
    for (double w = -5.0; w <= 5.0; w += 0.013) {
        CHECK(kernels::mt_hat(w) >= 0.0);
        CHECK(kernels::mt_hat(w) == kernels::mt_hat(-w));
    }
    // Continuity across the removable-singularity branch switch: the step is
    // bounded by |slope| * eps (slope is O(1) here), not a jump.
    const double eps = 4.9e-5 / kTwoPi;
    CHECK(std::abs(kernels::mt_hat(peak + eps) - kernels::mt_hat(peak)) < 5e-5);
}

TEST_CASE("cosh ratio") {
    CHECK(kernels::cosh_ratio(0.1, 1.0, 0.0) == doctest::Approx(1.0));
    CHECK(std::abs(kernels::cosh_ratio(0.0, 1.0, 0.7) -
                   1.0 / std::cosh(kTwoPi * 0.7)) < 1e-15);
    CHECK(std::abs(kernels::cosh_ratio(0.5, 1.0, 0.3) -
                   std::cosh(0.3 * kPi) / std::cosh(0.6 * kPi)) < 1e-14);
    CHECK(kernels::cosh_ratio(0.2, 1.0, -3.0) == kernels::cosh_ratio(0.2, 1.0, 3.0));
    // No overflow far out; decays like e^{-2 pi (b - |y|) |t|}.
    CHECK(kernels::cosh_ratio(0.5, 1.0, 400.0) >= 0.0);
    CHECK(kernels::cosh_ratio(0.5, 1.0, 400.0) < 1e-300);
    CHECK_THROWS_AS(kernels::cosh_ratio(1.0, 1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(kernels::cosh_ratio(0.0, 0.0, 0.1), std::domain_error);
}

TEST_CASE("cosh ratio transform closed form") {
    CHECK(std::abs(kernels::cosh_ratio_hat(0.0, 0.7, 0.0) - 1.0 / 1.4) < 1e-15);
    // Forward-transform quadrature oracle at a single point.
    const double y = 0.3, b = 1.0, x = 2.0;
    const auto fwd = quad::integrate_oscillatory(
        [&](double t) {
            return kernels::cosh_ratio(y, b, t) * std::cos(kTwoPi * x * t);
        },
        -8.0, 8.0, kTwoPi * x, cfg(1e-13));
    REQUIRE(fwd.converged);
    CHECK(std::abs(fwd.value - kernels::cosh_ratio_hat(y, b, x)) < 1e-8);
    // Strict positivity across the admissible strip.
    for (double yy = -0.95; yy <= 0.95; yy += 0.19)
        for (double xx = -30.0; xx <= 30.0; xx += 1.7)
            CHECK(kernels::cosh_ratio_hat(yy, 1.0, xx) > 0.0);
    CHECK_THROWS_AS(kernels::cosh_ratio_hat(1.2, 1.0, 0.0), std::domain_error);
}

TEST_CASE("tsang kernel at the origin, b = 0") {
    const auto v = kernels::tsang_K({0.0, KernelId::Fejer}, 0.0, cfg());
    CHECK(std::abs(v.real() - 1.0 / kTwoPi) < 1e-12);
    CHECK(v.imag() == 0.0);
}

TEST_CASE("tsang kernel is even") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    const kernels::TsangParams p{1.0, KernelId::MontgomeryTaylor};
    for (int i = 0; i < 25; ++i) {
        const std::complex<double> z(u(rng), 0.1 * u(rng));
        const auto a = kernels::tsang_K(p, z, cfg());
        const auto b = kernels::tsang_K(p, -z, cfg());
        CHECK(std::abs(a - b) < 1e-11);
    }
}

TEST_CASE("tsang kernel decay bound on and off the real axis") {
    const kernels::TsangParams p{1.0, KernelId::MontgomeryTaylor};
    // Calibrate the constant once at a moderate point, then check growth.
    const double c = 2.0;
    for (const double x : {5.0, 20.0, 50.0, 200.0, 500.0}) {
        const auto v = kernels::tsang_K(p, {x, 0.0}, cfg());
        CHECK(std::abs(v) <= c / (1.0 + x * x));
    }
    const std::complex<double> z(50.0, 0.8);
    const auto v = kernels::tsang_K(p, z, cfg());
    CHECK(std::abs(v) <= c * std::exp(std::abs(z.imag())) / (1.0 + std::norm(z)));
}

TEST_CASE("real part evaluation and positivity") {
    const kernels::TsangParams half{0.5, KernelId::Fejer};
    CHECK(kernels::tsang_K_re(half, 0.0, 0.0, cfg()) > 0.0);

    const kernels::TsangParams p{1.0, KernelId::MontgomeryTaylor};
    CHECK(kernels::tsang_K_re(p, 30.0, 0.9, cfg(1e-13)) > 0.0);

    const kernels::TsangParams pf{1.0, KernelId::Fejer};
    for (const double x : {0.0, 1.3, 6.5, 40.0}) {
        const auto full = kernels::tsang_K(pf, {x, 0.0}, cfg());
        CHECK(std::abs(kernels::tsang_K_re(pf, x, 0.0, cfg()) - full.real()) <
              1e-12);
        CHECK(std::abs(full.imag()) < 1e-12);
    }
    CHECK_THROWS_AS(kernels::tsang_K_re(p, 0.0, 1.0, cfg()), std::domain_error);
}
