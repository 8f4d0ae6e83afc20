#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "zetapair/quadrature.hpp"

using namespace zetapair;

namespace {

quad::QuadratureConfig cfg(double abs_tol = 1e-12, double rel_tol = 1e-12) {
    quad::QuadratureConfig c;
    c.abs_tol = abs_tol;
    c.rel_tol = rel_tol;
    c.max_panels = 40000;
    return c;
}

}  // namespace

TEST_CASE("constant and polynomial integrands") {
    const auto one = quad::integrate([](double) { return 1.0; }, 0.0, 1.0, cfg());
    CHECK(one.converged);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-14));

    const auto poly = quad::integrate([](double a) { return a * (1.0 - a); },
                                      0.0, 1.0, cfg());
    CHECK(poly.converged);
    CHECK(std::abs(poly.value - 1.0 / 6.0) < 1e-12);
}

TEST_CASE("polynomial exactness of the base rule") {
    // A single order-16 panel integrates degree-31 polynomials exactly.
    std::vector<double> nodes(16), weights(16);
    quad::gauss_legendre(16, nodes, weights);
    for (int deg : {5, 12, 21, 31}) {
        double got = 0.0;
        for (int i = 0; i < 16; ++i) got += weights[i] * std::pow(nodes[i], deg);
        const double exact = (deg % 2 == 0) ? 2.0 / (deg + 1) : 0.0;
        CHECK(std::abs(got - exact) < 1e-14);
    }
}

TEST_CASE("sech integral against the closed form") {
    const auto r = quad::integrate(
        [](double t) { return 1.0 / std::cosh(2.0 * std::numbers::pi * t); },
        -10.0, 10.0, cfg(1e-12, 1e-12));
    CHECK(r.converged);
    CHECK(std::abs(r.value - 0.5) < 1e-10);
}

TEST_CASE("determinism: repeated calls are bit-identical") {
    const auto f = [](double t) { return std::sin(17.0 * t) / (1.0 + t * t); };
    const auto a = quad::integrate(f, -3.0, 5.0, cfg());
    const auto b = quad::integrate(f, -3.0, 5.0, cfg());
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.panels_used == b.panels_used);
}

TEST_CASE("halving tolerances moves the result less than the error estimate") {
    const auto f = [](double t) { return std::exp(-t) * std::cos(9.0 * t); };
    const auto coarse = quad::integrate(f, 0.0, 20.0, cfg(1e-6, 1e-6));
    const auto fine = quad::integrate(f, 0.0, 20.0, cfg(5e-7, 5e-7));
    REQUIRE(coarse.converged);
    CHECK(std::abs(coarse.value - fine.value) <=
          std::max(coarse.error_estimate, 1e-15));
}

TEST_CASE("non-convergence is reported, not silent") {
    quad::QuadratureConfig tight = cfg(1e-14, 1e-14);
    tight.max_panels = 4;
    const auto r = quad::integrate(
        [](double t) { return std::cos(300.0 * t); }, 0.0, 10.0, tight);
    CHECK_FALSE(r.converged);
}

TEST_CASE("config validation") {
    quad::QuadratureConfig bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(quad::integrate([](double) { return 1.0; }, 0.0, 1.0, bad),
                    std::invalid_argument);
    CHECK_THROWS_AS(quad::integrate([](double) { return 1.0; }, 1.0, 0.0, cfg()),
                    std::invalid_argument);
}

TEST_CASE("whole-line integration with exponential decay") {
    const auto sech = quad::integrate_line_decaying(
        [](double t) { return 1.0 / std::cosh(2.0 * std::numbers::pi * t); },
        2.0 * std::numbers::pi, cfg(1e-12, 1e-12));
    CHECK(sech.converged);
    CHECK(std::abs(sech.value - 0.5) < 1e-10);

    const auto zero = quad::integrate_line_decaying(
        [](double) { return 0.0; }, 1.0, cfg());
    CHECK(zero.value == 0.0);

    // Algebraic decay via an artificially small rate: L grows like 1/rate.
    const auto lorentz = quad::integrate_line_decaying(
        [](double t) { return 1.0 / (1.0 + t * t); }, 1e-6, cfg(1e-6, 1e-6));
    CHECK(std::abs(lorentz.value - std::numbers::pi) < 1e-6);

    CHECK_THROWS_AS(
        quad::integrate_line_decaying([](double) { return 0.0; }, -1.0, cfg()),
        std::invalid_argument);
}

TEST_CASE("oscillatory pre-splitting") {
    const double w = 200.0;
    const auto r = quad::integrate_oscillatory(
        [w](double t) { return std::cos(w * t); }, 0.0, 1.0, w, cfg());
    CHECK(r.converged);
    CHECK(std::abs(r.value - std::sin(w) / w) < 1e-12);
}

TEST_CASE("simpson on uniform samples") {
    std::vector<double> s;
    const double h = 0.01;
    for (int i = 0; i <= 200; ++i) {
        const double x = i * h;
        s.push_back(x * x * x);
    }
    CHECK(std::abs(quad::simpson_uniform(s, h) - 4.0) < 1e-12);
    CHECK_THROWS_AS(quad::simpson_uniform(std::vector<double>{1.0, 2.0}, h),
                    std::invalid_argument);
}

TEST_CASE("root finding") {
    CHECK(std::abs(quad::find_root([](double x) { return x - 1.0; }, 0.0, 2.0,
                                   1e-12) -
                   1.0) < 1e-12);
    CHECK(std::abs(quad::find_root([](double x) { return std::cos(x); }, 1.0,
                                   2.0, 1e-10) -
                   std::numbers::pi / 2.0) < 1e-10);
    CHECK_THROWS_AS(
        quad::find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-8),
        std::invalid_argument);
}
