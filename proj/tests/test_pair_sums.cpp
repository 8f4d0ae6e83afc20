#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "zetapair/pair_sums.hpp"
#include "zetapair/synthetic.hpp"

using namespace zetapair;
using kernels::KernelId;
using kernels::TsangParams;

namespace {

quad::QuadratureConfig cfg(double tol = 1e-10) {
    quad::QuadratureConfig c;
    c.abs_tol = tol;
    c.rel_tol = tol;
    c.max_panels = 60000;
    return c;
}

zeros::ZeroDataset dataset_from(std::initializer_list<zeros::Zero> zs) {
    zeros::ZeroDataset ds;
    ds.source = zeros::Source::Synthetic;
    ds.on_line = true;
    for (const auto& z : zs) {
        ds.zeros.push_back(z);
        if (z.beta != 0.5) ds.on_line = false;
    }
    ds.t_min = ds.zeros.front().gamma;
    ds.t_max = ds.zeros.back().gamma;
    return ds;
}

pairsum::PairSumSpec spec_w(double x, double lo, double hi) {
    pairsum::PairSumSpec s;
    s.x = x;
    s.t_lo = lo;
    s.t_hi = hi;
    return s;
}

double w_of(double u) { return 4.0 / (4.0 + u * u); }

}  // namespace

TEST_CASE("single- and two-zero pair sums expand as expected") {
    const auto one = dataset_from({{0.5, 30.0, 1}});
    const auto r1 = pairsum::F_pair_sum(one, spec_w(7.3, 20.0, 40.0));
    CHECK(r1.value.real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r1.n_zeros == 1);

    const auto two = dataset_from({{0.5, 30.0, 1}, {0.5, 32.5, 1}});
    const double x = 5.0;
    const auto r2 = pairsum::F_pair_sum(two, spec_w(x, 20.0, 40.0));
    const double expect = 2.0 + 2.0 * std::cos(2.5 * std::log(x)) * w_of(2.5);
    CHECK(r2.value.real() == doctest::Approx(expect).epsilon(1e-14));
    CHECK(r2.n_pairs_evaluated == 4);
}

TEST_CASE("x -> 1/x symmetry on a synthetic on-line set") {
    const auto ds = synthetic::online_set(3, 40, 21.0, 99.0);
    for (const double x : {2.0, 10.0, 100.0}) {
        const auto a = pairsum::F_pair_sum(ds, spec_w(x, 20.0, 100.0));
        const auto b = pairsum::F_pair_sum(ds, spec_w(1.0 / x, 20.0, 100.0));
        CHECK(std::abs(a.value - b.value) < 1e-9);
        CHECK(std::abs(a.value.imag()) < 1e-9 * a.n_zeros);
    }
}

TEST_CASE("calF reduces to F for on-line zeros") {
    const auto ds = synthetic::online_set(8, 30, 51.0, 99.0);
    auto sw = spec_w(3.0, 50.0, 100.0);
    auto sW = sw;
    sW.weight = pairsum::PairWeight::Complex;
    const auto f = pairsum::F_pair_sum(ds, sw);
    const auto calf = pairsum::calF_pair_sum(ds, sW, 50.0);
    CHECK(std::abs(calf.value - f.value) < 1e-10);
}

TEST_CASE("calF on one symmetric off-line pair expands explicitly") {
    // Zeros 0.6 + i gamma and 0.4 + i gamma inside (T, 2T].
    const double gamma = 75.0, T = 50.0;
    const auto ds = dataset_from({{0.4, gamma, 1}, {0.6, gamma, 1}});
    auto s = spec_w(std::numbers::e, T, 2.0 * T);
    s.weight = pairsum::PairWeight::Complex;
    const auto r = pairsum::calF_pair_sum(ds, s, T);
    const double expect =
        2.0 + (std::exp(0.2) + std::exp(-0.2)) * 4.0 / (4.0 - 0.04);
    CHECK(r.value.real() == doctest::Approx(expect).epsilon(1e-14));
    CHECK(std::abs(r.value.imag()) < 1e-14);
}

TEST_CASE("calF symmetry for datasets with symmetric off-line pairs") {
    const auto ds = synthetic::offline_set(17, 24, 6, 0.08, 51.0, 99.0);
    for (const double x : {2.0, 9.0}) {
        auto a = spec_w(x, 50.0, 100.0);
        auto b = spec_w(1.0 / x, 50.0, 100.0);
        a.weight = b.weight = pairsum::PairWeight::Complex;
        CHECK(std::abs(pairsum::calF_pair_sum(ds, a, 50.0).value -
                       pairsum::calF_pair_sum(ds, b, 50.0).value) < 1e-9);
    }
}

TEST_CASE("integral representation of F") {
    const auto one = dataset_from({{0.5, 30.0, 1}});
    CHECK(std::abs(pairsum::F_integral_oracle(one, 4.0, cfg(1e-9)) - 1.0) < 1e-7);

    const auto five = dataset_from({{0.5, 20.0, 1},
                                    {0.5, 21.5, 1},
                                    {0.5, 23.0, 1},
                                    {0.5, 30.0, 1},
                                    {0.5, 40.0, 1}});
    const auto direct = pairsum::F_pair_sum(five, spec_w(3.0, 10.0, 50.0));
    const double integral = pairsum::F_integral_oracle(five, 3.0, cfg(1e-9));
    CHECK(std::abs(direct.value.real() - integral) < 1e-6);
    CHECK(integral >= 0.0);
}

TEST_CASE("integral representation of calF") {
    const auto off = dataset_from({{0.45, 25.0, 1},
                                   {0.55, 25.0, 1},
                                   {0.5, 28.0, 1},
                                   {0.5, 33.0, 1}});
    auto s = spec_w(2.0, 20.0, 40.0);
    s.weight = pairsum::PairWeight::Complex;
    const auto direct = pairsum::calF_pair_sum(off, s, 20.0);
    const double integral = pairsum::calF_integral_oracle(off, 2.0, cfg(1e-9));
    CHECK(std::abs(direct.value.real() - integral) < 1e-6);

    // On-line datasets: both representations coincide.
    const auto on = synthetic::online_set(5, 12, 20.0, 45.0);
    CHECK(std::abs(pairsum::F_integral_oracle(on, 3.0, cfg(1e-9)) -
                   pairsum::calF_integral_oracle(on, 3.0, cfg(1e-9))) < 1e-7);

    zeros::ZeroDataset empty;
    CHECK(pairsum::calF_integral_oracle(empty, 2.0, cfg()) == 0.0);
}

TEST_CASE("truncated pair sum stays within its own error bound") {
    const auto ds = synthetic::online_set(23, 120, 21.0, 199.0, 0.2);
    auto full = spec_w(4.0, 20.0, 200.0);
    auto trunc = full;
    trunc.truncation_gap = 25.0;
    const auto a = pairsum::F_pair_sum(ds, full);
    const auto b = pairsum::F_pair_sum(ds, trunc);
    CHECK(b.truncation_error_bound > 0.0);
    CHECK(std::abs(a.value.real() - b.value.real()) <= b.truncation_error_bound);
    CHECK(b.n_pairs_evaluated < a.n_pairs_evaluated);
}

TEST_CASE("kernel-weighted sum on a single zero") {
    const auto one = dataset_from({{0.5, 75.0, 1}});
    const TsangParams p{0.5, KernelId::Fejer};
    const auto v = pairsum::kernel_weighted_sum(one, p, 50.0, cfg(1e-11));
    const auto k0 = kernels::tsang_K(p, 0.0, cfg(1e-11));
    CHECK(std::abs(v - k0) < 1e-12);
}

TEST_CASE("b = 0 kernel sum reduces to the hat-weighted Montgomery sum") {
    const double T = 50.0;
    const double logT = std::log(T);
    const auto ds = synthetic::online_set(31, 8, T + 1.0, T + 9.0);
    const TsangParams p{0.0, KernelId::Fejer};
    const auto v = pairsum::kernel_weighted_sum(ds, p, T, cfg(1e-11));
    // K_0(u log T) = (1/2 pi) jhat_F(u log T / 2 pi) for real u.
    quad::KahanSum expect;
    for (const auto& zi : ds.zeros)
        for (const auto& zj : ds.zeros) {
            const double du = zi.gamma - zj.gamma;
            expect.add(kernels::fejer_hat(du * logT / (2.0 * std::numbers::pi)) /
                       (2.0 * std::numbers::pi) * w_of(du));
        }
    CHECK(std::abs(v.real() - expect.value()) < 1e-8);
    CHECK(std::abs(v.imag()) < 1e-10);
}

TEST_CASE("diagonal decomposition") {
    const double T = 50.0;
    const TsangParams p{1.0, KernelId::MontgomeryTaylor};
    const auto k0 = kernels::tsang_K(p, 0.0, cfg(1e-12)).real();

    const auto on = synthetic::online_set(41, 10, T + 1.0, T + 20.0);
    const auto d_on = pairsum::diagonal_decomposition(on, p, T, cfg(1e-11));
    CHECK(d_on.diagonal == doctest::Approx(10.0 * k0).epsilon(1e-10));
    CHECK(d_on.symmetric_diagonal == 0.0);

    // Multiplicity 2: the coincident pair occurs m^2 = 4 ways.
    const auto dbl = dataset_from({{0.5, 75.0, 2}});
    const auto d_dbl = pairsum::diagonal_decomposition(dbl, p, T, cfg(1e-11));
    CHECK(d_dbl.diagonal == doctest::Approx(4.0 * k0).epsilon(1e-10));

    // A symmetric in-box pair contributes a positive symmetric diagonal.
    const double logT = std::log(T);
    const double delta = 0.1 / logT;  // |2 beta - 1| log T = 0.2 < b
    const auto pair = dataset_from({{0.5 - delta, 75.0, 1}, {0.5 + delta, 75.0, 1}});
    const auto d_pair = pairsum::diagonal_decomposition(pair, p, T, cfg(1e-11));
    CHECK(d_pair.symmetric_diagonal > 0.0);
    const auto partner = kernels::tsang_K(
        p, {0.0, -(2.0 * (0.5 + delta) - 1.0) * logT}, cfg(1e-12));
    CHECK(d_pair.symmetric_diagonal ==
          doctest::Approx(2.0 * partner.real()).epsilon(1e-9));
}

TEST_CASE("form factor curve endpoints") {
    const auto ds = synthetic::online_set(53, 600, 101.0, 199.0, 0.01);
    const auto curve = pairsum::form_factor_curve(ds, 100.0, {1.0});
    REQUIRE(curve.size() == 1);
    CHECK(curve[0].theory ==
          doctest::Approx(1.0 + std::pow(100.0, -2.0) * std::log(100.0)));

    CHECK_THROWS_AS(pairsum::form_factor_curve(ds, 100.0, {0.0}),
                    std::invalid_argument);
    const auto small = synthetic::online_set(54, 10, 101.0, 199.0);
    CHECK_THROWS_AS(pairsum::form_factor_curve(small, 100.0, {0.5}),
                    std::invalid_argument);
}

TEST_CASE("empirical bound pipeline") {
    const double T = 50.0;
    const auto ds = synthetic::online_set(61, 20, T + 1.0, T + 30.0);
    const TsangParams p{0.001, KernelId::MontgomeryTaylor};
    const auto rep = pairsum::empirical_bound_pipeline(ds, p, T, cfg(1e-11));
    CHECK(rep.implied_simple_proportion == doctest::Approx(1.0));  // all simple
    CHECK(rep.asymptotic_simple_coeff ==
          doctest::Approx(0.67250064).epsilon(1e-6));
    CHECK(rep.n_zeros_weighted == 20.0);
    CHECK(rep.diagonal > 0.0);

    const TsangParams pf{1e-9, KernelId::Fejer};
    const auto repf = pairsum::empirical_bound_pipeline(ds, pf, T, cfg(1e-11));
    CHECK(repf.asymptotic_simple_coeff == doctest::Approx(2.0 / 3.0).epsilon(1e-7));
}

TEST_CASE("input validation") {
    const auto ds = synthetic::online_set(71, 5, 21.0, 29.0);
    CHECK_THROWS_AS(pairsum::F_pair_sum(ds, spec_w(0.0, 20.0, 30.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(pairsum::F_pair_sum(ds, spec_w(2.0, 300.0, 400.0)),
                    std::invalid_argument);
    auto bad_gap = spec_w(2.0, 20.0, 30.0);
    bad_gap.truncation_gap = 5.0;
    CHECK_THROWS_AS(pairsum::F_pair_sum(ds, bad_gap), std::invalid_argument);
}
