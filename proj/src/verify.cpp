#include "zetapair/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "zetapair/bounds.hpp"
#include "zetapair/kernels.hpp"
#include "zetapair/pair_sums.hpp"
#include "zetapair/quadrature.hpp"
#include "zetapair/reference_values.hpp"
#include "zetapair/synthetic.hpp"
#include "zetapair/zeta_zeros.hpp"

namespace zetapair::verify {

namespace {

using kernels::KernelId;
using kernels::TsangParams;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Suite {
    const VerifyOptions& opts;
    std::vector<CheckResult> results;

    bool wants(const std::string& group) const {
        if (opts.groups.empty()) return true;
        return std::find(opts.groups.begin(), opts.groups.end(), group) !=
               opts.groups.end();
    }

    double tol(double default_tol) const {
        return opts.tolerance_override.value_or(default_tol);
    }

    void record(const std::string& group, const std::string& name, double worst,
                double threshold) {
        std::ostringstream d;
        d << "worst " << worst << " vs threshold " << threshold;
        results.push_back({group, name, worst <= threshold, d.str()});
    }
};

quad::QuadratureConfig tight_cfg() {
    quad::QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-12;
    cfg.max_panels = 40000;
    return cfg;
}

void kernel_checks(Suite& s) {
    const auto cfg = tight_cfg();

    {  // Fourier transforms of both kernels are nonnegative on a fine grid.
        double least = 1.0;
        for (double t = -5.0; t <= 5.0; t += 1e-3)
            least = std::min({least, kernels::fejer_hat(t), kernels::mt_hat(t)});
        s.record("kernels", "hat-nonnegativity [-5,5] step 1e-3", -least, s.tol(0.0));
    }

    {  // Closed-form cosh transform vs direct quadrature of the forward integral.
        const double pairs[][2] = {{0.0, 1.0}, {0.3, 1.0}, {0.49, 0.5}};
        double worst = 0.0;
        for (const auto& yb : pairs) {
            const double y = yb[0], b = yb[1];
            const double rate = kTwoPi * (b - std::abs(y));
            for (int i = 0; i < 50; ++i) {
                const double x = -4.0 + 8.0 * i / 49.0;
                const double L =
                    std::log(20.0 / (rate * 1e-11)) / rate;  // tail < 1e-11
                const auto fwd = quad::integrate_oscillatory(
                    [&](double t) {
                        return kernels::cosh_ratio(y, b, t) * std::cos(kTwoPi * x * t);
                    },
                    -L, L, kTwoPi * std::abs(x), cfg);
                const double closed = kernels::cosh_ratio_hat(y, b, x);
                worst = std::max(worst, std::abs(fwd.value - closed));
                if (!(closed > 0.0)) worst = 1.0;  // positivity is part of the claim
            }
        }
        s.record("kernels", "cosh transform pair (quadrature oracle)", worst,
                 s.tol(1e-8));
    }

    {  // Self-transform: integral of cos(2 pi z t)/cosh(2 pi b t) over the line.
        double worst = 0.0;
        for (const double b : {0.5, 1.0}) {
            for (const double z : {0.0, 0.5, 1.0, 2.0, 3.5}) {
                const auto got = quad::integrate_line_decaying(
                    [&](double t) {
                        return std::cos(kTwoPi * z * t) /
                               std::cosh(kTwoPi * b * t);
                    },
                    kTwoPi * b, cfg);
                const double closed =
                    1.0 / (2.0 * b * std::cosh(std::numbers::pi * z / (2.0 * b)));
                worst = std::max(worst, std::abs(got.value - closed));
            }
        }
        s.record("kernels", "sech self-transform identity", worst, s.tol(1e-8));
    }

    {  // K_b(z) = K_b(-z) for random complex z.
        std::mt19937_64 rng(20240817);
        std::uniform_real_distribution<double> u(-20.0, 20.0);
        double worst = 0.0;
        const TsangParams p{0.7, KernelId::MontgomeryTaylor};
        for (int i = 0; i < 100; ++i) {
            std::complex<double> z(u(rng), u(rng) * 0.1);
            if (std::abs(z) > 20.0) z /= 2.0;
            worst = std::max(
                worst, std::abs(kernels::tsang_K(p, z, cfg) -
                                kernels::tsang_K(p, -z, cfg)));
        }
        s.record("kernels", "tsang_K evenness (100 random z)", worst, s.tol(1e-9));
    }

    {  // Re K_b > 0 throughout the strip |y| < b.
        double least = 1.0;
        for (const double b : {0.25, 1.0, 4.0}) {
            for (const KernelId k : {KernelId::Fejer, KernelId::MontgomeryTaylor}) {
                const TsangParams p{b, k};
                for (int iy = 1; iy <= 9; ++iy) {
                    const double y = b * (iy / 10.0) * ((iy % 2) ? 1.0 : -1.0);
                    for (double x = -100.0; x <= 100.0; x += 0.5)
                        least = std::min(least, kernels::tsang_K_re(p, x, y, cfg));
                }
            }
        }
        s.record("kernels", "Re K_b positivity sweep (b in {0.25,1,4})", -least,
                 s.tol(0.0));
    }

    {  // |K_b(x)| (1 + x^2) stays bounded on the real axis.
        double worst = 0.0;
        const TsangParams p{1.0, KernelId::MontgomeryTaylor};
        for (double x = 1.0; x <= 500.0; x *= 1.15) {
            const double v = std::abs(kernels::tsang_K(p, x, cfg));
            worst = std::max(worst, v * (1.0 + x * x));
        }
        s.record("kernels", "real-axis decay |K_b(x)|(1+x^2) bounded", worst,
                 s.tol(2.0));
    }
}

void bounds_checks(Suite& s) {
    const auto cfg = tight_cfg();

    {  // 2 - C_b strictly decreasing in b for both kernels.
        double worst = -1.0;  // max of (coeff(b+h) - coeff(b)); negative means ok
        for (const KernelId k : {KernelId::Fejer, KernelId::MontgomeryTaylor}) {
            double prev = 2.0 - bounds::c_b(k, 0.0, cfg);
            for (double b = 0.1; b <= 4.5 + 1e-9; b += 0.1) {
                const double cur = 2.0 - bounds::c_b(k, b, cfg);
                worst = std::max(worst, cur - prev);
                prev = cur;
            }
        }
        s.record("bounds", "2 - C_b strictly decreasing on [0, 4.5]", worst,
                 s.tol(0.0));
    }

    {  // Montgomery-Taylor dominates Fejer everywhere in the working range.
        double worst = -1.0;
        for (double b = 0.001; b <= 4.05; b += 0.1) {
            const double gap = (2.0 - bounds::c_b(KernelId::MontgomeryTaylor, b, cfg)) -
                               (2.0 - bounds::c_b(KernelId::Fejer, b, cfg));
            worst = std::max(worst, -gap);
        }
        s.record("bounds", "j_M bound dominates j_F on [0.001, 4.05]", worst,
                 s.tol(0.0));
    }

    {  // Exact arithmetic identities of a BoundRow.
        double worst = 0.0;
        for (const double b : {0.0, 0.5, 1.7, 3.3}) {
            const auto row = bounds::proportions(KernelId::MontgomeryTaylor, b, cfg);
            worst = std::max(worst, std::abs(row.simple_critical_coeff -
                                             (2.0 * row.simple_coeff - 1.0)));
            worst = std::max(worst, std::abs(row.simple_coeff - row.critical_coeff));
        }
        s.record("bounds", "BoundRow arithmetic identities", worst, s.tol(1e-15));
    }

    {  // b -> 0 limit agrees with the cosh-free integrals.
        double worst = 0.0;
        for (const KernelId k : {KernelId::Fejer, KernelId::MontgomeryTaylor})
            worst = std::max(worst, std::abs(bounds::c_b(k, 1e-6, cfg) -
                                             bounds::c_b(k, 0.0, cfg)));
        s.record("bounds", "limit consistency c_b(1e-6) vs c_0", worst, s.tol(1e-5));
    }

    {  // Reference table reproduction, both kernels.
        double worst = 0.0;
        for (const auto& e : reference::kTableMT) {
            const auto row = bounds::proportions(KernelId::MontgomeryTaylor, e.b, cfg);
            worst = std::max(worst, std::abs(row.simple_coeff - e.simple));
            if (!std::isnan(e.simple_critical))
                worst = std::max(
                    worst, std::abs(row.simple_critical_coeff - e.simple_critical));
        }
        for (const auto& e : reference::kTableFejer) {
            const auto row = bounds::proportions(KernelId::Fejer, e.b, cfg);
            worst = std::max(worst, std::abs(row.simple_coeff - e.simple));
        }
        s.record("bounds", "reference table reproduction", worst, s.tol(2e-5));
    }
}

void paircorr_checks(Suite& s) {
    quad::QuadratureConfig cfg;
    cfg.abs_tol = 1e-9;
    cfg.rel_tol = 1e-9;
    cfg.max_panels = 60000;

    {  // Pair sum vs integral representation on random synthetic sets.
        double worst = 0.0;
        for (int set = 0; set < 5; ++set) {
            const auto ds = synthetic::online_set(1000 + set, 30, 20.0, 120.0);
            for (const double x : {1.0, 2.0, 10.0}) {
                pairsum::PairSumSpec spec;
                spec.x = x;
                spec.t_lo = 10.0;
                spec.t_hi = 130.0;
                const double direct = pairsum::F_pair_sum(ds, spec).value.real();
                const double integral = pairsum::F_integral_oracle(ds, x, cfg);
                worst = std::max(worst, std::abs(direct - integral));
            }
        }
        s.record("paircorr", "F pair sum vs integral representation", worst,
                 s.tol(1e-6));
    }

    {  // On-line datasets: complex-weight sum reduces to the Montgomery sum.
        const auto ds = synthetic::online_set(7, 40, 61.0, 119.0);
        double worst = 0.0;
        for (const double x : {2.0, 10.0}) {
            pairsum::PairSumSpec sw;
            sw.x = x;
            sw.t_lo = 60.0;
            sw.t_hi = 120.0;
            pairsum::PairSumSpec sW = sw;
            sW.weight = pairsum::PairWeight::Complex;
            const auto f = pairsum::F_pair_sum(ds, sw);
            const auto calf = pairsum::calF_pair_sum(ds, sW, 60.0);
            worst = std::max(worst, std::abs(calf.value - f.value));
        }
        s.record("paircorr", "calF reduces to F on the critical line", worst,
                 s.tol(1e-10));
    }

    {  // F(x) = F(1/x) and calF(x) = calF(1/x).
        const auto on = synthetic::online_set(11, 35, 41.0, 79.0);
        const auto off = synthetic::offline_set(12, 20, 4, 0.05, 41.0, 79.0);
        double worst = 0.0;
        for (const double x : {2.0, 10.0, 100.0}) {
            pairsum::PairSumSpec a;
            a.x = x;
            a.t_lo = 40.0;
            a.t_hi = 80.0;
            pairsum::PairSumSpec b = a;
            b.x = 1.0 / x;
            worst = std::max(worst, std::abs(pairsum::F_pair_sum(on, a).value -
                                             pairsum::F_pair_sum(on, b).value));
            a.weight = b.weight = pairsum::PairWeight::Complex;
            worst = std::max(worst, std::abs(pairsum::calF_pair_sum(off, a, 40.0).value -
                                             pairsum::calF_pair_sum(off, b, 40.0).value));
        }
        s.record("paircorr", "x -> 1/x symmetry of both pair sums", worst,
                 s.tol(1e-9));
    }

    {  // Kernel-weighted sum vs the alpha-integral of the empirical calF.
        const double T = 50.0;
        const auto ds = synthetic::offline_set(21, 50, 5, 0.02, T + 2.0, T + 6.0);
        double worst = 0.0;
        for (const auto& pk :
             {TsangParams{0.5, KernelId::Fejer},
              TsangParams{1.0, KernelId::MontgomeryTaylor}}) {
            const auto lhs = pairsum::kernel_weighted_sum(ds, pk, T, cfg);
            // Right side: uniform 201-point sampling of the weighted empirical
            // pair sum over alpha in [-1, 1], composite Simpson.
            std::vector<double> samples;
            samples.reserve(201);
            for (int i = 0; i <= 200; ++i) {
                const double alpha = -1.0 + i / 100.0;
                pairsum::PairSumSpec spec;
                spec.x = std::pow(T, alpha);
                spec.t_lo = T;
                spec.t_hi = 2.0 * T;
                spec.weight = pairsum::PairWeight::Complex;
                const double calf =
                    pairsum::calF_pair_sum(ds, spec, T).value.real();
                const double j = kernels::kernel(pk.kernel, alpha);
                const double weight =
                    pk.b == 0.0 ? j : j / std::cosh(pk.b * alpha);
                samples.push_back(weight * calf);
            }
            const double rhs =
                quad::simpson_uniform(samples, 0.01) / kTwoPi;
            worst = std::max(worst,
                             std::abs(lhs.real() - rhs) / std::abs(lhs.real()));
        }
        s.record("paircorr", "kernel sum identity (relative)", worst, s.tol(1e-3));
    }

    {  // Every retained kernel term has positive real part inside the box.
        const double T = 200.0;
        const double logT = std::log(T);
        const auto ds =
            synthetic::offline_set(31, 16, 4, 0.2 / logT, T + 1.0, T + 30.0);
        const TsangParams p{1.0, KernelId::MontgomeryTaylor};
        double least = 1.0;
        for (const auto& zi : ds.zeros)
            for (const auto& zj : ds.zeros) {
                if (std::abs(zi.beta - zj.beta) * logT >= p.b) continue;
                const std::complex<double> z((zj.gamma - zi.gamma) * logT,
                                             -(zj.beta - zi.beta) * logT);
                least =
                    std::min(least, kernels::tsang_K(p, z, tight_cfg()).real());
            }
        s.record("paircorr", "in-box kernel terms have Re K > 0", -least,
                 s.tol(0.0));
    }
}

void zeros_checks(Suite& s) {
    quad::QuadratureConfig cfg;

    {  // Count to T = 1000 against the counting main term.
        const auto ds = zeros::compute_zeros(10.0, 1000.0, cfg);
        const double expected = zeros::n_of_T(1000.0) - zeros::n_of_T(10.0);
        const double diff =
            std::abs(static_cast<double>(ds.size()) - expected);
        s.record("zeros", "zero count vs N(T) main term up to 1000", diff,
                 s.tol(2.0 + std::log(1000.0)));
    }

    {  // Refined ordinates really are roots, and are strictly increasing.
        const auto ds = zeros::compute_zeros(10.0, 200.0, cfg);
        double worst = 0.0;
        double prev = 0.0;
        for (const auto& z : ds.zeros) {
            worst = std::max(worst, std::abs(zeros::hardy_Z(z.gamma)));
            if (z.gamma <= prev) worst = 1.0;
            prev = z.gamma;
        }
        s.record("zeros", "|Z(gamma)| small at refined ordinates", worst,
                 s.tol(1e-6));
    }

    {  // Zero-density diagnostic stays within a fixed multiple of log t.
        const auto ds = zeros::compute_zeros(10.0, 2000.0, cfg);
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(20.0, 1990.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double t = u(rng);
            worst = std::max(
                worst, zeros::density_check(ds, t) / std::log(t + 2.0));
        }
        s.record("zeros", "density sum / log(t+2) bounded", worst, s.tol(3.0));
    }
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
    Suite s{opts, {}};
    if (s.wants("kernels")) kernel_checks(s);
    if (s.wants("bounds")) bounds_checks(s);
    if (s.wants("paircorr")) paircorr_checks(s);
    if (s.wants("zeros")) zeros_checks(s);
    return s.results;
}

}  // namespace zetapair::verify
