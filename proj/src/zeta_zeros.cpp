#include "zetapair/zeta_zeros.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace zetapair::zeros {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_height(double t) {
    if (!(t >= 10.0))
        throw std::domain_error("Riemann-Siegel evaluation requires t >= 10");
}

// Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p). The zeros of the
// denominator at p = 1/4, 3/4 are removable.
double rs_psi(double p) {
    const double a = kTwoPi * (p * p - p - 1.0 / 16.0);
    const double den = std::cos(kTwoPi * p);
    if (std::abs(den) < 1e-9) {
        // l'Hopital at the removable singularity.
        const double ap = kTwoPi * (2.0 * p - 1.0);
        return std::sin(a) * ap / (kTwoPi * std::sin(kTwoPi * p));
    }
    return std::cos(a) / den;
}

// Third derivative of Psi by a central 5-point stencil; accurate to ~1e-3
// relative, which keeps the C1 term's contribution well under the formula's
// own truncation error.
double rs_psi_d3(double p) {
    const double h = 0.01;
    return (-rs_psi(p - 2.0 * h) + 2.0 * rs_psi(p - h) - 2.0 * rs_psi(p + h) +
            rs_psi(p + 2.0 * h)) /
           (2.0 * h * h * h);
}

// Euler-Maclaurin zeta(1/2 + it), then Z = Re(e^{i theta} zeta). Used below
// t = 200 where the Riemann-Siegel corrections leave ~1e-3 residuals that
// would shift zero locations by more than 1e-5.
double em_Z(double t) {
    const std::complex<double> s(0.5, t);
    const int N = 16 + static_cast<int>(std::ceil(1.3 * t));
    std::complex<double> sum = 0.0;
    for (int n = 1; n < N; ++n)
        sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double dN = N;
    const std::complex<double> Npow = std::exp(-s * std::log(dN));
    sum += dN * Npow / (s - 1.0) + 0.5 * Npow;
    // Bernoulli tail B_2/2! ... B_10/10!: term k is
    // B_2k/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}.
    static const double bern[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0,
                                  -1.0 / 1209600.0, 1.0 / 47900160.0};
    std::complex<double> rising = s;  // s(s+1)...(s+2k-2)
    double Nk = dN;                   // N^{2k-1}
    for (int k = 1; k <= 5; ++k) {
        sum += bern[k - 1] * rising * Npow / Nk;
        rising *= (s + static_cast<double>(2 * k - 1)) *
                  (s + static_cast<double>(2 * k));
        Nk *= dN * dN;
    }
    const double theta = rs_theta(t);
    return (std::exp(std::complex<double>(0.0, theta)) * sum).real();
}

}  // namespace

double rs_theta(double t) {
    require_height(t);
    const double u = t / kTwoPi;
    return 0.5 * t * std::log(u) - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) +
           7.0 / (5760.0 * t * t * t) + 31.0 / (80640.0 * std::pow(t, 5));
}

double hardy_Z(double t) {
    require_height(t);
    if (t < 200.0) return em_Z(t);
    const double tau = t / kTwoPi;
    const double root = std::sqrt(tau);
    const int n_terms = static_cast<int>(root);
    const double p = root - n_terms;
    const double theta = rs_theta(t);
    quad::KahanSum s;
    for (int n = 1; n <= n_terms; ++n)
        s.add(std::cos(theta - t * std::log(static_cast<double>(n))) /
              std::sqrt(static_cast<double>(n)));
    const double c0 = rs_psi(p);
    const double c1 = -rs_psi_d3(p) / (96.0 * kPi * kPi);
    const double sign = (n_terms % 2 == 1) ? 1.0 : -1.0;
    const double correction =
        sign * std::pow(tau, -0.25) * (c0 + c1 / root);
    return 2.0 * s.value() + correction;
}

double n_of_T(double T) {
    if (!(T >= 2.0)) throw std::domain_error("n_of_T: T must be >= 2");
    const double u = T / kTwoPi;
    return u * std::log(u) - u + 7.0 / 8.0;
}

ZeroDataset compute_zeros(double t_min, double t_max,
                          const quad::QuadratureConfig& cfg) {
    (void)cfg;
    if (!(t_min >= 10.0) || !(t_max <= 1e6) || !(t_min <= t_max))
        throw std::domain_error("compute_zeros: need 10 <= t_min <= t_max <= 1e6");
    ZeroDataset ds;
    ds.t_min = t_min;
    ds.t_max = t_max;
    ds.source = Source::Computed;
    ds.on_line = true;
    if (t_min == t_max) return ds;

    const double expected = n_of_T(t_max) - n_of_T(t_min);
    const double slack = 2.0 + std::log(t_max);

    double points_per_gap = 6.0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        ds.zeros.clear();
        double t = t_min;
        double z_prev = hardy_Z(t);
        while (t < t_max) {
            const double mean_gap = kTwoPi / std::log(std::max(t, 10.0) / kTwoPi);
            const double step = std::min(mean_gap / points_per_gap, t_max - t);
            const double t_next = t + step;
            const double z_next = hardy_Z(t_next);
            if (z_prev == 0.0) {
                ds.zeros.push_back({0.5, t, 1});
            } else if (z_prev * z_next < 0.0) {
                const double gamma = quad::find_root(hardy_Z, t, t_next, 1e-9);
                ds.zeros.push_back({0.5, gamma, 1});
            }
            t = t_next;
            z_prev = z_next;
        }
        const double got = static_cast<double>(ds.zeros.size());
        if (std::abs(got - expected) <= slack) {
            ds.count_warning = false;
            return ds;
        }
        ds.count_warning = true;
        points_per_gap *= 2.0;  // densify and rescan
    }
    return ds;
}

double density_check(const ZeroDataset& dataset, double t) {
    quad::KahanSum s;
    for (const auto& z : dataset.zeros) {
        const double d = t - z.gamma;
        s.add(static_cast<double>(z.multiplicity) / (1.0 + d * d));
    }
    return s.value();
}

}  // namespace zetapair::zeros
