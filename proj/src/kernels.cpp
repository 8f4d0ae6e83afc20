#include "zetapair/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zetapair::kernels {

namespace {

constexpr double kPi = std::numbers::pi;

// Kernel constants from the standard library at runtime, never as decimals.
const double kSqrt2 = std::sqrt(2.0);
const double kMtNorm = 1.0 / (1.0 - std::cos(kSqrt2));

// sin(u/2)/u with the removable singularity at u = 0. Near the root the
// direct quotient loses digits, so switch to the Taylor expansion.
double half_sinc(double u) {
    if (std::abs(u) < 1e-4) {
        const double u2 = u * u;
        return 0.5 - u2 / 48.0 + u2 * u2 / 3840.0;
    }
    return std::sin(0.5 * u) / u;
}

void require_strip(double y, double b) {
    if (!(b > 0.0) || !(std::abs(y) < b))
        throw std::domain_error("cosh transform pair requires |y| < b");
}

}  // namespace

double fejer(double alpha) { return std::max(1.0 - std::abs(alpha), 0.0); }

double fejer_hat(double t) {
    if (std::abs(t) < 1e-8) return 1.0;
    const double s = std::sin(kPi * t) / (kPi * t);
    return s * s;
}

double mt(double alpha) {
    const double f = fejer(alpha);
    return kMtNorm * (std::sin(kSqrt2 * f) / (2.0 * kSqrt2) +
                      0.5 * f * std::cos(kSqrt2 * alpha));
}

double mt_hat(double w) {
    const double s = half_sinc(kSqrt2 - 2.0 * kPi * w) + half_sinc(kSqrt2 + 2.0 * kPi * w);
    return kMtNorm * s * s;
}

double kernel(KernelId id, double alpha) {
    return id == KernelId::Fejer ? fejer(alpha) : mt(alpha);
}

double kernel_hat(KernelId id, double t) {
    return id == KernelId::Fejer ? fejer_hat(t) : mt_hat(t);
}

double kernel_at_zero(KernelId id) { return kernel(id, 0.0); }

double cosh_ratio(double y, double b, double t) {
    require_strip(y, b);
    // cosh(2 pi y t) / cosh(2 pi b t), written so large t cannot overflow.
    const double u = 2.0 * kPi * std::abs(t);
    const double ay = std::abs(y);
    return std::exp(u * (ay - b)) * (1.0 + std::exp(-2.0 * u * ay)) /
           (1.0 + std::exp(-2.0 * u * b));
}

double cosh_ratio_hat(double y, double b, double x) {
    require_strip(y, b);
    // (1/b) cos(pi y/2b) cosh(pi x/2b) / (cos(pi y/b) + cosh(pi x/b)),
    // rescaled by e^{-pi|x|/b} to stay finite for large |x|.
    const double c = kPi * std::abs(x) / (2.0 * b);
    const double cy = std::cos(kPi * y / b);
    const double num = std::cos(kPi * y / (2.0 * b)) *
                       (std::exp(-c) + std::exp(-3.0 * c));
    const double den = 2.0 * cy * std::exp(-2.0 * c) + 1.0 + std::exp(-4.0 * c);
    return num / (b * den);
}

namespace {

// j(alpha)/cosh(b alpha) on [0, 1]; b = 0 leaves the kernel unweighted.
double weighted_kernel(const TsangParams& p, double alpha) {
    const double j = kernel(p.kernel, alpha);
    return p.b == 0.0 ? j : j / std::cosh(p.b * alpha);
}

quad::QuadratureResult cosine_form(const TsangParams& p, double omega,
                                   const quad::RealFn& trig,
                                   const quad::QuadratureConfig& cfg) {
    return quad::integrate_oscillatory(
        [&](double a) { return weighted_kernel(p, a) * trig(a); }, 0.0, 1.0, omega,
        cfg);
}

}  // namespace

std::complex<double> tsang_K(const TsangParams& params, std::complex<double> z,
                             const quad::QuadratureConfig& cfg) {
    if (params.b < 0.0) throw std::domain_error("tsang_K: b must be >= 0");
    const double x = z.real();
    const double y = z.imag();
    const double omega = std::abs(z);
    const auto re = cosine_form(
        params, omega,
        [&](double a) { return std::cos(x * a) * std::cosh(y * a); }, cfg);
    if (!re.converged) throw std::runtime_error("tsang_K: quadrature did not converge");
    double im_val = 0.0;
    if (y != 0.0) {
        const auto im = cosine_form(
            params, omega,
            [&](double a) { return -std::sin(x * a) * std::sinh(y * a); }, cfg);
        if (!im.converged)
            throw std::runtime_error("tsang_K: quadrature did not converge");
        im_val = im.value / kPi;
    }
    return {re.value / kPi, im_val};
}

double tsang_K_re(const TsangParams& params, double x, double y,
                  const quad::QuadratureConfig& cfg) {
    if (params.b < 0.0) throw std::domain_error("tsang_K_re: b must be >= 0");
    if (y != 0.0) require_strip(y, params.b);
    const auto res = cosine_form(
        params, std::abs(std::complex<double>(x, y)),
        [&](double a) { return std::cos(x * a) * std::cosh(y * a); }, cfg);
    if (!res.converged)
        throw std::runtime_error("tsang_K_re: quadrature did not converge");
    return res.value / kPi;
}

}  // namespace zetapair::kernels
