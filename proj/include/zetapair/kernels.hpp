#pragma once

#include <complex>

#include "zetapair/quadrature.hpp"

namespace zetapair::kernels {

enum class KernelId { Fejer, MontgomeryTaylor };

// Fejer kernel: max(1 - |alpha|, 0), supported on [-1, 1].
double fejer(double alpha);

// Its Fourier transform (sin pi t / pi t)^2, with the removable singularity
// at t = 0 handled.
double fejer_hat(double t);

// Montgomery-Taylor kernel, including the 1/(1 - cos sqrt2) prefactor.
double mt(double alpha);

// Fourier transform of mt; a perfect square, so >= 0 everywhere. The two
// removable singularities at 2 pi w = +-sqrt2 are handled by a local Taylor
// expansion of sin(u/2)/u.
double mt_hat(double w);

// Kernel dispatch.
double kernel(KernelId id, double alpha);
double kernel_hat(KernelId id, double t);
double kernel_at_zero(KernelId id);

struct TsangParams {
    double b = 0.0;  // box width in units of 1/log T; b = 0 means no cosh weight
    KernelId kernel = KernelId::Fejer;
};

// h_{y,b}(t) = cosh(2 pi y t) / cosh(2 pi b t). Requires |y| < b.
double cosh_ratio(double y, double b, double t);

// Its Fourier transform (closed form, strictly positive). Requires |y| < b.
double cosh_ratio_hat(double y, double b, double x);

// Tsang kernel K_b(z) = (1/pi) int_0^1 j(alpha)/cosh(b alpha) cos(z alpha) dalpha,
// evaluated by quadrature with at least one panel per half-period of the
// oscillation. Even and entire in z.
std::complex<double> tsang_K(const TsangParams& params, std::complex<double> z,
                             const quad::QuadratureConfig& cfg);

// Re K_b(x + iy) through the real-part integrand directly. Requires |y| < b;
// strictly positive there.
double tsang_K_re(const TsangParams& params, double x, double y,
                  const quad::QuadratureConfig& cfg);

}  // namespace zetapair::kernels
