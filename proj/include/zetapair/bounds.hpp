#pragma once

#include <vector>

#include "zetapair/kernels.hpp"
#include "zetapair/quadrature.hpp"

namespace zetapair::bounds {

struct BoundRow {
    double b = 0.0;
    double c_b = 0.0;                   // the ratio controlling all three bounds
    double simple_coeff = 0.0;          // 2 - c_b
    double critical_coeff = 0.0;        // 2 - c_b
    double simple_critical_coeff = 0.0; // 3 - 2 c_b
    kernels::KernelId kernel = kernels::KernelId::Fejer;
};

// C_b(j) = (j(0) + 2 int_0^1 alpha j(alpha)/cosh(b alpha)) /
//          (2 int_0^1 j(alpha)/cosh(b alpha)).
double c_b(kernels::KernelId kernel, double b, const quad::QuadratureConfig& cfg);

// All three lower-bound coefficients at one b. Negative values are returned
// as-is; display clamping is the CLI's business.
BoundRow proportions(kernels::KernelId kernel, double b,
                     const quad::QuadratureConfig& cfg);

std::vector<BoundRow> table(kernels::KernelId kernel,
                            const std::vector<double>& b_values,
                            const quad::QuadratureConfig& cfg);

enum class BoundKind { Simple, SimpleCritical };

// b* where the chosen coefficient crosses zero, located to 1e-4 in (0, 16).
double failure_threshold(kernels::KernelId kernel, BoundKind which,
                         const quad::QuadratureConfig& cfg);

}  // namespace zetapair::bounds
