#include "zetapair/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace zetapair::bounds {

using kernels::KernelId;

double c_b(KernelId kernel, double b, const quad::QuadratureConfig& cfg) {
    if (b < 0.0) throw std::domain_error("c_b: b must be >= 0");
    const auto weighted = [&](double alpha) {
        const double j = kernels::kernel(kernel, alpha);
        return b == 0.0 ? j : j / std::cosh(b * alpha);
    };
    const auto num_int = quad::integrate(
        [&](double a) { return a * weighted(a); }, 0.0, 1.0, cfg);
    const auto den_int = quad::integrate(weighted, 0.0, 1.0, cfg);
    if (!num_int.converged || !den_int.converged)
        throw std::runtime_error("c_b: quadrature did not converge");
    const double num = kernels::kernel_at_zero(kernel) + 2.0 * num_int.value;
    return num / (2.0 * den_int.value);
}

BoundRow proportions(KernelId kernel, double b, const quad::QuadratureConfig& cfg) {
    BoundRow row;
    row.b = b;
    row.kernel = kernel;
    row.c_b = c_b(kernel, b, cfg);
    row.simple_coeff = 2.0 - row.c_b;
    row.critical_coeff = 2.0 - row.c_b;
    row.simple_critical_coeff = 3.0 - 2.0 * row.c_b;
    return row;
}

std::vector<BoundRow> table(KernelId kernel, const std::vector<double>& b_values,
                            const quad::QuadratureConfig& cfg) {
    std::vector<BoundRow> rows;
    rows.reserve(b_values.size());
    for (const double b : b_values) rows.push_back(proportions(kernel, b, cfg));
    return rows;
}

double failure_threshold(KernelId kernel, BoundKind which,
                         const quad::QuadratureConfig& cfg) {
    const auto coeff = [&](double b) {
        const double c = c_b(kernel, b, cfg);
        return which == BoundKind::Simple ? 2.0 - c : 3.0 - 2.0 * c;
    };
    // Expand the bracket upward from b = 0 (coeff > 0 there, decreasing in b).
    double lo = 0.0;
    double hi = 1.0;
    while (hi < 16.0 && coeff(hi) > 0.0) {
        lo = hi;
        hi *= 2.0;
    }
    if (hi >= 16.0 && coeff(std::min(hi, 16.0)) > 0.0)
        throw std::runtime_error("failure_threshold: no root in (0, 16)");
    return quad::find_root(coeff, lo, std::min(hi, 16.0), 1e-4);
}

}  // namespace zetapair::bounds
