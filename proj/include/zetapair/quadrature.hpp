#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>

namespace zetapair::quad {

// Compensated (Kahan) accumulator. Panel contributions are added in a fixed
// order so results are bit-identical across runs.
class KahanSum {
public:
    void add(double x) {
        const double y = x - carry_;
        const double t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_panels = 20000;
    int rule_order = 16;  // nodes per panel; error estimate embeds order 8

    void validate() const {
        if (!(abs_tol > 0.0 && abs_tol < 1.0) || !(rel_tol > 0.0 && rel_tol < 1.0))
            throw std::invalid_argument("quadrature tolerances must lie in (0, 1)");
        if (max_panels < 1) throw std::invalid_argument("max_panels must be >= 1");
        if (rule_order < 2) throw std::invalid_argument("rule_order must be >= 2");
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels_used = 0;
    bool converged = false;
};

using RealFn = std::function<double(double)>;

// Adaptive Gauss-Legendre on [a, b]: order-16 panels, local error from the
// embedded order-8 rule, recursive bisection. Deterministic.
QuadratureResult integrate(const RealFn& f, double a, double b,
                           const QuadratureConfig& cfg);

// Same, but the interval is first split into panels of width <= pi/omega so
// an integrand oscillating like cos(omega*t) has at least one panel per
// half-period. omega <= 0 degrades to plain integrate().
QuadratureResult integrate_oscillatory(const RealFn& f, double a, double b,
                                       double omega, const QuadratureConfig& cfg);

// Integral over the whole line of f with |f(t)| <= amplitude * e^{-decay_rate |t|}
// eventually. Truncates to [-L, L] with the tail bound below abs_tol/10.
QuadratureResult integrate_line_decaying(const RealFn& f, double decay_rate,
                                         const QuadratureConfig& cfg,
                                         double amplitude = 1.0);

// Composite Simpson for uniformly spaced samples (odd count), spacing h.
double simpson_uniform(std::span<const double> samples, double h);

// Bisection/regula-falsi hybrid. Requires a sign change on [lo, hi].
double find_root(const RealFn& g, double lo, double hi, double tol);

// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1], computed at
// runtime by Newton iteration. Cached for n = 8 and 16.
void gauss_legendre(int n, std::span<double> nodes, std::span<double> weights);

}  // namespace zetapair::quad
