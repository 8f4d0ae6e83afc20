#include "zetapair/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace zetapair::quad {

namespace {

struct Rule {
    std::array<double, 16> nodes{};
    std::array<double, 16> weights{};
    int n = 0;
};

void build_rule(int n, double* nodes, double* weights) {
    // Newton iteration on P_n; roots come in +/- pairs.
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

const Rule& cached_rule(int n) {
    static const Rule r8 = [] {
        Rule r;
        r.n = 8;
        build_rule(8, r.nodes.data(), r.weights.data());
        return r;
    }();
    static const Rule r16 = [] {
        Rule r;
        r.n = 16;
        build_rule(16, r.nodes.data(), r.weights.data());
        return r;
    }();
    return n == 8 ? r8 : r16;
}

double apply_rule(const Rule& r, const RealFn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    KahanSum s;
    for (int i = 0; i < r.n; ++i) s.add(r.weights[i] * f(c + h * r.nodes[i]));
    return h * s.value();
}

struct Worker {
    const RealFn& f;
    const QuadratureConfig& cfg;
    KahanSum sum;
    KahanSum err;
    int panels = 0;
    bool budget_ok = true;

    // Local tolerance is the global one scaled by the panel's share of the
    // total width, so the accumulated error respects the caller's budget.
    void run(double a, double b, double total_width, int depth) {
        if (!budget_ok) return;
        ++panels;
        const double coarse = apply_rule(cached_rule(8), f, a, b);
        const double fine = apply_rule(cached_rule(16), f, a, b);
        const double e = std::abs(fine - coarse);
        const double share = (b - a) / total_width;
        const double local_tol =
            std::max(cfg.abs_tol * share, cfg.rel_tol * std::abs(fine)) * 0.5;
        if (e <= local_tol || depth >= 48) {
            sum.add(fine);
            err.add(e);
            return;
        }
        if (panels >= cfg.max_panels) {
            sum.add(fine);
            err.add(e);
            budget_ok = false;
            return;
        }
        const double mid = 0.5 * (a + b);
        run(a, mid, total_width, depth + 1);
        run(mid, b, total_width, depth + 1);
    }
};

}  // namespace

void gauss_legendre(int n, std::span<double> nodes, std::span<double> weights) {
    if (n < 2 || nodes.size() < static_cast<size_t>(n) ||
        weights.size() < static_cast<size_t>(n))
        throw std::invalid_argument("gauss_legendre: bad size");
    build_rule(n, nodes.data(), weights.data());
}

QuadratureResult integrate(const RealFn& f, double a, double b,
                           const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    Worker w{f, cfg, {}, {}, 0, true};
    w.run(a, b, b - a, 0);
    res.value = w.sum.value();
    res.error_estimate = w.err.value();
    res.panels_used = w.panels;
    res.converged =
        w.budget_ok &&
        res.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(res.value));
    return res;
}

QuadratureResult integrate_oscillatory(const RealFn& f, double a, double b,
                                       double omega, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
    if (omega <= 0.0) return integrate(f, a, b, cfg);
    const double width = b - a;
    const int pieces = std::max(
        1, static_cast<int>(std::ceil(width * omega / std::numbers::pi)));
    QuadratureResult res;
    if (width == 0.0) {
        res.converged = true;
        return res;
    }
    Worker w{f, cfg, {}, {}, 0, true};
    for (int i = 0; i < pieces && w.budget_ok; ++i) {
        const double pa = a + width * i / pieces;
        const double pb = (i + 1 == pieces) ? b : a + width * (i + 1) / pieces;
        w.run(pa, pb, width, 0);
    }
    res.value = w.sum.value();
    res.error_estimate = w.err.value();
    res.panels_used = w.panels;
    res.converged =
        w.budget_ok &&
        res.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(res.value));
    return res;
}

QuadratureResult integrate_line_decaying(const RealFn& f, double decay_rate,
                                         const QuadratureConfig& cfg,
                                         double amplitude) {
    cfg.validate();
    if (!(decay_rate > 0.0))
        throw std::invalid_argument("integrate_line_decaying: decay_rate must be > 0");
    // Tail bound: int_L^inf M e^{-lambda t} dt = M e^{-lambda L} / lambda.
    const double target = cfg.abs_tol / 10.0;
    double L = std::log(std::max(1.0, 2.0 * amplitude / (decay_rate * target))) /
               decay_rate;
    L = std::max(L, 1.0);
    return integrate(f, -L, L, cfg);
}

double simpson_uniform(std::span<const double> samples, double h) {
    const size_t n = samples.size();
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("simpson_uniform: need an odd sample count >= 3");
    KahanSum s;
    s.add(samples.front());
    s.add(samples.back());
    for (size_t i = 1; i + 1 < n; ++i) s.add((i % 2 == 1 ? 4.0 : 2.0) * samples[i]);
    return s.value() * h / 3.0;
}

double find_root(const RealFn& g, double lo, double hi, double tol) {
    double flo = g(lo);
    double fhi = g(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(flo * fhi < 0.0))
        throw std::invalid_argument("find_root: no sign change on [lo, hi]");
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        // Regula-falsi step, fall back to bisection when it stalls near an end.
        double x = (lo * fhi - hi * flo) / (fhi - flo);
        if (!(x > lo + 1e-3 * (hi - lo) && x < hi - 1e-3 * (hi - lo)) ||
            (iter % 2 == 1))
            x = 0.5 * (lo + hi);
        const double fx = g(x);
        if (fx == 0.0) return x;
        if (flo * fx < 0.0) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace zetapair::quad
