#include "zetapair/pair_sums.hpp"

#include "zetapair/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zetapair::pairsum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double montgomery_w(double u) { return 4.0 / (4.0 + u * u); }

std::complex<double> complex_W(std::complex<double> u) {
    const std::complex<double> den = 4.0 - u * u;
    // 4 - u^2 = 0 needs |Re u| = 2, impossible for zeros in the critical strip.
    assert(std::abs(den) > 1e-6);
    return 4.0 / den;
}

std::vector<zeros::Zero> window_zeros(const zeros::ZeroDataset& ds, double t_lo,
                                      double t_hi) {
    std::vector<zeros::Zero> out;
    for (const auto& z : ds.zeros)
        if (z.gamma > t_lo && z.gamma <= t_hi) out.push_back(z);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.gamma != b.gamma ? a.gamma < b.gamma : a.beta < b.beta;
    });
    return out;
}

long weighted_count(const std::vector<zeros::Zero>& zs) {
    long n = 0;
    for (const auto& z : zs) n += z.multiplicity;
    return n;
}

// Deterministic overcount of the discarded tail: beyond the gap, successive
// pairs are at least 1/d apart on average, with d the mean density at t_hi.
double truncation_bound(double gap, long n_zeros, double t_hi) {
    const double d = std::log(std::max(t_hi, 10.0) / kTwoPi) / kTwoPi;
    quad::KahanSum s;
    for (int k = 1; k < 1000000; ++k) {
        const double term = 4.0 / ((gap + k / d) * (gap + k / d));
        s.add(term);
        if (term < 1e-16) break;
    }
    return 2.0 * static_cast<double>(n_zeros) * s.value();
}

}  // namespace

void PairSumSpec::validate() const {
    if (!(x > 0.0)) throw std::invalid_argument("pair sum requires x > 0");
    if (!(t_lo < t_hi)) throw std::invalid_argument("pair sum requires t_lo < t_hi");
    if (truncation_gap && !(*truncation_gap >= 10.0))
        throw std::invalid_argument("truncation_gap must be >= 10");
}

PairSumResult F_pair_sum(const zeros::ZeroDataset& ds, const PairSumSpec& spec) {
    spec.validate();
    if (spec.weight != PairWeight::Montgomery)
        throw std::invalid_argument("F_pair_sum requires the Montgomery weight w");
    const auto zs = window_zeros(ds, spec.t_lo, spec.t_hi);
    if (zs.empty()) throw std::invalid_argument("F_pair_sum: empty window");

    const double logx = std::log(spec.x);
    PairSumResult res;
    res.n_zeros = weighted_count(zs);

    // Ordered pairs in (gamma, gamma') order: the diagonal plus twice the
    // cosine over i < j (imaginary parts cancel pairwise).
    quad::KahanSum acc;
    long pairs = 0;
    for (size_t i = 0; i < zs.size(); ++i) {
        const double mi = zs[i].multiplicity;
        acc.add(mi * mi);  // coincident-ordinate pairs: w(0) = 1, x^0 = 1
        pairs += zs[i].multiplicity * zs[i].multiplicity;
        for (size_t j = i + 1; j < zs.size(); ++j) {
            const double du = zs[j].gamma - zs[i].gamma;
            if (spec.truncation_gap && du > *spec.truncation_gap) break;
            const double mj = zs[j].multiplicity;
            acc.add(2.0 * mi * mj * std::cos(du * logx) * montgomery_w(du));
            pairs += 2 * zs[i].multiplicity * zs[j].multiplicity;
        }
    }
    res.value = acc.value();
    res.n_pairs_evaluated = pairs;
    res.truncation_error_bound =
        spec.truncation_gap
            ? truncation_bound(*spec.truncation_gap, res.n_zeros, spec.t_hi)
            : 0.0;
    return res;
}

PairSumResult calF_pair_sum(const zeros::ZeroDataset& ds, const PairSumSpec& spec,
                            double T) {
    spec.validate();
    if (spec.weight != PairWeight::Complex)
        throw std::invalid_argument("calF_pair_sum requires the complex weight W");
    const auto zs = window_zeros(ds, T, 2.0 * T);
    if (zs.empty()) throw std::invalid_argument("calF_pair_sum: empty window");

    const double logx = std::log(spec.x);
    PairSumResult res;
    res.n_zeros = weighted_count(zs);

    quad::KahanSum acc_re;
    quad::KahanSum acc_im;
    long pairs = 0;
    for (size_t i = 0; i < zs.size(); ++i) {
        const double mi = zs[i].multiplicity;
        acc_re.add(mi * mi);  // x^0 W(0) = 1
        pairs += zs[i].multiplicity * zs[i].multiplicity;
        for (size_t j = i + 1; j < zs.size(); ++j) {
            const double dg = zs[j].gamma - zs[i].gamma;
            if (spec.truncation_gap && dg > *spec.truncation_gap) break;
            const double db = zs[j].beta - zs[i].beta;
            const double mm = mi * zs[j].multiplicity;
            const std::complex<double> u(db, dg);  // rho_j - rho_i
            const std::complex<double> phase(std::cos(dg * logx), std::sin(dg * logx));
            const std::complex<double> fwd =
                std::pow(spec.x, db) * phase * complex_W(u);
            const std::complex<double> bwd =
                std::pow(spec.x, -db) * std::conj(phase) * complex_W(-u);
            const std::complex<double> term = mm * (fwd + bwd);
            acc_re.add(term.real());
            acc_im.add(term.imag());
            pairs += 2 * zs[i].multiplicity * zs[j].multiplicity;
        }
    }
    res.value = {acc_re.value(), acc_im.value()};
    res.n_pairs_evaluated = pairs;
    res.truncation_error_bound =
        spec.truncation_gap
            ? truncation_bound(*spec.truncation_gap, res.n_zeros, 2.0 * T)
            : 0.0;
    return res;
}

namespace {

// Integral of f over the whole line: an adaptive core around [lo, hi] plus
// both algebraic tails mapped to [0, 1) by t = edge +- s/(1-s).
double line_integral_algebraic(const quad::RealFn& f, double lo, double hi,
                               const quad::QuadratureConfig& cfg) {
    const auto core = quad::integrate(f, lo, hi, cfg);
    const auto upper = quad::integrate(
        [&](double s) {
            const double om = 1.0 - s;
            return f(hi + s / om) / (om * om);
        },
        0.0, 1.0 - 1e-8, cfg);
    const auto lower = quad::integrate(
        [&](double s) {
            const double om = 1.0 - s;
            return f(lo - s / om) / (om * om);
        },
        0.0, 1.0 - 1e-8, cfg);
    if (!core.converged || !upper.converged || !lower.converged)
        throw std::runtime_error("integral oracle: quadrature did not converge");
    quad::KahanSum s;
    s.add(lower.value);
    s.add(core.value);
    s.add(upper.value);
    return s.value();
}

void require_oracle_size(const zeros::ZeroDataset& ds) {
    if (ds.size() > 200)
        throw std::invalid_argument("integral oracle is limited to <= 200 zeros");
}

}  // namespace

double F_integral_oracle(const zeros::ZeroDataset& ds, double x,
                         const quad::QuadratureConfig& cfg) {
    require_oracle_size(ds);
    if (ds.empty()) return 0.0;
    const double logx = std::log(x);
    const auto f = [&](double t) {
        std::complex<double> s;
        for (const auto& z : ds.zeros) {
            const double d = t - z.gamma;
            const double den = 1.0 + d * d;
            s += static_cast<double>(z.multiplicity) *
                 std::complex<double>(std::cos(z.gamma * logx),
                                      std::sin(z.gamma * logx)) /
                 den;
        }
        return std::norm(s);
    };
    const double lo = ds.zeros.front().gamma - 10.0;
    const double hi = ds.zeros.back().gamma + 10.0;
    return (2.0 / kPi) * line_integral_algebraic(f, lo, hi, cfg);
}

double calF_integral_oracle(const zeros::ZeroDataset& ds, double x,
                            const quad::QuadratureConfig& cfg) {
    require_oracle_size(ds);
    if (ds.empty()) return 0.0;
    const double logx = std::log(x);
    const auto f = [&](double t) {
        std::complex<double> s;
        for (const auto& z : ds.zeros) {
            const std::complex<double> d(z.beta - 0.5, z.gamma - t);
            const std::complex<double> den = 1.0 - d * d;
            s += static_cast<double>(z.multiplicity) * std::pow(x, z.beta - 0.5) *
                 std::complex<double>(std::cos(z.gamma * logx),
                                      std::sin(z.gamma * logx)) /
                 den;
        }
        return std::norm(s);
    };
    const double lo = ds.zeros.front().gamma - 10.0;
    const double hi = ds.zeros.back().gamma + 10.0;
    return (2.0 / kPi) * line_integral_algebraic(f, lo, hi, cfg);
}

std::complex<double> kernel_weighted_sum(const zeros::ZeroDataset& ds,
                                         const kernels::TsangParams& params,
                                         double T,
                                         const quad::QuadratureConfig& cfg) {
    const auto zs = window_zeros(ds, T, 2.0 * T);
    if (zs.empty()) throw std::invalid_argument("kernel_weighted_sum: empty window");
    const double logT = std::log(T);
    quad::KahanSum acc_re;
    quad::KahanSum acc_im;
    const double k0 = kernels::tsang_K(params, 0.0, cfg).real();
    for (size_t i = 0; i < zs.size(); ++i) {
        const double mi = zs[i].multiplicity;
        acc_re.add(mi * mi * k0);  // z = 0, W(0) = 1
        for (size_t j = i + 1; j < zs.size(); ++j) {
            const double dg = zs[j].gamma - zs[i].gamma;
            const double db = zs[j].beta - zs[i].beta;
            const double mm = mi * zs[j].multiplicity;
            // -i(rho_j - rho_i) log T = (dg - i db) log T
            const std::complex<double> z(dg * logT, -db * logT);
            const std::complex<double> u(db, dg);
            const std::complex<double> fwd =
                kernels::tsang_K(params, z, cfg) * complex_W(u);
            const std::complex<double> bwd =
                kernels::tsang_K(params, -z, cfg) * complex_W(-u);
            const std::complex<double> term = mm * (fwd + bwd);
            acc_re.add(term.real());
            acc_im.add(term.imag());
        }
    }
    return {acc_re.value(), acc_im.value()};
}

DiagonalDecomposition diagonal_decomposition(const zeros::ZeroDataset& ds,
                                             const kernels::TsangParams& params,
                                             double T,
                                             const quad::QuadratureConfig& cfg) {
    const auto zs = window_zeros(ds, T, 2.0 * T);
    if (zs.empty())
        throw std::invalid_argument("diagonal_decomposition: empty window");
    const double logT = std::log(T);
    const double k0 = kernels::tsang_K(params, 0.0, cfg).real();

    DiagonalDecomposition out;
    quad::KahanSum diag;
    quad::KahanSum symdiag;
    for (const auto& z : zs) {
        const double m = z.multiplicity;
        diag.add(m * m * k0);  // m_rho^2 coincident pair occurrences
        if (z.beta != 0.5) {
            const std::complex<double> arg(0.0, -(2.0 * z.beta - 1.0) * logT);
            symdiag.add(m * m * kernels::tsang_K(params, arg, cfg).real());
        }
    }
    out.diagonal = diag.value();
    out.symmetric_diagonal = symdiag.value();

    // Remainder relative to the unweighted kernel sum over all ordered pairs.
    quad::KahanSum tot_re;
    quad::KahanSum tot_im;
    for (size_t i = 0; i < zs.size(); ++i) {
        const double mi = zs[i].multiplicity;
        tot_re.add(mi * mi * k0);
        for (size_t j = i + 1; j < zs.size(); ++j) {
            const double dg = zs[j].gamma - zs[i].gamma;
            const double db = zs[j].beta - zs[i].beta;
            const double mm = mi * zs[j].multiplicity;
            const std::complex<double> z(dg * logT, -db * logT);
            const std::complex<double> term =
                mm * (kernels::tsang_K(params, z, cfg) +
                      kernels::tsang_K(params, -z, cfg));
            tot_re.add(term.real());
            tot_im.add(term.imag());
        }
    }
    out.off_diagonal = std::complex<double>(tot_re.value(), tot_im.value()) -
                       out.diagonal - out.symmetric_diagonal;
    return out;
}

std::vector<FormFactorPoint> form_factor_curve(const zeros::ZeroDataset& ds,
                                               double T,
                                               const std::vector<double>& alpha_grid) {
    const auto zs = window_zeros(ds, T, 2.0 * T);
    if (zs.size() < 500)
        throw std::invalid_argument(
            "form_factor_curve: need >= 500 zeros in (T, 2T]");
    const double logT = std::log(T);
    const double norm = (T / kTwoPi) * logT;
    std::vector<FormFactorPoint> out;
    out.reserve(alpha_grid.size());
    for (const double alpha : alpha_grid) {
        if (!(alpha > 0.0))
            throw std::invalid_argument("form_factor_curve: alpha must be > 0");
        PairSumSpec spec;
        spec.x = std::pow(T, alpha);
        spec.t_lo = T;
        spec.t_hi = 2.0 * T;
        spec.weight = PairWeight::Complex;
        const auto sum = calF_pair_sum(ds, spec, T);
        FormFactorPoint p;
        p.alpha = alpha;
        p.empirical = sum.value.real() / norm;
        p.theory = std::pow(T, -2.0 * alpha) * logT + alpha;
        out.push_back(p);
    }
    return out;
}

EmpiricalBoundReport empirical_bound_pipeline(const zeros::ZeroDataset& ds,
                                              const kernels::TsangParams& params,
                                              double T,
                                              const quad::QuadratureConfig& cfg) {
    const auto zs = window_zeros(ds, T, 2.0 * T);
    if (zs.empty())
        throw std::invalid_argument("empirical_bound_pipeline: empty window");

    EmpiricalBoundReport rep;
    rep.T = T;
    rep.b = params.b;
    rep.kernel = params.kernel;
    rep.c_b = bounds::c_b(params.kernel, params.b, cfg);
    rep.asymptotic_simple_coeff = 2.0 - rep.c_b;

    const auto weighted = [&](double a) {
        const double j = kernels::kernel(params.kernel, a);
        return params.b == 0.0 ? j : j / std::cosh(params.b * a);
    };
    const auto alpha_int = quad::integrate(
        [&](double a) { return a * weighted(a); }, 0.0, 1.0, cfg);
    rep.rhs_coefficient =
        (kernels::kernel_at_zero(params.kernel) + 2.0 * alpha_int.value) /
        kTwoPi;

    const auto decomp = diagonal_decomposition(ds, params, T, cfg);
    rep.diagonal = decomp.diagonal;
    rep.symmetric_diagonal = decomp.symmetric_diagonal;

    quad::KahanSum m_sum;
    quad::KahanSum m2_sum;
    for (const auto& z : zs) {
        m_sum.add(z.multiplicity);
        m2_sum.add(static_cast<double>(z.multiplicity) * z.multiplicity);
    }
    rep.n_zeros_weighted = m_sum.value();
    rep.mult_weighted_sum = m2_sum.value();
    rep.implied_simple_count = 2.0 * rep.n_zeros_weighted - rep.mult_weighted_sum;
    rep.implied_simple_proportion =
        rep.implied_simple_count / rep.n_zeros_weighted;
    return rep;
}

}  // namespace zetapair::pairsum
