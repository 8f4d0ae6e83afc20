#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "zetapair/kernels.hpp"
#include "zetapair/quadrature.hpp"
#include "zetapair/zeta_zeros.hpp"

namespace zetapair::pairsum {

enum class PairWeight { Montgomery, Complex };  // w(u) = 4/(4+u^2), W(u) = 4/(4-u^2)

struct PairSumSpec {
    double x = 1.0;
    double t_lo = 0.0;  // window (t_lo, t_hi]
    double t_hi = 0.0;
    PairWeight weight = PairWeight::Montgomery;
    std::optional<double> truncation_gap;  // skip pairs with |gamma - gamma'| > gap

    void validate() const;
};

struct PairSumResult {
    std::complex<double> value;
    long n_zeros = 0;            // zeros in window, counted with multiplicity
    long n_pairs_evaluated = 0;  // ordered pairs actually summed
    double truncation_error_bound = 0.0;
};

// F(x,T): sum over ordered pairs of x^{i(gamma-gamma')} w(gamma-gamma').
// Real by pairwise cancellation; a zero of multiplicity m counts as m
// coincident zeros. With a truncation gap set, distant pairs are skipped and
// bounded via the mean zero density.
PairSumResult F_pair_sum(const zeros::ZeroDataset& ds, const PairSumSpec& spec);

// calF(x,T): sum of x^{rho-rho'} W(rho-rho') over the window (T, 2T].
// Reduces to F_pair_sum when every zero is on the critical line.
PairSumResult calF_pair_sum(const zeros::ZeroDataset& ds, const PairSumSpec& spec,
                            double T);

// Integral representations of the two pair sums (independent route used for
// cross-checking; restricted to small datasets).
double F_integral_oracle(const zeros::ZeroDataset& ds, double x,
                         const quad::QuadratureConfig& cfg);
double calF_integral_oracle(const zeros::ZeroDataset& ds, double x,
                            const quad::QuadratureConfig& cfg);

// sum over pairs of K_b(-i(rho-rho') log T) W(rho-rho'), window (T, 2T].
std::complex<double> kernel_weighted_sum(const zeros::ZeroDataset& ds,
                                         const kernels::TsangParams& params,
                                         double T,
                                         const quad::QuadratureConfig& cfg);

struct DiagonalDecomposition {
    double diagonal = 0.0;            // rho = rho' terms, multiplicity-weighted
    double symmetric_diagonal = 0.0;  // rho' = 1 - conj(rho) terms, beta != 1/2
    std::complex<double> off_diagonal;
};

// Splits the unweighted kernel sum (no W factor) over the window (T, 2T].
DiagonalDecomposition diagonal_decomposition(const zeros::ZeroDataset& ds,
                                             const kernels::TsangParams& params,
                                             double T,
                                             const quad::QuadratureConfig& cfg);

struct FormFactorPoint {
    double alpha = 0.0;
    double empirical = 0.0;  // calF(T^alpha, T) / ((T/2pi) log T)
    double theory = 0.0;     // T^{-2 alpha} log T + alpha
};

std::vector<FormFactorPoint> form_factor_curve(const zeros::ZeroDataset& ds,
                                               double T,
                                               const std::vector<double>& alpha_grid);

struct EmpiricalBoundReport {
    double T = 0.0;
    double b = 0.0;
    kernels::KernelId kernel = kernels::KernelId::Fejer;
    double c_b = 0.0;
    double asymptotic_simple_coeff = 0.0;  // 2 - c_b, the ideal-input bound
    double rhs_coefficient = 0.0;  // (j(0) + 2 int alpha j/cosh)/(2 pi), per (T/2pi) log T
    double diagonal = 0.0;
    double symmetric_diagonal = 0.0;
    double n_zeros_weighted = 0.0;      // sum of m_rho
    double mult_weighted_sum = 0.0;     // sum of m_rho^2
    double implied_simple_count = 0.0;  // 2 sum m - sum m^2
    double implied_simple_proportion = 0.0;
};

EmpiricalBoundReport empirical_bound_pipeline(const zeros::ZeroDataset& ds,
                                              const kernels::TsangParams& params,
                                              double T,
                                              const quad::QuadratureConfig& cfg);

}  // namespace zetapair::pairsum
