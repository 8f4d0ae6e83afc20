#pragma once

#include <vector>

#include "zetapair/quadrature.hpp"

namespace zetapair::zeros {

struct Zero {
    double beta = 0.5;
    double gamma = 0.0;
    int multiplicity = 1;
};

enum class Source { Computed, File, Synthetic };

struct ZeroDataset {
    std::vector<Zero> zeros;  // ordered by increasing gamma
    double t_min = 0.0;
    double t_max = 0.0;
    Source source = Source::Computed;
    bool on_line = true;
    // Set when the sign-change count disagrees with N(T) beyond 2 + log t_max
    // after grid-densification retries. Never silent.
    bool count_warning = false;

    std::size_t size() const { return zeros.size(); }
    bool empty() const { return zeros.empty(); }
};

// Riemann-Siegel theta from its asymptotic expansion; t >= 10.
double rs_theta(double t);

// Hardy Z; t >= 10. Z(t) = 0 exactly at the ordinates of on-line zeros.
// Below t = 200 an Euler-Maclaurin evaluation of zeta(1/2 + it) is used
// (the Riemann-Siegel corrections are too coarse there for 1e-5 zero
// locations); above, the Riemann-Siegel formula with the leading two
// correction terms.
double hardy_Z(double t);

// Scan [t_min, t_max] for sign changes of Z (>= 6 grid points per mean gap),
// refine each root to 1e-9, and cross-check the count against n_of_T.
ZeroDataset compute_zeros(double t_min, double t_max,
                          const quad::QuadratureConfig& cfg);

// Main term of the zero-counting function, (T/2pi) log(T/2pi) - T/2pi + 7/8.
double n_of_T(double T);

// sum over the dataset of 1/(1 + (t-gamma)^2); diagnostic for the log-density
// bound.
double density_check(const ZeroDataset& dataset, double t);

}  // namespace zetapair::zeros
