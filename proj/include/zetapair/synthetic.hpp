#pragma once

#include <cstdint>

#include "zetapair/zeta_zeros.hpp"

namespace zetapair::synthetic {

// n ordinates drawn uniformly in (t_lo, t_hi], sorted, separated by at least
// min_gap. All on the critical line, multiplicity 1. Deterministic in seed.
zeros::ZeroDataset online_set(std::uint64_t seed, int n, double t_lo, double t_hi,
                              double min_gap = 0.05);

// Like online_set, but n_pairs of the entries are replaced by symmetric
// off-line pairs (1/2 +- delta, gamma). delta < 1/2.
zeros::ZeroDataset offline_set(std::uint64_t seed, int n, int n_pairs,
                               double delta, double t_lo, double t_hi,
                               double min_gap = 0.05);

}  // namespace zetapair::synthetic
