#include "zetapair/synthetic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace zetapair::synthetic {

namespace {

std::vector<double> spaced_ordinates(std::mt19937_64& rng, int n, double t_lo,
                                     double t_hi, double min_gap) {
    std::uniform_real_distribution<double> dist(t_lo + min_gap, t_hi);
    std::vector<double> g;
    g.reserve(n);
    int guard = 0;
    while (static_cast<int>(g.size()) < n) {
        if (++guard > 100000)
            throw std::runtime_error("synthetic: cannot place ordinates with min_gap");
        const double cand = dist(rng);
        bool ok = true;
        for (const double v : g)
            if (std::abs(v - cand) < min_gap) {
                ok = false;
                break;
            }
        if (ok) g.push_back(cand);
    }
    std::sort(g.begin(), g.end());
    return g;
}

}  // namespace

zeros::ZeroDataset online_set(std::uint64_t seed, int n, double t_lo, double t_hi,
                              double min_gap) {
    std::mt19937_64 rng(seed);
    zeros::ZeroDataset ds;
    ds.t_min = t_lo;
    ds.t_max = t_hi;
    ds.source = zeros::Source::Synthetic;
    ds.on_line = true;
    for (const double g : spaced_ordinates(rng, n, t_lo, t_hi, min_gap))
        ds.zeros.push_back({0.5, g, 1});
    return ds;
}

zeros::ZeroDataset offline_set(std::uint64_t seed, int n, int n_pairs,
                               double delta, double t_lo, double t_hi,
                               double min_gap) {
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("offline_set: delta must be in (0, 1/2)");
    if (n_pairs > n) throw std::invalid_argument("offline_set: n_pairs > n");
    std::mt19937_64 rng(seed);
    zeros::ZeroDataset ds;
    ds.t_min = t_lo;
    ds.t_max = t_hi;
    ds.source = zeros::Source::Synthetic;
    ds.on_line = false;
    const auto g = spaced_ordinates(rng, n, t_lo, t_hi, min_gap);
    // Off-line zeros come in symmetric pairs (beta, gamma), (1-beta, gamma).
    for (int i = 0; i < n; ++i) {
        if (i < n_pairs) {
            ds.zeros.push_back({0.5 - delta, g[i], 1});
            ds.zeros.push_back({0.5 + delta, g[i], 1});
        } else {
            ds.zeros.push_back({0.5, g[i], 1});
        }
    }
    std::sort(ds.zeros.begin(), ds.zeros.end(), [](const auto& a, const auto& b) {
        return a.gamma != b.gamma ? a.gamma < b.gamma : a.beta < b.beta;
    });
    return ds;
}

}  // namespace zetapair::synthetic
