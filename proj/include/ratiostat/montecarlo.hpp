#pragma once

#include <cstdint>
#include <vector>

#include "ratiostat/samplers.hpp"
#include "ratiostat/special_functions.hpp"

namespace ratiostat {

// Point estimate from R independent replicates.  std_error is the sample
// standard deviation across replicates divided by sqrt(R).
struct McEstimate {
    double mean;
    double std_error;
    int replicates;
    std::int64_t n;
    std::uint64_t seed;
};

struct SweepRow {
    std::size_t n;
    McEstimate estimate;
    double theory;
    double abs_error;
};

struct SweepTable {
    std::vector<SweepRow> rows;
};

// Replicate j always draws from substream(seed, j) and results are reduced
// in index order, so every operation below returns identical values for
// any worker-thread count.  threads <= 0 means hardware concurrency.

// Mean of S_n(alpha) over R replicates of size n from yspec.
McEstimate mc_mean_s_n(const DistSpecY& yspec, Alpha alpha, std::size_t n, int R,
                       std::uint64_t seed, int threads = 0);

// mc_mean_s_n across an increasing n-grid, with the limiting value for the
// family (gamma_map for Pareto/PositiveStable, 1 for SlowVary, 0 for the
// finite-mean Exponential control) and the absolute error per row.
SweepTable mc_sweep(const DistSpecY& yspec, Alpha alpha,
                    const std::vector<std::size_t>& n_grid, int R,
                    std::uint64_t seed, int threads = 0);

// The limit of E S_n(alpha) for the family, as used by mc_sweep.
double theory_gamma(const DistSpecY& yspec, Alpha alpha);

// R independent realizations of T_n; replicate j draws Y then X from
// substream(seed, j).
std::vector<double> mc_t_n_sample(const DistSpecX& xspec, const DistSpecY& yspec,
                                  std::size_t n, int R, std::uint64_t seed,
                                  int threads = 0);

// Two-sample Kolmogorov-Smirnov statistic, ties handled exactly.
double ks_distance(const std::vector<double>& a, const std::vector<double>& b);

// Mean of V/U^alpha over R LePage pairs: Monte Carlo oracle for
// gamma_map(alpha, beta) that never touches the Gamma function.
McEstimate mc_levy_ratio(BetaIdx beta, Alpha alpha, int R, double tol,
                         std::uint64_t seed, int threads = 0);

}  // namespace ratiostat
