#pragma once

#include <cstddef>
#include <span>

#include "ratiostat/montecarlo.hpp"
#include "ratiostat/special_functions.hpp"

namespace ratiostat {

enum class EstimationMethod { ratio_inverse, hill };

struct BetaEstimate {
    double beta_hat;       // in [0, 1)
    McEstimate gamma_hat;  // block-mean of S_n(alpha)
    double ci_low;         // 95% interval, clipped to [0, 1)
    double ci_high;
    EstimationMethod method;
    std::size_t block_size;
};

// Mean and standard error of S_block(alpha) over the floor(N/block_size)
// consecutive blocks of the data; the leftover tail is discarded.  The
// returned McEstimate has n = block_size, replicates = number of blocks,
// seed = 0 (data needs no generator).
McEstimate estimate_gamma(std::span<const double> data, Alpha alpha,
                          std::size_t block_size);

// beta_hat = invert_gamma_map(alpha, gamma_hat); the 95% CI is the image
// of gamma_hat -+ 1.96 se under the (decreasing) inverse map, so the
// endpoints swap.
BetaEstimate estimate_beta(std::span<const double> data, Alpha alpha,
                           std::size_t block_size);

// Hill's estimator of the tail index from the top k log-spacings:
// k / sum_{i=1..k} log(Y_(i) / Y_(k+1)) with descending order statistics.
double hill_estimator(std::span<const double> data, std::size_t k);

// Log-domain twins for data stored as log Y (the SlowVary interchange
// format; exp(1/U) draws overflow a double roughly once per 700 draws).
McEstimate estimate_gamma_log(std::span<const double> log_data, Alpha alpha,
                              std::size_t block_size);
BetaEstimate estimate_beta_log(std::span<const double> log_data, Alpha alpha,
                               std::size_t block_size);
double hill_estimator_log(std::span<const double> log_data, std::size_t k);

// Power of 10 nearest to sqrt(n) in log10, clamped so at least two full
// blocks fit.
std::size_t default_block_size(std::size_t n);

}  // namespace ratiostat
