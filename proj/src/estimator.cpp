#include "ratiostat/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ratiostat/statistics.hpp"

namespace ratiostat {

namespace {

double clip_gamma(double g) {
    // invert_gamma_map needs gamma in (0, 1]; values this close to 0 map
    // to beta indistinguishable from 1.
    return std::clamp(g, 1e-12, 1.0);
}

McEstimate blockwise_gamma(std::span<const double> data, Alpha alpha,
                           std::size_t block_size, bool log_domain,
                           const char* who) {
    if (block_size < 2)
        throw std::invalid_argument(std::string(who) + ": require block_size >= 2");
    if (data.size() < 2 * block_size)
        throw std::invalid_argument(std::string(who) + ": insufficient data (need >= 2 blocks)");
    for (double v : data) {
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(who) + ": entries must be finite");
        if (!log_domain && !(v > 0.0))
            throw std::invalid_argument(std::string(who) + ": entries must be positive");
    }
    const std::size_t m = data.size() / block_size;
    std::vector<double> per_block(m);
    for (std::size_t b = 0; b < m; ++b) {
        const auto block = data.subspan(b * block_size, block_size);
        per_block[b] = log_domain ? stat_s_n_log(block, alpha.value)
                                  : stat_s_n(block, alpha.value);
    }
    const double mean = compensated_sum(per_block) / static_cast<double>(m);
    double ss = 0.0;
    for (double v : per_block) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(m - 1));
    return McEstimate{mean, sd / std::sqrt(static_cast<double>(m)),
                      static_cast<int>(m), static_cast<std::int64_t>(block_size), 0};
}

BetaEstimate beta_from_gamma(const McEstimate& gamma_hat, Alpha alpha,
                             std::size_t block_size) {
    if (!(gamma_hat.mean > 0.0))
        throw std::runtime_error("estimate_beta: no heavy-tail evidence (gamma_hat <= 0)");
    const double g = clip_gamma(gamma_hat.mean);
    const double beta_hat = invert_gamma_map(alpha, GammaVal(g)).value;
    const double half = 1.96 * gamma_hat.std_error;
    const double g_lo = clip_gamma(gamma_hat.mean - half);
    const double g_hi = clip_gamma(gamma_hat.mean + half);
    // The map is decreasing, so the gamma interval endpoints swap.
    const double ci_low = invert_gamma_map(alpha, GammaVal(g_hi)).value;
    const double ci_high = invert_gamma_map(alpha, GammaVal(g_lo)).value;
    return BetaEstimate{beta_hat, gamma_hat, ci_low, ci_high,
                        EstimationMethod::ratio_inverse, block_size};
}

double hill_impl(std::span<const double> data, std::size_t k, bool log_domain) {
    const std::size_t n = data.size();
    if (k < 2 || k >= n)
        throw std::invalid_argument("hill_estimator: require 2 <= k < N");
    std::vector<double> top;
    top.reserve(n);
    for (double v : data) {
        if (!std::isfinite(v))
            throw std::invalid_argument("hill_estimator: entries must be finite");
        if (!log_domain && !(v > 0.0))
            throw std::invalid_argument("hill_estimator: entries must be positive");
        top.push_back(log_domain ? v : std::log(v));
    }
    std::partial_sort(top.begin(), top.begin() + static_cast<std::ptrdiff_t>(k + 1),
                      top.end(), std::greater<double>());
    std::vector<double> spacings(k);
    for (std::size_t i = 0; i < k; ++i) spacings[i] = top[i] - top[k];
    const double denom = compensated_sum(spacings);
    if (!(denom > 0.0))
        throw std::runtime_error("hill_estimator: zero log-spacing (tied order statistics)");
    return static_cast<double>(k) / denom;
}

}  // namespace

McEstimate estimate_gamma(std::span<const double> data, Alpha alpha,
                          std::size_t block_size) {
    return blockwise_gamma(data, alpha, block_size, false, "estimate_gamma");
}

McEstimate estimate_gamma_log(std::span<const double> log_data, Alpha alpha,
                              std::size_t block_size) {
    return blockwise_gamma(log_data, alpha, block_size, true, "estimate_gamma_log");
}

BetaEstimate estimate_beta(std::span<const double> data, Alpha alpha,
                           std::size_t block_size) {
    return beta_from_gamma(estimate_gamma(data, alpha, block_size), alpha, block_size);
}

BetaEstimate estimate_beta_log(std::span<const double> log_data, Alpha alpha,
                               std::size_t block_size) {
    return beta_from_gamma(estimate_gamma_log(log_data, alpha, block_size), alpha,
                           block_size);
}

double hill_estimator(std::span<const double> data, std::size_t k) {
    return hill_impl(data, k, false);
}

double hill_estimator_log(std::span<const double> log_data, std::size_t k) {
    return hill_impl(log_data, k, true);
}

std::size_t default_block_size(std::size_t n) {
    const double root = std::sqrt(static_cast<double>(n));
    const double exponent = std::round(std::log10(root));
    auto block = static_cast<std::size_t>(std::llround(std::pow(10.0, exponent)));
    block = std::max<std::size_t>(block, 2);
    if (block > n / 2) block = std::max<std::size_t>(n / 2, 2);
    return block;
}

}  // namespace ratiostat
