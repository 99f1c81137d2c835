#include "ratiostat/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ratiostat/statistics.hpp"

namespace ratiostat {

namespace {

// Fill out[j] = worker(j) for j in [0, R).  Work is claimed through an
// atomic counter, so the assignment of replicates to threads is arbitrary
// but the buffer contents are not; every reduction below walks the buffer
// in index order.
void parallel_replicates(int R, int threads, const std::function<double(int)>& worker,
                         std::vector<double>& out) {
    out.assign(static_cast<std::size_t>(R), 0.0);
    int T = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (T < 1) T = 1;
    if (T > R) T = R;
    if (T == 1) {
        for (int j = 0; j < R; ++j) out[static_cast<std::size_t>(j)] = worker(j);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t) {
        pool.emplace_back([&] {
            try {
                for (;;) {
                    const int j = next.fetch_add(1, std::memory_order_relaxed);
                    if (j >= R) return;
                    out[static_cast<std::size_t>(j)] = worker(j);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(R, std::memory_order_relaxed);
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

McEstimate reduce_estimate(const std::vector<double>& buf, std::size_t n,
                           std::uint64_t seed) {
    const int R = static_cast<int>(buf.size());
    const double mean = compensated_sum(buf) / R;
    double ss = 0.0;
    for (double v : buf) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (R - 1));
    return McEstimate{mean, sd / std::sqrt(static_cast<double>(R)),
                      R, static_cast<std::int64_t>(n), seed};
}

}  // namespace

McEstimate mc_mean_s_n(const DistSpecY& yspec, Alpha alpha, std::size_t n, int R,
                       std::uint64_t seed, int threads) {
    validate_spec(yspec);
    if (n < 1) throw std::invalid_argument("mc_mean_s_n: require n >= 1");
    if (R < 2) throw std::invalid_argument("mc_mean_s_n: require R >= 2");
    std::vector<double> buf;
    parallel_replicates(
        R, threads,
        [&](int j) {
            RngStream stream = substream(seed, static_cast<std::uint64_t>(j));
            const std::vector<double> log_y = sample_y_log(yspec, n, stream);
            return stat_s_n_log(log_y, alpha.value);
        },
        buf);
    return reduce_estimate(buf, n, seed);
}

double theory_gamma(const DistSpecY& yspec, Alpha alpha) {
    if (const auto* p = std::get_if<ParetoY>(&yspec))
        return gamma_map(alpha, BetaIdx(p->beta)).value;
    if (const auto* p = std::get_if<PositiveStableY>(&yspec))
        return gamma_map(alpha, BetaIdx(p->beta)).value;
    if (std::get_if<SlowVaryY>(&yspec)) return 1.0;
    return 0.0;  // Exponential: E Y finite, S_n -> 0
}

SweepTable mc_sweep(const DistSpecY& yspec, Alpha alpha,
                    const std::vector<std::size_t>& n_grid, int R,
                    std::uint64_t seed, int threads) {
    if (n_grid.empty()) throw std::invalid_argument("mc_sweep: empty n grid");
    for (std::size_t i = 1; i < n_grid.size(); ++i)
        if (n_grid[i] <= n_grid[i - 1])
            throw std::invalid_argument("mc_sweep: n grid must be strictly increasing");
    const double theory = theory_gamma(yspec, alpha);
    SweepTable table;
    table.rows.reserve(n_grid.size());
    for (std::size_t n : n_grid) {
        const McEstimate est = mc_mean_s_n(yspec, alpha, n, R, seed, threads);
        table.rows.push_back(SweepRow{n, est, theory, std::abs(est.mean - theory)});
    }
    return table;
}

std::vector<double> mc_t_n_sample(const DistSpecX& xspec, const DistSpecY& yspec,
                                  std::size_t n, int R, std::uint64_t seed,
                                  int threads) {
    validate_spec(xspec);
    validate_spec(yspec);
    if (n < 1) throw std::invalid_argument("mc_t_n_sample: require n >= 1");
    if (R < 1) throw std::invalid_argument("mc_t_n_sample: require R >= 1");
    std::vector<double> buf;
    parallel_replicates(
        R, threads,
        [&](int j) {
            RngStream stream = substream(seed, static_cast<std::uint64_t>(j));
            const std::vector<double> log_y = sample_y_log(yspec, n, stream);
            const std::vector<double> x = sample_x(xspec, n, stream);
            return stat_t_n_log(x, log_y);
        },
        buf);
    return buf;
}

double ks_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("ks_distance: empty input");
    std::vector<double> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double va = sa[i], vb = sb[j];
        if (va <= vb)
            while (i < sa.size() && sa[i] == va) ++i;
        if (vb <= va)
            while (j < sb.size() && sb[j] == vb) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    return d;
}

McEstimate mc_levy_ratio(BetaIdx beta, Alpha alpha, int R, double tol,
                         std::uint64_t seed, int threads) {
    if (R < 2) throw std::invalid_argument("mc_levy_ratio: require R >= 2");
    if (!(tol > 0.0)) throw std::invalid_argument("mc_levy_ratio: require tol > 0");
    std::vector<double> buf;
    parallel_replicates(
        R, threads,
        [&](int j) {
            RngStream stream = substream(seed, static_cast<std::uint64_t>(j));
            const LevyPair pair = sample_levy_pair(beta, alpha, tol, stream);
            return std::exp(std::log(pair.v) - alpha.value * std::log(pair.u));
        },
        buf);
    return reduce_estimate(buf, 0, seed);
}

}  // namespace ratiostat
