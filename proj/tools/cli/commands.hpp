#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ratiostat::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitVerifyFailed = 3;

struct SimulateConfig {
    std::string dist;
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    std::string out;      // empty: stdout
    bool log_domain = false;  // write log Y instead of Y (Y families only)
};

struct EstimateConfig {
    std::string data_path;  // empty: stdin
    double alpha = 2.0;
    std::size_t block_size = 0;  // 0: power-of-10 bracket of sqrt(N)
    std::size_t hill_k = 0;      // 0: N/100
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    bool log_domain = false;  // input file holds log Y
};

struct SweepConfig {
    std::string dist;
    double alpha = 2.0;
    std::string n_grid = "100,1000,10000";
    int replicates = 200;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string out;
};

struct VerifyConfig {
    std::optional<std::string> suite;
    std::optional<double> beta;
    std::optional<double> alpha;
    std::optional<double> tol;
    int replicates = 0;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string out;
};

int cmd_simulate(const SimulateConfig& config);
int cmd_estimate(const EstimateConfig& config);
int cmd_sweep(const SweepConfig& config);
int cmd_verify(const VerifyConfig& config);

}  // namespace ratiostat::cli
