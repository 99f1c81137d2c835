#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ratiostat {

// One numerical check: pass iff |measured - target| <= tolerance.
struct VerifyCheck {
    std::string suite;
    std::string name;
    double measured;
    double target;
    double tolerance;
    bool pass;
};

struct VerifyOptions {
    std::optional<std::string> suite;  // run everything when unset
    std::optional<double> beta;        // narrow the levy suite to one cell
    std::optional<double> alpha;
    std::optional<double> tol;         // override every tolerance
    int levy_replicates = 0;           // 0: committed default
    std::uint64_t seed = 0;
    int threads = 0;
};

// Known suites: levy, mellin, karamata, cf-condition, tail-constant,
// sandwich.  Throws std::invalid_argument for an unknown suite name.
std::vector<VerifyCheck> run_verify(const VerifyOptions& options);

}  // namespace ratiostat
