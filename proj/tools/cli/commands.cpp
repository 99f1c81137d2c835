#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "ratiostat/estimator.hpp"
#include "ratiostat/montecarlo.hpp"
#include "ratiostat/samplers.hpp"
#include "ratiostat/verify.hpp"

namespace ratiostat::cli {

namespace {

// Data/file problems map to exit code 2, usage problems to 1.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Dist mini-grammar: family:param:param, e.g. "pareto:0.5", "symstable:1.5:1".
std::vector<std::string> split_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ':')) parts.push_back(token);
    return parts;
}

double parse_param(const std::string& text, const std::string& spec) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0')
        throw std::invalid_argument("bad parameter '" + text + "' in dist '" + spec + "'");
    return v;
}

using AnySpec = std::variant<DistSpecY, DistSpecX>;

AnySpec parse_dist(const std::string& spec) {
    const std::vector<std::string> parts = split_spec(spec);
    if (parts.empty()) throw std::invalid_argument("empty dist spec");
    const std::string& family = parts[0];
    const auto arity = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() - 1 < lo || parts.size() - 1 > hi)
            throw std::invalid_argument("dist '" + spec + "': wrong parameter count");
    };
    AnySpec out;
    if (family == "pareto") {
        arity(1, 2);
        out = DistSpecY{ParetoY{parse_param(parts[1], spec),
                                parts.size() > 2 ? parse_param(parts[2], spec) : 1.0}};
    } else if (family == "slowvary") {
        arity(0, 0);
        out = DistSpecY{SlowVaryY{}};
    } else if (family == "posstable") {
        arity(1, 1);
        out = DistSpecY{PositiveStableY{parse_param(parts[1], spec)}};
    } else if (family == "exp") {
        arity(0, 1);
        out = DistSpecY{ExponentialY{parts.size() > 1 ? parse_param(parts[1], spec) : 1.0}};
    } else if (family == "normal") {
        arity(0, 1);
        out = DistSpecX{NormalX{parts.size() > 1 ? parse_param(parts[1], spec) : 1.0}};
    } else if (family == "rademacher") {
        arity(0, 0);
        out = DistSpecX{RademacherX{}};
    } else if (family == "symstable") {
        arity(1, 2);
        out = DistSpecX{SymStableX{parse_param(parts[1], spec),
                                   parts.size() > 2 ? parse_param(parts[2], spec) : 1.0}};
    } else {
        throw std::invalid_argument("unknown dist family '" + family + "'");
    }
    std::visit([](const auto& s) { validate_spec(s); }, out);
    return out;
}

DistSpecY parse_dist_y(const std::string& spec) {
    AnySpec any = parse_dist(spec);
    if (const auto* y = std::get_if<DistSpecY>(&any)) return *y;
    throw std::invalid_argument("dist '" + spec + "' is an X family; a positive Y family is required");
}

// Write either to the path or to stdout.
void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open output file '" + path + "'");
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw DataError("write failed for '" + path + "'");
}

// Newline-delimited floats; '#' lines are comments.  log_domain admits any
// finite value, otherwise entries must be positive.
std::vector<double> read_data(const std::string& path, bool log_domain) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!path.empty()) {
        file.open(path);
        if (!file) throw DataError("cannot open data file '" + path + "'");
        in = &file;
    }
    std::vector<double> data;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*in, line)) {
        ++line_no;
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        char* end = nullptr;
        const double v = std::strtod(line.c_str() + start, &end);
        while (end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
        if (end == line.c_str() + start || *end != '\0')
            throw DataError("line " + std::to_string(line_no) + ": not a number: '" + line + "'");
        if (!std::isfinite(v))
            throw DataError("line " + std::to_string(line_no) + ": nonfinite value");
        if (!log_domain && !(v > 0.0))
            throw DataError("line " + std::to_string(line_no) + ": nonpositive value");
        data.push_back(v);
    }
    return data;
}

int report_error(const std::exception& e, int code) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const DataError& e) {
        return report_error(e, kExitData);
    } catch (const std::invalid_argument& e) {
        return report_error(e, kExitUsage);
    } catch (const std::domain_error& e) {
        return report_error(e, kExitUsage);
    } catch (const std::exception& e) {
        return report_error(e, kExitData);
    }
}

}  // namespace

int cmd_simulate(const SimulateConfig& config) {
    return guarded([&] {
        const AnySpec spec = parse_dist(config.dist);
        if (config.n < 1) throw std::invalid_argument("simulate: require --n >= 1");
        std::string payload;
        payload.reserve(config.n * 20);
        RngStream stream = substream(config.seed, 0);
        std::vector<double> values;
        if (const auto* y = std::get_if<DistSpecY>(&spec)) {
            values = config.log_domain ? sample_y_log(*y, config.n, stream)
                                       : sample_y(*y, config.n, stream);
        } else {
            if (config.log_domain)
                throw std::invalid_argument("simulate: --log applies only to positive Y families");
            values = sample_x(std::get<DistSpecX>(spec), config.n, stream);
        }
        for (double v : values) {
            payload += format_double(v);
            payload += '\n';
        }
        write_output(config.out, payload);
        return kExitOk;
    });
}

int cmd_estimate(const EstimateConfig& config) {
    return guarded([&] {
        const std::vector<double> data = read_data(config.data_path, config.log_domain);
        const Alpha alpha(config.alpha);
        const std::size_t n = data.size();
        const std::size_t block =
            config.block_size > 0 ? config.block_size : default_block_size(n);
        if (n < 2 * block || block < 2)
            throw std::invalid_argument(
                "estimate: insufficient data (" + std::to_string(n) +
                " values, block size " + std::to_string(block) + ")");
        const BetaEstimate est = config.log_domain
                                     ? estimate_beta_log(data, alpha, block)
                                     : estimate_beta(data, alpha, block);
        std::size_t k = config.hill_k > 0 ? config.hill_k : n / 100;
        k = std::min(std::max<std::size_t>(k, 2), n - 1);
        const double hill = config.log_domain ? hill_estimator_log(data, k)
                                              : hill_estimator(data, k);
        nlohmann::ordered_json report{
            {"command", "estimate"},
            {"alpha", config.alpha},
            {"block_size", est.block_size},
            {"n_blocks", est.gamma_hat.replicates},
            {"gamma_hat", est.gamma_hat.mean},
            {"gamma_stderr", est.gamma_hat.std_error},
            {"beta_hat", est.beta_hat},
            {"ci_low", est.ci_low},
            {"ci_high", est.ci_high},
            {"hill_beta", hill},
            {"seed", config.seed},
        };
        std::string payload;
        if (config.format == "json") {
            payload = report.dump(2);
            payload += '\n';
        } else if (config.format == "csv") {
            payload =
                "command,alpha,block_size,n_blocks,gamma_hat,gamma_stderr,"
                "beta_hat,ci_low,ci_high,hill_beta,seed\n";
            payload += "estimate," + format_double(config.alpha) + ',' +
                       std::to_string(est.block_size) + ',' +
                       std::to_string(est.gamma_hat.replicates) + ',' +
                       format_double(est.gamma_hat.mean) + ',' +
                       format_double(est.gamma_hat.std_error) + ',' +
                       format_double(est.beta_hat) + ',' +
                       format_double(est.ci_low) + ',' +
                       format_double(est.ci_high) + ',' + format_double(hill) +
                       ',' + std::to_string(config.seed) + '\n';
        } else {
            throw std::invalid_argument("estimate: unknown format '" + config.format + "'");
        }
        write_output(config.out, payload);
        return kExitOk;
    });
}

int cmd_sweep(const SweepConfig& config) {
    return guarded([&] {
        const DistSpecY yspec = parse_dist_y(config.dist);
        const Alpha alpha(config.alpha);
        std::vector<std::size_t> grid;
        std::istringstream in(config.n_grid);
        std::string token;
        while (std::getline(in, token, ',')) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(token.c_str(), &end, 10);
            if (end == token.c_str() || *end != '\0' || v == 0)
                throw std::invalid_argument("sweep: malformed n grid '" + config.n_grid + "'");
            grid.push_back(static_cast<std::size_t>(v));
        }
        const SweepTable table = mc_sweep(yspec, alpha, grid, config.replicates,
                                          config.seed, config.threads);
        std::string payload = "n,estimate,stderr,gamma_theory,abs_error\n";
        for (const SweepRow& row : table.rows) {
            payload += std::to_string(row.n) + ',' +
                       format_double(row.estimate.mean) + ',' +
                       format_double(row.estimate.std_error) + ',' +
                       format_double(row.theory) + ',' +
                       format_double(row.abs_error) + '\n';
        }
        write_output(config.out, payload);
        return kExitOk;
    });
}

int cmd_verify(const VerifyConfig& config) {
    return guarded([&] {
        VerifyOptions options;
        options.suite = config.suite;
        options.beta = config.beta;
        options.alpha = config.alpha;
        options.tol = config.tol;
        options.levy_replicates = config.replicates;
        options.seed = config.seed;
        options.threads = config.threads;
        const std::vector<VerifyCheck> checks = run_verify(options);
        bool all_pass = true;
        nlohmann::ordered_json items = nlohmann::ordered_json::array();
        for (const VerifyCheck& check : checks) {
            all_pass = all_pass && check.pass;
            items.push_back(nlohmann::ordered_json{{"suite", check.suite},
                                                   {"name", check.name},
                                                   {"measured", check.measured},
                                                   {"target", check.target},
                                                   {"tolerance", check.tolerance},
                                                   {"pass", check.pass}});
        }
        nlohmann::ordered_json report{
            {"command", "verify"},
            {"seed", config.seed},
            {"checks", items},
            {"all_pass", all_pass},
        };
        std::string payload = report.dump(2);
        payload += '\n';
        write_output(config.out, payload);
        return all_pass ? kExitOk : kExitVerifyFailed;
    });
}

}  // namespace ratiostat::cli
