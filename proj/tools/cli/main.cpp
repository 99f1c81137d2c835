#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    namespace cli = ratiostat::cli;
    CLI::App app{"Simulation and inference for self-normalized ratio statistics"};
    app.require_subcommand(1);

    cli::SimulateConfig sim;
    CLI::App* simulate = app.add_subcommand("simulate", "draw samples to a data file");
    simulate->add_option("--dist", sim.dist, "family spec, e.g. pareto:0.5 or normal:1")
        ->required();
    simulate->add_option("--n", sim.n, "number of draws");
    simulate->add_option("--seed", sim.seed, "rng seed");
    simulate->add_option("--out", sim.out, "output path (default stdout)");
    simulate->add_flag("--log", sim.log_domain, "write log Y instead of Y");

    cli::EstimateConfig est;
    CLI::App* estimate = app.add_subcommand("estimate", "tail index from a data file");
    estimate->add_option("data", est.data_path, "data file (default stdin)");
    estimate->add_option("--alpha", est.alpha, "ratio statistic exponent");
    estimate->add_option("--block-size", est.block_size,
                         "block length (default: power-of-10 bracket of sqrt(N))");
    estimate->add_option("--hill-k", est.hill_k, "Hill order statistics (default N/100)");
    estimate->add_option("--seed", est.seed, "seed recorded in the report");
    estimate->add_option("--out", est.out, "output path (default stdout)");
    estimate->add_option("--format", est.format, "json or csv");
    estimate->add_flag("--log", est.log_domain, "input holds log Y");

    cli::SweepConfig sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "E S_n(alpha) across an n-grid");
    sweep_cmd->add_option("--dist", sweep.dist, "positive Y family spec")->required();
    sweep_cmd->add_option("--alpha", sweep.alpha, "ratio statistic exponent");
    sweep_cmd->add_option("--n-grid", sweep.n_grid, "comma list, e.g. 100,1000,10000");
    sweep_cmd->add_option("--replicates", sweep.replicates, "replicates per grid point");
    sweep_cmd->add_option("--seed", sweep.seed, "rng seed");
    sweep_cmd->add_option("--threads", sweep.threads, "worker threads (0: all)");
    sweep_cmd->add_option("--out", sweep.out, "output path (default stdout)");

    cli::VerifyConfig verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the numerical check suites");
    verify_cmd->add_option("--suite", verify.suite,
                           "levy | mellin | karamata | cf-condition | tail-constant | sandwich");
    verify_cmd->add_option("--beta", verify.beta, "levy suite: single beta");
    verify_cmd->add_option("--alpha", verify.alpha, "levy suite: single alpha");
    verify_cmd->add_option("--tol", verify.tol, "override every tolerance");
    verify_cmd->add_option("--replicates", verify.replicates, "levy suite replicates");
    verify_cmd->add_option("--seed", verify.seed, "rng seed");
    verify_cmd->add_option("--threads", verify.threads, "worker threads (0: all)");
    verify_cmd->add_option("--out", verify.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kExitOk : cli::kExitUsage;
    }

    if (simulate->parsed()) return cli::cmd_simulate(sim);
    if (estimate->parsed()) return cli::cmd_estimate(est);
    if (sweep_cmd->parsed()) return cli::cmd_sweep(sweep);
    return cli::cmd_verify(verify);
}
