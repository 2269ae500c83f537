#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dynit/acceptance.hpp"
#include "dynit/experiments.hpp"

namespace {

// Seed precedence: explicit --seed flag, then DYNIT_SEED, then the spec file
// (or the built-in default for `accept`).
bool env_seed(std::uint64_t& out) {
    const char* v = std::getenv("DYNIT_SEED");
    if (!v) return false;
    out = std::strtoull(v, nullptr, 10);
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynit: dynamic interference threshold model for underlay spectrum sharing"};
    app.require_subcommand(1);

    std::string spec_path, out_dir = ".";
    std::uint64_t seed = 0, samples = 0;
    double tail_tol = 0.0, quad_tol = 0.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG seed (overrides DYNIT_SEED and the spec file)");
        cmd->add_option("--samples", samples, "Monte Carlo sample count");
        cmd->add_option("--out-dir", out_dir, "directory for CSV output")->capture_default_str();
        cmd->add_option("--tail-tol", tail_tol, "series truncation tail tolerance");
        cmd->add_option("--quad-tol", quad_tol, "capacity quadrature tolerance");
    };

    CLI::App* run = app.add_subcommand("run", "run one experiment spec and write its CSV");
    run->add_option("spec", spec_path, "experiment spec file (JSON)")->required();
    add_common(run);

    CLI::App* accept = app.add_subcommand("accept", "run the acceptance suite");
    add_common(accept);

    CLI::App* list = app.add_subcommand("list-figures", "list known figure ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& id : dynit::known_figure_ids()) std::cout << id << "\n";
            return 0;
        }
        if (run->parsed()) {
            dynit::ExperimentSpec spec = dynit::load_experiment_spec(spec_path);
            std::uint64_t env = 0;
            if (run->count("--seed"))
                spec.sim.seed = seed;
            else if (env_seed(env))
                spec.sim.seed = env;
            if (run->count("--samples")) spec.sim.n_samples = samples;
            if (run->count("--tail-tol")) spec.tail_tol = tail_tol;
            if (run->count("--quad-tol")) spec.quad_tol = quad_tol;
            const std::string path = dynit::run_experiment_to_file(spec, out_dir);
            std::cout << "wrote " << path << "\n";
            return 0;
        }
        // accept
        dynit::AcceptanceOptions opts;
        opts.out_dir = out_dir;
        std::uint64_t env = 0;
        if (accept->count("--seed"))
            opts.seed = seed;
        else if (env_seed(env))
            opts.seed = env;
        if (accept->count("--samples")) opts.n_samples = samples;
        if (accept->count("--tail-tol")) opts.tail_tol = tail_tol;
        if (accept->count("--quad-tol")) opts.quad_tol = quad_tol;
        const dynit::AcceptanceReport report = dynit::run_acceptance(opts);
        dynit::print_report(report, std::cout);
        return report.all_passed() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
