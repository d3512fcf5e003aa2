#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "diffwalk/config.hpp"
#include "diffwalk/experiments.hpp"

namespace {

constexpr int kExitConfigError = 1;
constexpr int kExitNumericalError = 2;

struct CommonOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_given = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "experiment config file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out-dir", opts.out_dir, "output directory (created if missing)");
    cmd->add_option("--seed", opts.seed, "RNG seed override")
        ->each([&opts](const std::string&) { opts.seed_given = true; });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"density-driven diffusion walk experiments"};
    app.require_subcommand(1);

    CommonOptions opts;
    CLI::App* fig2 = app.add_subcommand("fig2", "discrete vs continuous spread from x=0");
    CLI::App* fig3 = app.add_subcommand("fig3", "interface smoothness run from x=-0.1");
    CLI::App* swiss = app.add_subcommand("swissroll", "two-arm spiral diffusion snapshots");
    CLI::App* verify = app.add_subcommand("verify-paths", "path-measure consistency checks");
    CLI::App* classify = app.add_subcommand("classify", "similarity-vote classifier demo");
    for (CLI::App* cmd : {fig2, fig3, swiss, verify, classify}) add_common(cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    try {
        const diffwalk::Config config = diffwalk::Config::load(opts.config_path);
        const std::filesystem::path out_dir(opts.out_dir);
        const std::uint64_t seed =
            opts.seed_given ? opts.seed
                            : static_cast<std::uint64_t>(config.get_int("seed", 12345));
        if (fig2->parsed()) return diffwalk::run_fig2(config, out_dir);
        if (fig3->parsed()) return diffwalk::run_fig3(config, out_dir);
        if (swiss->parsed()) return diffwalk::run_swissroll(config, out_dir);
        if (verify->parsed()) return diffwalk::run_verify_paths(config, out_dir, seed);
        return diffwalk::run_classify(config, out_dir);
    } catch (const diffwalk::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericalError;
    }
}
