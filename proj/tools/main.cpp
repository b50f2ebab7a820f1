#include <iostream>

#include <CLI11.hpp>

#include "casinet/version.hpp"
#include "commands.hpp"

namespace {

void add_common(CLI::App* cmd, casinet::cli::CommonOptions& options, bool config_required = true) {
    cmd->add_option("--config", options.config_path, "Path to the JSON run configuration")
        ->required(config_required);
    cmd->add_option("--out", options.out_path, "Output file (default: stdout)");
    cmd->add_option_function<std::string>(
           "--format", [&options](const std::string& v) { options.format_override = v; },
           "Output format: csv or json (overrides the config)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option_function<double>(
        "--rel-tol", [&options](double v) { options.rel_tol_override = v; },
        "Quadrature relative tolerance override");
    cmd->add_option_function<int>(
        "--threads", [&options](int v) { options.threads_override = v; },
        "Worker threads for integrand evaluation (results are thread-count independent)");
    cmd->add_flag("--no-header-timestamp", options.no_header_timestamp,
                  "Omit the timestamp header line for byte-stable output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir force between multilayer mirrors via scattering networks"};
    app.set_version_flag("--version", std::string("casinet ") + casinet::version);
    app.require_subcommand(1);

    casinet::cli::CommonOptions force_opts;
    CLI::App* force_cmd = app.add_subcommand("force", "Evaluate the force for one cavity");
    add_common(force_cmd, force_opts);

    casinet::cli::CommonOptions sweep_opts;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Force over the configured gap grid");
    add_common(sweep_cmd, sweep_opts);

    casinet::cli::CommonOptions refl_opts;
    casinet::cli::ReflectivityOptions refl;
    CLI::App* refl_cmd =
        app.add_subcommand("reflectivity", "Mirror reflection spectrum over a mode grid");
    add_common(refl_cmd, refl_opts);
    refl_cmd->add_option("--mirror", refl.mirror, "Mirror name from the config")->required();
    refl_cmd->add_option("--axis", refl.axis, "Frequency axis: imaginary or real")
        ->check(CLI::IsMember({"imaginary", "real"}));
    refl_cmd->add_option("--freq-min", refl.freq_min, "Lowest frequency, rad/s")->required();
    refl_cmd->add_option("--freq-max", refl.freq_max, "Highest frequency, rad/s")->required();
    refl_cmd->add_option("--freq-points", refl.freq_points, "Frequency grid size")->required();
    refl_cmd->add_flag("--log-freq", refl.log_freq, "Logarithmic frequency spacing");
    refl_cmd->add_option("--k-min", refl.k_min, "Lowest transverse wavevector, rad/m");
    refl_cmd->add_option("--k-max", refl.k_max, "Highest transverse wavevector, rad/m");
    refl_cmd->add_option("--k-points", refl.k_points, "Transverse wavevector grid size");

    casinet::cli::ValidationOptions val;
    CLI::App* val_cmd =
        app.add_subcommand("validate", "Run the built-in physics invariant suite");
    val_cmd->add_option("--seed", val.seed, "Random seed for the property checks");

    CLI11_PARSE(app, argc, argv);

    if (force_cmd->parsed()) return casinet::cli::run_force(force_opts, std::cerr);
    if (sweep_cmd->parsed()) return casinet::cli::run_sweep(sweep_opts, std::cerr);
    if (refl_cmd->parsed()) return casinet::cli::run_reflectivity(refl_opts, refl, std::cerr);
    if (val_cmd->parsed()) return casinet::cli::run_validate(val, std::cout);
    return casinet::cli::kExitFailure;
}
