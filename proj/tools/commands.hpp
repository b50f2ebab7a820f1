#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace casinet::cli {

// Exit codes shared by the subcommands: 0 success, 2 configuration error,
// 3 quadrature failure, 1 anything else (and failed validation checks).
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitQuadrature = 3;

struct CommonOptions {
    std::string config_path;
    std::string out_path;  // empty: write to stdout
    std::optional<std::string> format_override;
    std::optional<double> rel_tol_override;
    std::optional<int> threads_override;
    bool no_header_timestamp = false;
};

int run_force(const CommonOptions& options, std::ostream& diag);
int run_sweep(const CommonOptions& options, std::ostream& diag);

struct ReflectivityOptions {
    std::string mirror;
    std::string axis = "imaginary";  // imaginary | real
    double freq_min = 0.0;
    double freq_max = 0.0;
    int freq_points = 0;
    bool log_freq = false;
    double k_min = 0.0;
    double k_max = 0.0;
    int k_points = 1;
};

int run_reflectivity(const CommonOptions& options, const ReflectivityOptions& refl,
                     std::ostream& diag);

struct ValidationOptions {
    std::uint64_t seed = 20030210;
    // Test hook: flips the sign of the slab Fresnel amplitudes before the
    // checks run, to demonstrate the suite catches a broken convention.
    bool mutate_fresnel_sign = false;
};

int run_validate(const ValidationOptions& options, std::ostream& out);

}  // namespace casinet::cli
