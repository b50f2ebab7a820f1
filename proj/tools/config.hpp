#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casinet/force.hpp"

namespace casinet::cli {

// Parsed run configuration. The JSON schema carries units in the field names
// (gap_m, area_m2, plasma_wavelength_m, ...) to keep unit bugs out of configs.
struct RunConfig {
    std::map<std::string, MirrorSpec> mirrors;
    std::string mirror1;
    std::string mirror2;
    std::optional<double> gap_m;
    double area_m2 = 0.0;
    std::optional<std::vector<double>> sweep_gaps_m;
    QuadratureSpec quadrature;
    std::string format = "csv";   // csv | json
    std::string output_path;      // default output target; empty = stdout
    std::filesystem::path base_dir;
};

RunConfig load_run_config(const std::filesystem::path& path);

// Assembles the cavity for single-gap commands; throws parse_error when the
// config lacks a gap or references unknown mirrors.
CavityConfig cavity_from(const RunConfig& config);

const MirrorSpec& find_mirror(const RunConfig& config, const std::string& name);

}  // namespace casinet::cli
