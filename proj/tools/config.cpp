#include "config.hpp"

#include <fstream>
#include <numbers>

#include <json.hpp>

namespace casinet::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw parse_error("config field '" + field + "': " + message, field);
}

const json& require(const json& node, const std::string& field, const std::string& path) {
    if (!node.contains(field)) fail(path.empty() ? field : path + "." + field, "missing");
    return node.at(field);
}

double number_at(const json& node, const std::string& field, const std::string& path) {
    const json& v = require(node, field, path);
    if (!v.is_number()) fail(path + "." + field, "expected a number");
    return v.get<double>();
}

std::string string_at(const json& node, const std::string& field, const std::string& path) {
    const json& v = require(node, field, path);
    if (!v.is_string()) fail(path + "." + field, "expected a string");
    return v.get<std::string>();
}

double omega_p_from(const json& node, const std::string& path) {
    const bool has_omega = node.contains("plasma_omega_rad_s");
    const bool has_lambda = node.contains("plasma_wavelength_m");
    if (has_omega == has_lambda)
        fail(path, "specify exactly one of plasma_omega_rad_s, plasma_wavelength_m");
    if (has_omega) return number_at(node, "plasma_omega_rad_s", path);
    const double lambda = number_at(node, "plasma_wavelength_m", path);
    if (!(lambda > 0.0)) fail(path + ".plasma_wavelength_m", "must be > 0");
    return 2.0 * std::numbers::pi * constants::c_light / lambda;
}

MediumModel model_from(const json& node, const std::string& path,
                       const std::filesystem::path& base_dir) {
    const std::string type = string_at(node, "type", path);
    try {
        if (type == "vacuum") return Vacuum{};
        if (type == "dielectric") return Dielectric(number_at(node, "epsilon", path));
        if (type == "plasma") return Plasma(omega_p_from(node, path));
        if (type == "drude")
            return Drude(omega_p_from(node, path), number_at(node, "gamma_rad_s", path));
        if (type == "tabulated") {
            const std::string file = string_at(node, "file", path);
            std::filesystem::path full = file;
            if (full.is_relative()) full = base_dir / full;
            std::ifstream in(full);
            if (!in) fail(path + ".file", "cannot open '" + full.string() + "'");
            return load_tabulated(in);
        }
    } catch (const validation_error& e) {
        fail(path, e.what());
    }
    fail(path + ".type", "unknown model type '" + type + "'");
}

MirrorSpec mirror_from(const json& node, const std::string& path,
                       const std::filesystem::path& base_dir) {
    const std::string type = string_at(node, "type", path);
    if (type == "perfect") return PerfectMirror{};
    if (type == "bulk") return BulkMirror{model_from(require(node, "model", path), path + ".model", base_dir)};
    if (type == "stack") {
        const json& layers = require(node, "layers", path);
        if (!layers.is_array()) fail(path + ".layers", "expected an array");
        LayerStack stack;
        int index = 0;
        for (const json& layer : layers) {
            const std::string lpath = path + ".layers[" + std::to_string(index++) + "]";
            const double thickness = number_at(layer, "thickness_m", lpath);
            if (!(thickness > 0.0)) fail(lpath + ".thickness_m", "must be > 0");
            stack.layers.push_back(
                {model_from(require(layer, "model", lpath), lpath + ".model", base_dir),
                 thickness});
        }
        return StackMirror{std::move(stack)};
    }
    fail(path + ".type", "unknown mirror type '" + type + "'");
}

std::vector<double> sweep_from(const json& node) {
    std::vector<double> gaps;
    if (node.contains("gap_values_m")) {
        const json& values = node.at("gap_values_m");
        if (!values.is_array()) fail("sweep.gap_values_m", "expected an array");
        for (const json& v : values) {
            if (!v.is_number()) fail("sweep.gap_values_m", "expected numbers");
            gaps.push_back(v.get<double>());
        }
    } else {
        const double lo = number_at(node, "gap_min_m", "sweep");
        const double hi = number_at(node, "gap_max_m", "sweep");
        const json& pj = require(node, "points", "sweep");
        if (!pj.is_number_integer()) fail("sweep.points", "expected an integer");
        const int points = pj.get<int>();
        if (points < 2) fail("sweep.points", "must be >= 2");
        if (!(lo > 0.0) || !(hi > lo)) fail("sweep", "need 0 < gap_min_m < gap_max_m");
        std::string spacing = node.value("spacing", std::string("log"));
        for (int i = 0; i < points; ++i) {
            const double w = static_cast<double>(i) / (points - 1);
            if (spacing == "log") {
                gaps.push_back(lo * std::pow(hi / lo, w));
            } else if (spacing == "linear") {
                gaps.push_back(lo + (hi - lo) * w);
            } else {
                fail("sweep.spacing", "expected 'log' or 'linear'");
            }
        }
    }
    if (gaps.empty()) fail("sweep.gap_values_m", "gap grid is empty");
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (!(gaps[i] > 0.0)) fail("sweep.gap_values_m", "gaps must be > 0");
        if (i > 0 && !(gaps[i] > gaps[i - 1]))
            fail("sweep.gap_values_m", "gaps must be strictly increasing");
    }
    return gaps;
}

}  // namespace

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open config file '" + path.string() + "'", "config");

    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        // nlohmann reports "... parse error at line L, column C: ...".
        throw parse_error(std::string("config is not valid JSON: ") + e.what(), "json");
    }

    RunConfig cfg;
    cfg.base_dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");

    const json& mirrors = require(root, "mirrors", "");
    if (!mirrors.is_object() || mirrors.empty()) fail("mirrors", "expected a nonempty object");
    for (const auto& [name, node] : mirrors.items())
        cfg.mirrors.emplace(name, mirror_from(node, "mirrors." + name, cfg.base_dir));

    const json& cavity = require(root, "cavity", "");
    cfg.mirror1 = string_at(cavity, "mirror1", "cavity");
    cfg.mirror2 = string_at(cavity, "mirror2", "cavity");
    cfg.area_m2 = number_at(cavity, "area_m2", "cavity");
    if (cavity.contains("gap_m")) cfg.gap_m = number_at(cavity, "gap_m", "cavity");

    for (const std::string& name : {cfg.mirror1, cfg.mirror2}) {
        if (!cfg.mirrors.count(name))
            fail("cavity", "mirror '" + name + "' is not defined under mirrors");
    }

    if (root.contains("sweep")) cfg.sweep_gaps_m = sweep_from(root.at("sweep"));

    if (root.contains("quadrature")) {
        const json& q = root.at("quadrature");
        if (q.contains("rel_tol")) cfg.quadrature.rel_tol = number_at(q, "rel_tol", "quadrature");
        if (q.contains("abs_tol_newton"))
            cfg.quadrature.abs_tol_newton = number_at(q, "abs_tol_newton", "quadrature");
        if (q.contains("max_subdivisions"))
            cfg.quadrature.max_subdivisions =
                static_cast<int>(number_at(q, "max_subdivisions", "quadrature"));
        if (q.contains("node_rule")) cfg.quadrature.node_rule = string_at(q, "node_rule", "quadrature");
        if (q.contains("threads"))
            cfg.quadrature.threads = static_cast<int>(number_at(q, "threads", "quadrature"));
    }

    if (root.contains("output")) {
        cfg.format = root.at("output").value("format", std::string("csv"));
        if (cfg.format != "csv" && cfg.format != "json")
            fail("output.format", "expected 'csv' or 'json'");
        cfg.output_path = root.at("output").value("path", std::string());
    }
    return cfg;
}

const MirrorSpec& find_mirror(const RunConfig& config, const std::string& name) {
    const auto it = config.mirrors.find(name);
    if (it == config.mirrors.end())
        throw parse_error("mirror '" + name + "' is not defined under mirrors", "mirrors");
    return it->second;
}

CavityConfig cavity_from(const RunConfig& config) {
    CavityConfig cavity;
    cavity.mirror1 = find_mirror(config, config.mirror1);
    cavity.mirror2 = find_mirror(config, config.mirror2);
    if (!config.gap_m)
        throw parse_error("config field 'cavity.gap_m': missing", "cavity.gap_m");
    cavity.gap = *config.gap_m;
    cavity.area = config.area_m2;
    cavity.quadrature = config.quadrature;
    return cavity;
}

}  // namespace casinet::cli
