#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>

#include "casinet/noise.hpp"
#include "config.hpp"
#include "output.hpp"

namespace casinet::cli {

namespace {

void apply_overrides(const CommonOptions& options, RunConfig& cfg) {
    if (options.format_override) cfg.format = *options.format_override;
    if (options.rel_tol_override) cfg.quadrature.rel_tol = *options.rel_tol_override;
    if (options.threads_override) cfg.quadrature.threads = *options.threads_override;
    if (cfg.format != "csv" && cfg.format != "json")
        throw parse_error("output format must be 'csv' or 'json'", "output.format");
}

int guarded(std::ostream& diag, const std::function<int()>& body) {
    try {
        return body();
    } catch (const quadrature_error& e) {
        diag << "error: " << e.what() << "\n";
        return kExitQuadrature;
    } catch (const parse_error& e) {
        diag << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const validation_error& e) {
        diag << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const error& e) {
        diag << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

// Output target: --out wins, then the config's output.path, then stdout.
int write_to(const CommonOptions& options, const RunConfig& cfg, std::ostream& diag,
             const std::function<void(std::ostream&)>& emit) {
    const std::string path = options.out_path.empty() ? cfg.output_path : options.out_path;
    if (path.empty() || path == "-") {
        emit(std::cout);
        return kExitOk;
    }
    std::ofstream out(path);
    if (!out) {
        diag << "error: cannot open output file '" << path << "'\n";
        return kExitConfig;
    }
    emit(out);
    return kExitOk;
}

}  // namespace

int run_force(const CommonOptions& options, std::ostream& diag) {
    return guarded(diag, [&] {
        RunConfig cfg = load_run_config(options.config_path);
        apply_overrides(options, cfg);
        const ForceResult result = force(cavity_from(cfg));
        return write_to(options, cfg, diag, [&](std::ostream& out) {
            write_force(out, result, cfg.format, {!options.no_header_timestamp});
        });
    });
}

int run_sweep(const CommonOptions& options, std::ostream& diag) {
    return guarded(diag, [&] {
        RunConfig cfg = load_run_config(options.config_path);
        apply_overrides(options, cfg);
        if (!cfg.sweep_gaps_m)
            throw parse_error("config field 'sweep': missing (needed by the sweep command)",
                              "sweep");
        CavityConfig cavity;
        cavity.mirror1 = find_mirror(cfg, cfg.mirror1);
        cavity.mirror2 = find_mirror(cfg, cfg.mirror2);
        cavity.gap = cfg.sweep_gaps_m->front();
        cavity.area = cfg.area_m2;
        cavity.quadrature = cfg.quadrature;
        const auto rows = sweep_length(cavity, *cfg.sweep_gaps_m);
        for (const SweepRow& row : rows) {
            if (!row.monotone_ok)
                diag << "warning: force not strictly decreasing at L = " << row.gap << " m\n";
        }
        return write_to(options, cfg, diag, [&](std::ostream& out) {
            write_sweep(out, rows, cfg.format, {!options.no_header_timestamp});
        });
    });
}

int run_reflectivity(const CommonOptions& options, const ReflectivityOptions& refl,
                     std::ostream& diag) {
    return guarded(diag, [&] {
        RunConfig cfg = load_run_config(options.config_path);
        apply_overrides(options, cfg);
        const MirrorSpec& mirror = find_mirror(cfg, refl.mirror);

        if (refl.axis != "imaginary" && refl.axis != "real")
            throw parse_error("reflectivity axis must be 'imaginary' or 'real'", "axis");
        if (!(refl.freq_min > 0.0) || !(refl.freq_max >= refl.freq_min) || refl.freq_points < 1)
            throw parse_error("reflectivity frequency grid: need 0 < min <= max, points >= 1",
                              "freq");
        if (refl.k_points < 1 || refl.k_min < 0.0 || refl.k_max < refl.k_min)
            throw parse_error("reflectivity k grid: need 0 <= min <= max, points >= 1", "k");

        std::vector<ReflectivityRow> rows;
        for (int i = 0; i < refl.freq_points; ++i) {
            const double w = refl.freq_points == 1
                                 ? 0.0
                                 : static_cast<double>(i) / (refl.freq_points - 1);
            const double freq = refl.log_freq
                                    ? refl.freq_min * std::pow(refl.freq_max / refl.freq_min, w)
                                    : refl.freq_min + (refl.freq_max - refl.freq_min) * w;
            for (int j = 0; j < refl.k_points; ++j) {
                const double kw =
                    refl.k_points == 1 ? 0.0 : static_cast<double>(j) / (refl.k_points - 1);
                const double k = refl.k_min + (refl.k_max - refl.k_min) * kw;
                const FrequencyPoint fp = refl.axis == "imaginary"
                                              ? FrequencyPoint::imaginary(freq)
                                              : FrequencyPoint::real(freq);
                for (const auto pol : {Polarization::TE, Polarization::TM}) {
                    const auto mode = TransverseMode::make(fp, k, pol);
                    ReflectivityRow row;
                    row.freq = freq;
                    row.k = k;
                    row.pol = pol;
                    std::visit(
                        [&](const auto& m) {
                            using T = std::decay_t<decltype(m)>;
                            if constexpr (std::is_same_v<T, PerfectMirror>) {
                                row.r = 1.0;
                                row.t = 0.0;
                            } else if constexpr (std::is_same_v<T, BulkMirror>) {
                                row.r = bulk_reflection(m.model, mode);
                                row.t = 0.0;
                            } else {
                                const ScatteringMatrix s = stack_scattering(m.stack, mode);
                                row.r = s.r;
                                row.t = s.t;
                            }
                        },
                        mirror);
                    rows.push_back(row);
                }
            }
        }
        return write_to(options, cfg, diag, [&](std::ostream& out) {
            write_reflectivity(out, rows, cfg.format, {!options.no_header_timestamp});
        });
    });
}

}  // namespace casinet::cli
