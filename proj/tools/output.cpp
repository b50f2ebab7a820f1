#include "output.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include <json.hpp>

#include "casinet/version.hpp"

namespace casinet::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void csv_header(std::ostream& out, const HeaderOptions& header) {
    out << "# casinet " << version << "\n";
    if (header.timestamp) out << "# generated " << utc_now() << "\n";
}

ordered_json json_meta(const HeaderOptions& header) {
    ordered_json meta;
    meta["casinet_version"] = version;
    if (header.timestamp) meta["generated"] = utc_now();
    return meta;
}

ordered_json force_json(const ForceResult& r) {
    ordered_json j;
    j["force_newton"] = format_double(r.force_newton);
    j["pressure_pascal"] = format_double(r.pressure_pascal);
    j["eta"] = format_double(r.eta);
    j["err_estimate_newton"] = format_double(r.err_estimate_newton);
    j["evaluations"] = r.evaluations;
    j["force_te_newton"] = format_double(r.force_te_newton);
    j["force_tm_newton"] = format_double(r.force_tm_newton);
    return j;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

void write_force(std::ostream& out, const ForceResult& result, const std::string& format,
                 const HeaderOptions& header) {
    if (format == "json") {
        ordered_json j = json_meta(header);
        j["result"] = force_json(result);
        out << j.dump(2) << "\n";
        return;
    }
    csv_header(out, header);
    out << "F_N,pressure_Pa,eta,err_estimate_N,evaluations,F_TE_N,F_TM_N\n";
    out << format_double(result.force_newton) << ',' << format_double(result.pressure_pascal)
        << ',' << format_double(result.eta) << ',' << format_double(result.err_estimate_newton)
        << ',' << result.evaluations << ',' << format_double(result.force_te_newton) << ','
        << format_double(result.force_tm_newton) << "\n";
}

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows, const std::string& format,
                 const HeaderOptions& header) {
    if (format == "json") {
        ordered_json j = json_meta(header);
        ordered_json arr = ordered_json::array();
        for (const SweepRow& row : rows) {
            ordered_json r;
            r["L_m"] = format_double(row.gap);
            r["F_N"] = format_double(row.result.force_newton);
            r["pressure_Pa"] = format_double(row.result.pressure_pascal);
            r["eta"] = format_double(row.result.eta);
            r["dFdL_N_per_m"] = format_double(row.dF_dL);
            r["monotone_ok"] = row.monotone_ok;
            arr.push_back(std::move(r));
        }
        j["rows"] = std::move(arr);
        out << j.dump(2) << "\n";
        return;
    }
    csv_header(out, header);
    out << "L_m,F_N,pressure_Pa,eta,dFdL_N_per_m,monotone_ok\n";
    for (const SweepRow& row : rows) {
        out << format_double(row.gap) << ',' << format_double(row.result.force_newton) << ','
            << format_double(row.result.pressure_pascal) << ',' << format_double(row.result.eta)
            << ',' << format_double(row.dF_dL) << ',' << (row.monotone_ok ? 1 : 0) << "\n";
    }
}

void write_reflectivity(std::ostream& out, const std::vector<ReflectivityRow>& rows,
                        const std::string& format, const HeaderOptions& header) {
    if (format == "json") {
        ordered_json j = json_meta(header);
        ordered_json arr = ordered_json::array();
        for (const ReflectivityRow& row : rows) {
            ordered_json r;
            r["freq_rad_s"] = format_double(row.freq);
            r["k_rad_m"] = format_double(row.k);
            r["pol"] = to_string(row.pol);
            r["re_r"] = format_double(row.r.real());
            r["im_r"] = format_double(row.r.imag());
            r["abs_r"] = format_double(std::abs(row.r));
            r["abs_t"] = format_double(std::abs(row.t));
            arr.push_back(std::move(r));
        }
        j["rows"] = std::move(arr);
        out << j.dump(2) << "\n";
        return;
    }
    csv_header(out, header);
    out << "freq_rad_s,k_rad_m,pol,re_r,im_r,abs_r,abs_t\n";
    for (const ReflectivityRow& row : rows) {
        out << format_double(row.freq) << ',' << format_double(row.k) << ',' << to_string(row.pol)
            << ',' << format_double(row.r.real()) << ',' << format_double(row.r.imag()) << ','
            << format_double(std::abs(row.r)) << ',' << format_double(std::abs(row.t)) << "\n";
    }
}

}  // namespace casinet::cli
