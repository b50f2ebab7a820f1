#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "casinet/force.hpp"
#include "casinet/frequency.hpp"

namespace casinet::cli {

struct HeaderOptions {
    bool timestamp = true;  // suppressed by --no-header-timestamp for byte-stable output
};

// 17 significant digits, scientific, '.' decimal separator.
std::string format_double(double v);

struct ReflectivityRow {
    double freq = 0.0;  // rad/s, omega or xi depending on the requested axis
    double k = 0.0;
    Polarization pol = Polarization::TE;
    complexd r;
    complexd t;
};

void write_force(std::ostream& out, const ForceResult& result, const std::string& format,
                 const HeaderOptions& header);
void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows, const std::string& format,
                 const HeaderOptions& header);
void write_reflectivity(std::ostream& out, const std::vector<ReflectivityRow>& rows,
                        const std::string& format, const HeaderOptions& header);

}  // namespace casinet::cli
