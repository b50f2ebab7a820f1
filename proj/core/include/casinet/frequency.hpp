#pragma once

#include <cmath>

#include "casinet/constants.hpp"
#include "casinet/errors.hpp"

namespace casinet {

enum class Axis { Real, Imaginary };
enum class Polarization { TE, TM };
enum class Sector { Ordinary, Evanescent };

// A point on one of the two frequency axes: omega (rad/s) on the real axis
// or xi (rad/s) on the imaginary axis, omega = i xi. Always >= 0.
struct FrequencyPoint {
    Axis axis;
    double value;

    static FrequencyPoint real(double omega) {
        require_nonnegative(omega);
        return {Axis::Real, omega};
    }
    static FrequencyPoint imaginary(double xi) {
        require_nonnegative(xi);
        return {Axis::Imaginary, xi};
    }

  private:
    static void require_nonnegative(double v) {
        if (!(v >= 0.0)) throw validation_error("frequency value must be >= 0 and finite");
    }
};

// Mode label (omega or xi, |k|, polarization). The transverse wavevector
// modulus k is in rad/m and is preserved by every scattering process.
struct TransverseMode {
    FrequencyPoint freq;
    double k = 0.0;
    Polarization pol = Polarization::TE;

    static TransverseMode make(FrequencyPoint f, double k, Polarization p) {
        if (!(k >= 0.0)) throw validation_error("transverse wavevector k must be >= 0 and finite");
        return {f, k, p};
    }

    // Real-axis sector: ordinary waves propagate in vacuum (omega >= c k),
    // evanescent waves decay away from interfaces (omega < c k).
    Sector sector() const {
        if (freq.axis != Axis::Real)
            throw axis_error("sector() is defined on the real frequency axis only");
        return freq.value >= constants::c_light * k ? Sector::Ordinary : Sector::Evanescent;
    }
};

inline const char* to_string(Polarization p) { return p == Polarization::TE ? "TE" : "TM"; }

}  // namespace casinet
