#pragma once

#include <stdexcept>
#include <string>

namespace casinet {

// Base class for everything thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction or input data violates a documented invariant.
struct validation_error : error {
    using error::error;
};

// An operation was requested on the wrong frequency axis.
struct axis_error : error {
    using error::error;
};

// Response function evaluated at one of its poles (e.g. plasma epsilon at
// zero frequency, or the TM impedance pole z = -1 at a surface plasmon).
struct pole_error : error {
    using error::error;
};

// A matrix representation does not exist: t = 0 (no transfer matrix, bulk
// limit) or a = 0 (no scattering matrix).
struct singular_matrix_error : error {
    using error::error;
};

// Two networks were composed across mismatched junction media.
struct composition_error : error {
    using error::error;
};

// A resonance denominator vanished (slab resonance, 1 - rbar_A r_B = 0,
// rho = 1, or the cavity oscillation threshold D = 0).
struct resonance_error : error {
    using error::error;
};

struct parse_error : error {
    parse_error(const std::string& what, std::string field_in, int line_in = 0)
        : error(what), field(std::move(field_in)), line(line_in) {}
    std::string field;
    int line = 0;  // 1-based, 0 when unknown
};

}  // namespace casinet
