#pragma once

#include <vector>

#include "casinet/matrix2.hpp"
#include "casinet/medium.hpp"

namespace casinet {

// ---------------------------------------------------------------------------
// Two-port network representations.
//
// Scattering convention: S = [[r, tbar], [t, rbar]] maps (E_L_in, E_R_in) to
// (E_L_out, E_R_out); r is the reflection amplitude for incidence from the
// left port. Transfer convention: T = [[a, b], [c, d]] maps the right-port
// field column to the left-port one, so piling up networks multiplies T.
// ---------------------------------------------------------------------------

struct ScatteringMatrix {
    complexd r{0.0};     // left reflection
    complexd t{0.0};     // left-to-right transmission
    complexd rbar{0.0};  // right reflection
    complexd tbar{0.0};  // right-to-left transmission

    static ScatteringMatrix transparent() { return {0.0, 1.0, 0.0, 1.0}; }

    Mat2 as_matrix() const { return {r, tbar, t, rbar}; }
    Mat2 as_matrix_tilde() const { return {t, rbar, r, tbar}; }  // eta * S
};

struct TransferMatrix {
    complexd a{1.0}, b{0.0}, c{0.0}, d{1.0};
    complexd kappa_left{0.0};   // kappa of the medium at the left port
    complexd kappa_right{0.0};  // kappa of the medium at the right port

    static TransferMatrix identity(complexd kappa_port) {
        return {1.0, 0.0, 0.0, 1.0, kappa_port, kappa_port};
    }

    Mat2 as_matrix() const { return {a, b, c, d}; }
    complexd det() const { return a * d - b * c; }
};

// An ordered pile of homogeneous layers between two vacuum ports; the empty
// stack is the transparent network.
struct Layer {
    MediumModel medium;
    double thickness;  // m, > 0
};

struct LayerStack {
    std::vector<Layer> layers;
};

// ---------------------------------------------------------------------------
// Representation changes
// ---------------------------------------------------------------------------

// a = 1/t, b = -rbar/t, c = r/t, d = (t tbar - r rbar)/t. Throws
// singular_matrix_error when t = 0 (bulk limit has no transfer matrix; use
// bulk_reflection for semi-infinite media).
TransferMatrix s_to_t(const ScatteringMatrix& s, complexd kappa_left, complexd kappa_right);

// r = c/a, t = 1/a, rbar = -b/a, tbar = (ad - bc)/a. Throws when a = 0.
ScatteringMatrix t_to_s(const TransferMatrix& t);

// ---------------------------------------------------------------------------
// Elementary networks
// ---------------------------------------------------------------------------

struct InterfaceNetwork {
    ScatteringMatrix s;
    TransferMatrix t;
};

// Fresnel interface between media with evaluated permittivities eps0 (left)
// and eps1 (right): r = (1 - z)/(1 + z) = -rbar with z^TE = kappa1/kappa0 and
// z^TM = eps1 kappa0 / (eps0 kappa1); transmissions carry the sqrt(kappa1/kappa0)
// convention (principal branch) so that det T = kappa1/kappa0.
// Throws pole_error at the TM impedance pole z = -1.
InterfaceNetwork fresnel_interface(complexd eps0, complexd eps1, const TransverseMode& mode);

// Propagation over length ell in a medium of permittivity eps:
// T = diag(e^alpha, e^-alpha), alpha = kappa ell, identical for TE and TM.
TransferMatrix propagation(complexd eps, double ell, const TransverseMode& mode);

// ---------------------------------------------------------------------------
// Composition
// ---------------------------------------------------------------------------

// Matrix product T_A T_B. The junction media must match: kappa_right of A and
// kappa_left of B equal to 1e-12 relative, else composition_error.
TransferMatrix compose_t(const TransferMatrix& ta, const TransferMatrix& tb);

// Scattering composition for reciprocal (tbar = t) vacuum-ported networks:
//   r = r_A + t_A^2 r_B / (1 - rbar_A r_B), etc.
// Throws resonance_error when 1 - rbar_A r_B = 0 (never on the imaginary axis).
ScatteringMatrix compose_s(const ScatteringMatrix& sa, const ScatteringMatrix& sb);

// ---------------------------------------------------------------------------
// Composed networks
// ---------------------------------------------------------------------------

// Slab of permittivity eps and width ell between vacuum ports, closed form
//   r = rbar = -sinh(alpha) / sinh(beta + alpha),
//   t = tbar =  sinh(beta)  / sinh(beta + alpha),
// evaluated in the numerically stable e^-beta = (z-1)/(z+1) form.
ScatteringMatrix slab(complexd eps, double ell, const TransverseMode& mode);

// Model-aware slab: resolves metallic xi -> 0 poles through analytic limits.
ScatteringMatrix slab_scattering(const MediumModel& medium, double ell, const TransverseMode& mode);

// Multilayer between vacuum ports as a left fold of compose_s over per-layer
// slabs. The default (numerically stable) production path.
ScatteringMatrix stack_scattering(const LayerStack& stack, const TransverseMode& mode);

// Cross-check path through transfer-matrix products; cumulative optical depth
// is clamped at 300 beyond which the result equals the bulk limit to well
// below double precision.
ScatteringMatrix stack_scattering_via_transfer(const LayerStack& stack, const TransverseMode& mode);
TransferMatrix stack_transfer(const LayerStack& stack, const TransverseMode& mode);

// Reflection amplitude of a semi-infinite medium behind a vacuum port.
complexd bulk_reflection(const MediumModel& model, const TransverseMode& mode);

}  // namespace casinet
