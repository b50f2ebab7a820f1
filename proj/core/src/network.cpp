#include "casinet/network.hpp"

#include <cmath>
#include <string>

namespace casinet {

namespace {

bool is_inf(complexd z) { return std::isinf(z.real()) || std::isinf(z.imag()); }

// Characteristic impedance ratio of the two media for the given polarization.
complexd impedance_ratio(complexd eps0, complexd kappa0, complexd eps1, complexd kappa1,
                         Polarization pol) {
    if (pol == Polarization::TE) {
        if (kappa0 == complexd(0.0)) return complexd(INFINITY, 0.0);
        return kappa1 / kappa0;
    }
    if (is_inf(eps1) || kappa1 == complexd(0.0)) return complexd(INFINITY, 0.0);
    return (eps1 / eps0) * (kappa0 / kappa1);
}

std::string mode_string(const TransverseMode& mode) {
    return std::string(mode.freq.axis == Axis::Real ? "omega = " : "xi = ") +
           std::to_string(mode.freq.value) + " rad/s, k = " + std::to_string(mode.k) +
           " rad/m, " + to_string(mode.pol);
}

// w = e^{-beta} = (z-1)/(z+1) = -r_interface. The z = -1 pole is the TM
// surface plasmon condition.
complexd interface_w(complexd z, const TransverseMode& mode) {
    if (is_inf(z)) return 1.0;
    const complexd denom = z + 1.0;
    if (denom == complexd(0.0))
        throw pole_error("interface impedance pole z = -1 (TM surface plasmon) at " +
                         mode_string(mode));
    return (z - 1.0) / denom;
}

// Slab scattering amplitudes from w = e^{-beta} and alpha = kappa ell, in the
// form that stays bounded for any Re(alpha) >= 0:
//   r = -w (1 - q) / (1 - w^2 q),  t = (1 - w^2) e^{-alpha} / (1 - w^2 q),
// with q = e^{-2 alpha}.
ScatteringMatrix slab_from_w_alpha(complexd w, complexd alpha) {
    const complexd ema = std::exp(-alpha);
    const complexd q = ema * ema;
    const complexd denom = 1.0 - w * w * q;
    if (denom == complexd(0.0))
        throw resonance_error("slab resonance: sinh(beta + alpha) = 0");
    const complexd r = -w * (1.0 - q) / denom;
    const complexd t = (1.0 - w * w) * ema / denom;
    return {r, t, r, t};
}

struct LayerResponse {
    complexd eps;    // may be +inf at a metallic xi = 0 pole
    complexd kappa;  // always finite (analytic limit)
};

LayerResponse layer_response(const MediumModel& medium, const TransverseMode& mode) {
    return {epsilon_or_infinity(medium, mode.freq), kappa(medium, mode)};
}

ScatteringMatrix slab_from_response(const LayerResponse& vac, const LayerResponse& med,
                                    double ell, const TransverseMode& mode) {
    if (!(ell > 0.0) || !std::isfinite(ell))
        throw validation_error("layer thickness must be > 0 and finite");
    const complexd z = impedance_ratio(vac.eps, vac.kappa, med.eps, med.kappa, mode.pol);
    const complexd w = interface_w(z, mode);
    return slab_from_w_alpha(w, med.kappa * ell);
}

void check_junction(complexd ra, complexd lb) {
    const double scale = std::max(std::abs(ra), std::abs(lb));
    if (std::abs(ra - lb) > 1e-12 * scale)
        throw composition_error("transfer composition across mismatched junction media");
}

}  // namespace

// ---------------------------------------------------------------------------
// Representation changes
// ---------------------------------------------------------------------------

TransferMatrix s_to_t(const ScatteringMatrix& s, complexd kappa_left, complexd kappa_right) {
    if (s.t == complexd(0.0))
        throw singular_matrix_error(
            "t = 0: no transfer representation (bulk limit); use bulk_reflection");
    return {1.0 / s.t, -s.rbar / s.t, s.r / s.t, (s.t * s.tbar - s.r * s.rbar) / s.t,
            kappa_left, kappa_right};
}

ScatteringMatrix t_to_s(const TransferMatrix& t) {
    if (t.a == complexd(0.0))
        throw singular_matrix_error("a = 0: transfer matrix has no scattering representation");
    return {t.c / t.a, 1.0 / t.a, -t.b / t.a, t.det() / t.a};
}

// ---------------------------------------------------------------------------
// Elementary networks
// ---------------------------------------------------------------------------

InterfaceNetwork fresnel_interface(complexd eps0, complexd eps1, const TransverseMode& mode) {
    const complexd kappa0 = kappa_from_permittivity(eps0, mode);
    const complexd kappa1 = kappa_from_permittivity(eps1, mode);
    if (kappa0 == complexd(0.0) || kappa1 == complexd(0.0))
        throw validation_error("fresnel_interface requires nonzero kappa on both sides");
    const complexd z = impedance_ratio(eps0, kappa0, eps1, kappa1, mode.pol);
    const complexd w = interface_w(z, mode);
    const complexd r = -w;
    // sqrt(1 - r^2) with the principal branch; the sqrt(kappa1/kappa0) factors
    // fix det T = kappa1/kappa0 as required by reciprocity.
    const complexd spread = std::sqrt(1.0 - w * w);
    const complexd ratio = std::sqrt(kappa1 / kappa0);
    ScatteringMatrix s{r, spread / ratio, -r, spread * ratio};
    return {s, s_to_t(s, kappa0, kappa1)};
}

TransferMatrix propagation(complexd eps, double ell, const TransverseMode& mode) {
    if (!(ell >= 0.0) || !std::isfinite(ell))
        throw validation_error("propagation length must be >= 0 and finite");
    const complexd kap = kappa_from_permittivity(eps, mode);
    const complexd alpha = kap * ell;
    return {std::exp(alpha), 0.0, 0.0, std::exp(-alpha), kap, kap};
}

// ---------------------------------------------------------------------------
// Composition
// ---------------------------------------------------------------------------

TransferMatrix compose_t(const TransferMatrix& ta, const TransferMatrix& tb) {
    check_junction(ta.kappa_right, tb.kappa_left);
    return {ta.a * tb.a + ta.b * tb.c, ta.a * tb.b + ta.b * tb.d,
            ta.c * tb.a + ta.d * tb.c, ta.c * tb.b + ta.d * tb.d,
            ta.kappa_left, tb.kappa_right};
}

ScatteringMatrix compose_s(const ScatteringMatrix& sa, const ScatteringMatrix& sb) {
    for (const auto* s : {&sa, &sb}) {
        if (std::abs(s->t - s->tbar) > 1e-12 * std::abs(s->t))
            throw composition_error("compose_s requires reciprocal networks (tbar = t)");
    }
    const complexd denom = 1.0 - sa.rbar * sb.r;
    if (denom == complexd(0.0))
        throw resonance_error("scattering composition singular: 1 - rbar_A r_B = 0");
    const complexd t = sa.t * sb.t / denom;
    return {sa.r + sa.t * sa.t * sb.r / denom, t,
            sb.rbar + sa.rbar * sb.t * sb.t / denom, t};
}

// ---------------------------------------------------------------------------
// Slabs and multilayers
// ---------------------------------------------------------------------------

ScatteringMatrix slab(complexd eps, double ell, const TransverseMode& mode) {
    LayerResponse vac{1.0, kappa_from_permittivity(1.0, mode)};
    LayerResponse med{eps, kappa_from_permittivity(eps, mode)};
    return slab_from_response(vac, med, ell, mode);
}

ScatteringMatrix slab_scattering(const MediumModel& medium, double ell,
                                 const TransverseMode& mode) {
    LayerResponse vac{1.0, kappa(Vacuum{}, mode)};
    return slab_from_response(vac, layer_response(medium, mode), ell, mode);
}

ScatteringMatrix stack_scattering(const LayerStack& stack, const TransverseMode& mode) {
    ScatteringMatrix acc = ScatteringMatrix::transparent();
    for (const Layer& layer : stack.layers)
        acc = compose_s(acc, slab_scattering(layer.medium, layer.thickness, mode));
    return acc;
}

TransferMatrix stack_transfer(const LayerStack& stack, const TransverseMode& mode) {
    const complexd kappa0 = kappa(Vacuum{}, mode);
    TransferMatrix acc = TransferMatrix::identity(kappa0);
    // Beyond a cumulative optical depth of 300 the remaining layers change the
    // scattering amplitudes by less than e^-600; truncating there keeps the
    // e^{+alpha} entries representable.
    double depth_budget = 300.0;
    for (const Layer& layer : stack.layers) {
        if (depth_budget <= 0.0) break;
        double ell = layer.thickness;
        const double re_kappa = kappa(layer.medium, mode).real();
        if (re_kappa > 0.0) {
            ell = std::min(ell, depth_budget / re_kappa);
            depth_budget -= re_kappa * ell;
        }
        const ScatteringMatrix s = slab_scattering(layer.medium, ell, mode);
        acc = compose_t(acc, s_to_t(s, kappa0, kappa0));
    }
    return acc;
}

ScatteringMatrix stack_scattering_via_transfer(const LayerStack& stack,
                                               const TransverseMode& mode) {
    if (stack.layers.empty()) return ScatteringMatrix::transparent();
    return t_to_s(stack_transfer(stack, mode));
}

complexd bulk_reflection(const MediumModel& model, const TransverseMode& mode) {
    const LayerResponse vac{1.0, kappa(Vacuum{}, mode)};
    const LayerResponse med = layer_response(model, mode);
    const complexd z = impedance_ratio(vac.eps, vac.kappa, med.eps, med.kappa, mode.pol);
    return -interface_w(z, mode);
}

}  // namespace casinet
