#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "casinet/force.hpp"
#include "casinet/matrix2.hpp"
#include "casinet/network.hpp"
#include "casinet/noise.hpp"
#include "casinet/parallel.hpp"

// Independent reference implementations used as test oracles. They derive the
// same quantities as the library along different routes and stay out of the
// production code paths they check.
namespace testsupport {

using casinet::complexd;
using casinet::Mat2;

// ---------------------------------------------------------------------------
// Multilayer reflection by the classic recursive summation of multiple
// reflections (Parratt recursion), written directly from the Fresnel formulas.
// Media: vacuum | stack layers | vacuum.
// ---------------------------------------------------------------------------
inline complexd parratt_reflection(const casinet::LayerStack& stack,
                                   const casinet::TransverseMode& mode) {
    const int n = static_cast<int>(stack.layers.size());
    std::vector<complexd> eps(n + 2), kap(n + 2);
    std::vector<double> thick(n + 2, 0.0);
    eps[0] = eps[n + 1] = 1.0;
    for (int j = 1; j <= n; ++j) {
        eps[j] = casinet::epsilon(stack.layers[j - 1].medium, mode.freq);
        thick[j] = stack.layers[j - 1].thickness;
    }
    const double c = casinet::constants::c_light;
    const double v = mode.freq.value;
    for (int j = 0; j <= n + 1; ++j) {
        if (mode.freq.axis == casinet::Axis::Imaginary) {
            kap[j] = std::sqrt(eps[j] * v * v / (c * c) + mode.k * mode.k);
        } else {
            complexd arg = complexd(mode.k * mode.k, 0.0) - eps[j] * v * v / (c * c);
            if (arg.imag() == 0.0 && arg.real() < 0.0) {
                kap[j] = complexd(0.0, -std::sqrt(-arg.real()));
            } else {
                kap[j] = std::sqrt(arg);
                if (kap[j].real() < 0.0) kap[j] = -kap[j];
            }
        }
    }
    auto fresnel = [&](int i, int j) {
        if (mode.pol == casinet::Polarization::TE)
            return (kap[i] - kap[j]) / (kap[i] + kap[j]);
        return (eps[i] * kap[j] - eps[j] * kap[i]) / (eps[i] * kap[j] + eps[j] * kap[i]);
    };
    complexd r = fresnel(n, n + 1);
    for (int j = n - 1; j >= 0; --j) {
        const complexd phase = std::exp(-2.0 * kap[j + 1] * thick[j + 1]);
        const complexd f = fresnel(j, j + 1);
        r = (f + r * phase) / (1.0 + f * r * phase);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Slab scattering built the long way, conjugating the propagation with the
// interface transfer matrices.
// ---------------------------------------------------------------------------
inline casinet::ScatteringMatrix slab_via_conjugation(complexd eps, double ell,
                                                      const casinet::TransverseMode& mode) {
    const auto in = casinet::fresnel_interface(1.0, eps, mode);
    const auto prop = casinet::propagation(eps, ell, mode);
    const Mat2 t_in = in.t.as_matrix();
    const Mat2 m = t_in * prop.as_matrix() * t_in.inverse();
    casinet::TransferMatrix t{m.m00, m.m01, m.m10, m.m11, in.t.kappa_left, in.t.kappa_left};
    return casinet::t_to_s(t);
}

// Slab scattering from the sinh closed form with beta = ln((z+1)/(z-1)).
inline casinet::ScatteringMatrix slab_sinh_form(complexd eps, double ell,
                                                const casinet::TransverseMode& mode) {
    const complexd kappa0 = casinet::kappa_from_permittivity(1.0, mode);
    const complexd kappa1 = casinet::kappa_from_permittivity(eps, mode);
    const complexd z = mode.pol == casinet::Polarization::TE
                           ? kappa1 / kappa0
                           : eps * kappa0 / kappa1;
    const complexd beta = std::log((z + 1.0) / (z - 1.0));
    const complexd alpha = kappa1 * ell;
    const complexd denom = std::sinh(beta + alpha);
    return {-std::sinh(alpha) / denom, std::sinh(beta) / denom,
            -std::sinh(alpha) / denom, std::sinh(beta) / denom};
}

// ---------------------------------------------------------------------------
// Cavity commutator matrix derived the long way from the transfer matrices of
// the two networks and their optical-theorem noise norms:
//   G = T_B N N^dag T_B^dag + T_B P N_A P^dag T_B^dag
//       + (I + T_B P T_A) N_B (I + T_B P T_A)^dag
// with N = (pi_- + pi_+ T)^{-1} and P = -N pi_+.
// ---------------------------------------------------------------------------
inline Mat2 cavity_matrix_longway(const casinet::TransferMatrix& ta,
                                  const casinet::TransferMatrix& tb) {
    const Mat2 a = ta.as_matrix();
    const Mat2 b = tb.as_matrix();
    const Mat2 t = a * b;
    const Mat2 n = (casinet::kPiMinus + casinet::kPiPlus * t).inverse();
    const Mat2 p = Mat2::zero() - n * casinet::kPiPlus;
    const Mat2 noise_a = casinet::noise_norm_t(ta).matrix;
    const Mat2 noise_b = casinet::noise_norm_t(tb).matrix;
    const Mat2 r = b * n;
    const Mat2 ra = b * p;  // applied to network A's noise amplitudes
    const Mat2 rb = Mat2::identity() + b * p * a;
    return r * r.adjoint() + ra * noise_a * ra.adjoint() + rb * noise_b * rb.adjoint();
}

// ---------------------------------------------------------------------------
// Dense trapezoidal double quadrature for the force, written independently of
// the adaptive engine. Outer variable y = xi L / c on a fixed logarithmic
// grid (Drude relaxation puts structure at y as small as ~gamma L / c, far
// below any affordable uniform spacing), inner variable u = 2 kappa0 L on a
// uniform grid. The strip y < y_min contributes O(y_min) relative and is
// dropped.
// ---------------------------------------------------------------------------
inline double trapezoid_force(const casinet::MirrorSpec& mirror1,
                              const casinet::MirrorSpec& mirror2, double gap, double area,
                              int n_y = 2000, int n_u = 2000, int threads = 1) {
    const double c = casinet::constants::c_light;
    const double u_max = 70.0;
    const double y_min = 1e-7;
    const double y_max = 0.5 * u_max;
    std::vector<double> y_nodes(n_y);
    for (int i = 0; i < n_y; ++i)
        y_nodes[i] = y_min * std::pow(y_max / y_min, static_cast<double>(i) / (n_y - 1));
    std::vector<double> row_values(n_y, 0.0);

    casinet::parallel_for_indexed(n_y, threads, [&](int iy) {
        const double y = y_nodes[iy];
        const double xi = y * c / gap;
        double inner = 0.0;
        for (const auto pol : {casinet::Polarization::TE, casinet::Polarization::TM}) {
            const double u_lo = 2.0 * y;
            if (u_lo >= u_max) continue;
            const double hu = (u_max - u_lo) / (n_u - 1);
            double acc = 0.0;
            for (int iu = 0; iu < n_u; ++iu) {
                const double u = u_lo + iu * hu;
                const double kappa0 = u / (2.0 * gap);
                const double k2 = kappa0 * kappa0 - (xi / c) * (xi / c);
                const double k = k2 > 0.0 ? std::sqrt(k2) : 0.0;
                const auto mode = casinet::TransverseMode::make(
                    casinet::FrequencyPoint::imaginary(xi), k, pol);
                const double rr =
                    (casinet::inner_reflection_left(mirror1, mode) *
                     casinet::inner_reflection_right(mirror2, mode))
                        .real();
                const double rho = rr * std::exp(-u);
                double term = u * u * rho / (1.0 - rho);
                if (iu == 0 || iu == n_u - 1) term *= 0.5;
                acc += term;
            }
            inner += acc * hu;
        }
        row_values[iy] = inner;
    });

    // Trapezoid over the non-uniform y nodes.
    double integral = 0.0;
    for (int iy = 0; iy + 1 < n_y; ++iy)
        integral +=
            0.5 * (row_values[iy] + row_values[iy + 1]) * (y_nodes[iy + 1] - y_nodes[iy]);

    const double pi = 3.141592653589793238462643383279502884;
    return casinet::constants::hbar * c * area * integral / (16.0 * pi * pi * gap * gap * gap * gap);
}

}  // namespace testsupport
