#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "casinet/network.hpp"

namespace casinet {

// ---------------------------------------------------------------------------
// Optical theorem: the noise a lossy network must add so that output field
// commutators match input ones. The noise amplitudes themselves are defined
// only up to a canonical transformation of the noise modes; everything
// physical depends on the Hermitian norm matrices below.
// ---------------------------------------------------------------------------

struct NoiseNorm {
    Mat2 matrix;

    std::pair<double, double> eigenvalues() const { return hermitian_eigenvalues(matrix); }
    double hermiticity() const { return hermiticity_defect(matrix); }
};

// Scattering picture: S'S'^dag = I - S S^dag.
NoiseNorm noise_norm_s(const ScatteringMatrix& s);

// Transfer picture: T'T'^dag = T Phi T^dag - Phi, Phi = diag(1, -1).
NoiseNorm noise_norm_t(const TransferMatrix& t);

// Composition: the piled-up network AB carries N_AB = N_A + T_A N_B T_A^dag,
// which closes the optical theorem under composition.
NoiseNorm compose_noise(const TransferMatrix& ta, const NoiseNorm& na, const NoiseNorm& nb);

// ---------------------------------------------------------------------------
// Intracavity commutators
// ---------------------------------------------------------------------------

struct CavityCommutators {
    Mat2 g_matrix;  // commutator matrix of the cavity fields
    double g;       // shared diagonal value = Airy function of the round trip
};

// Cavity formed by mirror amplitudes rbar1 (inner face of the left mirror)
// and r2 (inner face of the right mirror) with propagation half-exponents
// alpha1, alpha2 (Re >= 0) on the two sides of the evaluation point:
//   G = I + M/D + (M/D)^dag,  D = 1 - rbar1 r2 e^{-2(alpha1+alpha2)}.
// The diagonal entries do not depend on the alpha1/alpha2 split and equal
// airy(rbar1 r2 e^{-2 alpha}). Throws resonance_error at the oscillation
// threshold D = 0 (unreachable for passive mirrors on the imaginary axis).
CavityCommutators cavity_matrix(complexd rbar1, complexd r2, complexd alpha1, complexd alpha2);

// Spectral density of the cavity fields relative to free space,
// g = (1 - |rho|^2) / |1 - rho|^2 for the round-trip amplitude rho.
double airy(complexd rho);

// Closed-loop function f = rho / (1 - rho).
complexd closed_loop_f(complexd rho);

// ---------------------------------------------------------------------------
// Passivity and the evanescent sector
// ---------------------------------------------------------------------------

// Eigenvalues of S^dag S, descending; the network is passive at this mode iff
// the first one is <= 1. Holds on the imaginary axis and the real ordinary
// sector for dielectric multilayers, but can fail for TM evanescent waves.
std::pair<double, double> passivity_eigenvalues(const ScatteringMatrix& s);

struct ScanPoint {
    double omega = 0.0;  // rad/s
    double k = 0.0;      // rad/m
    double abs_r = 0.0;
};

struct PlasmonScanResult {
    std::vector<ScanPoint> exceeding;      // sampled evanescent modes with |r| > 1
    std::optional<ScanPoint> maximum;      // largest sampled |r|, bisection-refined
};

// Grid scan of the vacuum/medium interface reflection modulus over the
// real-axis evanescent sector (omega < c k enforced; other grid points are
// skipped). Results are sorted on (omega, k).
PlasmonScanResult plasmon_scan(const MediumModel& model, Polarization pol,
                               double omega_min, double omega_max, int n_omega,
                               double k_min, double k_max, int n_k);

// Root of the surface-plasmon condition eps1 kappa0 + kappa1 = 0 (the TM
// impedance pole z = -1) in omega at fixed k, by bisection. Empty when the
// bracket contains no sign change.
std::optional<double> surface_plasmon_frequency(const MediumModel& model, double k);

// CSV export, columns omega, k, abs_r_tm.
void write_scan_csv(std::ostream& out, const PlasmonScanResult& scan);

}  // namespace casinet
