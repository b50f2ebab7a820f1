#include "casinet/noise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace casinet {

NoiseNorm noise_norm_s(const ScatteringMatrix& s) {
    const Mat2 m = s.as_matrix();
    return {Mat2::identity() - m * m.adjoint()};
}

NoiseNorm noise_norm_t(const TransferMatrix& t) {
    const Mat2 m = t.as_matrix();
    return {m * kPhi * m.adjoint() - kPhi};
}

NoiseNorm compose_noise(const TransferMatrix& ta, const NoiseNorm& na, const NoiseNorm& nb) {
    const Mat2 m = ta.as_matrix();
    return {na.matrix + m * nb.matrix * m.adjoint()};
}

CavityCommutators cavity_matrix(complexd rbar1, complexd r2, complexd alpha1, complexd alpha2) {
    const complexd phase1 = std::exp(-2.0 * alpha1);
    const complexd phase2 = std::exp(-2.0 * alpha2);
    const complexd rho = rbar1 * r2 * phase1 * phase2;
    const complexd D = 1.0 - rho;
    if (D == complexd(0.0))
        throw resonance_error("cavity oscillation threshold: 1 - rbar1 r2 e^{-2 alpha} = 0");
    const Mat2 m{rho, rbar1 * phase1, r2 * phase2, rho};
    const Mat2 scaled = m * (1.0 / D);
    const Mat2 g = Mat2::identity() + scaled + scaled.adjoint();
    const complexd f = rho / D;
    return {g, 1.0 + 2.0 * f.real()};
}

double airy(complexd rho) {
    if (rho == complexd(1.0))
        throw resonance_error("Airy function diverges at rho = 1");
    const double a2 = std::norm(rho);
    return (1.0 - a2) / std::norm(1.0 - rho);
}

complexd closed_loop_f(complexd rho) {
    if (rho == complexd(1.0))
        throw resonance_error("closed loop function diverges at rho = 1");
    return rho / (1.0 - rho);
}

std::pair<double, double> passivity_eigenvalues(const ScatteringMatrix& s) {
    const Mat2 m = s.as_matrix();
    return hermitian_eigenvalues(m.adjoint() * m);
}

// ---------------------------------------------------------------------------
// Evanescent scan
// ---------------------------------------------------------------------------

namespace {

double abs_reflection(const MediumModel& model, double omega, double k, Polarization pol) {
    const auto mode = TransverseMode::make(FrequencyPoint::real(omega), k, pol);
    try {
        return std::abs(bulk_reflection(model, mode));
    } catch (const pole_error&) {
        return std::numeric_limits<double>::infinity();
    }
}

}  // namespace

std::optional<double> surface_plasmon_frequency(const MediumModel& model, double k) {
    const double c = constants::c_light;
    // h(omega) = Re(eps1) kappa0 + kappa1 on the evanescent segment (0, ck);
    // for lossless metals every quantity is real there.
    auto h = [&](double omega) {
        const auto mode = TransverseMode::make(FrequencyPoint::real(omega), k, Polarization::TM);
        const complexd eps1 = epsilon(model, mode.freq);
        const complexd kappa0 = kappa(Vacuum{}, mode);
        const complexd kappa1 = kappa(model, mode);
        return (eps1 * kappa0 + kappa1).real();
    };
    double lo = c * k * 1e-9;
    double hi = c * k * (1.0 - 1e-12);
    double hlo = h(lo), hhi = h(hi);
    if (hlo == 0.0) return lo;
    if (hhi == 0.0) return hi;
    if ((hlo < 0.0) == (hhi < 0.0)) return std::nullopt;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double hm = h(mid);
        if (hm == 0.0) return mid;
        if ((hm < 0.0) == (hlo < 0.0)) {
            lo = mid;
            hlo = hm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

PlasmonScanResult plasmon_scan(const MediumModel& model, Polarization pol,
                               double omega_min, double omega_max, int n_omega,
                               double k_min, double k_max, int n_k) {
    if (!(omega_min > 0.0) || !(omega_max > omega_min) || n_omega < 2)
        throw validation_error("plasmon_scan: invalid omega range");
    if (!(k_min > 0.0) || !(k_max > k_min) || n_k < 2)
        throw validation_error("plasmon_scan: invalid k range");

    const double c = constants::c_light;
    PlasmonScanResult result;
    ScanPoint best{};
    bool have_best = false;
    for (int j = 0; j < n_k; ++j) {
        const double k = k_min + (k_max - k_min) * j / (n_k - 1);
        for (int i = 0; i < n_omega; ++i) {
            const double omega = omega_min + (omega_max - omega_min) * i / (n_omega - 1);
            if (omega >= c * k) continue;  // ordinary sector excluded
            const double ar = abs_reflection(model, omega, k, pol);
            // Total reflection sits at |r| = 1 exactly and may round a few
            // ulp above it; only genuine exceedances are reported.
            if (ar > 1.0 + 1e-10) result.exceeding.push_back({omega, k, ar});
            if (!have_best || ar > best.abs_r) {
                best = {omega, k, ar};
                have_best = true;
            }
        }
    }
    std::sort(result.exceeding.begin(), result.exceeding.end(),
              [](const ScanPoint& a, const ScanPoint& b) {
                  return a.omega != b.omega ? a.omega < b.omega : a.k < b.k;
              });
    if (have_best) {
        if (pol == Polarization::TM) {
            // Refine toward the plasmon pole at this k, where |r| peaks.
            if (auto root = surface_plasmon_frequency(model, best.k)) {
                best.omega = *root;
                best.abs_r = abs_reflection(model, best.omega, best.k, pol);
            }
        }
        result.maximum = best;
    }
    return result;
}

void write_scan_csv(std::ostream& out, const PlasmonScanResult& scan) {
    out << "omega,k,abs_r_tm\n";
    char buf[96];
    for (const ScanPoint& p : scan.exceeding) {
        std::snprintf(buf, sizeof buf, "%.16e,%.16e,%.16e\n", p.omega, p.k, p.abs_r);
        out << buf;
    }
}

}  // namespace casinet
