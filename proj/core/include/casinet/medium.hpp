#pragma once

#include <complex>
#include <iosfwd>
#include <variant>
#include <vector>

#include "casinet/frequency.hpp"

namespace casinet {

using complexd = std::complex<double>;

// ---------------------------------------------------------------------------
// Optical response models. All are evaluable on the imaginary frequency axis,
// where epsilon(i xi) is real, >= 1 and decreasing toward 1; the analytic
// models are also evaluable on the real axis.
// ---------------------------------------------------------------------------

struct Vacuum {};

struct Dielectric {
    explicit Dielectric(double epsilon_r_in) : epsilon_r(epsilon_r_in) {
        if (!(epsilon_r > 1.0)) throw validation_error("Dielectric requires epsilon_r > 1");
    }
    double epsilon_r;
};

struct Plasma {
    explicit Plasma(double omega_p_in) : omega_p(omega_p_in) {
        if (!(omega_p > 0.0)) throw validation_error("Plasma requires omega_p > 0");
    }
    double omega_p;  // rad/s
};

struct Drude {
    Drude(double omega_p_in, double gamma_in) : omega_p(omega_p_in), gamma(gamma_in) {
        if (!(omega_p > 0.0)) throw validation_error("Drude requires omega_p > 0");
        if (!(gamma > 0.0)) throw validation_error("Drude requires gamma > 0");
    }
    double omega_p;  // rad/s
    double gamma;    // rad/s
};

// Permittivity samples (xi_i, eps_i) on the imaginary axis, interpolated
// linearly in (log xi, log(eps - 1)). Outside the sampled range the model
// extends with xi^-2 plasma tails fitted to the first/last sample, which
// keeps eps >= 1 and eps -> 1 at high frequency.
class Tabulated {
  public:
    Tabulated(std::vector<double> xi, std::vector<double> eps);

    double evaluate(double xi) const;        // epsilon(i xi), xi > 0
    double eps_xi_squared(double xi) const;  // epsilon(i xi) * xi^2, finite at xi = 0

    double xi_min() const { return xi_.front(); }
    double xi_max() const { return xi_.back(); }
    std::size_t size() const { return xi_.size(); }

  private:
    std::vector<double> xi_;
    std::vector<double> log_xi_;
    std::vector<double> log_eps_m1_;
    double tail_low_ = 0.0;   // (eps_1 - 1) xi_1^2
    double tail_high_ = 0.0;  // (eps_N - 1) xi_N^2
};

using MediumModel = std::variant<Vacuum, Dielectric, Plasma, Drude, Tabulated>;

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

// Relative permittivity at the given frequency point. Real axis:
// Plasma 1 - omega_p^2/omega^2, Drude 1 - omega_p^2/(omega(omega + i gamma)).
// Imaginary axis: Plasma 1 + omega_p^2/xi^2, Drude 1 + omega_p^2/(xi(xi+gamma)).
// Throws pole_error at the metallic zero-frequency pole and axis_error for
// Tabulated data queried on the real axis.
complexd epsilon(const MediumModel& model, FrequencyPoint freq);

// Same, but returns +infinity instead of throwing at imaginary-axis poles.
// Used by network builders that resolve the pole through analytic limits.
complexd epsilon_or_infinity(const MediumModel& model, FrequencyPoint freq);

// epsilon(i xi) * xi^2, evaluated without forming epsilon so the metallic
// xi -> 0 pole cancels analytically (Plasma: xi^2 + omega_p^2).
double eps_xi_squared(const MediumModel& model, double xi);

// Longitudinal wavevector parameter kappa = sqrt(eps xi^2/c^2 + k^2) with the
// branch Re kappa > 0. Real positive on the imaginary axis; on the real axis
// it is real in the evanescent sector and acquires a negative imaginary part
// (rightward propagation, decay for lossy media) in the ordinary sector.
complexd kappa(const MediumModel& model, const TransverseMode& mode);

// kappa from an already evaluated permittivity (no pole handling).
complexd kappa_from_permittivity(complexd eps, const TransverseMode& mode);

// ---------------------------------------------------------------------------
// Tabulated data input: two whitespace-separated columns per line,
// "xi_in_rad_per_s  epsilon_at_i_xi", '#' comments, ascending xi.
// ---------------------------------------------------------------------------
MediumModel load_tabulated(std::istream& source);

bool is_vacuum(const MediumModel& model);

}  // namespace casinet
