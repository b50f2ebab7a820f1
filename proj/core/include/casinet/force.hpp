#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "casinet/network.hpp"
#include "casinet/quadrature.hpp"

namespace casinet {

// ---------------------------------------------------------------------------
// Cavity description
// ---------------------------------------------------------------------------

// A mirror is either a multilayer stack between vacuum ports, a semi-infinite
// bulk medium (the Lifshitz limit), or the ideal unit-reflection injection.
struct PerfectMirror {};
struct BulkMirror {
    MediumModel model;
};
struct StackMirror {
    LayerStack stack;
};
using MirrorSpec = std::variant<PerfectMirror, BulkMirror, StackMirror>;

struct QuadratureSpec {
    double rel_tol = 1e-8;        // in (1e-14, 1e-2)
    double abs_tol_newton = 0.0;  // absolute floor on the force error
    int max_subdivisions = 400;   // per axis
    std::string node_rule = "gk15";
    int threads = 1;  // workers for integrand evaluation; result is thread-count independent
};

struct CavityConfig {
    MirrorSpec mirror1;  // left mirror; the cavity sees its right face
    MirrorSpec mirror2;  // right mirror; the cavity sees its left face
    double gap = 0.0;    // L, m; the regime A >> L^2 is the caller's responsibility
    double area = 0.0;   // A, m^2, a multiplicative factor only
    QuadratureSpec quadrature;
};

struct ForceResult {
    double force_newton = 0.0;     // positive = attraction
    double pressure_pascal = 0.0;  // force / area
    double eta = 0.0;              // force / ideal Casimir force
    double err_estimate_newton = 0.0;
    std::int64_t evaluations = 0;  // integrand (rho) evaluations
    double force_te_newton = 0.0;
    double force_tm_newton = 0.0;
};

// Carries whatever the engine had accumulated when the subdivision budget ran
// out before the tolerance was met.
struct quadrature_error : error {
    quadrature_error(const std::string& what, ForceResult partial_in)
        : error(what), partial(partial_in) {}
    ForceResult partial;
};

// ---------------------------------------------------------------------------
// Loop functions and reference formulas
// ---------------------------------------------------------------------------

// Inner-face reflection amplitudes seen by the cavity fields.
complexd inner_reflection_left(const MirrorSpec& mirror1, const TransverseMode& mode);
complexd inner_reflection_right(const MirrorSpec& mirror2, const TransverseMode& mode);

// Open-loop function for one cavity round trip on the imaginary axis:
// rho = rbar1 r2 e^{-2 kappa0 L}, kappa0 = sqrt(k^2 + xi^2/c^2).
complexd loop_rho(const MirrorSpec& mirror1, const MirrorSpec& mirror2, double gap,
                  const TransverseMode& mode);

// Ideal Casimir force hbar c pi^2 A / (240 L^4).
double casimir_ideal(double gap, double area);

// ---------------------------------------------------------------------------
// Force evaluation
// ---------------------------------------------------------------------------

// Imaginary-frequency double integral
//   F = (hbar A / 2 pi^2) sum_p int_0^inf dxi int_{xi/c}^inf dkappa0
//       kappa0^2 rho/(1 - rho),
// evaluated on nondimensional variables y = xi L / c, u = 2 kappa0 L with the
// exponential tail mapped to finite intervals. Throws quadrature_error with
// the partial result if the subdivision budget is exhausted.
ForceResult force(const CavityConfig& config);

// Same integral with semi-infinite bulk mirrors.
ForceResult lifshitz_force(const MediumModel& model1, const MediumModel& model2, double gap,
                           double area, const QuadratureSpec& quadrature);

// eta = F / F_Cas, in [0, 1] for dielectric mirrors.
double reduction_factor(const CavityConfig& config);

// ---------------------------------------------------------------------------
// Length sweeps
// ---------------------------------------------------------------------------

struct SweepRow {
    double gap = 0.0;
    ForceResult result;
    double dF_dL = 0.0;        // central difference at 1e-3 relative step
    bool monotone_ok = true;   // F strictly below the previous row's F
};

// Evaluates the force over strictly increasing gap values. Monotonicity
// violations are flagged per row, never silently passed.
std::vector<SweepRow> sweep_length(const CavityConfig& config, std::span<const double> gaps);

}  // namespace casinet
