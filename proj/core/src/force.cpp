#include "casinet/force.hpp"

#include <cmath>
#include <numbers>

#include "casinet/constants.hpp"
#include "casinet/parallel.hpp"

namespace casinet {

namespace {

using constants::c_light;
using constants::hbar;

// u = 2 kappa0 L is cut where e^{-u} < 1e-30, beyond double-precision
// relevance for the force integrand.
const double kUMax = -std::log(1e-30);

struct MirrorAmplitude {
    const MirrorSpec* mirror;
    bool left;  // true: cavity sees the right face (rbar), false: the left face (r)

    complexd operator()(const TransverseMode& mode) const {
        return std::visit(
            [&](const auto& m) -> complexd {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, PerfectMirror>) {
                    return 1.0;
                } else if constexpr (std::is_same_v<T, BulkMirror>) {
                    return bulk_reflection(m.model, mode);
                } else {
                    static_assert(std::is_same_v<T, StackMirror>);
                    const ScatteringMatrix s = stack_scattering(m.stack, mode);
                    return left ? s.rbar : s.r;
                }
            },
            *mirror);
    }
};

bool both_perfect(const CavityConfig& cfg) {
    return std::holds_alternative<PerfectMirror>(cfg.mirror1) &&
           std::holds_alternative<PerfectMirror>(cfg.mirror2);
}

void validate(const CavityConfig& cfg) {
    if (!(cfg.gap > 0.0) || !std::isfinite(cfg.gap))
        throw validation_error("cavity gap must be > 0 and finite");
    if (!(cfg.area > 0.0) || !std::isfinite(cfg.area))
        throw validation_error("cavity area must be > 0 and finite");
    const QuadratureSpec& q = cfg.quadrature;
    if (!(q.rel_tol > 1e-14 && q.rel_tol < 1e-2))
        throw validation_error("quadrature rel_tol must lie in (1e-14, 1e-2)");
    if (!(q.abs_tol_newton >= 0.0))
        throw validation_error("quadrature abs_tol_newton must be >= 0");
    if (q.max_subdivisions < 4)
        throw validation_error("quadrature max_subdivisions must be >= 4");
    if (q.node_rule != "gk15")
        throw validation_error("unknown quadrature node rule '" + q.node_rule + "'");
    if (q.threads < 1) throw validation_error("quadrature threads must be >= 1");
}

// Double integral for one polarization in nondimensional variables
//   y = xi L / c in [0, U/2],  u = 2 kappa0 L in [2y, U],
// both mapped onto finite intervals by s = e^{-y} and v = e^{2y - u}:
//   I_p = int dy int du u^2 f(rho).
// The force is then F_p = (hbar c A / 16 pi^2 L^4) I_p.
struct PolIntegral {
    double value = 0.0;
    double error = 0.0;  // embedded outer error plus integrated inner error
    std::int64_t evaluations = 0;
};

PolIntegral integrate_polarization(const CavityConfig& cfg, Polarization pol, bool perfect) {
    const double L = cfg.gap;
    const QuadratureSpec& q = cfg.quadrature;
    const MirrorAmplitude amp1{&cfg.mirror1, true};
    const MirrorAmplitude amp2{&cfg.mirror2, false};

    // The abs floor on the nondimensional integral; the prefactor converts
    // the user's newton-valued floor (split evenly between polarizations).
    const double prefactor =
        hbar * c_light * cfg.area /
        (16.0 * std::numbers::pi * std::numbers::pi * L * L * L * L);
    const double abs_tol_nd = std::max(0.5 * q.abs_tol_newton / prefactor, 1e-20);
    const double inner_rel = q.rel_tol / 20.0;
    const double inner_abs = 1e-22;

    auto round_trip = [&](double y, double u, double lnv) -> double {
        // e^{-u} alone for perfect mirrors, else dressed by the mirror
        // amplitudes at xi = y c / L, k = sqrt(u^2 - 4y^2) / (2L).
        const double decay = std::exp(-u);
        if (perfect) return decay;
        const double k = std::sqrt((-lnv) * (u + 2.0 * y)) / (2.0 * L);
        const double xi = y * c_light / L;
        const auto mode = TransverseMode::make(FrequencyPoint::imaginary(xi), k, pol);
        return (amp1(mode) * amp2(mode)).real() * decay;
    };

    auto inner = [&](double y) -> IntegrationResult {
        const double v_lo = std::exp(2.0 * y - kUMax);
        auto f = [&](double v) -> QuadSample {
            const double lnv = std::log(v);
            const double u = 2.0 * y - lnv;
            const double rho = round_trip(y, u, lnv);
            const double f_loop = rho / (1.0 - rho);
            return {u * u * f_loop / v, 0.0, 1};
        };
        return integrate_adaptive(f, v_lo, 1.0, inner_rel, inner_abs, q.max_subdivisions);
    };

    // Outer integrand, s = e^{-y}; the aux channel carries the inner error
    // estimates so they integrate alongside the value.
    auto outer_f = [&](double s) -> QuadSample {
        const double y = -std::log(s);
        const IntegrationResult in = inner(y);
        return {in.value / s, in.error / s, in.evaluations};
    };

    const double s_lo = std::exp(-0.5 * kUMax);
    IntegrationResult out;
    if (q.threads <= 1) {
        out = integrate_adaptive(outer_f, s_lo, 1.0, q.rel_tol, abs_tol_nd, q.max_subdivisions);
    } else {
        // Parallel panels: the 15 Kronrod nodes of a panel evaluate together
        // and reduce in node order, so any thread count gives identical bits.
        auto batched = [&](double a, double b, std::int64_t& evals) -> QuadPanel {
            const double mid = 0.5 * (a + b);
            const double half = 0.5 * (b - a);
            double xs[15];
            QuadSample ys[15];
            xs[0] = mid;
            for (int i = 0; i < 7; ++i) {
                const double dx = half * gk15::abscissae[i];
                xs[1 + 2 * i] = mid - dx;
                xs[2 + 2 * i] = mid + dx;
            }
            parallel_for_indexed(15, q.threads, [&](int i) { ys[i] = outer_f(xs[i]); });
            double kron = gk15::kronrod_weights[7] * ys[0].value;
            double gauss = gk15::gauss_weights[3] * ys[0].value;
            double aux = gk15::kronrod_weights[7] * ys[0].aux;
            for (int i = 0; i < 7; ++i) {
                const double pair = ys[1 + 2 * i].value + ys[2 + 2 * i].value;
                kron += gk15::kronrod_weights[i] * pair;
                aux += gk15::kronrod_weights[i] * (ys[1 + 2 * i].aux + ys[2 + 2 * i].aux);
                if (i % 2 == 1) gauss += gk15::gauss_weights[i / 2] * pair;
            }
            for (const QuadSample& yv : ys) evals += yv.evaluations;
            return {a, b, kron * half, std::abs(kron - gauss) * half, aux * half, 0};
        };
        out = integrate_adaptive_panels(batched, s_lo, 1.0, q.rel_tol, abs_tol_nd,
                                        q.max_subdivisions);
    }

    PolIntegral result{out.value, out.error + out.aux, out.evaluations};
    if (!out.converged) {
        ForceResult partial;
        partial.force_newton = prefactor * result.value;
        partial.err_estimate_newton = prefactor * result.error;
        partial.evaluations = result.evaluations;
        throw quadrature_error("force quadrature did not converge within " +
                                   std::to_string(q.max_subdivisions) + " subdivisions (" +
                                   std::string(to_string(pol)) + ")",
                               partial);
    }
    return result;
}

}  // namespace

complexd inner_reflection_left(const MirrorSpec& mirror1, const TransverseMode& mode) {
    return MirrorAmplitude{&mirror1, true}(mode);
}

complexd inner_reflection_right(const MirrorSpec& mirror2, const TransverseMode& mode) {
    return MirrorAmplitude{&mirror2, false}(mode);
}

complexd loop_rho(const MirrorSpec& mirror1, const MirrorSpec& mirror2, double gap,
                  const TransverseMode& mode) {
    if (mode.freq.axis != Axis::Imaginary)
        throw axis_error("loop_rho is defined on the imaginary frequency axis");
    const double xi = mode.freq.value;
    const double kappa0 = std::hypot(mode.k, xi / c_light);
    return inner_reflection_left(mirror1, mode) * inner_reflection_right(mirror2, mode) *
           std::exp(-2.0 * kappa0 * gap);
}

double casimir_ideal(double gap, double area) {
    if (!(gap > 0.0) || !(area > 0.0))
        throw validation_error("casimir_ideal requires gap > 0 and area > 0");
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return hbar * c_light * pi2 * area / (240.0 * gap * gap * gap * gap);
}

ForceResult force(const CavityConfig& cfg) {
    validate(cfg);
    const double L = cfg.gap;
    const double prefactor =
        hbar * c_light * cfg.area /
        (16.0 * std::numbers::pi * std::numbers::pi * L * L * L * L);
    const bool perfect = both_perfect(cfg);

    const PolIntegral te = integrate_polarization(cfg, Polarization::TE, perfect);
    const PolIntegral tm = integrate_polarization(cfg, Polarization::TM, perfect);

    ForceResult out;
    out.force_te_newton = prefactor * te.value;
    out.force_tm_newton = prefactor * tm.value;
    out.force_newton = out.force_te_newton + out.force_tm_newton;
    out.pressure_pascal = out.force_newton / cfg.area;
    out.eta = out.force_newton / casimir_ideal(cfg.gap, cfg.area);
    out.err_estimate_newton = prefactor * (te.error + tm.error);
    out.evaluations = te.evaluations + tm.evaluations;
    return out;
}

ForceResult lifshitz_force(const MediumModel& model1, const MediumModel& model2, double gap,
                           double area, const QuadratureSpec& quadrature) {
    if (is_vacuum(model1) || is_vacuum(model2))
        throw validation_error("lifshitz_force requires non-vacuum bulk media");
    CavityConfig cfg{BulkMirror{model1}, BulkMirror{model2}, gap, area, quadrature};
    return force(cfg);
}

double reduction_factor(const CavityConfig& cfg) { return force(cfg).eta; }

std::vector<SweepRow> sweep_length(const CavityConfig& config, std::span<const double> gaps) {
    if (gaps.empty()) throw validation_error("sweep_length requires a nonempty gap grid");
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (!(gaps[i] > 0.0)) throw validation_error("sweep gaps must be > 0");
        if (i > 0 && !(gaps[i] > gaps[i - 1]))
            throw validation_error("sweep gaps must be strictly increasing");
    }
    std::vector<SweepRow> rows;
    rows.reserve(gaps.size());
    CavityConfig cfg = config;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        SweepRow row;
        row.gap = gaps[i];
        cfg.gap = gaps[i];
        row.result = force(cfg);

        const double h = 1e-3 * gaps[i];
        cfg.gap = gaps[i] + h;
        const double f_hi = force(cfg).force_newton;
        cfg.gap = gaps[i] - h;
        const double f_lo = force(cfg).force_newton;
        row.dF_dL = (f_hi - f_lo) / (2.0 * h);

        row.monotone_ok =
            i == 0 || row.result.force_newton < rows.back().result.force_newton;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace casinet
