#include <cmath>
#include <iomanip>
#include <random>
#include <vector>

#include "casinet/force.hpp"
#include "casinet/noise.hpp"
#include "commands.hpp"

namespace casinet::cli {

namespace {

struct CheckResult {
    std::string name;
    double tolerance;
    double worst;  // largest observed violation metric; pass iff worst <= tolerance
    int cases;
};

struct Generator {
    std::mt19937_64 rng;
    bool mutate;

    explicit Generator(std::uint64_t seed, bool mutate_in) : rng(seed), mutate(mutate_in) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    complexd amplitude(double scale = 0.7) {
        return {uniform(-scale, scale), uniform(-scale, scale)};
    }
    MediumModel model() {
        switch (static_cast<int>(uniform(0.0, 3.0))) {
            case 0: return Dielectric(uniform(1.1, 12.0));
            case 1: return Plasma(uniform(2e15, 2e16));
            default: return Drude(uniform(2e15, 2e16), uniform(1e13, 2e14));
        }
    }
    LayerStack stack(int max_layers, double max_thickness) {
        LayerStack s;
        const int n = 1 + static_cast<int>(uniform(0.0, max_layers));
        for (int i = 0; i < n; ++i) s.layers.push_back({model(), uniform(1e-9, max_thickness)});
        return s;
    }
    TransverseMode imaginary_mode() {
        return TransverseMode::make(FrequencyPoint::imaginary(uniform(1e13, 2e16)),
                                    uniform(0.0, 1e8),
                                    uniform(0.0, 1.0) < 0.5 ? Polarization::TE
                                                            : Polarization::TM);
    }
    TransverseMode ordinary_mode() {
        const double omega = uniform(1e14, 2e16);
        return TransverseMode::make(FrequencyPoint::real(omega),
                                    uniform(0.0, 0.95) * omega / constants::c_light,
                                    uniform(0.0, 1.0) < 0.5 ? Polarization::TE
                                                            : Polarization::TM);
    }

    // Applies the test-hook mutation after the physics computed the matrix.
    ScatteringMatrix tamper(ScatteringMatrix s) const {
        if (mutate) {
            s.r = -s.r;
            s.rbar = -s.rbar;
        }
        return s;
    }
};

LayerStack clamp_depth(LayerStack stack, const TransverseMode& mode, double max_depth) {
    double depth = 0.0;
    for (const auto& layer : stack.layers)
        depth += kappa(layer.medium, mode).real() * layer.thickness;
    if (depth > max_depth) {
        const double scale = max_depth / depth;
        for (auto& layer : stack.layers) layer.thickness *= scale;
    }
    return stack;
}

CheckResult check_reciprocity(Generator& gen) {
    // det = ad - bc cancels down to 1 with relative rounding ~ eps / |t|^2;
    // opaque draws are skipped since the identity is unverifiable there.
    CheckResult res{"reciprocity det T = kappa_R/kappa_L", 1e-10, 0.0, 0};
    for (int i = 0; i < 600 && res.cases < 300; ++i) {
        const auto mode = i % 2 == 0 ? gen.imaginary_mode() : gen.ordinary_mode();
        const LayerStack stack = clamp_depth(gen.stack(8, 1e-8), mode, 2.5);
        if (std::abs(stack_scattering(stack, mode).t) < 0.01) continue;
        ++res.cases;
        const TransferMatrix t = stack_transfer(stack, mode);
        res.worst = std::max(res.worst, std::abs(t.det() - 1.0));
    }
    return res;
}

CheckResult check_lossless_unitarity(Generator& gen) {
    CheckResult res{"lossless slab unitarity (real ordinary)", 1e-12, 0.0, 300};
    for (int i = 0; i < res.cases; ++i) {
        const auto mode = gen.ordinary_mode();
        const ScatteringMatrix s =
            gen.tamper(slab(gen.uniform(1.2, 10.0), gen.uniform(1e-9, 5e-7), mode));
        res.worst = std::max(res.worst, std::abs(std::norm(s.r) + std::norm(s.t) - 1.0));
        res.worst =
            std::max(res.worst, std::abs(s.t * std::conj(s.r) + s.r * std::conj(s.t)));
    }
    return res;
}

CheckResult check_passivity(Generator& gen) {
    CheckResult res{"multilayer passivity eig(S^dag S) <= 1", 1e-12, 0.0, 300};
    for (int i = 0; i < res.cases; ++i) {
        const auto mode = i % 2 == 0 ? gen.imaginary_mode() : gen.ordinary_mode();
        const ScatteringMatrix s = stack_scattering(gen.stack(6, 5e-8), mode);
        res.worst = std::max(res.worst, passivity_eigenvalues(s).first - 1.0);
    }
    return res;
}

CheckResult check_airy_diagonal(Generator& gen) {
    CheckResult res{"Airy-diagonal theorem", 1e-12, 0.0, 10000};
    for (int i = 0; i < res.cases; ++i) {
        const complexd rbar1 = gen.amplitude();
        const complexd r2 = gen.amplitude();
        const complexd a1(gen.uniform(0.0, 1.5), gen.uniform(-3.0, 3.0));
        const complexd a2(gen.uniform(0.0, 1.5), gen.uniform(-3.0, 3.0));
        const complexd rho = rbar1 * r2 * std::exp(-2.0 * (a1 + a2));
        if (std::abs(1.0 - rho) < 1e-3) continue;
        const CavityCommutators cav = cavity_matrix(rbar1, r2, a1, a2);
        const double g = airy(rho);
        res.worst = std::max(res.worst, std::abs(cav.g_matrix.m00 - g));
        res.worst = std::max(res.worst, std::abs(cav.g_matrix.m11 - g));
    }
    return res;
}

CheckResult check_slab_bounds(Generator& gen) {
    CheckResult res{"slab bounds 0 < t < 1, 0 < -r < 1, |r+-t| <= 1 (imaginary)", 1e-12, 0.0,
                    300};
    for (int i = 0; i < res.cases; ++i) {
        const auto mode = gen.imaginary_mode();
        const ScatteringMatrix s =
            gen.tamper(slab_scattering(gen.model(), gen.uniform(1e-9, 2e-6), mode));
        res.worst = std::max(res.worst, -s.t.real());          // t > 0
        res.worst = std::max(res.worst, s.t.real() - 1.0);     // t < 1
        res.worst = std::max(res.worst, s.r.real());           // r < 0
        res.worst = std::max(res.worst, -1.0 - s.r.real());    // r > -1
        res.worst = std::max(res.worst, std::abs(s.r + s.t) - 1.0);
        res.worst = std::max(res.worst, std::abs(s.r - s.t) - 1.0);
    }
    return res;
}

CheckResult check_noise_closure(Generator& gen) {
    CheckResult res{"optical-theorem closure under composition", 1e-11, 0.0, 1000};
    for (int i = 0; i < res.cases; ++i) {
        ScatteringMatrix sa;
        sa.r = gen.amplitude();
        sa.rbar = gen.amplitude();
        do { sa.t = gen.amplitude(); } while (std::abs(sa.t) < 0.05);
        sa.tbar = gen.amplitude();
        ScatteringMatrix sb;
        sb.r = gen.amplitude();
        sb.rbar = gen.amplitude();
        do { sb.t = gen.amplitude(); } while (std::abs(sb.t) < 0.05);
        sb.tbar = gen.amplitude();
        const TransferMatrix ta = s_to_t(sa, 1.0, 1.0);
        const TransferMatrix tb = s_to_t(sb, 1.0, 1.0);
        const Mat2 composed = compose_noise(ta, noise_norm_t(ta), noise_norm_t(tb)).matrix;
        const Mat2 direct = noise_norm_t(compose_t(ta, tb)).matrix;
        res.worst = std::max(res.worst,
                             (composed - direct).max_abs() / (1.0 + direct.max_abs()));
    }
    return res;
}

CheckResult check_perfect_quadrature() {
    CheckResult res{"perfect-mirror quadrature vs closed form", 1e-6, 0.0, 1};
    CavityConfig cfg{PerfectMirror{}, PerfectMirror{}, 1e-6, 1e-4, QuadratureSpec{}};
    const ForceResult f = force(cfg);
    const double exact = casimir_ideal(cfg.gap, cfg.area);
    res.worst = std::abs(f.force_newton - exact) / exact;
    return res;
}

}  // namespace

int run_validate(const ValidationOptions& options, std::ostream& out) {
    Generator gen(options.seed, options.mutate_fresnel_sign);
    std::vector<CheckResult> checks;
    checks.push_back(check_reciprocity(gen));
    checks.push_back(check_lossless_unitarity(gen));
    checks.push_back(check_passivity(gen));
    checks.push_back(check_airy_diagonal(gen));
    checks.push_back(check_slab_bounds(gen));
    checks.push_back(check_noise_closure(gen));
    checks.push_back(check_perfect_quadrature());

    bool all_pass = true;
    out << "casinet validation suite (seed " << options.seed << ")\n";
    for (const CheckResult& c : checks) {
        const bool pass = c.worst <= c.tolerance;
        all_pass = all_pass && pass;
        out << (pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(58) << c.name
            << " cases " << std::setw(6) << c.cases << " worst " << std::scientific
            << std::setprecision(2) << c.worst << "  tol " << c.tolerance << "\n"
            << std::defaultfloat;
    }
    out << (all_pass ? "RESULT: PASS" : "RESULT: FAIL") << " (" << checks.size() << " checks)\n";
    return all_pass ? kExitOk : kExitFailure;
}

}  // namespace casinet::cli
