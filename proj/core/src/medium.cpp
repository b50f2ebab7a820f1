#include "casinet/medium.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <string>

namespace casinet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Smallest admissible eps - 1 for the log-log interpolation; samples at
// exactly eps = 1 degenerate gracefully to a transparent node.
constexpr double kEpsM1Floor = 1e-300;

}  // namespace

// ---------------------------------------------------------------------------
// Tabulated
// ---------------------------------------------------------------------------

Tabulated::Tabulated(std::vector<double> xi, std::vector<double> eps) : xi_(std::move(xi)) {
    if (xi_.size() != eps.size()) throw validation_error("tabulated data: column size mismatch");
    if (xi_.size() < 2) throw validation_error("tabulated data: need at least 2 samples");
    for (std::size_t i = 0; i < xi_.size(); ++i) {
        if (!(xi_[i] > 0.0) || !std::isfinite(xi_[i]))
            throw validation_error("tabulated data: xi values must be positive and finite");
        if (i > 0 && !(xi_[i] > xi_[i - 1]))
            throw validation_error("tabulated data: xi values must be strictly increasing");
        if (!(eps[i] >= 1.0) || !std::isfinite(eps[i]))
            throw validation_error("tabulated data: epsilon values must be >= 1 and finite");
    }
    log_xi_.reserve(xi_.size());
    log_eps_m1_.reserve(xi_.size());
    for (std::size_t i = 0; i < xi_.size(); ++i) {
        log_xi_.push_back(std::log(xi_[i]));
        log_eps_m1_.push_back(std::log(std::max(eps[i] - 1.0, kEpsM1Floor)));
    }
    tail_low_ = (eps.front() - 1.0) * xi_.front() * xi_.front();
    tail_high_ = (eps.back() - 1.0) * xi_.back() * xi_.back();
}

double Tabulated::evaluate(double xi) const {
    if (!(xi > 0.0)) throw pole_error("tabulated epsilon diverges at xi = 0 (plasma tail)");
    if (xi < xi_.front()) return 1.0 + tail_low_ / (xi * xi);
    if (xi > xi_.back()) return 1.0 + tail_high_ / (xi * xi);
    const double lx = std::log(xi);
    auto it = std::upper_bound(log_xi_.begin(), log_xi_.end(), lx);
    std::size_t hi = std::min<std::size_t>(it - log_xi_.begin(), log_xi_.size() - 1);
    if (hi == 0) hi = 1;
    const std::size_t lo = hi - 1;
    const double w = (lx - log_xi_[lo]) / (log_xi_[hi] - log_xi_[lo]);
    const double lv = log_eps_m1_[lo] + w * (log_eps_m1_[hi] - log_eps_m1_[lo]);
    return 1.0 + std::exp(lv);
}

double Tabulated::eps_xi_squared(double xi) const {
    if (xi < xi_.front()) return xi * xi + tail_low_;
    if (xi > xi_.back()) return xi * xi + tail_high_;
    return evaluate(xi) * xi * xi;
}

// ---------------------------------------------------------------------------
// epsilon
// ---------------------------------------------------------------------------

namespace {

complexd epsilon_impl(const MediumModel& model, FrequencyPoint freq, bool inf_at_pole) {
    const double v = freq.value;
    if (freq.axis == Axis::Imaginary) {
        return std::visit(
            [&](const auto& m) -> complexd {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, Vacuum>) {
                    return 1.0;
                } else if constexpr (std::is_same_v<T, Dielectric>) {
                    return m.epsilon_r;
                } else if constexpr (std::is_same_v<T, Plasma>) {
                    if (v == 0.0) {
                        if (inf_at_pole) return kInf;
                        throw pole_error("plasma epsilon has a pole at xi = 0");
                    }
                    return 1.0 + m.omega_p * m.omega_p / (v * v);
                } else if constexpr (std::is_same_v<T, Drude>) {
                    if (v == 0.0) {
                        if (inf_at_pole) return kInf;
                        throw pole_error("Drude epsilon has a pole at xi = 0");
                    }
                    return 1.0 + m.omega_p * m.omega_p / (v * (v + m.gamma));
                } else {
                    static_assert(std::is_same_v<T, Tabulated>);
                    if (v == 0.0 && inf_at_pole) return kInf;
                    return m.evaluate(v);
                }
            },
            model);
    }
    // Real axis
    return std::visit(
        [&](const auto& m) -> complexd {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Vacuum>) {
                return 1.0;
            } else if constexpr (std::is_same_v<T, Dielectric>) {
                return m.epsilon_r;
            } else if constexpr (std::is_same_v<T, Plasma>) {
                if (v == 0.0) throw pole_error("plasma epsilon has a pole at omega = 0");
                return 1.0 - m.omega_p * m.omega_p / (v * v);
            } else if constexpr (std::is_same_v<T, Drude>) {
                if (v == 0.0) throw pole_error("Drude epsilon has a pole at omega = 0");
                return 1.0 - m.omega_p * m.omega_p / (v * complexd(v, m.gamma));
            } else {
                static_assert(std::is_same_v<T, Tabulated>);
                throw axis_error("tabulated permittivity is defined on the imaginary axis only");
            }
        },
        model);
}

}  // namespace

complexd epsilon(const MediumModel& model, FrequencyPoint freq) {
    return epsilon_impl(model, freq, false);
}

complexd epsilon_or_infinity(const MediumModel& model, FrequencyPoint freq) {
    return epsilon_impl(model, freq, true);
}

double eps_xi_squared(const MediumModel& model, double xi) {
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Vacuum>) {
                return xi * xi;
            } else if constexpr (std::is_same_v<T, Dielectric>) {
                return m.epsilon_r * xi * xi;
            } else if constexpr (std::is_same_v<T, Plasma>) {
                return xi * xi + m.omega_p * m.omega_p;
            } else if constexpr (std::is_same_v<T, Drude>) {
                return xi * xi + m.omega_p * m.omega_p * xi / (xi + m.gamma);
            } else {
                static_assert(std::is_same_v<T, Tabulated>);
                return m.eps_xi_squared(xi);
            }
        },
        model);
}

// ---------------------------------------------------------------------------
// kappa
// ---------------------------------------------------------------------------

namespace {

// Branch rule on the real axis: continuation from the physical domain
// Re xi > 0 approaches the real frequency axis from Im(kappa^2) <= 0, so a
// negative real kappa^2 (lossless ordinary waves) maps to -i sqrt(|.|).
complexd branch_sqrt_real_axis(complexd z) {
    if (z.imag() == 0.0 && z.real() < 0.0) return complexd(0.0, -std::sqrt(-z.real()));
    complexd root = std::sqrt(z);
    if (root.real() < 0.0) root = -root;
    return root;
}

// Degenerate point xi = k = 0: analytic limits, never sampled by quadrature.
double degenerate_kappa(const MediumModel& model) {
    return std::visit(
        [](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Plasma> || std::is_same_v<T, Drude>) {
                return m.omega_p / constants::c_light;
            } else if constexpr (std::is_same_v<T, Tabulated>) {
                return std::sqrt(m.eps_xi_squared(0.0)) / constants::c_light;
            } else {
                return 0.0;
            }
        },
        model);
}

}  // namespace

complexd kappa_from_permittivity(complexd eps, const TransverseMode& mode) {
    const double c = constants::c_light;
    const double k = mode.k;
    const double v = mode.freq.value;
    if (mode.freq.axis == Axis::Imaginary) {
        complexd arg = eps * (v * v) / (c * c) + k * k;
        complexd root = std::sqrt(arg);
        if (root.real() < 0.0) root = -root;
        return root;
    }
    return branch_sqrt_real_axis(complexd(k * k, 0.0) - eps * (v * v) / (c * c));
}

complexd kappa(const MediumModel& model, const TransverseMode& mode) {
    const double c = constants::c_light;
    const double k = mode.k;
    const double v = mode.freq.value;
    if (mode.freq.axis == Axis::Imaginary) {
        if (v == 0.0 && k == 0.0) return degenerate_kappa(model);
        return std::sqrt(eps_xi_squared(model, v) / (c * c) + k * k);
    }
    // Real axis: eps * omega^2 stays finite at omega = 0 for every model.
    complexd eps_w2 = std::visit(
        [&](const auto& m) -> complexd {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Plasma>) {
                return v * v - m.omega_p * m.omega_p;
            } else if constexpr (std::is_same_v<T, Drude>) {
                if (v == 0.0) return 0.0;
                return v * v - m.omega_p * m.omega_p * v / complexd(v, m.gamma);
            } else if constexpr (std::is_same_v<T, Tabulated>) {
                throw axis_error("tabulated permittivity is defined on the imaginary axis only");
            } else {
                return epsilon(model, mode.freq) * (v * v);
            }
        },
        model);
    return branch_sqrt_real_axis(complexd(k * k, 0.0) - eps_w2 / (c * c));
}

// ---------------------------------------------------------------------------
// load_tabulated
// ---------------------------------------------------------------------------

MediumModel load_tabulated(std::istream& source) {
    std::vector<double> xi, eps;
    std::string line;
    int lineno = 0;
    while (std::getline(source, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        double x = 0.0, e = 0.0;
        if (!(fields >> x >> e))
            throw parse_error("tabulated data line " + std::to_string(lineno) +
                                  ": expected two numeric columns \"xi epsilon\"",
                              "samples", lineno);
        std::string extra;
        if (fields >> extra)
            throw parse_error("tabulated data line " + std::to_string(lineno) +
                                  ": trailing content '" + extra + "'",
                              "samples", lineno);
        xi.push_back(x);
        eps.push_back(e);
    }
    if (xi.size() < 2)
        throw validation_error("tabulated data: need at least 2 samples, got " +
                               std::to_string(xi.size()));
    return Tabulated(std::move(xi), std::move(eps));
}

bool is_vacuum(const MediumModel& model) { return std::holds_alternative<Vacuum>(model); }

}  // namespace casinet
