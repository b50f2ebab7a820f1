#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <vector>

#include "casinet/errors.hpp"

namespace casinet {

// Nested adaptive Gauss-Kronrod (7, 15) quadrature with an embedded error
// estimate per panel. The global strategy subdivides the worst panel until
// the summed error meets max(abs_tol, rel_tol * |value|); the final reduction
// is a compensated sum over panels sorted by interval, so results do not
// depend on subdivision processing order.

namespace gk15 {

// Kronrod abscissae on the positive side of [-1, 1] (symmetric), Kronrod
// weights, and the embedded 7-point Gauss weights. Weight sums reproduce 2.
inline constexpr double abscissae[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
inline constexpr double kronrod_weights[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018, 0.14065325971552592,
    0.16900472663926790, 0.19035057806478541, 0.20443294007529889, 0.20948214108472782};
inline constexpr double gauss_weights[4] = {
    0.12948496616886969, 0.27970539148927660, 0.38183005050511890, 0.41795918367346940};

}  // namespace gk15

struct QuadSample {
    double value = 0.0;  // integrand value
    double aux = 0.0;    // nonnegative side channel, integrated with the same weights
    std::int64_t evaluations = 0;
};

struct QuadPanel {
    double a = 0.0, b = 0.0;
    double value = 0.0;
    double error = 0.0;
    double aux = 0.0;
    std::uint64_t id = 0;
};

struct IntegrationResult {
    double value = 0.0;
    double error = 0.0;  // embedded Gauss-Kronrod error, summed over panels
    double aux = 0.0;    // integral of the side channel
    std::int64_t evaluations = 0;
    int panels = 0;
    bool converged = false;
};

// One G7K15 panel over [a, b]. F maps double -> QuadSample.
template <typename F>
QuadPanel gk15_panel(F&& f, double a, double b, std::int64_t& evaluations) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = 0.0, gauss = 0.0, aux = 0.0;

    const QuadSample center = f(mid);
    evaluations += center.evaluations;
    kronrod += gk15::kronrod_weights[7] * center.value;
    gauss += gk15::gauss_weights[3] * center.value;
    aux += gk15::kronrod_weights[7] * center.aux;

    for (int i = 0; i < 7; ++i) {
        const double dx = half * gk15::abscissae[i];
        const QuadSample lo = f(mid - dx);
        const QuadSample hi = f(mid + dx);
        evaluations += lo.evaluations + hi.evaluations;
        kronrod += gk15::kronrod_weights[i] * (lo.value + hi.value);
        aux += gk15::kronrod_weights[i] * (lo.aux + hi.aux);
        if (i % 2 == 1)  // abscissae 1, 3, 5 carry the embedded Gauss rule
            gauss += gk15::gauss_weights[i / 2] * (lo.value + hi.value);
    }
    return {a, b, kronrod * half, std::abs(kronrod - gauss) * half, aux * half, 0};
}

// Adaptive driver over a panel evaluator: P(a, b, evaluations) -> QuadPanel.
template <typename P>
IntegrationResult integrate_adaptive_panels(P&& evaluate_panel, double a, double b,
                                            double rel_tol, double abs_tol,
                                            int max_subdivisions) {
    IntegrationResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    std::vector<QuadPanel> done;
    auto worse = [](const QuadPanel& x, const QuadPanel& y) {
        return x.error != y.error ? x.error < y.error : x.id > y.id;
    };
    std::priority_queue<QuadPanel, std::vector<QuadPanel>, decltype(worse)> active(worse);

    std::uint64_t next_id = 0;
    std::int64_t evaluations = 0;
    QuadPanel first = evaluate_panel(a, b, evaluations);
    first.id = next_id++;
    active.push(first);

    double total_value = first.value;
    double total_error = first.error;
    int panels = 1;

    while (total_error > std::max(abs_tol, rel_tol * std::abs(total_value))) {
        if (panels >= max_subdivisions || active.empty()) break;
        const QuadPanel worst = active.top();
        active.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // interval exhausted by rounding
            done.push_back(worst);
            continue;
        }
        QuadPanel left = evaluate_panel(worst.a, mid, evaluations);
        QuadPanel right = evaluate_panel(mid, worst.b, evaluations);
        left.id = next_id++;
        right.id = next_id++;
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
        ++panels;
    }

    while (!active.empty()) {
        done.push_back(active.top());
        active.pop();
    }
    std::sort(done.begin(), done.end(),
              [](const QuadPanel& x, const QuadPanel& y) { return x.a < y.a; });

    // Compensated sums in fixed interval order.
    double value = 0.0, cv = 0.0;
    double error = 0.0, aux = 0.0;
    for (const QuadPanel& p : done) {
        const double yv = p.value - cv;
        const double tv = value + yv;
        cv = (tv - value) - yv;
        value = tv;
        error += p.error;
        aux += p.aux;
    }
    out.value = value;
    out.error = error;
    out.aux = aux;
    out.evaluations = evaluations;
    out.panels = panels;
    out.converged = error <= std::max(abs_tol, rel_tol * std::abs(value));
    return out;
}

// Adaptive integration of a pointwise integrand. F maps double -> QuadSample
// or double -> double.
template <typename F>
IntegrationResult integrate_adaptive(F&& f, double a, double b, double rel_tol, double abs_tol,
                                     int max_subdivisions) {
    auto as_sample = [&f](double x) -> QuadSample {
        if constexpr (std::is_convertible_v<std::invoke_result_t<F&, double>, double>) {
            return {static_cast<double>(f(x)), 0.0, 1};
        } else {
            return f(x);
        }
    };
    auto panel = [&](double pa, double pb, std::int64_t& evals) {
        return gk15_panel(as_sample, pa, pb, evals);
    };
    return integrate_adaptive_panels(panel, a, b, rel_tol, abs_tol, max_subdivisions);
}

}  // namespace casinet
