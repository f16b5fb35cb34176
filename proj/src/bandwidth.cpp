#include "gasvol/bandwidth.hpp"

#include "gasvol/error.hpp"

#include <algorithm>
#include <cmath>

namespace gasvol {

namespace {

constexpr double kGlobalLowerQuantile = 0.01;
constexpr double kGlobalUpperQuantile = 0.99;

struct GlobalSpan {
    double lo, hi;
};

GlobalSpan global_span(const DesignPairs& pairs) {
    return {pairs.regressor_quantile(kGlobalLowerQuantile),
            pairs.regressor_quantile(kGlobalUpperQuantile)};
}

void require_points(const DesignPairs& pairs, const IntervalWindow& window, std::size_t min_points) {
    if (!(window.width > 0.0)) throw ConfigError("interval width a must be positive");
    if (pairs.count_in(window.lo(), window.hi()) < min_points) {
        throw EstimationError("fewer than " + std::to_string(min_points) +
                                  " design points in I_x",
                              window.center);
    }
}

}  // namespace

std::vector<double> IntervalWindow::points() const {
    std::vector<double> z(n_star);
    const double step = width / static_cast<double>(n_star);
    for (std::size_t i = 0; i < n_star; ++i) z[i] = lo() + (static_cast<double>(i) + 0.5) * step;
    return z;
}

IntervalWindow make_window(double center, double width, std::size_t n) {
    IntervalWindow w;
    w.center = center;
    w.width = width;
    w.n_star = std::max<std::size_t>(50, (n + 3) / 4);
    return w;
}

double estimate_b_functional(const DesignPairs& pairs, const PilotNetwork& net,
                             const IntervalWindow& window, const KernelSpec& kernel,
                             std::size_t min_points) {
    require_points(pairs, window, min_points);
    const auto [first, last] = pairs.sorted_range(window.lo(), window.hi());
    const auto xs = pairs.sorted_regressor();
    double sum = 0.0;
    for (std::size_t i = first; i < last; ++i) {
        const double curv = pilot_second_derivative(net, xs[i]);
        sum += curv * curv;
    }
    const double c1 = kernel_constants(kernel).c1;
    return c1 * c1 * sum / static_cast<double>(last - first);
}

double estimate_v_functional(const DesignPairs& pairs, const PilotNetwork& net, double m4eps,
                             const IntervalWindow& window, const KernelSpec& kernel,
                             VarianceScaling scaling, std::size_t min_points) {
    if (!(m4eps > 1.0)) {
        throw DegeneratePilotError("fourth-moment estimate must exceed 1, got " + std::to_string(m4eps));
    }
    require_points(pairs, window, min_points);
    double sum = 0.0;
    for (double z : window.points()) {
        const double q = pilot_eval(net, z);
        sum += q * q * (m4eps - 1.0);
    }
    double average = sum / static_cast<double>(window.n_star);
    if (scaling == VarianceScaling::WindowLength) average *= window.width;
    const double occupancy = static_cast<double>(pairs.count_in(window.lo(), window.hi())) /
                             static_cast<double>(pairs.size());
    return kernel_constants(kernel).c2 * average / occupancy;
}

double plugin_bandwidth(double b_hat, double v_hat, std::size_t n) {
    if (n < 30) throw ConfigError("plugin_bandwidth: n must be >= 30");
    if (v_hat < 0.0) throw ConfigError("plugin_bandwidth: negative variance functional");
    if (!(b_hat > 0.0)) {
        throw FlatCurvatureError("curvature functional is zero; widen I_x or cap h");
    }
    return std::pow(v_hat / (4.0 * static_cast<double>(n) * b_hat), 0.2);
}

double resolve_width(const DesignPairs& pairs, const WidthConfig& width) {
    switch (width.mode) {
        case WidthConfig::Mode::Global: {
            const auto span = global_span(pairs);
            return span.hi - span.lo;
        }
        case WidthConfig::Mode::Fixed:
            if (!(width.a > 0.0)) throw ConfigError("interval width a must be positive");
            return width.a;
        case WidthConfig::Mode::LocalDefault:
            return 1.5 * pairs.regressor_stddev() *
                   std::pow(static_cast<double>(pairs.size()), -0.2);
    }
    throw ConfigError("unknown width mode");
}

BandwidthPlan plan_for_window(const DesignPairs& pairs, const PilotNetwork& net, double m4eps,
                              IntervalWindow window, const KernelSpec& kernel,
                              const PlanOptions& options) {
    const std::size_t n = pairs.size();
    const auto span = global_span(pairs);

    BandwidthPlan plan;
    plan.n = n;
    while (pairs.count_in(window.lo(), window.hi()) < options.min_window_points) {
        if (plan.widenings >= options.max_widenings) {
            throw EstimationError("too few design points in I_x after widening", window.center);
        }
        window.width *= options.widen_factor;
        ++plan.widenings;
    }
    plan.window = window;
    plan.regime = window.lo() <= span.lo && window.hi() >= span.hi ? Regime::Global : Regime::Local;

    auto& f = plan.functionals;
    f.in_window = pairs.count_in(window.lo(), window.hi());
    f.occupancy = static_cast<double>(f.in_window) / static_cast<double>(n);
    f.m4eps = m4eps;
    f.b_hat = estimate_b_functional(pairs, net, window, kernel, options.min_window_points);
    f.v_hat = estimate_v_functional(pairs, net, m4eps, window, kernel, options.variance_scaling,
                                    options.min_window_points);

    if (f.b_hat < options.flat_curvature) {
        plan.curvature_capped = true;
        plan.h_hat = (pairs.max_regressor() - pairs.min_regressor()) / 4.0;
    } else {
        plan.h_hat = plugin_bandwidth(f.b_hat, f.v_hat, n);
    }
    if (!(plan.h_hat > 0.0)) throw EstimationError("variance functional is zero", window.center);
    return plan;
}

BandwidthPlan bandwidth_plan(const DesignPairs& pairs, const PilotNetwork& net, double m4eps,
                             double x, const WidthConfig& width, const KernelSpec& kernel,
                             const PlanOptions& options) {
    double center = x;
    if (width.mode == WidthConfig::Mode::Global) {
        const auto span = global_span(pairs);
        center = 0.5 * (span.lo + span.hi);
    }
    auto plan = plan_for_window(pairs, net, m4eps,
                                make_window(center, resolve_width(pairs, width), pairs.size()),
                                kernel, options);
    if (width.mode == WidthConfig::Mode::Global) plan.regime = Regime::Global;
    return plan;
}

}  // namespace gasvol
