#include "gasvol/inference.hpp"

#include "gasvol/error.hpp"
#include "gasvol/local_linear.hpp"
#include "gasvol/normal.hpp"

#include <cmath>

namespace gasvol {

namespace {

// Plans are shared across points in the global regime.
class PlanCache {
public:
    PlanCache(const DesignPairs& pairs, const PilotNetwork& net, double m4eps, const WidthConfig& width,
              const KernelSpec& kernel, const PlanOptions& options)
        : pairs_(pairs), net_(net), m4eps_(m4eps), width_(width), kernel_(kernel), options_(options) {}

    BandwidthPlan at(double x) {
        if (width_.mode != WidthConfig::Mode::Global) {
            return bandwidth_plan(pairs_, net_, m4eps_, x, width_, kernel_, options_);
        }
        if (!global_) global_ = bandwidth_plan(pairs_, net_, m4eps_, x, width_, kernel_, options_);
        return *global_;
    }

private:
    const DesignPairs& pairs_;
    const PilotNetwork& net_;
    double m4eps_;
    WidthConfig width_;
    const KernelSpec& kernel_;
    const PlanOptions& options_;
    std::optional<BandwidthPlan> global_;
};

double average_over_window(const DesignPairs& pairs, double lo, double hi, double h,
                           const KernelSpec& kernel, std::size_t& count) {
    const auto [first, last] = pairs.sorted_range(lo, hi);
    const auto xs = pairs.sorted_regressor();
    double sum = 0.0;
    for (std::size_t i = first; i < last; ++i) sum += lle_fit(pairs, xs[i], h, kernel);
    count = last - first;
    return count > 0 ? sum / static_cast<double>(count) : 0.0;
}

}  // namespace

VolatilityCurve confidence_band(const DesignPairs& pairs, const PilotNetwork& net, double m4eps,
                                std::span<const double> grid, const WidthConfig& width,
                                const BandOptions& options, const KernelSpec& kernel,
                                const PlanOptions& plan_options) {
    if (!(options.alpha > 0.0 && options.alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");

    VolatilityCurve curve;
    curve.alpha = options.alpha;
    curve.z = normal_quantile(1.0 - options.alpha / 2.0);
    curve.interval_mode = options.interval_mode;
    curve.bias_corrected = options.bias_correction;

    const double lo = pairs.min_regressor();
    const double hi = pairs.max_regressor();
    const double n = static_cast<double>(pairs.size());
    PlanCache plans(pairs, net, m4eps, width, kernel, plan_options);

    for (double x : grid) {
        BandPoint p;
        p.x = x;
        if (!(x >= lo && x <= hi)) {
            p.error = "outside the regressor support";
            curve.points.push_back(std::move(p));
            continue;
        }
        try {
            BandwidthPlan plan = plans.at(x);
            const auto& f = plan.functionals;
            if (options.interval_mode) {
                std::size_t count = 0;
                p.estimate = average_over_window(pairs, plan.window.lo(), plan.window.hi(),
                                                 plan.h_hat, kernel, count);
                p.h = plan.h_hat;
            } else {
                const LocalFit fit = lle_fit_detail(pairs, x, plan.h_hat, kernel);
                p.estimate = fit.value;
                p.h = fit.h;
            }
            p.bias_correction = options.bias_correction ? 0.5 * p.h * p.h * f.b_hat : 0.0;
            p.center = p.estimate - p.bias_correction;
            p.half_width = curve.z * std::sqrt(f.v_hat / (n * p.h));
            p.lower = p.center - p.half_width;
            p.upper = p.center + p.half_width;
            p.plan = std::move(plan);
        } catch (const Error& e) {
            p.error = e.what();
        }
        curve.points.push_back(std::move(p));
    }
    return curve;
}

VolatilityCurve confidence_band(const GasModel& model, std::span<const double> grid,
                                const WidthConfig& width, const BandOptions& options) {
    return confidence_band(model.pairs(), model.net(), model.m4eps(), grid, width, options,
                           model.kernel(), model.plan_options());
}

IntervalAverage interval_averaged_estimate(const DesignPairs& pairs, const PilotNetwork& net,
                                           double m4eps, const IntervalWindow& window,
                                           const KernelSpec& kernel, const PlanOptions& plan_options) {
    IntervalAverage out;
    out.plan = plan_for_window(pairs, net, m4eps, window, kernel, plan_options);
    out.lo = out.plan.window.lo();
    out.hi = out.plan.window.hi();
    out.h = out.plan.h_hat;
    out.sigma2 = average_over_window(pairs, out.lo, out.hi, out.h, kernel, out.count);
    return out;
}

std::vector<double> symmetry_points(const DesignPairs& pairs, int n_x) {
    if (n_x < 4 || n_x % 2 != 0) throw ConfigError("n_x must be even and >= 4");
    const double q_lo = pairs.regressor_quantile(0.01);
    const double q_hi = pairs.regressor_quantile(0.99);
    if (!(q_lo < 0.0 && q_hi > 0.0)) {
        throw DataError("symmetry test needs regressor support on both sides of zero");
    }
    const double q = std::min(-q_lo, q_hi);
    const int half = n_x / 2;
    std::vector<double> xs(static_cast<std::size_t>(half));
    for (int i = 1; i <= half; ++i) xs[static_cast<std::size_t>(i - 1)] = q * i / half;
    return xs;
}

SymmetryTestResult symmetry_test(const DesignPairs& pairs, const PilotNetwork& net, double m4eps,
                                 int n_x, double alpha, const WidthConfig& width,
                                 const KernelSpec& kernel, const PlanOptions& plan_options) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");

    SymmetryTestResult result;
    result.alpha = alpha;
    result.n_x = n_x;
    result.critical_value = normal_quantile(1.0 - alpha / n_x);

    const double n = static_cast<double>(pairs.size());
    const double lo = pairs.min_regressor();
    const double hi = pairs.max_regressor();
    PlanCache plans(pairs, net, m4eps, width, kernel, plan_options);
    const WidthConfig variance_width =
        width.mode == WidthConfig::Mode::Global ? WidthConfig::local_default() : width;

    for (double x : symmetry_points(pairs, n_x)) {
        if (!(-x >= lo && x <= hi)) {
            result.warnings.push_back("pair at +/-" + std::to_string(x) + " outside support, dropped");
            continue;
        }
        try {
            const BandwidthPlan pos = plans.at(x);
            const BandwidthPlan neg = plans.at(-x);
            const BandwidthPlan pos_var = variance_width.mode == WidthConfig::Mode::Global
                                              ? pos
                                              : bandwidth_plan(pairs, net, m4eps, x, variance_width, kernel,
                                                               plan_options);
            const BandwidthPlan neg_var = variance_width.mode == WidthConfig::Mode::Global
                                              ? neg
                                              : bandwidth_plan(pairs, net, m4eps, -x, variance_width, kernel,
                                                               plan_options);
            SymmetryPair pair;
            pair.x = x;
            pair.h_pos = pos.h_hat;
            pair.h_neg = neg.h_hat;
            pair.sigma2_pos = lle_fit(pairs, x, pos.h_hat, kernel);
            pair.sigma2_neg = lle_fit(pairs, -x, neg.h_hat, kernel);
            pair.v_pos = pos_var.functionals.v_hat;
            pair.v_neg = neg_var.functionals.v_hat;
            pair.t_stat = std::sqrt(n) *
                          (std::sqrt(pair.h_pos) * pair.sigma2_pos - std::sqrt(pair.h_neg) * pair.sigma2_neg) /
                          std::sqrt(pair.v_pos + pair.v_neg);
            pair.exceeds = std::abs(pair.t_stat) >= result.critical_value;
            result.reject = result.reject || pair.exceeds;
            result.pairs.push_back(pair);
        } catch (const Error& e) {
            result.warnings.push_back("pair at +/-" + std::to_string(x) + " dropped: " + e.what());
        }
    }
    if (result.pairs.empty()) throw EstimationError("symmetry test: every point pair was dropped", 0.0);
    return result;
}

SymmetryTestResult symmetry_test(const GasModel& model, int n_x, double alpha, const WidthConfig& width) {
    return symmetry_test(model.pairs(), model.net(), model.m4eps(), n_x, alpha, width, model.kernel(),
                         model.plan_options());
}

}  // namespace gasvol
