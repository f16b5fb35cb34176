#pragma once

#include "gasvol/kernel.hpp"
#include "gasvol/pilot.hpp"
#include "gasvol/series.hpp"

#include <cstddef>
#include <vector>

namespace gasvol {

/// I_x = [center - width/2, center + width/2] with n_star equally spaced
/// functional-evaluation points strictly inside it.
struct IntervalWindow {
    double center = 0.0;
    double width = 1.0;
    std::size_t n_star = 50;

    double lo() const { return center - 0.5 * width; }
    double hi() const { return center + 0.5 * width; }
    /// Midpoints of n_star equal cells covering I_x.
    std::vector<double> points() const;
};

/// n_star = max(50, ceil(n/4)).
IntervalWindow make_window(double center, double width, std::size_t n);

enum class Regime { Global, Local };

/// How the interval width a is chosen.
struct WidthConfig {
    enum class Mode {
        Global,        ///< one interval over the central 98% of the regressor
        Fixed,         ///< user-supplied a, centred at each evaluation point
        LocalDefault,  ///< a = 1.5 * sd * n^(-1/5), centred at each point
    };
    Mode mode = Mode::Global;
    double a = 0.0;

    static WidthConfig global() { return {Mode::Global, 0.0}; }
    static WidthConfig fixed(double a) { return {Mode::Fixed, a}; }
    static WidthConfig local_default() { return {Mode::LocalDefault, 0.0}; }
};

/// Normalization of the variance functional.
///
/// AsPrinted divides the z-grid average of V(z) by the in-window occupancy.
/// WindowLength multiplies that average by the window width a first, which
/// turns the grid average into the integral of V over I_x and makes the
/// estimate consistent for C2 * int V du / mu(I_x).
enum class VarianceScaling { AsPrinted, WindowLength };

struct PlanOptions {
    VarianceScaling variance_scaling = VarianceScaling::WindowLength;
    std::size_t min_window_points = 10;
    double widen_factor = 1.5;
    int max_widenings = 10;
    double flat_curvature = 1e-10;
};

struct FunctionalEstimates {
    double b_hat = 0.0;
    double v_hat = 0.0;
    double m4eps = 0.0;
    double occupancy = 0.0;       ///< fraction of design points in I_x
    std::size_t in_window = 0;    ///< exact in-window count
};

struct BandwidthPlan {
    IntervalWindow window;
    FunctionalEstimates functionals;
    double h_hat = 0.0;
    Regime regime = Regime::Global;
    std::size_t n = 0;
    int widenings = 0;
    /// b_hat fell below the flat-curvature threshold; h_hat capped at range/4.
    bool curvature_capped = false;
};

/// C1^2 * mean of q''(X_{t-1})^2 over in-window design points.
double estimate_b_functional(const DesignPairs& pairs, const PilotNetwork& net,
                             const IntervalWindow& window, const KernelSpec& kernel = {},
                             std::size_t min_points = 10);

/// C2 * mean_i q(z_i)^2 (m4eps - 1) / occupancy, optionally scaled by the
/// window width (see VarianceScaling).
double estimate_v_functional(const DesignPairs& pairs, const PilotNetwork& net, double m4eps,
                             const IntervalWindow& window, const KernelSpec& kernel = {},
                             VarianceScaling scaling = VarianceScaling::WindowLength,
                             std::size_t min_points = 10);

/// (v / (4 n b))^(1/5). Throws FlatCurvatureError when b == 0.
double plugin_bandwidth(double b_hat, double v_hat, std::size_t n);

/// Width a that a WidthConfig resolves to for this design (the global width
/// for Mode::Global).
double resolve_width(const DesignPairs& pairs, const WidthConfig& width);

/// Functionals and plug-in bandwidth on an explicit window, widening it by
/// options.widen_factor while it holds fewer than options.min_window_points.
BandwidthPlan plan_for_window(const DesignPairs& pairs, const PilotNetwork& net, double m4eps,
                              IntervalWindow window, const KernelSpec& kernel = {},
                              const PlanOptions& options = {});

BandwidthPlan bandwidth_plan(const DesignPairs& pairs, const PilotNetwork& net, double m4eps,
                             double x, const WidthConfig& width, const KernelSpec& kernel = {},
                             const PlanOptions& options = {});

}  // namespace gasvol
