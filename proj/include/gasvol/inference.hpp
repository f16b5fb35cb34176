#pragma once

#include "gasvol/bandwidth.hpp"
#include "gasvol/gas.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gasvol {

struct BandOptions {
    double alpha = 0.05;
    bool bias_correction = true;
    /// Centre the interval on the interval average sigma^2(I_x) instead of
    /// the pointwise estimate.
    bool interval_mode = false;
};

struct BandPoint {
    double x = 0.0;
    double estimate = 0.0;         ///< sigma^2(x; h) (or sigma^2(I_x) in interval mode)
    double bias_correction = 0.0;  ///< h^2 B / 2, zero when disabled
    double center = 0.0;
    double half_width = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double h = 0.0;                ///< bandwidth used by the local fit
    std::optional<BandwidthPlan> plan;
    std::string error;             ///< non-empty when this point failed

    bool ok() const noexcept { return error.empty(); }
};

/// Pointwise confidence band. Negative estimates are reported as is.
struct VolatilityCurve {
    std::vector<BandPoint> points;
    double alpha = 0.05;
    double z = 0.0;  ///< normal quantile at 1 - alpha/2
    bool interval_mode = false;
    bool bias_corrected = true;
};

VolatilityCurve confidence_band(const DesignPairs& pairs, const PilotNetwork& net, double m4eps,
                                std::span<const double> grid, const WidthConfig& width,
                                const BandOptions& options = {}, const KernelSpec& kernel = {},
                                const PlanOptions& plan_options = {});

VolatilityCurve confidence_band(const GasModel& model, std::span<const double> grid,
                                const WidthConfig& width, const BandOptions& options = {});

struct IntervalAverage {
    double sigma2 = 0.0;  ///< occupancy-weighted average of sigma^2(X_{t-1}; h_Ix)
    double lo = 0.0;      ///< I_x actually used (after any widening)
    double hi = 0.0;
    std::size_t count = 0;
    double h = 0.0;
    BandwidthPlan plan;
};

IntervalAverage interval_averaged_estimate(const DesignPairs& pairs, const PilotNetwork& net,
                                           double m4eps, const IntervalWindow& window,
                                           const KernelSpec& kernel = {},
                                           const PlanOptions& plan_options = {});

struct SymmetryPair {
    double x = 0.0;
    double t_stat = 0.0;
    double sigma2_pos = 0.0;
    double sigma2_neg = 0.0;
    double h_pos = 0.0;
    double h_neg = 0.0;
    double v_pos = 0.0;
    double v_neg = 0.0;
    bool exceeds = false;
};

struct SymmetryTestResult {
    std::vector<SymmetryPair> pairs;
    double critical_value = 0.0;
    double alpha = 0.01;
    int n_x = 20;
    bool reject = false;
    std::vector<std::string> warnings;
};

/// Test points x_i = i q / (n_x/2), i = 1..n_x/2, with q the smaller of
/// |1% quantile| and the 99% quantile of the regressor.
std::vector<double> symmetry_points(const DesignPairs& pairs, int n_x);

/// Bonferroni test of sigma^2(x) = sigma^2(-x) over n_x/2 point pairs.
/// Bandwidths follow `width`; the variance functional in each T_i comes from
/// the window I_{+-x_i} (the default local width when `width` is global).
SymmetryTestResult symmetry_test(const DesignPairs& pairs, const PilotNetwork& net, double m4eps,
                                 int n_x, double alpha, const WidthConfig& width,
                                 const KernelSpec& kernel = {}, const PlanOptions& plan_options = {});

SymmetryTestResult symmetry_test(const GasModel& model, int n_x, double alpha,
                                 const WidthConfig& width);

}  // namespace gasvol
