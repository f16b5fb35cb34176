#pragma once

#include "gasvol/kernel.hpp"
#include "gasvol/series.hpp"

#include <vector>

namespace gasvol {

/// Sparse-window rule: fewer than kMinWindowPoints design points within
/// [x-h, x+h] inflates h by kInflateFactor, at most kMaxInflations times.
inline constexpr std::size_t kMinWindowPoints = 5;
inline constexpr double kInflateFactor = 1.2;
inline constexpr int kMaxInflations = 25;

struct EffectiveWeights {
    /// One weight per design pair, in the pairs' original order.
    std::vector<double> weights;
    /// Bandwidth actually used after sparse-window inflation.
    double h = 0.0;
    int inflations = 0;
};

struct LocalFit {
    double value = 0.0;
    double h = 0.0;
    int inflations = 0;
    std::size_t window_count = 0;
};

/// Local linear effective kernel weights at x. Throws EstimationError when
/// the local system stays singular after maximal inflation.
EffectiveWeights effective_weights(const DesignPairs& pairs, double x, double h,
                                   const KernelSpec& kernel = {});

/// Local linear estimate sum_t X_t^2 W_t at x.
double lle_fit(const DesignPairs& pairs, double x, double h, const KernelSpec& kernel = {});

/// As lle_fit, also reporting the bandwidth used and the window size.
LocalFit lle_fit_detail(const DesignPairs& pairs, double x, double h,
                        const KernelSpec& kernel = {});

}  // namespace gasvol
