#include "gasvol/local_linear.hpp"

#include "gasvol/error.hpp"

#include <cmath>

namespace gasvol {

namespace {

struct WindowSums {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0;
    double t0 = 0.0, t1 = 0.0;
    std::size_t first = 0, last = 0;
    double h = 0.0;
    int inflations = 0;

    double denominator() const { return s0 * s2 - s1 * s1; }
};

// Accumulates the local linear moments, inflating h until the window holds
// enough points and the 2x2 system is well conditioned.
WindowSums local_sums(const DesignPairs& pairs, double x, double h, const KernelSpec& kernel) {
    if (!(h > 0.0) || !std::isfinite(h)) throw EstimationError("bandwidth must be positive", x);
    const auto xs = pairs.sorted_regressor();
    const auto ys = pairs.sorted_response();

    for (int inflations = 0; inflations <= kMaxInflations; ++inflations, h *= kInflateFactor) {
        const auto [first, last] = pairs.sorted_range(x - h, x + h);
        if (last - first < kMinWindowPoints) continue;
        WindowSums s;
        s.first = first;
        s.last = last;
        s.h = h;
        s.inflations = inflations;
        for (std::size_t i = first; i < last; ++i) {
            const double d = xs[i] - x;
            const double k = kernel(d / h);
            s.s0 += k;
            s.s1 += k * d;
            s.s2 += k * d * d;
            s.t0 += k * ys[i];
            s.t1 += k * d * ys[i];
        }
        const double scale = s.s0 * s.s0 * 4.0 * h * h;
        if (s.s0 > 0.0 && std::abs(s.denominator()) > 1e-12 * scale) return s;
    }
    throw EstimationError("local linear window degenerate after maximal inflation", x);
}

}  // namespace

EffectiveWeights effective_weights(const DesignPairs& pairs, double x, double h,
                                   const KernelSpec& kernel) {
    const WindowSums s = local_sums(pairs, x, h, kernel);
    const auto xs = pairs.sorted_regressor();
    const auto order = pairs.sorted_index();
    const double den = s.denominator();

    EffectiveWeights out;
    out.weights.assign(pairs.size(), 0.0);
    out.h = s.h;
    out.inflations = s.inflations;
    for (std::size_t i = s.first; i < s.last; ++i) {
        const double d = xs[i] - x;
        out.weights[order[i]] = kernel(d / s.h) * (s.s2 - d * s.s1) / den;
    }
    return out;
}

LocalFit lle_fit_detail(const DesignPairs& pairs, double x, double h, const KernelSpec& kernel) {
    const WindowSums s = local_sums(pairs, x, h, kernel);
    return {(s.s2 * s.t0 - s.s1 * s.t1) / s.denominator(), s.h, s.inflations, s.last - s.first};
}

double lle_fit(const DesignPairs& pairs, double x, double h, const KernelSpec& kernel) {
    return lle_fit_detail(pairs, x, h, kernel).value;
}

}  // namespace gasvol
