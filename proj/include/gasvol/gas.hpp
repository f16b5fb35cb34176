#pragma once

#include "gasvol/bandwidth.hpp"
#include "gasvol/kernel.hpp"
#include "gasvol/pilot.hpp"
#include "gasvol/series.hpp"

namespace gasvol {

struct GasOptions {
    PilotFitOptions pilot;
    KernelSpec kernel = make_kernel(KernelName::Epanechnikov);
    PlanOptions plan;
};

/// Everything the estimation stack needs once per series: the lagged design,
/// the fitted pilot network and the fourth-moment estimate.
class GasModel {
public:
    GasModel(const ReturnSeries& series, const GasOptions& options = {});
    GasModel(DesignPairs pairs, const GasOptions& options = {});
    /// Uses an already fitted pilot (e.g. loaded from disk).
    GasModel(DesignPairs pairs, PilotNetwork net, const GasOptions& options = {});

    const DesignPairs& pairs() const noexcept { return pairs_; }
    const PilotNetwork& net() const noexcept { return net_; }
    const PilotFitReport& report() const noexcept { return report_; }
    double m4eps() const noexcept { return m4eps_; }
    const KernelSpec& kernel() const noexcept { return options_.kernel; }
    const PlanOptions& plan_options() const noexcept { return options_.plan; }

    BandwidthPlan plan(double x, const WidthConfig& width) const;
    /// sigma^2(x; h) with h from the plan at x.
    double estimate(double x, const WidthConfig& width) const;

private:
    DesignPairs pairs_;
    GasOptions options_;
    PilotNetwork net_;
    PilotFitReport report_;
    double m4eps_ = 0.0;
};

}  // namespace gasvol
