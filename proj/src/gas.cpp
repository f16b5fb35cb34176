#include "gasvol/gas.hpp"

#include "gasvol/local_linear.hpp"

namespace gasvol {

GasModel::GasModel(const ReturnSeries& series, const GasOptions& options)
    : GasModel(DesignPairs(series), options) {}

GasModel::GasModel(DesignPairs pairs, const GasOptions& options)
    : pairs_(std::move(pairs)), options_(options) {
    auto fit = fit_pilot(pairs_, options_.pilot);
    net_ = std::move(fit.net);
    report_ = std::move(fit.report);
    m4eps_ = estimate_m4eps(pairs_, net_);
}

GasModel::GasModel(DesignPairs pairs, PilotNetwork net, const GasOptions& options)
    : pairs_(std::move(pairs)), options_(options), net_(std::move(net)) {
    m4eps_ = estimate_m4eps(pairs_, net_);
    report_.chosen_d = static_cast<int>(net_.hidden_count());
    report_.rss = pilot_rss(pairs_, net_);
    report_.converged = true;
    report_.m4eps = m4eps_;
}

BandwidthPlan GasModel::plan(double x, const WidthConfig& width) const {
    return bandwidth_plan(pairs_, net_, m4eps_, x, width, options_.kernel, options_.plan);
}

double GasModel::estimate(double x, const WidthConfig& width) const {
    return lle_fit(pairs_, x, plan(x, width).h_hat, options_.kernel);
}

}  // namespace gasvol
