#include "gasvol/garch_mle.hpp"

#include "gasvol/error.hpp"
#include "gasvol/nelder_mead.hpp"
#include "gasvol/rng.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>

namespace gasvol {

namespace {

constexpr double kPersistenceCap = 1.0 - 1e-6;

// alpha0 = exp(t0); (alpha1, beta, slack) = cap * softmax(t1, t2, 0).
GarchParams from_unconstrained(const std::vector<double>& theta) {
    const double m = std::max({theta[1], theta[2], 0.0});
    const double e1 = std::exp(theta[1] - m);
    const double e2 = std::exp(theta[2] - m);
    const double e0 = std::exp(-m);
    const double denom = e0 + e1 + e2;
    return {std::exp(theta[0]), kPersistenceCap * e1 / denom, kPersistenceCap * e2 / denom};
}

std::vector<double> to_unconstrained(const GarchParams& p) {
    const double slack = std::max(kPersistenceCap - p.alpha1 - p.beta, 1e-8);
    return {std::log(p.alpha0), std::log(std::max(p.alpha1, 1e-8) / slack),
            std::log(std::max(p.beta, 1e-8) / slack)};
}

double sample_variance(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    const double m = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - m) * (v - m);
    return ss / (n - 1.0);
}

double autocorrelation(std::span<const double> y, std::size_t lag) {
    const double n = static_cast<double>(y.size());
    const double m = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double num = 0.0, den = 0.0;
    for (std::size_t t = 0; t < y.size(); ++t) {
        den += (y[t] - m) * (y[t] - m);
        if (t >= lag) num += (y[t] - m) * (y[t - lag] - m);
    }
    return den > 0.0 ? num / den : 0.0;
}

// Moment-based start from the autocorrelations of X_t^2.
GarchParams moment_start(std::span<const double> x, double variance) {
    std::vector<double> sq(x.size());
    std::transform(x.begin(), x.end(), sq.begin(), [](double v) { return v * v; });
    const double r1 = autocorrelation(sq, 1);
    const double r2 = autocorrelation(sq, 2);
    double persistence = r1 > 0.02 ? std::clamp(r2 / r1, 0.1, 0.95) : 0.5;
    const double a1 = std::clamp(r1, 0.02, persistence - 0.01);
    return {variance * (1.0 - persistence), a1, persistence - a1};
}

}  // namespace

std::vector<double> garch_sigma2_path(std::span<const double> x, const GarchParams& p) {
    std::vector<double> s2(x.size());
    if (x.empty()) return s2;
    s2[0] = sample_variance(x);
    for (std::size_t t = 1; t < x.size(); ++t) s2[t] = p.alpha0 + p.alpha1 * x[t - 1] * x[t - 1] + p.beta * s2[t - 1];
    return s2;
}

double garch_loglik(std::span<const double> x, const GarchParams& p) {
    constexpr double log_2pi = 1.8378770664093453;
    double s2 = sample_variance(x);
    double ll = 0.0;
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (t > 0) s2 = p.alpha0 + p.alpha1 * x[t - 1] * x[t - 1] + p.beta * s2;
        if (!(s2 > 0.0)) return -std::numeric_limits<double>::infinity();
        ll -= 0.5 * (log_2pi + std::log(s2) + x[t] * x[t] / s2);
    }
    return ll;
}

MleFit fit_garch_mle(const ReturnSeries& series, std::optional<GarchParams> start, std::uint64_t seed,
                     const MleOptions& options) {
    if (series.size() < 100) throw DataError("GARCH MLE needs at least 100 observations");
    const auto x = series.values();
    const double variance = sample_variance(x);
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (*lo == *hi || !(variance > 0.0)) throw DataError("GARCH MLE: series has zero variance");

    const GarchParams base = start ? *start : moment_start(x, variance);
    base.validate();
    const auto base_theta = to_unconstrained(base);

    auto objective = [&](const std::vector<double>& theta) {
        return -garch_loglik(x, from_unconstrained(theta));
    };

    Rng rng(seed);
    NelderMeadOptions nm;
    nm.max_evaluations = options.max_evaluations;
    nm.f_tolerance = 1e-10;
    nm.x_tolerance = 1e-6;

    std::optional<NelderMeadResult> best;
    for (int r = 0; r < std::max(1, options.restarts); ++r) {
        std::vector<double> theta = base_theta;
        if (r > 0) {
            for (double& t : theta) t += 0.5 * rng.normal();
        }
        auto res = nelder_mead(objective, theta, nm);
        // Polish from the best point to escape premature simplex collapse.
        auto polished = nelder_mead(objective, res.x, nm);
        polished.trace.insert(polished.trace.begin(), res.trace.begin(), res.trace.end());
        polished.iterations += res.iterations;
        if (!best || polished.value < best->value) best = std::move(polished);
    }

    MleFit fit;
    fit.start = base;
    fit.params = from_unconstrained(best->x);
    fit.loglik = -best->value;
    fit.converged = best->converged && std::isfinite(fit.loglik);
    fit.iterations = best->iterations;
    fit.fitted_sigma2 = garch_sigma2_path(x, fit.params);
    fit.loglik_trace.reserve(best->trace.size());
    double running = std::numeric_limits<double>::infinity();
    for (double v : best->trace) {
        running = std::min(running, v);
        fit.loglik_trace.push_back(-running);
    }
    return fit;
}

double mle_sigma2_at(const GarchParams& p, double x) {
    return p.alpha0 + p.alpha1 * x * x + p.beta * p.alpha0 / (1.0 - p.alpha1 - p.beta);
}

std::vector<double> mle_sigma2_curve(const MleFit& fit, std::span<const double> x_grid) {
    if (!fit.converged) throw Error("MLE fit did not converge; no volatility curve");
    std::vector<double> out(x_grid.size());
    std::transform(x_grid.begin(), x_grid.end(), out.begin(),
                   [&](double x) { return mle_sigma2_at(fit.params, x); });
    return out;
}

void write_mle_header(std::ostream& out) {
    out << "alpha0,alpha1,beta,loglik,converged\n";
}

void write_mle_row(std::ostream& out, const MleFit& fit) {
    out << fmt::format("{:.10g},{:.10g},{:.10g},{:.10g},{}\n", fit.params.alpha0, fit.params.alpha1,
                       fit.params.beta, fit.loglik, fit.converged ? 1 : 0);
}

}  // namespace gasvol
