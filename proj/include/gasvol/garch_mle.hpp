#pragma once

#include "gasvol/garch.hpp"
#include "gasvol/series.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace gasvol {

struct MleFit {
    GarchParams params;
    double loglik = 0.0;
    bool converged = false;
    int iterations = 0;
    std::vector<double> fitted_sigma2;
    GarchParams start;
    /// Best log-likelihood after every simplex iteration of the winning restart.
    std::vector<double> loglik_trace;
};

struct MleOptions {
    int restarts = 5;
    int max_evaluations = 3000;
};

/// Gaussian log-likelihood with sigma_1^2 set to the sample variance.
double garch_loglik(std::span<const double> x, const GarchParams& params);

/// Conditional variance path under params, same initialization as garch_loglik.
std::vector<double> garch_sigma2_path(std::span<const double> x, const GarchParams& params);

/// Quasi-maximum likelihood GARCH(1,1) fit. Deterministic given start and seed.
MleFit fit_garch_mle(const ReturnSeries& series, std::optional<GarchParams> start = std::nullopt,
                     std::uint64_t seed = 0, const MleOptions& options = {});

/// Fitted conditional variance as a function of X_{t-1} with sigma_{t-1}^2 at
/// its unconditional mean: a0 + a1 x^2 + beta a0 / (1 - a1 - beta).
std::vector<double> mle_sigma2_curve(const MleFit& fit, std::span<const double> x_grid);
double mle_sigma2_at(const GarchParams& params, double x);

/// CSV row: alpha0,alpha1,beta,loglik,converged (header via write_mle_header).
void write_mle_header(std::ostream& out);
void write_mle_row(std::ostream& out, const MleFit& fit);

}  // namespace gasvol
