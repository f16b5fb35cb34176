#pragma once

#include "gasvol/garch.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace gasvol {

/// sign(eps) * sqrt((alpha1 eps^2 + beta) / (alpha1 + beta)), with sign(0) = 0.
double epsilon_tilde(double eps, const GarchParams& params);

/// C = 1 + (beta / alpha1)(1 - 1 / eps_tilde^2). Throws ConfigError for
/// eps_tilde == 0.
double c_eps_tilde(double eps_tilde, const GarchParams& params);

/// One tabulated cell of the Monte Carlo volatility-function oracle.
struct OracleCell {
    double x = 0.0;
    double sigma2 = 0.0;   ///< conditional mean of X_t^2 in the cell (NaN if flagged)
    double se = 0.0;       ///< Monte Carlo standard error
    std::size_t count = 0;
    double width = 0.0;    ///< conditioning window width
    bool flagged = false;  ///< fewer than min_hits samples within the maximal width
    double g_tilde = 0.0;  ///< implied (sigma2 - A0) / ((alpha1 + beta) x^2); NaN at x = 0
    double g = 0.0;        ///< g_tilde + B0 / (x^2 (alpha1 + beta)); NaN at x = 0
};

struct NarchRepresentation {
    GarchParams params;
    double a0 = 0.0;
    double b0 = 0.0;
    std::size_t path_length = 0;
    double path_stddev = 0.0;
    std::vector<OracleCell> cells;

    /// Linear interpolation of sigma2 between unflagged cells; NaN outside.
    double sigma2_at(double x) const;
};

struct OracleOptions {
    std::size_t min_hits = 500;
    double base_width_sd = 0.02;   ///< minimum window as a fraction of the path sd
    double max_width_sd = 0.25;    ///< windows wider than this flag the cell
    std::size_t burn_in = 1000;
};

/// Tabulates E(X_t^2 | X_{t-1} = x) on x_grid by narrow-window conditional
/// averaging over one simulated GARCH(1,1) path of mc_paths observations.
NarchRepresentation narch_sigma2_oracle(const GarchParams& params, std::span<const double> x_grid,
                                        std::size_t mc_paths, std::uint64_t seed,
                                        const OracleOptions& options = {});

/// Symmetric grid of `count` points on [-extent, extent].
std::vector<double> symmetric_grid(double extent, std::size_t count);

/// CSV export: x,sigma2,se,count.
void write_oracle_csv(std::ostream& out, const NarchRepresentation& rep);

}  // namespace gasvol
