#include "gasvol/garch_theory.hpp"

#include "gasvol/error.hpp"
#include "gasvol/rng.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

namespace gasvol {

double epsilon_tilde(double eps, const GarchParams& params) {
    params.validate();
    if (eps == 0.0) return 0.0;
    const double mag = std::sqrt((params.alpha1 * eps * eps + params.beta) / params.persistence());
    return eps > 0.0 ? mag : -mag;
}

double c_eps_tilde(double eps_tilde, const GarchParams& params) {
    params.validate();
    if (eps_tilde == 0.0) throw ConfigError("C_eps~ is undefined at eps~ = 0");
    return 1.0 + params.beta / params.alpha1 * (1.0 - 1.0 / (eps_tilde * eps_tilde));
}

double NarchRepresentation::sigma2_at(double x) const {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const OracleCell* left = nullptr;
    for (const auto& cell : cells) {
        if (cell.flagged) continue;
        if (cell.x == x) return cell.sigma2;
        if (cell.x < x) {
            left = &cell;
        } else {
            if (left == nullptr) return nan;
            const double w = (x - left->x) / (cell.x - left->x);
            return left->sigma2 + w * (cell.sigma2 - left->sigma2);
        }
    }
    return nan;
}

std::vector<double> symmetric_grid(double extent, std::size_t count) {
    if (count < 2) return {0.0};
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = -extent + 2.0 * extent * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    // Odd-sized grids hit zero exactly.
    if (count % 2 == 1) grid[count / 2] = 0.0;
    return grid;
}

NarchRepresentation narch_sigma2_oracle(const GarchParams& params, std::span<const double> x_grid,
                                        std::size_t mc_paths, std::uint64_t seed,
                                        const OracleOptions& options) {
    params.validate();
    if (mc_paths < 1000) throw ConfigError("oracle path length too short");

    NarchRepresentation rep;
    rep.params = params;
    rep.a0 = params.a0();
    rep.b0 = params.b0();
    rep.path_length = mc_paths;

    Rng rng(seed);
    std::vector<double> lagged(mc_paths), squared(mc_paths);
    double s2 = params.unconditional_variance();
    double prev = 0.0;
    for (std::size_t t = 0; t < options.burn_in + mc_paths + 1; ++t) {
        const double x = std::sqrt(s2) * rng.normal();
        if (t > options.burn_in) {
            const std::size_t i = t - options.burn_in - 1;
            lagged[i] = prev;
            squared[i] = x * x;
        }
        s2 = params.alpha0 + params.alpha1 * x * x + params.beta * s2;
        prev = x;
    }

    const double mean = std::accumulate(lagged.begin(), lagged.end(), 0.0) / static_cast<double>(mc_paths);
    double ss = 0.0;
    for (double v : lagged) ss += (v - mean) * (v - mean);
    rep.path_stddev = std::sqrt(ss / static_cast<double>(mc_paths - 1));

    std::vector<std::size_t> order(mc_paths);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lagged[a] < lagged[b]; });
    std::vector<double> xs(mc_paths), ys(mc_paths);
    for (std::size_t i = 0; i < mc_paths; ++i) {
        xs[i] = lagged[order[i]];
        ys[i] = squared[order[i]];
    }

    const double base_width = options.base_width_sd * rep.path_stddev;
    const double max_width = options.max_width_sd * rep.path_stddev;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    for (double x : x_grid) {
        OracleCell cell;
        cell.x = x;
        double width = base_width;
        auto lo = std::lower_bound(xs.begin(), xs.end(), x - 0.5 * width);
        auto hi = std::upper_bound(lo, xs.end(), x + 0.5 * width);
        if (static_cast<std::size_t>(hi - lo) < options.min_hits) {
            // Half-width reaching the min_hits-th nearest neighbour.
            const auto centre = std::lower_bound(xs.begin(), xs.end(), x);
            auto left = centre;
            auto right = centre;
            double reach = 0.0;
            for (std::size_t k = 0; k < options.min_hits && (left != xs.begin() || right != xs.end()); ++k) {
                const bool take_left = right == xs.end() ||
                                       (left != xs.begin() && x - *(left - 1) <= *right - x);
                if (take_left) {
                    --left;
                    reach = std::max(reach, x - *left);
                } else {
                    reach = std::max(reach, *right - x);
                    ++right;
                }
            }
            width = 2.0 * reach;
            lo = std::lower_bound(xs.begin(), xs.end(), x - 0.5 * width);
            hi = std::upper_bound(lo, xs.end(), x + 0.5 * width);
        }
        cell.width = width;
        cell.count = static_cast<std::size_t>(hi - lo);
        if (cell.count < options.min_hits || width > max_width) {
            cell.flagged = true;
            cell.sigma2 = cell.se = cell.g = cell.g_tilde = nan;
            rep.cells.push_back(cell);
            continue;
        }
        const auto first = static_cast<std::size_t>(lo - xs.begin());
        const auto last = static_cast<std::size_t>(hi - xs.begin());
        double sum = 0.0;
        for (std::size_t i = first; i < last; ++i) sum += ys[i];
        const double m = sum / static_cast<double>(cell.count);
        double var = 0.0;
        for (std::size_t i = first; i < last; ++i) var += (ys[i] - m) * (ys[i] - m);
        var /= static_cast<double>(cell.count - 1);
        cell.sigma2 = m;
        cell.se = std::sqrt(var / static_cast<double>(cell.count));
        if (x != 0.0) {
            cell.g_tilde = (m - rep.a0) / (params.persistence() * x * x);
            cell.g = cell.g_tilde + rep.b0 / (x * x * params.persistence());
        } else {
            cell.g_tilde = cell.g = nan;
        }
        rep.cells.push_back(cell);
    }
    return rep;
}

void write_oracle_csv(std::ostream& out, const NarchRepresentation& rep) {
    out << "x,sigma2,se,count\n";
    for (const auto& c : rep.cells) {
        out << fmt::format("{:.10g},{:.10g},{:.10g},{}\n", c.x, c.sigma2, c.se, c.count);
    }
}

}  // namespace gasvol
