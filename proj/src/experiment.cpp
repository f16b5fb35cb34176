#include "gasvol/experiment.hpp"

#include "gasvol/csv.hpp"
#include "gasvol/error.hpp"
#include "gasvol/garch_mle.hpp"
#include "gasvol/rng.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <thread>

namespace gasvol {

namespace {

constexpr double kMaxExcludedShare = 0.10;

// Runs fn(0..count-1) on `threads` workers pulling indices from a shared
// counter. Results are stored by index, so the outcome does not depend on
// scheduling.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double sample_sd(const std::vector<double>& v, double mean) {
    if (v.size() < 2) return 0.0;
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

// Reference curve for the ISE: closed form where one exists, otherwise the
// Monte Carlo oracle of the GARCH volatility function.
class Truth {
public:
    explicit Truth(const ExperimentConfig& cfg) : model_(cfg.model) {
        if (const auto* g = std::get_if<Garch11>(&cfg.model)) {
            const double extent = 5.0 * std::sqrt(g->params.unconditional_variance());
            const auto grid = symmetric_grid(extent, cfg.oracle_grid);
            oracle_ = narch_sigma2_oracle(g->params, grid, cfg.oracle_points, derive_seed(cfg.seed, 0x6f7261636c65ULL));
        }
    }

    double operator()(double x) const {
        if (oracle_) return oracle_->sigma2_at(x);
        return *true_sigma2(model_, x);
    }

private:
    SimModel model_;
    std::optional<NarchRepresentation> oracle_;
};

std::vector<double> draw_points(const DesignPairs& pairs, int count, IsePoints scheme, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> xs(static_cast<std::size_t>(count));
    if (scheme == IsePoints::SampleDraw) {
        const auto reg = pairs.regressor();
        for (auto& x : xs) {
            const auto i = static_cast<std::size_t>(rng.uniform() * static_cast<double>(reg.size()));
            x = reg[std::min(i, reg.size() - 1)];
        }
        return xs;
    }
    const double lo = pairs.regressor_quantile(0.01);
    const double hi = pairs.regressor_quantile(0.99);
    for (auto& x : xs) x = rng.uniform(lo, hi);
    return xs;
}

SimSpec replication_spec(const ExperimentConfig& cfg, std::size_t n, std::uint64_t seed) {
    SimSpec spec;
    spec.model = cfg.model;
    spec.n = n;
    spec.burn_in = cfg.burn_in;
    spec.seed = seed;
    return spec;
}

std::uint64_t replication_seed(const ExperimentConfig& cfg, std::size_t n, int r) {
    return derive_seed(cfg.seed, n, static_cast<std::uint64_t>(r));
}

struct Task {
    std::size_t n;
    int replication;
};

std::vector<Task> make_tasks(const ExperimentConfig& cfg) {
    std::vector<Task> tasks;
    for (std::size_t n : cfg.n_list) {
        for (int r = 0; r < cfg.replications; ++r) tasks.push_back({n, r});
    }
    return tasks;
}

void check_exclusions(const ExperimentConfig& cfg, const std::vector<Exclusion>& exclusions) {
    for (std::size_t n : cfg.n_list) {
        const auto bad = std::count_if(exclusions.begin(), exclusions.end(),
                                       [n](const Exclusion& e) { return e.n == n; });
        if (static_cast<double>(bad) > kMaxExcludedShare * cfg.replications) {
            std::string msg = fmt::format("{} of {} replications failed at n={}", bad, cfg.replications, n);
            for (const auto& e : exclusions) {
                if (e.n == n) {
                    msg += fmt::format("; first failure (replication {}): {}", e.replication, e.reason);
                    break;
                }
            }
            throw Error(msg);
        }
    }
}

}  // namespace

std::string estimator_name(EstimatorKind kind) {
    switch (kind) {
        case EstimatorKind::Gas: return "gas";
        case EstimatorKind::Mle: return "mle";
        case EstimatorKind::GlobalBandwidth: return "global";
        case EstimatorKind::Truth: return "truth";
    }
    return "unknown";
}

EstimatorKind parse_estimator(const std::string& name) {
    if (name == "gas") return EstimatorKind::Gas;
    if (name == "mle") return EstimatorKind::Mle;
    if (name == "global") return EstimatorKind::GlobalBandwidth;
    if (name == "truth") return EstimatorKind::Truth;
    throw ConfigError("unknown estimator '" + name + "' (expected gas, mle, global)");
}

void ExperimentConfig::validate() const {
    gasvol::validate(model);
    if (replications < 1) throw ConfigError("replications must be >= 1");
    if (n_x < 2) throw ConfigError("n_x must be >= 2");
    if (estimators.empty()) throw ConfigError("at least one estimator is required");
    if (n_list.empty()) throw ConfigError("n_list is empty");
    for (std::size_t n : n_list) {
        if (n < ReturnSeries::kMinLength) throw ConfigError("series length below 30");
    }
}

const IseRow& IseSummary::row(std::size_t n, EstimatorKind estimator) const {
    for (const auto& r : rows) {
        if (r.n == n && r.estimator == estimator) return r;
    }
    throw ConfigError(fmt::format("no ISE row for n={} estimator={}", n, estimator_name(estimator)));
}

std::size_t IseSummary::included(std::size_t n) const {
    for (const auto& r : rows) {
        if (r.n == n) return r.ise.size();
    }
    return 0;
}

std::size_t IseSummary::excluded(std::size_t n) const {
    return static_cast<std::size_t>(
        std::count_if(exclusions.begin(), exclusions.end(), [n](const Exclusion& e) { return e.n == n; }));
}

IseSummary run_ise_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const Truth truth(cfg);
    const auto tasks = make_tasks(cfg);
    const std::size_t k = cfg.estimators.size();

    std::vector<std::optional<std::vector<double>>> ise(tasks.size());
    std::vector<std::string> reasons(tasks.size());

    std::vector<std::vector<double>> fixed(cfg.n_list.size());
    if (cfg.fixed_points) {
        for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
            const std::size_t n = cfg.n_list[i];
            const DesignPairs pairs(simulate(replication_spec(cfg, n, derive_seed(cfg.seed, n, 0, 1))));
            fixed[i] = draw_points(pairs, cfg.n_x, cfg.point_scheme, derive_seed(cfg.seed, n, 0, 2));
        }
    }

    parallel_for(tasks.size(), cfg.threads, [&](std::size_t i) {
        const auto [n, r] = tasks[i];
        const std::uint64_t seed = replication_seed(cfg, n, r);
        try {
            const ReturnSeries series = simulate(replication_spec(cfg, n, derive_seed(seed, 1)));
            const DesignPairs pairs(series);
            std::vector<double> xs;
            if (cfg.fixed_points) {
                const auto pos = std::find(cfg.n_list.begin(), cfg.n_list.end(), n) - cfg.n_list.begin();
                xs = fixed[static_cast<std::size_t>(pos)];
            } else {
                xs = draw_points(pairs, cfg.n_x, cfg.point_scheme, derive_seed(seed, 2));
            }
            std::vector<double> ref(xs.size());
            for (std::size_t j = 0; j < xs.size(); ++j) {
                ref[j] = truth(xs[j]);
                if (!std::isfinite(ref[j])) throw EstimationError("reference curve unavailable", xs[j]);
            }

            std::optional<GasModel> gas;
            auto gas_model = [&]() -> const GasModel& {
                if (!gas) {
                    GasOptions opts = cfg.gas;
                    opts.pilot.seed = derive_seed(seed, 3);
                    gas.emplace(pairs, opts);
                }
                return *gas;
            };

            std::vector<double> row(k);
            for (std::size_t e = 0; e < k; ++e) {
                std::vector<double> est(xs.size());
                switch (cfg.estimators[e]) {
                    case EstimatorKind::Gas:
                        for (std::size_t j = 0; j < xs.size(); ++j) est[j] = gas_model().estimate(xs[j], cfg.gas_width);
                        break;
                    case EstimatorKind::GlobalBandwidth:
                        for (std::size_t j = 0; j < xs.size(); ++j) {
                            est[j] = gas_model().estimate(xs[j], WidthConfig::global());
                        }
                        break;
                    case EstimatorKind::Mle: {
                        const MleFit fit = fit_garch_mle(series, std::nullopt, derive_seed(seed, 4));
                        est = mle_sigma2_curve(fit, xs);
                        break;
                    }
                    case EstimatorKind::Truth:
                        est = ref;
                        break;
                }
                double sum = 0.0;
                for (std::size_t j = 0; j < xs.size(); ++j) sum += (est[j] - ref[j]) * (est[j] - ref[j]);
                row[e] = sum / static_cast<double>(xs.size());
                if (!std::isfinite(row[e])) throw Error(estimator_name(cfg.estimators[e]) + " produced a non-finite ISE");
            }
            ise[i] = std::move(row);
        } catch (const Error& e) {
            reasons[i] = e.what();
        }
    });

    IseSummary summary;
    summary.model = model_name(cfg.model);
    summary.seed = cfg.seed;
    summary.replications = cfg.replications;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (!ise[i]) summary.exclusions.push_back({tasks[i].n, tasks[i].replication, reasons[i]});
    }
    check_exclusions(cfg, summary.exclusions);

    for (std::size_t n : cfg.n_list) {
        for (std::size_t e = 0; e < k; ++e) {
            IseRow row;
            row.n = n;
            row.estimator = cfg.estimators[e];
            for (std::size_t i = 0; i < tasks.size(); ++i) {
                if (tasks[i].n == n && ise[i]) row.ise.push_back((*ise[i])[e]);
            }
            if (!row.ise.empty()) {
                row.mise = std::accumulate(row.ise.begin(), row.ise.end(), 0.0) / static_cast<double>(row.ise.size());
                row.medise = median(row.ise);
                row.sdise = sample_sd(row.ise, row.mise);
            }
            const double scale = static_cast<double>(n);
            row.mise_scaled = row.mise * scale;
            row.medise_scaled = row.medise * scale;
            row.sdise_scaled = row.sdise * scale;
            summary.rows.push_back(std::move(row));
        }
    }
    return summary;
}

void write_ise_csv(std::ostream& out, const IseSummary& summary) {
    out << "n,estimator,mise,medise,sdise,mise_n,medise_n,sdise_n,included,excluded\n";
    for (const auto& r : summary.rows) {
        out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.n, estimator_name(r.estimator), format_number(r.mise),
                           format_number(r.medise), format_number(r.sdise), format_number(r.mise_scaled),
                           format_number(r.medise_scaled), format_number(r.sdise_scaled), r.ise.size(),
                           summary.excluded(r.n));
    }
}

SymmetrySummary run_symmetry_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.n_x < 4 || cfg.n_x % 2 != 0) throw ConfigError("n_x must be even and >= 4");
    const auto tasks = make_tasks(cfg);

    std::vector<int> outcome(tasks.size(), -1);
    std::vector<std::string> reasons(tasks.size());

    parallel_for(tasks.size(), cfg.threads, [&](std::size_t i) {
        const auto [n, r] = tasks[i];
        const std::uint64_t seed = replication_seed(cfg, n, r);
        try {
            GasOptions opts = cfg.gas;
            opts.pilot.seed = derive_seed(seed, 3);
            const GasModel model(simulate(replication_spec(cfg, n, derive_seed(seed, 1))), opts);
            outcome[i] = symmetry_test(model, cfg.n_x, cfg.alpha, cfg.gas_width).reject ? 1 : 0;
        } catch (const Error& e) {
            reasons[i] = e.what();
        }
    });

    SymmetrySummary summary;
    summary.model = model_name(cfg.model);
    summary.seed = cfg.seed;
    summary.replications = cfg.replications;
    summary.alpha = cfg.alpha;
    summary.n_x = cfg.n_x;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (outcome[i] < 0) summary.exclusions.push_back({tasks[i].n, tasks[i].replication, reasons[i]});
    }
    check_exclusions(cfg, summary.exclusions);

    for (std::size_t n : cfg.n_list) {
        SymmetryRow row;
        row.n = n;
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            if (tasks[i].n != n) continue;
            if (outcome[i] < 0) {
                ++row.excluded;
            } else {
                ++row.included;
                row.rejections += outcome[i];
            }
        }
        row.rate = row.included > 0 ? static_cast<double>(row.rejections) / row.included : 0.0;
        summary.rows.push_back(row);
    }
    return summary;
}

void write_symmetry_summary_csv(std::ostream& out, const SymmetrySummary& summary) {
    out << "n,rejections,included,excluded,rate\n";
    for (const auto& r : summary.rows) {
        out << fmt::format("{},{},{},{},{}\n", r.n, r.rejections, r.included, r.excluded, format_number(r.rate));
    }
}

AnalyzeResult analyze_returns(const ReturnSeries& returns, const std::optional<std::vector<double>>& realized,
                              const AnalyzeConfig& cfg) {
    if (!(cfg.a > 0.0)) throw ConfigError("interval width a must be positive");
    if (cfg.grid_points < 2) throw ConfigError("grid needs at least two points");
    if (realized && realized->size() != returns.size()) {
        throw DataError(fmt::format("alignment error: {} returns but {} realized-volatility rows", returns.size(),
                                    realized->size()));
    }

    GasOptions opts = cfg.gas;
    opts.pilot.seed = derive_seed(cfg.seed, 1);
    const GasModel model(returns, opts);
    const DesignPairs& pairs = model.pairs();

    BandOptions band;
    band.alpha = cfg.alpha;
    band.bias_correction = cfg.bias_correction;
    const WidthConfig local = WidthConfig::fixed(cfg.a);
    const WidthConfig global = WidthConfig::global();

    AnalyzeResult out;
    out.pilot = model.report();
    out.m4eps = model.m4eps();
    const double lo = pairs.regressor_quantile(0.01);
    const double hi = pairs.regressor_quantile(0.99);
    out.grid.resize(cfg.grid_points);
    for (std::size_t i = 0; i < cfg.grid_points; ++i) {
        out.grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cfg.grid_points - 1);
    }
    out.gas = confidence_band(model, out.grid, local, band);
    out.global = confidence_band(model, out.grid, global, band);

    if (realized) {
        // pair t: regressor X_{t-1}, proxy RV_t
        const std::size_t m = returns.size() - 1;
        std::vector<std::size_t> idx(m);
        std::iota(idx.begin(), idx.end(), std::size_t{1});
        if (cfg.coverage_points > 0 && cfg.coverage_points < m) {
            Rng rng(derive_seed(cfg.seed, 2));
            for (std::size_t i = 0; i < cfg.coverage_points; ++i) {
                const auto j = i + static_cast<std::size_t>(rng.uniform() * static_cast<double>(m - i));
                std::swap(idx[i], idx[std::min(j, m - 1)]);
            }
            idx.resize(cfg.coverage_points);
            std::sort(idx.begin(), idx.end());
        }
        std::vector<double> xs(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) xs[i] = returns[idx[i] - 1];
        const auto gas_band = confidence_band(model, xs, local, band);
        const auto global_band = confidence_band(model, xs, global, band);

        CoverageResult cov;
        std::size_t hit_gas = 0, hit_global = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            const auto& g = gas_band.points[i];
            const auto& b = global_band.points[i];
            if (!g.ok() || !b.ok()) continue;
            const double rv = (*realized)[idx[i]];
            ++cov.points;
            hit_gas += (g.lower <= rv && rv <= g.upper);
            hit_global += (b.lower <= rv && rv <= b.upper);
        }
        if (cov.points > 0) {
            cov.gas = static_cast<double>(hit_gas) / static_cast<double>(cov.points);
            cov.global = static_cast<double>(hit_global) / static_cast<double>(cov.points);
        }
        out.coverage = cov;
    }
    return out;
}

AnalyzeResult analyze_returns(const std::filesystem::path& csv_in,
                              const std::optional<std::filesystem::path>& realized_csv,
                              const AnalyzeConfig& cfg) {
    const ReturnSeries returns = read_series_csv(csv_in);
    std::optional<std::vector<double>> realized;
    if (realized_csv) realized = read_csv_column(*realized_csv);
    return analyze_returns(returns, realized, cfg);
}

}  // namespace gasvol
