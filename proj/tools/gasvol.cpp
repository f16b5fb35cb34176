// Command-line front end: simulation, estimation, inference and the Monte
// Carlo harness. Every subcommand writes CSV files plus manifest.txt into
// --out. Exit status: 0 success, 1 usage error, 2 runtime failure.

#include "gasvol/csv.hpp"
#include "gasvol/error.hpp"
#include "gasvol/experiment.hpp"
#include "gasvol/garch_mle.hpp"
#include "gasvol/gas.hpp"
#include "gasvol/inference.hpp"
#include "gasvol/local_linear.hpp"
#include "gasvol/nic.hpp"
#include "gasvol/simulate.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace gasvol;

namespace {

constexpr const char* kVersion = "1.0.0";

struct ModelArgs {
    std::string name = "garch";
    double a0 = 0.1;
    std::optional<double> a1;
    double beta = 0.2;

    SimModel build() const {
        if (name == "arch") return Arch1{a0, a1.value_or(0.5)};
        if (name == "garch") return Garch11{GarchParams{a0, a1.value_or(0.3), beta}};
        if (name == "ht") return HtModel{};
        if (name == "arch-eps-tilde") return ArchEpsTilde{GarchParams{a0, a1.value_or(0.3), beta}};
        throw ConfigError("unknown model '" + name + "'");
    }
};

void add_model_options(CLI::App* cmd, ModelArgs& m) {
    cmd->add_option("--model", m.name, "arch | garch | ht | arch-eps-tilde")
        ->check(CLI::IsMember({"arch", "garch", "ht", "arch-eps-tilde"}));
    cmd->add_option("--a0", m.a0, "alpha0");
    cmd->add_option("--a1", m.a1, "alpha1 (0.5 for arch, 0.3 otherwise)");
    cmd->add_option("--beta", m.beta, "beta (garch models)");
}

void record_model(Manifest& mf, const ModelArgs& args, const SimModel& model) {
    mf.set("model", model_name(model));
    if (const auto* a = std::get_if<Arch1>(&model)) {
        mf.set("alpha0", a->alpha0);
        mf.set("alpha1", a->alpha1);
    } else if (args.name == "garch" || args.name == "arch-eps-tilde") {
        mf.set("alpha0", args.a0);
        mf.set("alpha1", args.a1.value_or(0.3));
        mf.set("beta", args.beta);
    }
}

WidthConfig parse_width(const std::string& s) {
    if (s == "global") return WidthConfig::global();
    if (s == "local") return WidthConfig::local_default();
    double a = 0.0;
    std::istringstream in(s);
    if (!(in >> a) || !in.eof() || !(a > 0.0)) {
        throw ConfigError("--width must be global, local or a positive number, got '" + s + "'");
    }
    return WidthConfig::fixed(a);
}

std::vector<double> make_grid(const DesignPairs& pairs, std::size_t points, std::optional<double> from,
                              std::optional<double> to) {
    if (points < 2) throw ConfigError("--grid-points must be >= 2");
    const double lo = from.value_or(pairs.regressor_quantile(0.01));
    const double hi = to.value_or(pairs.regressor_quantile(0.99));
    if (!(lo < hi)) throw ConfigError("empty grid range");
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return grid;
}

std::vector<std::size_t> parse_n_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(item, &pos);
            if (pos != item.size() || v < 30) throw ConfigError("");
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw ConfigError("--n-list must be comma-separated lengths >= 30, got '" + s + "'");
        }
    }
    if (out.empty()) throw ConfigError("--n-list is empty");
    return out;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

Manifest base_manifest(const std::string& command, std::uint64_t seed) {
    Manifest mf;
    mf.set("command", command);
    mf.set("version", kVersion);
    mf.set("seed", static_cast<unsigned long long>(seed));
    return mf;
}

void record_pilot(Manifest& mf, const GasModel& model) {
    const auto& r = model.report();
    mf.set("pilot_hidden", r.chosen_d);
    mf.set("pilot_converged", r.converged);
    mf.set("pilot_rss", r.rss);
    mf.set("m4eps", model.m4eps());
}

void record_width(Manifest& mf, const std::string& width) { mf.set("width", width); }

void write_manifest(const fs::path& out_dir, const Manifest& mf) { mf.write(out_dir / "manifest.txt"); }

// --- subcommands --------------------------------------------------------------

struct SimulateArgs {
    ModelArgs model;
    std::size_t n = 1000;
    std::size_t burn_in = 500;
    std::uint64_t seed = 1;
    fs::path out = "out";
};

void run_simulate(const SimulateArgs& a) {
    SimSpec spec;
    spec.model = a.model.build();
    spec.n = a.n;
    spec.burn_in = a.burn_in;
    spec.seed = a.seed;
    const ReturnSeries series = simulate(spec);

    auto out = open_output(a.out / "series.csv");
    write_series_csv(out, series.values(), "x");

    Manifest mf = base_manifest("simulate", a.seed);
    record_model(mf, a.model, spec.model);
    mf.set("n", a.n);
    mf.set("burn_in", a.burn_in);
    mf.set("output", "series.csv");
    write_manifest(a.out, mf);
}

struct EstimateArgs {
    fs::path in;
    std::optional<std::string> column;
    std::string width = "global";
    std::size_t grid_points = 41;
    std::optional<double> from;
    std::optional<double> to;
    std::optional<fs::path> pilot_in;
    std::uint64_t seed = 1;
    fs::path out = "out";
    // bands only
    double alpha = 0.05;
    bool no_bias_correction = false;
    bool interval_mode = false;
};

GasModel build_model(const EstimateArgs& a) {
    const ReturnSeries series = read_series_csv(a.in, a.column);
    GasOptions opts;
    opts.pilot.seed = a.seed;
    if (a.pilot_in) {
        std::ifstream in(*a.pilot_in);
        if (!in) throw DataError("cannot open " + a.pilot_in->string());
        return GasModel(DesignPairs(series), load_pilot(in), opts);
    }
    return GasModel(series, opts);
}

void record_estimate_inputs(Manifest& mf, const EstimateArgs& a, const GasModel& model) {
    mf.set("input", a.in.string());
    if (a.column) mf.set("column", *a.column);
    if (a.pilot_in) mf.set("pilot_in", a.pilot_in->string());
    mf.set("n_pairs", model.pairs().size());
    record_width(mf, a.width);
    mf.set("grid_points", a.grid_points);
    record_pilot(mf, model);
}

void run_estimate(const EstimateArgs& a) {
    const WidthConfig width = parse_width(a.width);
    const GasModel model = build_model(a);
    const auto grid = make_grid(model.pairs(), a.grid_points, a.from, a.to);

    auto out = open_output(a.out / "curve.csv");
    out << "x,sigma2,h,window_lo,window_hi,b_hat,v_hat,error\n";
    for (double x : grid) {
        try {
            const BandwidthPlan plan = model.plan(x, width);
            const double s2 = lle_fit(model.pairs(), x, plan.h_hat, model.kernel());
            out << fmt::format("{},{},{},{},{},{},{},\n", format_number(x), format_number(s2),
                               format_number(plan.h_hat), format_number(plan.window.lo()),
                               format_number(plan.window.hi()), format_number(plan.functionals.b_hat),
                               format_number(plan.functionals.v_hat));
        } catch (const Error& e) {
            out << format_number(x) << ",,,,,,,\"" << e.what() << "\"\n";
        }
    }
    auto pilot = open_output(a.out / "pilot.txt");
    save_pilot(pilot, model.net());

    Manifest mf = base_manifest("estimate", a.seed);
    record_estimate_inputs(mf, a, model);
    mf.set("output", "curve.csv");
    mf.set("pilot_output", "pilot.txt");
    write_manifest(a.out, mf);
}

void run_bands(const EstimateArgs& a) {
    const WidthConfig width = parse_width(a.width);
    const GasModel model = build_model(a);
    const auto grid = make_grid(model.pairs(), a.grid_points, a.from, a.to);
    BandOptions band;
    band.alpha = a.alpha;
    band.bias_correction = !a.no_bias_correction;
    band.interval_mode = a.interval_mode;
    const VolatilityCurve curve = confidence_band(model, grid, width, band);

    auto out = open_output(a.out / "bands.csv");
    write_band_csv(out, curve);

    Manifest mf = base_manifest("bands", a.seed);
    record_estimate_inputs(mf, a, model);
    mf.set("alpha", a.alpha);
    mf.set("z", curve.z);
    mf.set("bias_correction", band.bias_correction);
    mf.set("interval_mode", band.interval_mode);
    mf.set("output", "bands.csv");
    write_manifest(a.out, mf);
}

struct SymtestArgs {
    fs::path in;
    std::optional<std::string> column;
    double alpha = 0.01;
    int nx = 20;
    std::string width = "global";
    std::uint64_t seed = 1;
    fs::path out = "out";
};

void run_symtest(const SymtestArgs& a) {
    const WidthConfig width = parse_width(a.width);
    GasOptions opts;
    opts.pilot.seed = a.seed;
    const GasModel model(read_series_csv(a.in, a.column), opts);
    const SymmetryTestResult res = symmetry_test(model, a.nx, a.alpha, width);

    auto out = open_output(a.out / "symtest.csv");
    write_symmetry_csv(out, res);

    Manifest mf = base_manifest("symtest", a.seed);
    mf.set("input", a.in.string());
    mf.set("alpha", a.alpha);
    mf.set("nx", a.nx);
    record_width(mf, a.width);
    record_pilot(mf, model);
    mf.set("critical_value", res.critical_value);
    mf.set("reject", res.reject);
    mf.set("pairs_used", res.pairs.size());
    for (std::size_t i = 0; i < res.warnings.size(); ++i) mf.set(fmt::format("warning_{}", i + 1), res.warnings[i]);
    mf.set("output", "symtest.csv");
    write_manifest(a.out, mf);
}

struct NicArgs {
    double a0 = 0.1;
    double a1 = 0.3;
    double beta = 0.2;
    std::size_t n = 5000;
    std::size_t grid_points = 41;
    std::string width = "global";
    std::uint64_t seed = 1;
    fs::path out = "out";
};

void run_nic(const NicArgs& a) {
    NicOptions opts;
    opts.width = parse_width(a.width);
    opts.grid_points = a.grid_points;
    const GarchParams params{a.a0, a.a1, a.beta};
    const NicComparison nic = nic_compare(params, a.n, a.seed, opts);

    auto out = open_output(a.out / "nic.csv");
    write_nic_csv(out, nic);

    Manifest mf = base_manifest("nic", a.seed);
    mf.set("alpha0", a.a0);
    mf.set("alpha1", a.a1);
    mf.set("beta", a.beta);
    mf.set("n", a.n);
    mf.set("grid_points", a.grid_points);
    record_width(mf, a.width);
    mf.set("A0", nic.a0);
    mf.set("output", "nic.csv");
    write_manifest(a.out, mf);
}

struct MleArgs {
    fs::path in;
    std::optional<std::string> column;
    std::size_t grid_points = 41;
    std::uint64_t seed = 1;
    fs::path out = "out";
};

void run_mle(const MleArgs& a) {
    const ReturnSeries series = read_series_csv(a.in, a.column);
    const MleFit fit = fit_garch_mle(series, std::nullopt, a.seed);

    auto out = open_output(a.out / "mle.csv");
    write_mle_header(out);
    write_mle_row(out, fit);

    if (fit.converged) {
        const auto grid = make_grid(DesignPairs(series), a.grid_points, std::nullopt, std::nullopt);
        const auto curve = mle_sigma2_curve(fit, grid);
        auto c = open_output(a.out / "mle_curve.csv");
        c << "x,sigma2\n";
        for (std::size_t i = 0; i < grid.size(); ++i) c << format_number(grid[i]) << ',' << format_number(curve[i]) << '\n';
    }

    Manifest mf = base_manifest("mle", a.seed);
    mf.set("input", a.in.string());
    mf.set("n", series.size());
    mf.set("alpha0", fit.params.alpha0);
    mf.set("alpha1", fit.params.alpha1);
    mf.set("beta", fit.params.beta);
    mf.set("loglik", fit.loglik);
    mf.set("converged", fit.converged);
    mf.set("iterations", fit.iterations);
    mf.set("output", fit.converged ? "mle.csv,mle_curve.csv" : "mle.csv");
    write_manifest(a.out, mf);
}

struct McArgs {
    ModelArgs model;
    std::string n_list = "500,1000";
    int reps = 100;
    int nx = 20;
    double alpha = 0.01;
    std::string estimators = "gas,mle";
    std::string width = "global";
    std::string points = "uniform";
    bool fixed_points = false;
    std::size_t oracle_points = 1'000'000;
    unsigned threads = 1;
    std::uint64_t seed = 1;
    fs::path out = "out";
};

ExperimentConfig experiment_config(const McArgs& a) {
    ExperimentConfig cfg;
    cfg.model = a.model.build();
    cfg.n_list = parse_n_list(a.n_list);
    cfg.replications = a.reps;
    cfg.n_x = a.nx;
    cfg.alpha = a.alpha;
    cfg.seed = a.seed;
    cfg.gas_width = parse_width(a.width);
    cfg.fixed_points = a.fixed_points;
    cfg.point_scheme = a.points == "sample" ? IsePoints::SampleDraw : IsePoints::UniformCentral;
    cfg.oracle_points = a.oracle_points;
    cfg.threads = a.threads;
    cfg.output_dir = a.out;
    cfg.estimators.clear();
    std::stringstream in(a.estimators);
    std::string item;
    while (std::getline(in, item, ',')) cfg.estimators.push_back(parse_estimator(item));
    return cfg;
}

void write_exclusions(const fs::path& path, const std::vector<Exclusion>& exclusions) {
    auto out = open_output(path);
    out << "n,replication,reason\n";
    for (const auto& e : exclusions) out << e.n << ',' << e.replication << ",\"" << e.reason << "\"\n";
}

Manifest mc_manifest(const std::string& command, const McArgs& a, const ExperimentConfig& cfg) {
    Manifest mf = base_manifest(command, a.seed);
    record_model(mf, a.model, cfg.model);
    mf.set("n_list", join(cfg.n_list));
    mf.set("replications", a.reps);
    mf.set("nx", a.nx);
    record_width(mf, a.width);
    mf.set("threads", a.threads);
    return mf;
}

void run_mc_ise(const McArgs& a) {
    const ExperimentConfig cfg = experiment_config(a);
    const IseSummary summary = run_ise_experiment(cfg);

    auto out = open_output(a.out / "ise.csv");
    write_ise_csv(out, summary);
    auto reps = open_output(a.out / "ise_replications.csv");
    reps << "n,estimator,index,ise\n";
    for (const auto& r : summary.rows) {
        for (std::size_t i = 0; i < r.ise.size(); ++i) {
            reps << r.n << ',' << estimator_name(r.estimator) << ',' << i << ',' << format_number(r.ise[i]) << '\n';
        }
    }
    write_exclusions(a.out / "exclusions.csv", summary.exclusions);

    Manifest mf = mc_manifest("mc-ise", a, cfg);
    mf.set("estimators", a.estimators);
    mf.set("points", a.points);
    mf.set("fixed_points", a.fixed_points);
    if (std::holds_alternative<Garch11>(cfg.model)) mf.set("oracle_points", a.oracle_points);
    mf.set("excluded", summary.exclusions.size());
    mf.set("output", "ise.csv,ise_replications.csv,exclusions.csv");
    write_manifest(a.out, mf);
}

void run_mc_sym(const McArgs& a) {
    const ExperimentConfig cfg = experiment_config(a);
    const SymmetrySummary summary = run_symmetry_experiment(cfg);

    auto out = open_output(a.out / "symmetry.csv");
    write_symmetry_summary_csv(out, summary);
    write_exclusions(a.out / "exclusions.csv", summary.exclusions);

    Manifest mf = mc_manifest("mc-sym", a, cfg);
    mf.set("alpha", a.alpha);
    mf.set("excluded", summary.exclusions.size());
    mf.set("output", "symmetry.csv,exclusions.csv");
    write_manifest(a.out, mf);
}

struct AnalyzeArgs {
    fs::path in;
    std::optional<fs::path> rv;
    AnalyzeConfig cfg;
    fs::path out = "out";
};

void run_analyze(const AnalyzeArgs& a) {
    const AnalyzeResult res = analyze_returns(a.in, a.rv, a.cfg);

    auto gas = open_output(a.out / "gas_bands.csv");
    write_band_csv(gas, res.gas);
    auto global = open_output(a.out / "global_bands.csv");
    write_band_csv(global, res.global);
    if (res.coverage) {
        auto cov = open_output(a.out / "coverage.csv");
        cov << "method,coverage,points\n";
        cov << "gas," << format_number(res.coverage->gas) << ',' << res.coverage->points << '\n';
        cov << "global," << format_number(res.coverage->global) << ',' << res.coverage->points << '\n';
    }

    Manifest mf = base_manifest("analyze", a.cfg.seed);
    mf.set("input", a.in.string());
    if (a.rv) mf.set("realized", a.rv->string());
    mf.set("a", a.cfg.a);
    mf.set("alpha", a.cfg.alpha);
    mf.set("bias_correction", a.cfg.bias_correction);
    mf.set("grid_points", a.cfg.grid_points);
    mf.set("coverage_points", a.cfg.coverage_points);
    mf.set("pilot_hidden", res.pilot.chosen_d);
    mf.set("m4eps", res.m4eps);
    if (res.coverage) {
        mf.set("coverage_gas", res.coverage->gas);
        mf.set("coverage_global", res.coverage->global);
    }
    mf.set("output", res.coverage ? "gas_bands.csv,global_bands.csv,coverage.csv" : "gas_bands.csv,global_bands.csv");
    write_manifest(a.out, mf);
}

void add_input(CLI::App* cmd, fs::path& in, std::optional<std::string>& column) {
    cmd->add_option("--in", in, "input CSV of returns")->required();
    cmd->add_option("--column", column, "column name (default: first column)");
}

void add_common(CLI::App* cmd, std::uint64_t& seed, fs::path& out) {
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--out", out, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonparametric volatility estimation with a plug-in bandwidth (GAS)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    SimulateArgs sim;
    auto* c_sim = app.add_subcommand("simulate", "simulate a benchmark return series");
    add_model_options(c_sim, sim.model);
    c_sim->add_option("--n", sim.n, "series length");
    c_sim->add_option("--burn-in", sim.burn_in, "discarded initial observations");
    add_common(c_sim, sim.seed, sim.out);

    EstimateArgs est;
    auto* c_est = app.add_subcommand("estimate", "estimate the volatility function on a grid");
    EstimateArgs bands;
    auto* c_bands = app.add_subcommand("bands", "pointwise confidence band for the volatility function");
    for (auto [cmd, a] : {std::pair{c_est, &est}, std::pair{c_bands, &bands}}) {
        add_input(cmd, a->in, a->column);
        cmd->add_option("--width", a->width, "global | local | interval width a");
        cmd->add_option("--grid-points", a->grid_points, "number of grid points");
        cmd->add_option("--from", a->from, "grid start (default 1% quantile)");
        cmd->add_option("--to", a->to, "grid end (default 99% quantile)");
        cmd->add_option("--pilot-in", a->pilot_in, "reuse a pilot network saved by estimate");
        add_common(cmd, a->seed, a->out);
    }
    c_bands->add_option("--alpha", bands.alpha, "1 - confidence level");
    c_bands->add_flag("--no-bias-correction", bands.no_bias_correction, "centre on the raw estimate");
    c_bands->add_flag("--interval-mode", bands.interval_mode, "use the interval-averaged estimate");

    SymtestArgs sym;
    auto* c_sym = app.add_subcommand("symtest", "Bonferroni test of sigma^2(x) = sigma^2(-x)");
    add_input(c_sym, sym.in, sym.column);
    c_sym->add_option("--alpha", sym.alpha, "test level");
    c_sym->add_option("--nx", sym.nx, "number of test points (even)");
    c_sym->add_option("--width", sym.width, "global | local | interval width a");
    add_common(c_sym, sym.seed, sym.out);

    NicArgs nic;
    auto* c_nic = app.add_subcommand("nic", "news impact curves: GARCH path vs transformed-innovation ARCH path");
    c_nic->add_option("--a0", nic.a0, "alpha0");
    c_nic->add_option("--a1", nic.a1, "alpha1");
    c_nic->add_option("--beta", nic.beta, "beta");
    c_nic->add_option("--n", nic.n, "length of each simulated path");
    c_nic->add_option("--grid-points", nic.grid_points, "number of grid points");
    c_nic->add_option("--width", nic.width, "global | local | interval width a");
    add_common(c_nic, nic.seed, nic.out);

    MleArgs mle;
    auto* c_mle = app.add_subcommand("mle", "Gaussian quasi-maximum-likelihood GARCH(1,1) fit");
    add_input(c_mle, mle.in, mle.column);
    c_mle->add_option("--grid-points", mle.grid_points, "points of the fitted curve");
    add_common(c_mle, mle.seed, mle.out);

    McArgs ise;
    auto* c_ise = app.add_subcommand("mc-ise", "Monte Carlo integrated squared error study");
    McArgs msym;
    msym.model.name = "garch";
    auto* c_msym = app.add_subcommand("mc-sym", "Monte Carlo size/power of the symmetry test");
    for (auto [cmd, a] : {std::pair{c_ise, &ise}, std::pair{c_msym, &msym}}) {
        add_model_options(cmd, a->model);
        cmd->add_option("--n-list", a->n_list, "comma-separated series lengths");
        cmd->add_option("--reps", a->reps, "replications per length");
        cmd->add_option("--nx", a->nx, "evaluation / test points");
        cmd->add_option("--width", a->width, "GAS width: global | local | a");
        cmd->add_option("--threads", a->threads, "worker threads (results do not depend on it)");
        add_common(cmd, a->seed, a->out);
    }
    c_ise->add_option("--estimators", ise.estimators, "comma-separated subset of gas,mle,global");
    c_ise->add_option("--points", ise.points, "uniform | sample")->check(CLI::IsMember({"uniform", "sample"}));
    c_ise->add_flag("--fixed-points", ise.fixed_points, "reuse one set of ISE points in every replication");
    c_ise->add_option("--oracle-points", ise.oracle_points, "path length of the GARCH truth oracle");
    c_msym->add_option("--alpha", msym.alpha, "test level");

    AnalyzeArgs an;
    auto* c_an = app.add_subcommand("analyze", "real-data workflow: GAS and global bands, realized-volatility coverage");
    c_an->add_option("--in", an.in, "returns CSV")->required();
    c_an->add_option("--rv", an.rv, "realized variance CSV aligned by row");
    c_an->add_option("--a", an.cfg.a, "interval width of the GAS curve");
    c_an->add_option("--alpha", an.cfg.alpha, "1 - confidence level");
    c_an->add_flag("--bias-correction", an.cfg.bias_correction, "apply the bias correction");
    c_an->add_option("--grid-points", an.cfg.grid_points, "number of grid points");
    c_an->add_option("--coverage-points", an.cfg.coverage_points, "pairs used for coverage (0 = all)");
    add_common(c_an, an.cfg.seed, an.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_sim->parsed()) run_simulate(sim);
        else if (c_est->parsed()) run_estimate(est);
        else if (c_bands->parsed()) run_bands(bands);
        else if (c_sym->parsed()) run_symtest(sym);
        else if (c_nic->parsed()) run_nic(nic);
        else if (c_mle->parsed()) run_mle(mle);
        else if (c_ise->parsed()) run_mc_ise(ise);
        else if (c_msym->parsed()) run_mc_sym(msym);
        else if (c_an->parsed()) run_analyze(an);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
