#pragma once

#include "gasvol/garch_theory.hpp"
#include "gasvol/gas.hpp"
#include "gasvol/inference.hpp"
#include "gasvol/simulate.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gasvol {

enum class EstimatorKind {
    Gas,
    Mle,
    GlobalBandwidth,
    Truth,  ///< returns the reference curve itself; used to check the plumbing
};

/// Placement of the ISE evaluation points within a replication.
enum class IsePoints {
    UniformCentral,  ///< uniform over the central 98% of the sample range
    SampleDraw,      ///< lagged observations drawn at random from the sample
};

std::string estimator_name(EstimatorKind kind);
EstimatorKind parse_estimator(const std::string& name);

struct ExperimentConfig {
    SimModel model = HtModel{};
    std::vector<std::size_t> n_list{500, 1000};
    int replications = 100;
    int n_x = 20;
    double alpha = 0.01;
    std::uint64_t seed = 1;
    std::vector<EstimatorKind> estimators{EstimatorKind::Gas, EstimatorKind::Mle};
    GasOptions gas;
    /// Width configuration of the GAS estimator (global, as in the simulation study).
    WidthConfig gas_width = WidthConfig::global();
    /// Draw the ISE points once and reuse them in every replication.
    bool fixed_points = false;
    IsePoints point_scheme = IsePoints::UniformCentral;
    std::size_t burn_in = 500;
    /// Path length of the GARCH oracle that stands in for the true curve.
    std::size_t oracle_points = 1'000'000;
    std::size_t oracle_grid = 161;
    unsigned threads = 1;
    std::filesystem::path output_dir;

    void validate() const;
};

struct IseRow {
    std::size_t n = 0;
    EstimatorKind estimator = EstimatorKind::Gas;
    double mise = 0.0;
    double medise = 0.0;
    double sdise = 0.0;
    double mise_scaled = 0.0;    ///< mise * n
    double medise_scaled = 0.0;
    double sdise_scaled = 0.0;
    std::vector<double> ise;     ///< per included replication, in replication order
};

struct Exclusion {
    std::size_t n = 0;
    int replication = 0;
    std::string reason;
};

struct IseSummary {
    std::string model;
    std::uint64_t seed = 0;
    int replications = 0;
    std::vector<IseRow> rows;
    std::vector<Exclusion> exclusions;

    const IseRow& row(std::size_t n, EstimatorKind estimator) const;
    std::size_t included(std::size_t n) const;
    std::size_t excluded(std::size_t n) const;
};

IseSummary run_ise_experiment(const ExperimentConfig& cfg);

/// n,estimator,mise,medise,sdise,mise_n,medise_n,sdise_n,included,excluded
void write_ise_csv(std::ostream& out, const IseSummary& summary);

struct SymmetryRow {
    std::size_t n = 0;
    int rejections = 0;
    int included = 0;
    int excluded = 0;
    double rate = 0.0;  ///< rejections / included
};

struct SymmetrySummary {
    std::string model;
    std::uint64_t seed = 0;
    int replications = 0;
    double alpha = 0.0;
    int n_x = 0;
    std::vector<SymmetryRow> rows;
    std::vector<Exclusion> exclusions;
};

SymmetrySummary run_symmetry_experiment(const ExperimentConfig& cfg);

/// n,rejections,included,excluded,rate
void write_symmetry_summary_csv(std::ostream& out, const SymmetrySummary& summary);

struct AnalyzeConfig {
    /// Interval width of the GAS curve (the real-data section uses 0.089).
    double a = 0.089;
    double alpha = 0.05;
    bool bias_correction = false;
    std::size_t grid_points = 101;
    /// Number of (X_{t-1}, RV_t) pairs drawn for the coverage count; 0 uses all.
    std::size_t coverage_points = 100;
    std::uint64_t seed = 1;
    GasOptions gas;
};

struct CoverageResult {
    std::size_t points = 0;
    double gas = 0.0;
    double global = 0.0;
};

struct AnalyzeResult {
    std::vector<double> grid;
    VolatilityCurve gas;
    VolatilityCurve global;
    PilotFitReport pilot;
    double m4eps = 0.0;
    std::optional<CoverageResult> coverage;
};

/// Volatility curves with bands for GAS (fixed width a) and for the global
/// window. `realized`, when given, is a variance proxy aligned row by row
/// with the returns: the pair (X_{t-1}, RV_t) is covered when RV_t lies in
/// the band evaluated at X_{t-1}.
AnalyzeResult analyze_returns(const ReturnSeries& returns, const std::optional<std::vector<double>>& realized,
                              const AnalyzeConfig& cfg);

AnalyzeResult analyze_returns(const std::filesystem::path& csv_in,
                              const std::optional<std::filesystem::path>& realized_csv,
                              const AnalyzeConfig& cfg);

}  // namespace gasvol
