#pragma once

#include "gasvol/garch.hpp"
#include "gasvol/series.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace gasvol {

/// X_t = sqrt(alpha0 + alpha1 X_{t-1}^2) eps_t.
struct Arch1 {
    double alpha0 = 0.1;
    double alpha1 = 0.5;
};

struct Garch11 {
    GarchParams params;
};

/// X_t = [phi(X_{t-1} + 1.2) + 1.5 phi(X_{t-1} - 1.2)] eps_t.
struct HtModel {};

/// ARCH(1; alpha0, alpha1 + beta) driven by the transformed innovations
/// eps~ = sign(eps) sqrt((alpha1 eps^2 + beta) / (alpha1 + beta)).
struct ArchEpsTilde {
    GarchParams params;
};

using SimModel = std::variant<Arch1, Garch11, HtModel, ArchEpsTilde>;

std::string model_name(const SimModel& model);

struct SimSpec {
    SimModel model = Arch1{};
    std::size_t n = 1000;
    std::size_t burn_in = 500;
    std::uint64_t seed = 0;
};

void validate(const SimModel& model);
void validate(const SimSpec& spec);

/// Deterministic given spec.seed; the first burn_in observations are dropped.
ReturnSeries simulate(const SimSpec& spec);

/// Runs the model recursion on the given innovations (no burn-in). Standard
/// normal innovations are what simulate() feeds in; this entry point exists
/// so recursions can be checked against hand-picked sequences.
std::vector<double> simulate_with_innovations(const SimModel& model,
                                              std::span<const double> innovations);

/// Closed-form conditional variance E(X_t^2 | X_{t-1} = x); std::nullopt
/// for GARCH(1,1), whose volatility function has no closed form.
std::optional<double> true_sigma2(const SimModel& model, double x);

/// Conditional standard deviation of the HT model.
double ht_sigma(double x);

}  // namespace gasvol
