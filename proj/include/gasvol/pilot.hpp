#pragma once

#include "gasvol/error.hpp"
#include "gasvol/series.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gasvol {

/// Logistic sigmoid and its first two derivatives.
double sigmoid(double z);
double sigmoid_d1(double z);
double sigmoid_d2(double z);

/// Single-hidden-layer sigmoidal network
///   q(x) = bias + sum_k c_k * psi(a_k * x + b_k)
/// in original units of the regressor and response.
struct PilotNetwork {
    struct Node {
        double c = 0.0;  ///< output weight
        double a = 0.0;  ///< input weight
        double b = 0.0;  ///< input bias
    };

    double bias = 0.0;
    std::vector<Node> nodes;
    double weight_budget = 1e3;
    /// Regressor standardization used during training (already folded into
    /// a_k, b_k; kept for persistence and diagnostics).
    double input_mean = 0.0;
    double input_scale = 1.0;

    std::size_t hidden_count() const noexcept { return nodes.size(); }
    double output_weight_l1() const;
};

double pilot_eval(const PilotNetwork& net, double x);
double pilot_first_derivative(const PilotNetwork& net, double x);
double pilot_second_derivative(const PilotNetwork& net, double x);

struct PilotFitOptions {
    std::vector<int> d_candidates{1, 2, 3, 4, 5};
    int restarts = 3;
    std::uint64_t seed = 0;
    int max_iterations = 200;
    double weight_budget = 1e3;
    /// Ridge penalty on the standardized input and output weights.
    double weight_decay = 1.0;
};

struct PilotFitReport {
    int chosen_d = 0;
    std::vector<int> candidates;
    std::vector<double> bic;   ///< per candidate, same order as candidates
    std::vector<double> rss_per_candidate;
    double rss = 0.0;          ///< residual sum of squares of the returned network
    int restarts = 0;
    bool converged = false;
    double m4eps = 0.0;        ///< filled by fit_pilot via estimate_m4eps when defined
};

struct PilotFit {
    PilotNetwork net;
    PilotFitReport report;
};

/// Least-squares fit of q(X_{t-1}) to X_t^2 with BIC choice of the hidden
/// layer size. Deterministic given options.seed. Throws FitError (carrying
/// the best-effort network) when no restart converged for any candidate.
PilotFit fit_pilot(const DesignPairs& pairs, const PilotFitOptions& options = {});

class FitError : public Error {
public:
    FitError(const std::string& what, PilotFit best)
        : Error(what), best_(std::move(best)) {}
    const PilotFit& best_effort() const noexcept { return best_; }

private:
    PilotFit best_;
};

/// sum_t X_t^4 / sum_t q(X_{t-1})^2 over the design pairs.
double estimate_m4eps(const DesignPairs& pairs, const PilotNetwork& net);

double pilot_rss(const DesignPairs& pairs, const PilotNetwork& net);

/// Flat key=value text persistence, one weight per line.
void save_pilot(std::ostream& out, const PilotNetwork& net);
PilotNetwork load_pilot(std::istream& in);

}  // namespace gasvol
