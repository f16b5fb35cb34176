#include "gasvol/pilot.hpp"

#include "gasvol/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gasvol {

double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double sigmoid_d1(double z) {
    const double s = sigmoid(z);
    return s * (1.0 - s);
}

double sigmoid_d2(double z) {
    const double s = sigmoid(z);
    return s * (1.0 - s) * (1.0 - 2.0 * s);
}

double PilotNetwork::output_weight_l1() const {
    double l1 = 0.0;
    for (const auto& n : nodes) l1 += std::abs(n.c);
    return l1;
}

double pilot_eval(const PilotNetwork& net, double x) {
    double q = net.bias;
    for (const auto& n : net.nodes) q += n.c * sigmoid(n.a * x + n.b);
    return q;
}

double pilot_first_derivative(const PilotNetwork& net, double x) {
    double q = 0.0;
    for (const auto& n : net.nodes) q += n.c * n.a * sigmoid_d1(n.a * x + n.b);
    return q;
}

double pilot_second_derivative(const PilotNetwork& net, double x) {
    double q = 0.0;
    for (const auto& n : net.nodes) q += n.c * n.a * n.a * sigmoid_d2(n.a * x + n.b);
    return q;
}

double pilot_rss(const DesignPairs& pairs, const PilotNetwork& net) {
    const auto xs = pairs.regressor();
    const auto ys = pairs.response();
    double rss = 0.0;
    for (std::size_t t = 0; t < xs.size(); ++t) {
        const double r = ys[t] - pilot_eval(net, xs[t]);
        rss += r * r;
    }
    return rss;
}

double estimate_m4eps(const DesignPairs& pairs, const PilotNetwork& net) {
    // The response is X_t^2, so X_t^4 is its square.
    const auto xs = pairs.regressor();
    const auto ys = pairs.response();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t t = 0; t < xs.size(); ++t) {
        num += ys[t] * ys[t];
        const double q = pilot_eval(net, xs[t]);
        den += q * q;
    }
    if (!(den > 0.0)) throw DegeneratePilotError("pilot is identically zero on the design");
    return num / den;
}

namespace {

// Levenberg-Marquardt on the standardized problem. Parameter layout:
// [bias, c_1..c_d, a_1..a_d, b_1..b_d].
class StandardizedFit {
public:
    StandardizedFit(const Eigen::VectorXd& u, const Eigen::VectorXd& y, int d, double decay)
        : u_(u), y_(y), d_(d), p_(3 * d + 1), decay_(decay) {}

    int parameter_count() const { return p_; }

    double objective(const Eigen::VectorXd& theta) const {
        double s = penalty(theta);
        for (Eigen::Index t = 0; t < u_.size(); ++t) {
            const double r = y_[t] - predict(theta, u_[t]);
            s += r * r;
        }
        return s;
    }

    // Ridge penalty on output and input weights (not on biases).
    double penalty(const Eigen::VectorXd& theta) const {
        return decay_ * theta.segment(1, 2 * d_).squaredNorm();
    }

    double predict(const Eigen::VectorXd& theta, double u) const {
        double q = theta[0];
        for (int k = 0; k < d_; ++k) q += theta[1 + k] * sigmoid(theta[1 + d_ + k] * u + theta[1 + 2 * d_ + k]);
        return q;
    }

    struct Result {
        Eigen::VectorXd theta;
        double rss;
        bool converged;
    };

    Result minimize(Eigen::VectorXd theta, int max_iterations) const {
        const Eigen::Index n = u_.size();
        Eigen::MatrixXd jac(n, p_);
        Eigen::VectorXd resid(n);
        double current = evaluate(theta, jac, resid);
        double lambda = 1e-3;
        bool converged = false;

        for (int iter = 0; iter < max_iterations; ++iter) {
            Eigen::MatrixXd jtj = jac.transpose() * jac;
            Eigen::VectorXd grad = jac.transpose() * resid;
            for (int i = 1; i <= 2 * d_; ++i) {
                jtj(i, i) += decay_;
                grad[i] -= decay_ * theta[i];
            }
            if (grad.lpNorm<Eigen::Infinity>() <= 1e-10 * std::max(1.0, current)) {
                converged = true;
                break;
            }
            bool accepted = false;
            while (lambda < 1e12) {
                Eigen::MatrixXd lhs = jtj;
                for (int i = 0; i < p_; ++i) lhs(i, i) += lambda * (jtj(i, i) + 1e-9);
                const Eigen::VectorXd step = lhs.ldlt().solve(grad);
                const Eigen::VectorXd trial = theta + step;
                const double trial_rss = step.allFinite() ? objective(trial) : std::numeric_limits<double>::infinity();
                if (trial_rss < current) {
                    const double improvement = (current - trial_rss) / std::max(current, 1e-300);
                    theta = trial;
                    current = evaluate(theta, jac, resid);
                    lambda = std::max(lambda / 3.0, 1e-12);
                    accepted = true;
                    if (improvement < 1e-9) converged = true;
                    break;
                }
                lambda *= 4.0;
            }
            if (!accepted) {
                // No descent direction left at any damping: a stationary point.
                converged = true;
            }
            if (converged) break;
        }
        return {theta, current, converged};
    }

private:
    double evaluate(const Eigen::VectorXd& theta, Eigen::MatrixXd& jac, Eigen::VectorXd& resid) const {
        double s = 0.0;
        for (Eigen::Index t = 0; t < u_.size(); ++t) {
            double q = theta[0];
            jac(t, 0) = 1.0;
            for (int k = 0; k < d_; ++k) {
                const double c = theta[1 + k];
                const double z = theta[1 + d_ + k] * u_[t] + theta[1 + 2 * d_ + k];
                const double psi = sigmoid(z);
                const double dpsi = psi * (1.0 - psi);
                q += c * psi;
                jac(t, 1 + k) = psi;
                jac(t, 1 + d_ + k) = c * dpsi * u_[t];
                jac(t, 1 + 2 * d_ + k) = c * dpsi;
            }
            resid[t] = y_[t] - q;
            s += resid[t] * resid[t];
        }
        return s + penalty(theta);
    }

    const Eigen::VectorXd& u_;
    const Eigen::VectorXd& y_;
    int d_;
    int p_;
    double decay_;
};

PilotNetwork unstandardize(const Eigen::VectorXd& theta, int d, double x_mean, double x_scale,
                           double y_mean, double y_scale, double budget) {
    PilotNetwork net;
    net.bias = y_mean + y_scale * theta[0];
    net.input_mean = x_mean;
    net.input_scale = x_scale;
    net.weight_budget = budget;
    net.nodes.resize(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        auto& node = net.nodes[static_cast<std::size_t>(k)];
        const double a = theta[1 + d + k];
        const double b = theta[1 + 2 * d + k];
        node.c = y_scale * theta[1 + k];
        node.a = a / x_scale;
        node.b = b - a * x_mean / x_scale;
    }
    const double l1 = net.output_weight_l1();
    if (l1 > budget) {
        for (auto& node : net.nodes) node.c *= budget / l1;
    }
    return net;
}

}  // namespace

PilotFit fit_pilot(const DesignPairs& pairs, const PilotFitOptions& options) {
    if (options.d_candidates.empty()) throw ConfigError("fit_pilot: no hidden-layer candidates");
    if (options.restarts < 1) throw ConfigError("fit_pilot: restarts must be >= 1");
    for (int d : options.d_candidates) {
        if (d < 1) throw ConfigError("fit_pilot: hidden-layer size must be >= 1");
    }

    const auto xs = pairs.regressor();
    const auto ys = pairs.response();
    const auto n = static_cast<Eigen::Index>(xs.size());
    if (n < 10) throw DataError("fit_pilot: too few design pairs");

    const double x_mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(n);
    const double y_mean = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(n);
    double x_var = 0.0, y_var = 0.0;
    for (Eigen::Index t = 0; t < n; ++t) {
        x_var += (xs[t] - x_mean) * (xs[t] - x_mean);
        y_var += (ys[t] - y_mean) * (ys[t] - y_mean);
    }
    double x_scale = std::sqrt(x_var / static_cast<double>(n));
    double y_scale = std::sqrt(y_var / static_cast<double>(n));
    if (!(x_scale > 0.0)) x_scale = 1.0;
    if (!(y_scale > 0.0)) y_scale = 1.0;

    Eigen::VectorXd u(n), y(n);
    double u_min = std::numeric_limits<double>::infinity();
    double u_max = -u_min;
    for (Eigen::Index t = 0; t < n; ++t) {
        u[t] = (xs[t] - x_mean) / x_scale;
        y[t] = (ys[t] - y_mean) / y_scale;
        u_min = std::min(u_min, u[t]);
        u_max = std::max(u_max, u[t]);
    }
    const double centre_lo = std::max(u_min, -2.5);
    const double centre_hi = std::min(u_max, 2.5);

    PilotFit result;
    PilotFitReport& report = result.report;
    report.candidates = options.d_candidates;
    report.restarts = options.restarts;

    double best_bic = std::numeric_limits<double>::infinity();
    bool any_converged = false;
    PilotFit fallback;
    double fallback_bic = std::numeric_limits<double>::infinity();

    for (int d : options.d_candidates) {
        StandardizedFit problem(u, y, d, options.weight_decay);
        StandardizedFit::Result best{Eigen::VectorXd(), std::numeric_limits<double>::infinity(), false};
        bool best_converged_found = false;

        for (int r = 0; r < options.restarts; ++r) {
            Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(r)));
            Eigen::VectorXd theta(problem.parameter_count());
            theta[0] = 0.0;
            for (int k = 0; k < d; ++k) {
                const double a = rng.uniform(-0.7, 0.7);
                const double centre = rng.uniform(centre_lo, centre_hi);
                theta[1 + k] = rng.uniform(-0.7, 0.7);
                theta[1 + d + k] = a;
                theta[1 + 2 * d + k] = -a * centre;
            }
            auto fit = problem.minimize(theta, options.max_iterations);
            best_converged_found = best_converged_found || fit.converged;
            if (best.theta.size() == 0 || fit.rss < best.rss) best = fit;
        }
        best.converged = best_converged_found;

        PilotNetwork net = unstandardize(best.theta, d, x_mean, x_scale, y_mean, y_scale,
                                         options.weight_budget);
        const double rss = pilot_rss(pairs, net);
        const double nn = static_cast<double>(n);
        const double bic = nn * std::log(std::max(rss, 1e-300) / nn) + (3.0 * d + 1.0) * std::log(nn);
        report.bic.push_back(bic);
        report.rss_per_candidate.push_back(rss);

        if (best.converged) {
            any_converged = true;
            if (bic < best_bic) {
                best_bic = bic;
                result.net = net;
                report.chosen_d = d;
                report.rss = rss;
                report.converged = true;
            }
        } else if (bic < fallback_bic) {
            fallback_bic = bic;
            fallback.net = net;
            fallback.report.chosen_d = d;
            fallback.report.rss = rss;
        }
    }

    if (!any_converged) {
        fallback.report.candidates = report.candidates;
        fallback.report.bic = report.bic;
        fallback.report.rss_per_candidate = report.rss_per_candidate;
        fallback.report.restarts = report.restarts;
        fallback.report.converged = false;
        throw FitError("pilot network did not converge for any hidden-layer size", fallback);
    }

    try {
        report.m4eps = estimate_m4eps(pairs, result.net);
    } catch (const DegeneratePilotError&) {
        report.m4eps = 0.0;
    }
    return result;
}

void save_pilot(std::ostream& out, const PilotNetwork& net) {
    out.precision(17);
    out << "hidden_count=" << net.nodes.size() << '\n';
    out << "input_mean=" << net.input_mean << '\n';
    out << "input_scale=" << net.input_scale << '\n';
    out << "weight_budget=" << net.weight_budget << '\n';
    out << "bias=" << net.bias << '\n';
    for (std::size_t k = 0; k < net.nodes.size(); ++k) {
        out << "c" << k << '=' << net.nodes[k].c << '\n';
        out << "a" << k << '=' << net.nodes[k].a << '\n';
        out << "b" << k << '=' << net.nodes[k].b << '\n';
    }
}

PilotNetwork load_pilot(std::istream& in) {
    std::map<std::string, double> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value", lineno);
        std::istringstream value(line.substr(eq + 1));
        double v;
        if (!(value >> v)) throw ParseError("bad number for key " + line.substr(0, eq), lineno);
        kv[line.substr(0, eq)] = v;
    }
    auto get = [&](const std::string& key) {
        const auto it = kv.find(key);
        if (it == kv.end()) throw DataError("pilot file missing key " + key);
        return it->second;
    };
    PilotNetwork net;
    const auto d = static_cast<std::size_t>(get("hidden_count"));
    net.input_mean = get("input_mean");
    net.input_scale = get("input_scale");
    net.weight_budget = get("weight_budget");
    net.bias = get("bias");
    net.nodes.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
        net.nodes[k].c = get("c" + std::to_string(k));
        net.nodes[k].a = get("a" + std::to_string(k));
        net.nodes[k].b = get("b" + std::to_string(k));
    }
    return net;
}

}  // namespace gasvol
