#include "gasvol/simulate.hpp"

#include "gasvol/error.hpp"
#include "gasvol/garch_theory.hpp"
#include "gasvol/normal.hpp"
#include "gasvol/rng.hpp"

#include <cmath>

namespace gasvol {

void GarchParams::validate() const {
    if (!valid()) {
        throw ConfigError("GARCH parameters need alpha0 > 0, alpha1 > 0, beta >= 0, alpha1 + beta < 1");
    }
}

bool GarchParams::valid() const noexcept {
    return alpha0 > 0.0 && alpha1 > 0.0 && beta >= 0.0 && alpha1 + beta < 1.0 &&
           std::isfinite(alpha0) && std::isfinite(alpha1) && std::isfinite(beta);
}

double ht_sigma(double x) {
    return normal_pdf(x + 1.2) + 1.5 * normal_pdf(x - 1.2);
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string model_name(const SimModel& model) {
    return std::visit(Overloaded{[](const Arch1&) { return std::string("arch"); },
                                 [](const Garch11&) { return std::string("garch"); },
                                 [](const HtModel&) { return std::string("ht"); },
                                 [](const ArchEpsTilde&) { return std::string("arch-eps-tilde"); }},
                      model);
}

void validate(const SimModel& model) {
    std::visit(Overloaded{[](const Arch1& m) {
                              if (!(m.alpha0 > 0.0 && m.alpha1 > 0.0 && m.alpha1 < 1.0)) {
                                  throw ConfigError("ARCH(1) needs alpha0 > 0 and 0 < alpha1 < 1");
                              }
                          },
                          [](const Garch11& m) { m.params.validate(); },
                          [](const HtModel&) {},
                          [](const ArchEpsTilde& m) { m.params.validate(); }},
               model);
}

void validate(const SimSpec& spec) {
    validate(spec.model);
    if (spec.n < ReturnSeries::kMinLength) throw ConfigError("simulation length must be >= 30");
    if (spec.burn_in < 200) throw ConfigError("burn-in must be >= 200");
}

std::vector<double> simulate_with_innovations(const SimModel& model,
                                              std::span<const double> eps) {
    std::vector<double> x(eps.size());
    std::visit(
        Overloaded{
            [&](const Arch1& m) {
                double prev = 0.0;
                double s2 = m.alpha0 / (1.0 - m.alpha1);
                for (std::size_t t = 0; t < eps.size(); ++t) {
                    if (t > 0) s2 = m.alpha0 + m.alpha1 * prev * prev;
                    x[t] = std::sqrt(s2) * eps[t];
                    prev = x[t];
                }
            },
            [&](const Garch11& m) {
                const auto& p = m.params;
                double s2 = p.unconditional_variance();
                for (std::size_t t = 0; t < eps.size(); ++t) {
                    x[t] = std::sqrt(s2) * eps[t];
                    s2 = p.alpha0 + p.alpha1 * x[t] * x[t] + p.beta * s2;
                }
            },
            [&](const HtModel&) {
                double prev = 0.0;
                for (std::size_t t = 0; t < eps.size(); ++t) {
                    x[t] = ht_sigma(prev) * eps[t];
                    prev = x[t];
                }
            },
            [&](const ArchEpsTilde& m) {
                const auto& p = m.params;
                const double a1 = p.alpha1 + p.beta;
                double prev = 0.0;
                double s2 = p.alpha0 / (1.0 - a1);
                for (std::size_t t = 0; t < eps.size(); ++t) {
                    if (t > 0) s2 = p.alpha0 + a1 * prev * prev;
                    x[t] = std::sqrt(s2) * epsilon_tilde(eps[t], p);
                    prev = x[t];
                }
            }},
        model);
    return x;
}

ReturnSeries simulate(const SimSpec& spec) {
    validate(spec);
    Rng rng(spec.seed);
    std::vector<double> eps(spec.burn_in + spec.n);
    for (auto& e : eps) e = rng.normal();
    auto path = simulate_with_innovations(spec.model, eps);
    path.erase(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(spec.burn_in));
    return ReturnSeries(std::move(path));
}

std::optional<double> true_sigma2(const SimModel& model, double x) {
    return std::visit(Overloaded{[&](const Arch1& m) -> std::optional<double> {
                                     return m.alpha0 + m.alpha1 * x * x;
                                 },
                                 [](const Garch11&) -> std::optional<double> { return std::nullopt; },
                                 [&](const HtModel&) -> std::optional<double> {
                                     const double s = ht_sigma(x);
                                     return s * s;
                                 },
                                 [&](const ArchEpsTilde& m) -> std::optional<double> {
                                     // E(eps~^2) = 1, so the transformed-innovation ARCH keeps
                                     // the plain ARCH(1) volatility function.
                                     return m.params.alpha0 + m.params.persistence() * x * x;
                                 }},
                      model);
}

}  // namespace gasvol
