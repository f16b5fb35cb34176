#pragma once

namespace gasvol {

/// GARCH(1,1) coefficients: sigma_t^2 = alpha0 + alpha1 X_{t-1}^2 + beta sigma_{t-1}^2.
struct GarchParams {
    double alpha0 = 0.1;
    double alpha1 = 0.3;
    double beta = 0.2;

    /// Throws ConfigError unless alpha0 > 0, alpha1 > 0, beta >= 0 and
    /// alpha1 + beta < 1.
    void validate() const;
    bool valid() const noexcept;

    double persistence() const noexcept { return alpha1 + beta; }
    double unconditional_variance() const noexcept { return alpha0 / (1.0 - alpha1 - beta); }
    /// B0 = beta alpha0 / (1 - alpha1 - beta).
    double b0() const noexcept { return beta * unconditional_variance(); }
    /// A0 = alpha0 + B0.
    double a0() const noexcept { return alpha0 + b0(); }
};

}  // namespace gasvol
