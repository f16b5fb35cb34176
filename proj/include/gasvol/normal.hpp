#pragma once

namespace gasvol {

double normal_pdf(double x);
double normal_cdf(double x);

/// Standard normal quantile, accurate to ~1e-12 on (0, 1). Returns +/-inf at
/// the endpoints and throws ConfigError outside [0, 1].
double normal_quantile(double p);

}  // namespace gasvol
