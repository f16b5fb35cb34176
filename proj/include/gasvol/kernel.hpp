#pragma once

#include <string_view>

namespace gasvol {

enum class KernelName { Epanechnikov };

/// Kernel together with its moment constants. The bias constant is mu2/2 and
/// the variance constant is the roughness, which turns (V / 4nB)^(1/5) into
/// the AMISE-optimal local linear bandwidth.
struct KernelSpec {
    KernelName name = KernelName::Epanechnikov;
    double support_lo = -1.0;
    double support_hi = 1.0;
    double mu2 = 0.2;
    double rk = 0.6;
    double c1 = 0.1;
    double c2 = 0.6;

    double operator()(double u) const;
};

struct KernelConstants {
    double c1;
    double c2;
};

/// Epanechnikov kernel 0.75(1-u^2) on [-1, 1].
double kernel_eval(double u);

KernelSpec make_kernel(KernelName name = KernelName::Epanechnikov);

/// Parses a kernel name ("epanechnikov"); throws ConfigError otherwise.
KernelSpec make_kernel(std::string_view name);

KernelConstants kernel_constants(const KernelSpec& spec);

}  // namespace gasvol
