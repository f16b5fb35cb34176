#include "gasvol/kernel.hpp"

#include "gasvol/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace gasvol {

double kernel_eval(double u) {
    return std::abs(u) <= 1.0 ? 0.75 * (1.0 - u * u) : 0.0;
}

double KernelSpec::operator()(double u) const {
    switch (name) {
        case KernelName::Epanechnikov:
            return kernel_eval(u);
    }
    throw ConfigError("unsupported kernel");
}

KernelSpec make_kernel(KernelName name) {
    switch (name) {
        case KernelName::Epanechnikov: {
            KernelSpec k;
            k.name = name;
            k.support_lo = -1.0;
            k.support_hi = 1.0;
            k.mu2 = 1.0 / 5.0;  // int u^2 0.75(1-u^2) du
            k.rk = 3.0 / 5.0;   // int (0.75(1-u^2))^2 du
            k.c1 = k.mu2 / 2.0;
            k.c2 = k.rk;
            return k;
        }
    }
    throw ConfigError("unsupported kernel");
}

KernelSpec make_kernel(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "epanechnikov") return make_kernel(KernelName::Epanechnikov);
    throw ConfigError("unsupported kernel: " + std::string(name));
}

KernelConstants kernel_constants(const KernelSpec& spec) {
    const KernelSpec ref = make_kernel(spec.name);
    return {ref.c1, ref.c2};
}

}  // namespace gasvol
