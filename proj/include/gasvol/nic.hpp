#pragma once

#include "gasvol/garch.hpp"
#include "gasvol/gas.hpp"
#include "gasvol/inference.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace gasvol {

struct NicOptions {
    GasOptions gas;
    WidthConfig width = WidthConfig::global();
    BandOptions band;
    std::size_t grid_points = 41;
    std::size_t burn_in = 500;
};

/// News impact curves estimated on a GARCH(1,1) path and on the ARCH(1;
/// alpha0, alpha1 + beta) path driven by the transformed innovations, both on
/// one symmetric grid inside the central 98% of each sample.
struct NicComparison {
    GarchParams params;
    std::vector<double> grid;
    VolatilityCurve garch;
    VolatilityCurve arch;
    double a0 = 0.0;      ///< expected GARCH minimum
    double alpha0 = 0.0;  ///< expected ARCH minimum
};

NicComparison nic_compare(const GarchParams& params, std::size_t series_len, std::uint64_t seed,
                          const NicOptions& options = {});

/// x,garch,garch_lower,garch_upper,arch,arch_lower,arch_upper
void write_nic_csv(std::ostream& out, const NicComparison& nic);

}  // namespace gasvol
