#include "gasvol/nic.hpp"

#include "gasvol/csv.hpp"
#include "gasvol/garch_theory.hpp"
#include "gasvol/rng.hpp"
#include "gasvol/simulate.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <ostream>

namespace gasvol {

namespace {

double central_extent(const DesignPairs& pairs) {
    return std::min(-pairs.regressor_quantile(0.01), pairs.regressor_quantile(0.99));
}

std::string cell(const BandPoint& p, double BandPoint::*field) {
    return p.ok() ? format_number(p.*field) : std::string();
}

}  // namespace

NicComparison nic_compare(const GarchParams& params, std::size_t series_len, std::uint64_t seed,
                          const NicOptions& options) {
    params.validate();

    SimSpec garch_spec;
    garch_spec.model = Garch11{params};
    garch_spec.n = series_len;
    garch_spec.burn_in = options.burn_in;
    garch_spec.seed = derive_seed(seed, 1);

    SimSpec arch_spec = garch_spec;
    arch_spec.model = ArchEpsTilde{params};
    arch_spec.seed = derive_seed(seed, 2);

    GasOptions gas = options.gas;
    gas.pilot.seed = derive_seed(seed, 3);
    const GasModel garch_model(simulate(garch_spec), gas);
    gas.pilot.seed = derive_seed(seed, 4);
    const GasModel arch_model(simulate(arch_spec), gas);

    NicComparison out;
    out.params = params;
    out.a0 = params.a0();
    out.alpha0 = params.alpha0;
    const double extent = std::min(central_extent(garch_model.pairs()), central_extent(arch_model.pairs()));
    out.grid = symmetric_grid(extent, options.grid_points);
    out.garch = confidence_band(garch_model, out.grid, options.width, options.band);
    out.arch = confidence_band(arch_model, out.grid, options.width, options.band);
    return out;
}

void write_nic_csv(std::ostream& out, const NicComparison& nic) {
    out << "x,garch,garch_lower,garch_upper,arch,arch_lower,arch_upper\n";
    for (std::size_t i = 0; i < nic.grid.size(); ++i) {
        const auto& g = nic.garch.points[i];
        const auto& a = nic.arch.points[i];
        out << fmt::format("{},{},{},{},{},{},{}\n", format_number(nic.grid[i]), cell(g, &BandPoint::estimate),
                           cell(g, &BandPoint::lower), cell(g, &BandPoint::upper), cell(a, &BandPoint::estimate),
                           cell(a, &BandPoint::lower), cell(a, &BandPoint::upper));
    }
}

}  // namespace gasvol
