#pragma once

#include <functional>
#include <vector>

namespace gasvol {

struct NelderMeadOptions {
    int max_evaluations = 4000;
    double f_tolerance = 1e-10;  ///< stop when the simplex value spread falls below this
    double x_tolerance = 1e-8;   ///< ... and its vertices are this close
    double initial_step = 0.5;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
    int iterations = 0;
    bool converged = false;
    /// Best value after every iteration; non-increasing.
    std::vector<double> trace;
};

/// Minimizes f from `start` with the standard reflection/expansion/
/// contraction/shrink simplex moves (coefficients 1, 2, 0.5, 0.5).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const NelderMeadOptions& options = {});

}  // namespace gasvol
