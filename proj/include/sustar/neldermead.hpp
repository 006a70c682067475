#pragma once

#include <functional>
#include <span>
#include <vector>

namespace sustar {

struct NelderMeadOptions {
    int max_iterations = 800;
    double diameter_tol = 1e-10;
    double value_tol = 1e-13;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Derivative-free simplex maximization with the standard 1/2/0.5/0.5
// reflection/expansion/contraction/shrink coefficients.
NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)>& f,
                                      std::span<const double> start, double step,
                                      const NelderMeadOptions& opts = {});

} // namespace sustar
