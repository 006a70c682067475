#include "sustar/neldermead.hpp"

#include <algorithm>
#include <cmath>

namespace sustar {

NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)>& f,
                                      std::span<const double> start, double step,
                                      const NelderMeadOptions& opts) {
    const std::size_t n = start.size();
    struct Vertex {
        std::vector<double> x;
        double value;
    };

    std::vector<Vertex> simplex(n + 1);
    simplex[0].x.assign(start.begin(), start.end());
    simplex[0].value = f(simplex[0].x);
    for (std::size_t i = 0; i < n; ++i) {
        simplex[i + 1] = simplex[0];
        simplex[i + 1].x[i] += step;
        simplex[i + 1].value = f(simplex[i + 1].x);
    }

    auto by_value_desc = [](const Vertex& a, const Vertex& b) { return a.value > b.value; };

    NelderMeadResult result;
    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        std::sort(simplex.begin(), simplex.end(), by_value_desc);

        double diameter = 0.0;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t d = 0; d < n; ++d)
                diameter = std::max(diameter, std::abs(simplex[i].x[d] - simplex[0].x[d]));
        if (diameter < opts.diameter_tol &&
            std::abs(simplex[0].value - simplex[n].value) < opts.value_tol) {
            result.converged = true;
            break;
        }

        // centroid of all but the worst
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[i].x[d] / static_cast<double>(n);

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t d = 0; d < n; ++d)
                p[d] = centroid[d] + t * (centroid[d] - simplex[n].x[d]);
            return p;
        };

        const std::vector<double> reflected = blend(1.0);
        const double fr = f(reflected);
        if (fr > simplex[0].value) {
            const std::vector<double> expanded = blend(2.0);
            const double fe = f(expanded);
            simplex[n] = fe > fr ? Vertex{expanded, fe} : Vertex{reflected, fr};
            continue;
        }
        if (fr > simplex[n - 1].value) {
            simplex[n] = Vertex{reflected, fr};
            continue;
        }
        const std::vector<double> contracted = blend(-0.5);
        const double fc = f(contracted);
        if (fc > simplex[n].value) {
            simplex[n] = Vertex{contracted, fc};
            continue;
        }
        // shrink toward the best vertex
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t d = 0; d < n; ++d)
                simplex[i].x[d] = simplex[0].x[d] + 0.5 * (simplex[i].x[d] - simplex[0].x[d]);
            simplex[i].value = f(simplex[i].x);
        }
    }

    std::sort(simplex.begin(), simplex.end(), by_value_desc);
    result.x = simplex[0].x;
    result.value = simplex[0].value;
    result.iterations = iter;
    return result;
}

} // namespace sustar
