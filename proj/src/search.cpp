#include <cmath>
#include <stdexcept>

#include "sustar/certify.hpp"
#include "sustar/genclass.hpp"
#include "sustar/neldermead.hpp"
#include "sustar/rng.hpp"

namespace sustar {

namespace {

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

// params: x1, r2, phi2, r3, phi3, r4, phi4; radii clamped into [0,1]
SchurPoint schur_from_params(std::span<const double> q) {
    auto polar = [](double r, double phi) {
        const double rr = clamp01(r);
        return Complex{rr * std::cos(phi), rr * std::sin(phi)};
    };
    return SchurPoint(Complex{clamp01(q[0]), 0.0}, polar(q[1], q[2]), polar(q[3], q[4]),
                      polar(q[5], q[6]));
}

double objective(FunctionalId id, std::span<const double> q) {
    const CoeffPrefix c = coeffs_from_caratheodory(caratheodory_from_schur(schur_from_params(q)));
    return functional_modulus(id, c);
}

} // namespace

SearchResult sharpness_search(FunctionalId id, int starts, std::uint64_t seed) {
    if (starts < 1) throw std::invalid_argument("sharpness_search requires starts >= 1");
    if (id == FunctionalId::SuccDiff)
        throw std::invalid_argument("sharpness_search covers the five Hankel-type functionals");

    SearchResult result;
    result.id = id;
    result.starts = starts;

    auto f = [&](std::span<const double> q) { return objective(id, q); };

    int converged = 0;
    for (int s = 0; s < starts; ++s) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(s));
        std::vector<double> q0 = {rng.uniform01(),
                                  rng.uniform01(), rng.uniform(0.0, 2.0 * Rng::pi()),
                                  rng.uniform01(), rng.uniform(0.0, 2.0 * Rng::pi()),
                                  rng.uniform01(), rng.uniform(0.0, 2.0 * Rng::pi())};
        NelderMeadOptions opts;
        const NelderMeadResult r = nelder_mead_maximize(f, q0, 0.15, opts);
        if (r.converged) ++converged;
        if (r.value > result.best_modulus) {
            result.best_modulus = r.value;
            for (std::size_t d = 0; d < 7; ++d) result.argmax_params[d] = r.x[d];
        }
    }
    result.converged_fraction = static_cast<double>(converged) / starts;

    const SchurPoint best = schur_from_params(result.argmax_params);
    result.argmax_z1 = best.z1;
    result.argmax_z2 = best.z2;
    result.argmax_z3 = best.z3;
    result.argmax_z4 = best.z4;
    // invariant: the reported modulus is the functional re-evaluated at argmax
    result.best_modulus = objective(id, result.argmax_params);
    return result;
}

} // namespace sustar
