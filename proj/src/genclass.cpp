#include "sustar/genclass.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sustar {

namespace {

constexpr double kSchurTol = 1e-12;
constexpr double kPrefixTol = 1e-9;
constexpr double kDegenerateTol = 1e-9;

double norm2(Complex z) { return std::norm(z); }

} // namespace

SchurPoint::SchurPoint(Complex z1_, Complex z2_, Complex z3_, Complex z4_)
    : z1(z1_), z2(z2_), z3(z3_), z4(z4_) {
    const Complex zs[4] = {z1, z2, z3, z4};
    for (int i = 0; i < 4; ++i) {
        if (std::abs(zs[i]) > 1.0 + kSchurTol)
            throw std::invalid_argument("Schur coordinate z" + std::to_string(i + 1) +
                                        " outside the closed unit disk");
    }
}

CaratheodoryPrefix::CaratheodoryPrefix(Complex p1_, Complex p2_, Complex p3_, Complex p4_)
    : p1(p1_), p2(p2_), p3(p3_), p4(p4_) {
    const Complex ps[4] = {p1, p2, p3, p4};
    for (int i = 0; i < 4; ++i) {
        if (std::abs(ps[i]) > 2.0 + kPrefixTol)
            throw std::invalid_argument("Caratheodory coefficient p" + std::to_string(i + 1) +
                                        " exceeds modulus 2");
    }
}

HerglotzMeasure::HerglotzMeasure(std::vector<Atom> atoms_) : atoms(std::move(atoms_)) {
    if (atoms.empty()) throw std::invalid_argument("Herglotz measure needs at least one atom");
    double sum = 0.0;
    for (const auto& a : atoms) {
        if (!(a.weight > 0.0)) throw std::invalid_argument("Herglotz weights must be positive");
        sum += a.weight;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("Herglotz weights must sum to 1");
}

CaratheodoryPrefix caratheodory_from_schur(const SchurPoint& sp) {
    const Complex z1 = sp.z1, z2 = sp.z2, z3 = sp.z3, z4 = sp.z4;
    const double m1 = 1.0 - norm2(z1);
    const double m2 = 1.0 - norm2(z2);
    const double m3 = 1.0 - norm2(z3);
    const Complex z1c = std::conj(z1);
    const Complex z2c = std::conj(z2);

    const Complex p1 = 2.0 * z1;
    const Complex p2 = 2.0 * z1 * z1 + 2.0 * m1 * z2;
    const Complex p3 = 2.0 * z1 * z1 * z1 + 4.0 * m1 * z1 * z2 - 2.0 * m1 * z1c * z2 * z2 +
                       2.0 * m1 * m2 * z3;
    const Complex p4 = 2.0 * z1 * z1 * z1 * z1 +
                       2.0 * m1 *
                           (3.0 * z1 * z1 * z2 + m1 * z2 * z2 - 2.0 * norm2(z1) * z2 * z2 +
                            z1c * z1c * z2 * z2 * z2) +
                       2.0 * m1 * m2 * (2.0 * z1 - 2.0 * z1c * z2 - z2c * z3) * z3 +
                       2.0 * m1 * m2 * m3 * z4;
    return CaratheodoryPrefix(p1, p2, p3, p4);
}

SchurInverse schur_from_caratheodory(const CaratheodoryPrefix& cp) {
    auto fail = [](int layer) {
        throw std::domain_error("prefix unattainable at layer " + std::to_string(layer));
    };
    auto clamp_disk = [](Complex v) {
        const double m = std::abs(v);
        return m > 1.0 ? v / m : v;
    };

    Complex z[5] = {}; // 1-based
    bool degenerate = false;
    int degenerate_layer = 0;

    z[1] = cp.p1 / 2.0;
    if (std::abs(z[1]) > 1.0 + kPrefixTol) fail(1);
    z[1] = clamp_disk(z[1]);

    // Peel one layer at a time. Once some |z_i| = 1 the remaining p's are
    // fully determined by the formulas, so they are checked instead of solved.
    const Complex targets[3] = {cp.p2, cp.p3, cp.p4};
    for (int layer = 2; layer <= 4; ++layer) {
        if (!degenerate && 1.0 - std::abs(z[layer - 1]) <= kDegenerateTol) {
            degenerate = true;
            degenerate_layer = layer;
        }

        const CaratheodoryPrefix pred = caratheodory_from_schur(SchurPoint(z[1], z[2], z[3], z[4]));
        const Complex predicted = layer == 2 ? pred.p2 : layer == 3 ? pred.p3 : pred.p4;
        const Complex target = targets[layer - 2];

        if (degenerate) {
            if (std::abs(target - predicted) > 1e-8) fail(layer);
            z[layer] = 0.0;
            continue;
        }

        double divisor = 2.0;
        for (int j = 1; j < layer; ++j) divisor *= 1.0 - norm2(z[j]);
        z[layer] = (target - predicted) / divisor;
        if (std::abs(z[layer]) > 1.0 + kPrefixTol) fail(layer);
        z[layer] = clamp_disk(z[layer]);
    }

    return SchurInverse{SchurPoint(z[1], z[2], z[3], z[4]), degenerate, degenerate_layer};
}

CoeffPrefix coeffs_from_caratheodory(const CaratheodoryPrefix& cp) {
    const Complex p1 = cp.p1, p2 = cp.p2, p3 = cp.p3, p4 = cp.p4;
    CoeffPrefix c;
    c.a2 = p1 / 2.0;
    c.a3 = p2 / 4.0;
    c.a4 = p3 / 6.0 - p1 * p2 / 24.0;
    c.a5 = (p4 - p2 * p2 / 4.0 - p1 * p3 / 3.0 + p1 * p1 * p2 / 12.0) / 8.0;

    const Complex as[4] = {c.a2, c.a3, c.a4, c.a5};
    for (int n = 2; n <= 5; ++n) {
        if (std::abs(as[n - 2]) > 1.0 / (n - 1) + kPrefixTol)
            throw std::domain_error("coefficient bound |a_n| <= 1/(n-1) violated at n = " +
                                    std::to_string(n));
    }
    return c;
}

TruncatedSeries herglotz_series(const HerglotzMeasure& m, int order) {
    TruncatedSeries p(order);
    p[0] = 1.0;
    for (int n = 1; n <= order; ++n) {
        Complex s{0.0, 0.0};
        for (const auto& atom : m.atoms) {
            const double phase = n * atom.theta;
            s += atom.weight * Complex{std::cos(phase), std::sin(phase)};
        }
        p[n] = 2.0 * s;
    }
    return p;
}

NormalizedSeries function_from_p(const TruncatedSeries& p) {
    if (p[0] != Complex{1.0, 0.0})
        throw std::invalid_argument("function_from_p requires p(0) = 1");
    const int n = p.order();
    TruncatedSeries one = TruncatedSeries::constant(n, 1.0);
    const TruncatedSeries omega = mul(sub(p, one), reciprocal(add(p, one)));
    const TruncatedSeries big_f = integrate_over_z(omega);
    const TruncatedSeries expf = exp_series(big_f);
    TruncatedSeries f(n);
    for (int k = 1; k <= n; ++k) f[k] = expf[k - 1];
    f[1] = 1.0;
    return NormalizedSeries(std::move(f));
}

NormalizedSeries extremal(int n, int order) {
    if (n < 2) throw std::invalid_argument("extremal index must be >= 2");
    TruncatedSeries w(order);
    if (n - 1 <= order) w[n - 1] = 1.0 / static_cast<double>(n - 1);
    const TruncatedSeries e = exp_series(w);
    TruncatedSeries f(order);
    for (int k = 1; k <= order; ++k) f[k] = e[k - 1];
    return NormalizedSeries(std::move(f));
}

CoeffPrefix coeff_prefix(const NormalizedSeries& f) {
    if (f.order() < 5) throw std::invalid_argument("coeff_prefix requires order >= 5");
    return CoeffPrefix{f[2], f[3], f[4], f[5]};
}

MembershipResult membership_check(const NormalizedSeries& f, std::span<const double> radii,
                                  int angles_per_radius) {
    if (angles_per_radius < 1) throw std::invalid_argument("need at least one angle");
    for (double r : radii)
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("membership radii must lie in (0,1)");

    const TruncatedSeries g = z_fprime_over_f(f);
    MembershipResult result;
    for (double r : radii) {
        for (int j = 0; j < angles_per_radius; ++j) {
            const double theta = 2.0 * Rng::pi() * j / angles_per_radius;
            const Complex z{r * std::cos(theta), r * std::sin(theta)};
            const double v = std::abs(evaluate(g, z) - 1.0);
            if (v > result.worst) {
                result.worst = v;
                result.worst_radius = r;
                result.worst_theta = theta;
            }
        }
    }
    result.member = result.worst <= 1.0 + kMembershipTolerance;
    return result;
}

MembershipResult membership_check(const NormalizedSeries& f) {
    static constexpr double kRadii[] = {0.2, 0.4, 0.6, 0.8, 0.95};
    return membership_check(f, kRadii, 720);
}

SchurPoint sample_schur(Rng& rng) {
    const Complex z1 = rng.unit_disk();
    const Complex z2 = rng.unit_disk();
    const Complex z3 = rng.unit_disk();
    const Complex z4 = rng.unit_disk();
    return SchurPoint(z1, z2, z3, z4);
}

HerglotzMeasure sample_herglotz(Rng& rng) {
    const int count = 1 + static_cast<int>(rng.uniform01() * 6.0);
    const int k = count > 6 ? 6 : count;
    const std::vector<double> w = rng.dirichlet(k);
    std::vector<HerglotzMeasure::Atom> atoms(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        atoms[static_cast<std::size_t>(i)] = {rng.uniform(0.0, 2.0 * Rng::pi()), w[static_cast<std::size_t>(i)]};
    }
    return HerglotzMeasure(std::move(atoms));
}

} // namespace sustar
