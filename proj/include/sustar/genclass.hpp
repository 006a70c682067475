#pragma once

#include <span>
#include <string>
#include <vector>

#include "sustar/rng.hpp"
#include "sustar/series.hpp"

namespace sustar {

// Schur parameters (z1,z2,z3,z4), each in the closed unit disk.
struct SchurPoint {
    Complex z1, z2, z3, z4;
    SchurPoint(Complex z1, Complex z2, Complex z3, Complex z4);
};

// First four coefficients of p(z) = 1 + p1 z + p2 z^2 + ... with Re p > 0.
struct CaratheodoryPrefix {
    Complex p1, p2, p3, p4;
    CaratheodoryPrefix(Complex p1, Complex p2, Complex p3, Complex p4);
};

// (a2,a3,a4,a5) of a class member; all closed-form functionals consume this.
struct CoeffPrefix {
    Complex a2, a3, a4, a5;
};

// Finitely many point masses on the circle; weights positive, summing to 1.
struct HerglotzMeasure {
    struct Atom {
        double theta;  // radians in [0, 2*pi)
        double weight; // > 0
    };
    std::vector<Atom> atoms;
    explicit HerglotzMeasure(std::vector<Atom> atoms);
};

// Schur parameters -> (p1..p4). General form of the layer recursion: for
// real z1 it reduces to the classical real-normalized form; for complex z1
// the z2^2 terms carry conj(z1) so that every point of the closed polydisk
// yields an attainable Caratheodory prefix.
CaratheodoryPrefix caratheodory_from_schur(const SchurPoint& sp);

struct SchurInverse {
    SchurPoint point;
    bool degenerate = false;   // some |z_i| = 1, deeper layers undetermined
    int degenerate_layer = 0;  // first such layer (2..4), 0 if none
};

// Layer-by-layer inverse. Throws std::domain_error naming the first failing
// layer when the prefix is unattainable; |z_i| = 1 within 1e-9 flags the
// remaining coordinates degenerate (reported as 0).
SchurInverse schur_from_caratheodory(const CaratheodoryPrefix& cp);

CoeffPrefix coeffs_from_caratheodory(const CaratheodoryPrefix& cp);

// p_n = 2 sum_k w_k e^{i n theta_k}, p_0 = 1
TruncatedSeries herglotz_series(const HerglotzMeasure& m, int order);

// f = z * exp(int_0^z omega(t)/t dt) with omega = (p-1)/(p+1)
NormalizedSeries function_from_p(const TruncatedSeries& p);

// f_n(z) = z exp(z^{n-1}/(n-1)), n >= 2
NormalizedSeries extremal(int n, int order);

CoeffPrefix coeff_prefix(const NormalizedSeries& f);

struct MembershipResult {
    bool member = false;
    double worst = 0.0; // max sampled |z f'/f - 1|
    double worst_radius = 0.0;
    double worst_theta = 0.0;
};

inline constexpr double kMembershipTolerance = 1e-6;

// Samples |z f'/f - 1| on circles; necessary condition only. The caller must
// pick the order high enough that the truncation tail at the largest radius
// is negligible.
MembershipResult membership_check(const NormalizedSeries& f, std::span<const double> radii,
                                  int angles_per_radius);
MembershipResult membership_check(const NormalizedSeries& f); // default radii/angles

SchurPoint sample_schur(Rng& rng);
HerglotzMeasure sample_herglotz(Rng& rng); // 1..6 atoms, Dirichlet weights

} // namespace sustar
