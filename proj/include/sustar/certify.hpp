#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sustar/boxpoly.hpp"
#include "sustar/functionals.hpp"

namespace sustar {

// Machine-checkable "max over box <= certified_upper, value attained_lower
// attained at witness" statement with subdivision statistics.
struct BoxCertificate {
    std::string objective;
    double certified_upper = 0.0;
    double attained_lower = 0.0;
    std::array<double, 3> witness{};
    long boxes_processed = 0;
    int max_depth = 0;
    double epsilon = 0.0;
    bool converged = false; // false: iteration/depth budget exhausted
};

struct CertifyOptions {
    long max_boxes = 20'000'000;
    int depth_cap = 60;
};

// Interval branch-and-bound maximization. Upper bounds take the tighter of
// the naive interval evaluation and a mean-value form, and children never
// exceed their parent's bound, so refinement is monotone.
BoxCertificate certify_max(const BoxPolynomial& p, double epsilon,
                           const CertifyOptions& opts = {});

// Certificates for the three scalar chains against 1/4, 1/16, 5/12.
std::vector<BoxCertificate> certify_scalar_chains();

enum class GradientSystem { R, S };

struct GradientRootOptions {
    int grid = 64;             // >= 32
    double newton_tol = 1e-12; // residual norm target
    double fd_step = 1e-7;     // finite-difference Jacobian step
    int max_newton_iters = 80;
    double dedup_tol = 1e-6;
    double boundary_margin = 1e-6; // roots this close to the box edge are dropped
};

// Dense-grid sign scan + damped Newton on grad P = 0, deduplicated roots
// strictly inside the box. Diverged candidates are counted, not fatal.
struct GradientRootResult {
    std::vector<std::array<double, 2>> roots;
    int candidates = 0;
    int diverged = 0;
};

GradientRootResult gradient_roots(GradientSystem system, std::array<double, 2> xbox,
                                  std::array<double, 2> ybox,
                                  const GradientRootOptions& opts = {});

double gamma34_gap(double x, double y);
Rational gamma34_gap_exact(const Rational& x, const Rational& y);

// Multi-start sharpness search over Schur parameters: z1 in [0,1] real
// (rotation invariance), z2..z4 as radius-angle pairs.
struct SearchResult {
    FunctionalId id;
    double best_modulus = 0.0;
    std::array<double, 7> argmax_params{}; // x1, r2, phi2, r3, phi3, r4, phi4
    Complex argmax_z1, argmax_z2, argmax_z3, argmax_z4;
    int starts = 0;
    double converged_fraction = 0.0;
};

SearchResult sharpness_search(FunctionalId id, int starts, std::uint64_t seed);

} // namespace sustar
