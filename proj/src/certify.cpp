#include "sustar/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace sustar {

namespace {

struct WorkBox {
    Box box;
    double upper = 0.0;
    int depth = 0;
};

struct UpperLess {
    bool operator()(const WorkBox& a, const WorkBox& b) const { return a.upper < b.upper; }
};

double width(const Interval& iv) { return iv.hi - iv.lo; }

// Mean-value form: P(B) <= P(mid) + sum_i |dP_i(B)| * radius_i.
double mean_value_upper(const BoxPolynomial& p, const std::vector<BoxPolynomial>& grads,
                        const Box& b) {
    Box mid{};
    for (int d = 0; d < 3; ++d) {
        const double m = 0.5 * (b[static_cast<std::size_t>(d)].lo + b[static_cast<std::size_t>(d)].hi);
        mid[static_cast<std::size_t>(d)] = interval_point(m);
    }
    Interval bound = p.interval_evaluate(mid);
    for (int d = 0; d < p.dims(); ++d) {
        const Interval g = grads[static_cast<std::size_t>(d)].interval_evaluate(b);
        const double r = 0.5 * width(b[static_cast<std::size_t>(d)]);
        bound.hi = detail::up(bound.hi + detail::up(magnitude(g) * r));
    }
    return bound.hi;
}

double box_upper(const BoxPolynomial& p, const std::vector<BoxPolynomial>& grads, const Box& b) {
    const double naive = p.interval_evaluate(b).hi;
    const double mv = mean_value_upper(p, grads, b);
    return std::min(naive, mv);
}

// Certified value at a point: evaluate as a degenerate box, keep the lower end.
double point_lower(const BoxPolynomial& p, const std::array<double, 3>& x) {
    Box b{};
    for (int d = 0; d < 3; ++d) b[static_cast<std::size_t>(d)] = interval_point(x[static_cast<std::size_t>(d)]);
    return p.interval_evaluate(b).lo;
}

} // namespace

BoxCertificate certify_max(const BoxPolynomial& p, double epsilon, const CertifyOptions& opts) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("certify_max requires epsilon > 0");

    std::vector<BoxPolynomial> grads;
    for (int d = 0; d < p.dims(); ++d) grads.push_back(p.derivative(d));

    BoxCertificate cert;
    cert.objective = p.name();
    cert.epsilon = epsilon;
    cert.attained_lower = -std::numeric_limits<double>::infinity();

    auto try_point = [&](const std::array<double, 3>& x) {
        const double v = point_lower(p, x);
        if (v > cert.attained_lower) {
            cert.attained_lower = v;
            cert.witness = x;
        }
    };

    auto sample_box = [&](const Box& b) {
        std::array<double, 3> x{};
        // midpoint
        for (int d = 0; d < 3; ++d)
            x[static_cast<std::size_t>(d)] = 0.5 * (b[static_cast<std::size_t>(d)].lo + b[static_cast<std::size_t>(d)].hi);
        try_point(x);
        // corners; boundary maximizers are found exactly
        const int corners = 1 << p.dims();
        for (int mask = 0; mask < corners; ++mask) {
            for (int d = 0; d < p.dims(); ++d)
                x[static_cast<std::size_t>(d)] =
                    (mask >> d) & 1 ? b[static_cast<std::size_t>(d)].hi : b[static_cast<std::size_t>(d)].lo;
            for (int d = p.dims(); d < 3; ++d) x[static_cast<std::size_t>(d)] = 0.0;
            try_point(x);
        }
    };

    std::priority_queue<WorkBox, std::vector<WorkBox>, UpperLess> queue;
    WorkBox root{p.box(), 0.0, 0};
    root.upper = box_upper(p, grads, root.box);
    sample_box(root.box);
    queue.push(root);

    double resolved_upper = -std::numeric_limits<double>::infinity();

    while (!queue.empty()) {
        const WorkBox top = queue.top();
        const double global_upper = std::max(top.upper, resolved_upper);
        if (global_upper - cert.attained_lower <= epsilon) {
            cert.certified_upper = global_upper;
            cert.converged = true;
            return cert;
        }
        if (cert.boxes_processed >= opts.max_boxes) break;
        queue.pop();
        ++cert.boxes_processed;

        if (top.depth >= opts.depth_cap) {
            resolved_upper = std::max(resolved_upper, top.upper);
            continue;
        }

        // split the widest dimension at its midpoint
        int split_dim = 0;
        double w = -1.0;
        for (int d = 0; d < p.dims(); ++d) {
            const double wd = width(top.box[static_cast<std::size_t>(d)]);
            if (wd > w) {
                w = wd;
                split_dim = d;
            }
        }
        const Interval iv = top.box[static_cast<std::size_t>(split_dim)];
        const double mid = 0.5 * (iv.lo + iv.hi);
        for (int half = 0; half < 2; ++half) {
            WorkBox child = top;
            child.depth = top.depth + 1;
            child.box[static_cast<std::size_t>(split_dim)] =
                half == 0 ? Interval{iv.lo, mid} : Interval{mid, iv.hi};
            // parent's bound stays valid on the child: refinement is monotone
            child.upper = std::min(top.upper, box_upper(p, grads, child.box));
            cert.max_depth = std::max(cert.max_depth, child.depth);
            if (child.upper > cert.attained_lower) sample_box(child.box);
            queue.push(child);
        }
    }

    // budget exhausted (or only depth-capped boxes left): the bound is still
    // sound, just not necessarily epsilon-tight
    cert.certified_upper = resolved_upper;
    if (!queue.empty()) cert.certified_upper = std::max(cert.certified_upper, queue.top().upper);
    cert.converged = cert.certified_upper - cert.attained_lower <= epsilon;
    return cert;
}

std::vector<BoxCertificate> certify_scalar_chains() {
    const double eps = 1e-13;
    std::vector<BoxCertificate> certs;
    certs.push_back(certify_max(build_chain_h22(), eps));
    certs.push_back(certify_max(build_chain_log(), eps));
    certs.push_back(certify_max(build_chain_inv(), eps));
    return certs;
}

namespace {

struct GradSystem {
    BoxPolynomial px, py;
    double eval_px(double x, double y) const { return px.evaluate({x, y, 0.0}); }
    double eval_py(double x, double y) const { return py.evaluate({x, y, 0.0}); }
};

GradSystem make_system(GradientSystem system) {
    const BoxPolynomial p = system == GradientSystem::R ? build_R() : build_S();
    return GradSystem{p.derivative(0), p.derivative(1)};
}

bool newton_refine(const GradSystem& sys, double& x, double& y, const GradientRootOptions& opts) {
    const double h = opts.fd_step;
    for (int iter = 0; iter < opts.max_newton_iters; ++iter) {
        const double fx = sys.eval_px(x, y);
        const double fy = sys.eval_py(x, y);
        const double res = std::hypot(fx, fy);
        if (res < opts.newton_tol) return true;

        // finite-difference Jacobian
        const double j11 = (sys.eval_px(x + h, y) - sys.eval_px(x - h, y)) / (2.0 * h);
        const double j12 = (sys.eval_px(x, y + h) - sys.eval_px(x, y - h)) / (2.0 * h);
        const double j21 = (sys.eval_py(x + h, y) - sys.eval_py(x - h, y)) / (2.0 * h);
        const double j22 = (sys.eval_py(x, y + h) - sys.eval_py(x, y - h)) / (2.0 * h);
        const double det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-14) return false;
        double dx = -(j22 * fx - j12 * fy) / det;
        double dy = -(-j21 * fx + j11 * fy) / det;

        // damping: halve until the residual drops
        double scale = 1.0;
        bool stepped = false;
        for (int k = 0; k < 30; ++k) {
            const double nx = x + scale * dx;
            const double ny = y + scale * dy;
            const double nres = std::hypot(sys.eval_px(nx, ny), sys.eval_py(nx, ny));
            if (nres < res) {
                x = nx;
                y = ny;
                stepped = true;
                break;
            }
            scale *= 0.5;
        }
        if (!stepped) return std::hypot(fx, fy) < opts.newton_tol;
        if (std::abs(scale * dx) < 1e-15 && std::abs(scale * dy) < 1e-15)
            return std::hypot(sys.eval_px(x, y), sys.eval_py(x, y)) < opts.newton_tol;
    }
    return std::hypot(sys.eval_px(x, y), sys.eval_py(x, y)) < opts.newton_tol;
}

} // namespace

GradientRootResult gradient_roots(GradientSystem system, std::array<double, 2> xbox,
                                  std::array<double, 2> ybox, const GradientRootOptions& opts) {
    if (opts.grid < 32) throw std::invalid_argument("gradient_roots requires grid >= 32");
    const GradSystem sys = make_system(system);
    const int n = opts.grid;
    const double dx = (xbox[1] - xbox[0]) / n;
    const double dy = (ybox[1] - ybox[0]) / n;

    // corner samples of both partials
    std::vector<double> gx(static_cast<std::size_t>((n + 1) * (n + 1)));
    std::vector<double> gy(gx.size());
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const double x = xbox[0] + i * dx;
            const double y = ybox[0] + j * dy;
            gx[static_cast<std::size_t>(i * (n + 1) + j)] = sys.eval_px(x, y);
            gy[static_cast<std::size_t>(i * (n + 1) + j)] = sys.eval_py(x, y);
        }

    auto cell_has_sign_change = [&](const std::vector<double>& g, int i, int j) {
        const double v00 = g[static_cast<std::size_t>(i * (n + 1) + j)];
        const double v10 = g[static_cast<std::size_t>((i + 1) * (n + 1) + j)];
        const double v01 = g[static_cast<std::size_t>(i * (n + 1) + j + 1)];
        const double v11 = g[static_cast<std::size_t>((i + 1) * (n + 1) + j + 1)];
        const double lo = std::min(std::min(v00, v10), std::min(v01, v11));
        const double hi = std::max(std::max(v00, v10), std::max(v01, v11));
        return lo <= 0.0 && hi >= 0.0;
    };

    GradientRootResult result;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!cell_has_sign_change(gx, i, j) || !cell_has_sign_change(gy, i, j)) continue;
            ++result.candidates;
            double x = xbox[0] + (i + 0.5) * dx;
            double y = ybox[0] + (j + 0.5) * dy;
            if (!newton_refine(sys, x, y, opts)) {
                ++result.diverged;
                continue;
            }
            const bool inside = x > xbox[0] + opts.boundary_margin &&
                                x < xbox[1] - opts.boundary_margin &&
                                y > ybox[0] + opts.boundary_margin &&
                                y < ybox[1] - opts.boundary_margin;
            if (!inside) continue;
            bool duplicate = false;
            for (const auto& r : result.roots)
                if (std::hypot(r[0] - x, r[1] - y) < opts.dedup_tol) duplicate = true;
            if (!duplicate) result.roots.push_back({x, y});
        }
    }
    return result;
}

double gamma34_gap(double x, double y) {
    const BoxPolynomial diff = build_gamma_i(3) - build_gamma_i(4);
    return diff.evaluate({x, y, 0.0});
}

Rational gamma34_gap_exact(const Rational& x, const Rational& y) {
    const BoxPolynomial diff = build_gamma_i(3) - build_gamma_i(4);
    return diff.evaluate_exact({x, y, Rational(0)});
}

} // namespace sustar
