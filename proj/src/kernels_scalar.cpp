#include <complex>

#include "sustar/kernels.hpp"

namespace sustar::kernels {

void SchurBatch::resize(std::size_t n) {
    for (auto* v : {&z1re, &z1im, &z2re, &z2im, &z3re, &z3im, &z4re, &z4im}) v->assign(n, 0.0);
}

void SchurBatch::set(std::size_t i, double x1re, double x1im, double x2re, double x2im,
                     double x3re, double x3im, double x4re, double x4im) {
    z1re[i] = x1re;
    z1im[i] = x1im;
    z2re[i] = x2re;
    z2im[i] = x2im;
    z3re[i] = x3re;
    z3im[i] = x3im;
    z4re[i] = x4re;
    z4im[i] = x4im;
}

void BoundsBatch::resize(std::size_t n) {
    for (auto* v : {&h21, &h22, &h31, &log_h21, &inv_h22}) v->assign(n, 0.0);
}

// Reference kernel: one Schur point -> p -> (a2..a5) -> the five moduli.
// The AVX2 variant mirrors this chain lane-for-lane.
void eval_bounds_scalar(const SchurBatch& in, BoundsBatch& out) {
    using C = std::complex<double>;
    const std::size_t n = in.size();
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const C z1{in.z1re[i], in.z1im[i]};
        const C z2{in.z2re[i], in.z2im[i]};
        const C z3{in.z3re[i], in.z3im[i]};
        const C z4{in.z4re[i], in.z4im[i]};

        const double m1 = 1.0 - std::norm(z1);
        const double m2 = 1.0 - std::norm(z2);
        const double m3 = 1.0 - std::norm(z3);
        const C z1c = std::conj(z1);
        const C z2c = std::conj(z2);

        const C p1 = 2.0 * z1;
        const C p2 = 2.0 * z1 * z1 + 2.0 * m1 * z2;
        const C p3 =
            2.0 * z1 * z1 * z1 + 4.0 * m1 * z1 * z2 - 2.0 * m1 * z1c * z2 * z2 + 2.0 * m1 * m2 * z3;
        const C p4 = 2.0 * z1 * z1 * z1 * z1 +
                     2.0 * m1 *
                         (3.0 * z1 * z1 * z2 + m1 * z2 * z2 - 2.0 * std::norm(z1) * z2 * z2 +
                          z1c * z1c * z2 * z2 * z2) +
                     2.0 * m1 * m2 * (2.0 * z1 - 2.0 * z1c * z2 - z2c * z3) * z3 +
                     2.0 * m1 * m2 * m3 * z4;

        const C a2 = p1 / 2.0;
        const C a3 = p2 / 4.0;
        const C a4 = p3 / 6.0 - p1 * p2 / 24.0;
        const C a5 = (p4 - p2 * p2 / 4.0 - p1 * p3 / 3.0 + p1 * p1 * p2 / 12.0) / 8.0;

        const C a2sq = a2 * a2;
        const C a2q = a2sq * a2sq;
        const C h22 = a2 * a4 - a3 * a3;

        out.h21[i] = std::abs(a3 - a2sq);
        out.h22[i] = std::abs(h22);
        out.h31[i] =
            std::abs((a3 * a5 - a4 * a4) - a2 * (a2 * a5 - a3 * a4) + a3 * (a2 * a4 - a3 * a3));
        out.log_h21[i] = std::abs((h22 + a2q / 12.0) / 4.0);
        out.inv_h22[i] = std::abs(h22 - a2sq * a3 + a2q);
    }
}

} // namespace sustar::kernels
