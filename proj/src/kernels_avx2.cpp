#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "sustar/kernels.hpp"

namespace sustar::kernels {

namespace {

// four complex numbers per register pair
struct CVec {
    __m256d re, im;
};

inline CVec cload(const double* re, const double* im, std::size_t i) {
    return {_mm256_loadu_pd(re + i), _mm256_loadu_pd(im + i)};
}

inline CVec cbroadcast(double v) { return {_mm256_set1_pd(v), _mm256_setzero_pd()}; }

inline CVec cadd(CVec a, CVec b) { return {_mm256_add_pd(a.re, b.re), _mm256_add_pd(a.im, b.im)}; }
inline CVec csub(CVec a, CVec b) { return {_mm256_sub_pd(a.re, b.re), _mm256_sub_pd(a.im, b.im)}; }

inline CVec cmul(CVec a, CVec b) {
    // (ar br - ai bi, ar bi + ai br)
    return {_mm256_fmsub_pd(a.re, b.re, _mm256_mul_pd(a.im, b.im)),
            _mm256_fmadd_pd(a.re, b.im, _mm256_mul_pd(a.im, b.re))};
}

inline CVec cscale(__m256d s, CVec a) { return {_mm256_mul_pd(s, a.re), _mm256_mul_pd(s, a.im)}; }
inline CVec cconj(CVec a) { return {a.re, _mm256_sub_pd(_mm256_setzero_pd(), a.im)}; }

inline __m256d cnorm(CVec a) { return _mm256_fmadd_pd(a.re, a.re, _mm256_mul_pd(a.im, a.im)); }
inline __m256d cabs(CVec a) { return _mm256_sqrt_pd(cnorm(a)); }

} // namespace

void eval_bounds_avx2(const SchurBatch& in, BoundsBatch& out) {
    const std::size_t n = in.size();
    out.resize(n);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const CVec z1 = cload(in.z1re.data(), in.z1im.data(), i);
        const CVec z2 = cload(in.z2re.data(), in.z2im.data(), i);
        const CVec z3 = cload(in.z3re.data(), in.z3im.data(), i);
        const CVec z4 = cload(in.z4re.data(), in.z4im.data(), i);

        const __m256d nz1 = cnorm(z1);
        const __m256d m1 = _mm256_sub_pd(one, nz1);
        const __m256d m2 = _mm256_sub_pd(one, cnorm(z2));
        const __m256d m3 = _mm256_sub_pd(one, cnorm(z3));
        const CVec z1c = cconj(z1);
        const CVec z2c = cconj(z2);

        const CVec z1_2 = cmul(z1, z1);
        const CVec z1_3 = cmul(z1_2, z1);
        const CVec z1_4 = cmul(z1_2, z1_2);
        const CVec z2_2 = cmul(z2, z2);
        const CVec z2_3 = cmul(z2_2, z2);

        const CVec p1 = cscale(two, z1);
        const CVec p2 = cadd(cscale(two, z1_2), cscale(_mm256_mul_pd(two, m1), z2));

        // p3 = 2 z1^3 + 4 m1 z1 z2 - 2 m1 conj(z1) z2^2 + 2 m1 m2 z3
        CVec p3 = cscale(two, z1_3);
        p3 = cadd(p3, cscale(_mm256_mul_pd(_mm256_set1_pd(4.0), m1), cmul(z1, z2)));
        p3 = csub(p3, cscale(_mm256_mul_pd(two, m1), cmul(z1c, z2_2)));
        p3 = cadd(p3, cscale(_mm256_mul_pd(_mm256_mul_pd(two, m1), m2), z3));

        // p4 = 2 z1^4 + 2 m1 (3 z1^2 z2 + m1 z2^2 - 2 |z1|^2 z2^2 + conj(z1)^2 z2^3)
        //    + 2 m1 m2 (2 z1 - 2 conj(z1) z2 - conj(z2) z3) z3 + 2 m1 m2 m3 z4
        CVec inner = cscale(_mm256_set1_pd(3.0), cmul(z1_2, z2));
        inner = cadd(inner, cscale(_mm256_sub_pd(m1, _mm256_mul_pd(two, nz1)), z2_2));
        inner = cadd(inner, cmul(cmul(z1c, z1c), z2_3));
        CVec bracket = cscale(two, z1);
        bracket = csub(bracket, cscale(two, cmul(z1c, z2)));
        bracket = csub(bracket, cmul(z2c, z3));
        const __m256d m1m2 = _mm256_mul_pd(m1, m2);
        CVec p4 = cscale(two, z1_4);
        p4 = cadd(p4, cscale(_mm256_mul_pd(two, m1), inner));
        p4 = cadd(p4, cscale(_mm256_mul_pd(two, m1m2), cmul(bracket, z3)));
        p4 = cadd(p4, cscale(_mm256_mul_pd(_mm256_mul_pd(two, m1m2), m3), z4));

        const CVec a2 = cscale(_mm256_set1_pd(0.5), p1);
        const CVec a3 = cscale(_mm256_set1_pd(0.25), p2);
        const CVec a4 = csub(cscale(_mm256_set1_pd(1.0 / 6.0), p3),
                             cscale(_mm256_set1_pd(1.0 / 24.0), cmul(p1, p2)));
        CVec a5 = p4;
        a5 = csub(a5, cscale(_mm256_set1_pd(0.25), cmul(p2, p2)));
        a5 = csub(a5, cscale(_mm256_set1_pd(1.0 / 3.0), cmul(p1, p3)));
        a5 = cadd(a5, cscale(_mm256_set1_pd(1.0 / 12.0), cmul(cmul(p1, p1), p2)));
        a5 = cscale(_mm256_set1_pd(0.125), a5);

        const CVec a2sq = cmul(a2, a2);
        const CVec a2q = cmul(a2sq, a2sq);
        const CVec h22 = csub(cmul(a2, a4), cmul(a3, a3));

        _mm256_storeu_pd(out.h21.data() + i, cabs(csub(a3, a2sq)));
        _mm256_storeu_pd(out.h22.data() + i, cabs(h22));

        CVec h31 = csub(cmul(a3, a5), cmul(a4, a4));
        h31 = csub(h31, cmul(a2, csub(cmul(a2, a5), cmul(a3, a4))));
        h31 = cadd(h31, cmul(a3, csub(cmul(a2, a4), cmul(a3, a3))));
        _mm256_storeu_pd(out.h31.data() + i, cabs(h31));

        const CVec logh =
            cscale(_mm256_set1_pd(0.25), cadd(h22, cscale(_mm256_set1_pd(1.0 / 12.0), a2q)));
        _mm256_storeu_pd(out.log_h21.data() + i, cabs(logh));

        const CVec invh = cadd(csub(h22, cmul(a2sq, a3)), a2q);
        _mm256_storeu_pd(out.inv_h22.data() + i, cabs(invh));
    }

    // remainder through the reference kernel
    if (i < n) {
        SchurBatch tail;
        const std::size_t m = n - i;
        tail.resize(m);
        for (std::size_t k = 0; k < m; ++k)
            tail.set(k, in.z1re[i + k], in.z1im[i + k], in.z2re[i + k], in.z2im[i + k],
                     in.z3re[i + k], in.z3im[i + k], in.z4re[i + k], in.z4im[i + k]);
        BoundsBatch tail_out;
        eval_bounds_scalar(tail, tail_out);
        for (std::size_t k = 0; k < m; ++k) {
            out.h21[i + k] = tail_out.h21[k];
            out.h22[i + k] = tail_out.h22[k];
            out.h31[i + k] = tail_out.h31[k];
            out.log_h21[i + k] = tail_out.log_h21[k];
            out.inv_h22[i + k] = tail_out.inv_h22[k];
        }
    }
}

} // namespace sustar::kernels

#endif // x86_64
