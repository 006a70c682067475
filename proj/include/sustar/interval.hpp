#pragma once

#include <algorithm>
#include <cmath>

namespace sustar {

// Closed interval with outward epsilon-inflation after every operation.
// 2^-50 relative per endpoint covers round-to-nearest error (2^-53) with
// margin; the absolute guard covers underflow near zero.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

namespace detail {
inline constexpr double kRelInflate = 0x1.0p-50;
inline constexpr double kAbsInflate = 1e-300;

inline double up(double v) { return v + std::abs(v) * kRelInflate + kAbsInflate; }
inline double down(double v) { return v - std::abs(v) * kRelInflate - kAbsInflate; }
} // namespace detail

inline Interval interval_point(double v) { return {detail::down(v), detail::up(v)}; }
inline Interval interval_exact(double lo, double hi) { return {lo, hi}; }

inline Interval iadd(Interval a, Interval b) {
    return {detail::down(a.lo + b.lo), detail::up(a.hi + b.hi)};
}

inline Interval isub(Interval a, Interval b) {
    return {detail::down(a.lo - b.hi), detail::up(a.hi - b.lo)};
}

inline Interval imul(Interval a, Interval b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {detail::down(std::min(std::min(p1, p2), std::min(p3, p4))),
            detail::up(std::max(std::max(p1, p2), std::max(p3, p4)))};
}

// a^e for integer e >= 0; even powers of sign-straddling intervals pin lo at 0
inline Interval ipow(Interval a, int e) {
    if (e == 0) return {1.0, 1.0};
    if (e % 2 == 0 && a.lo < 0.0 && a.hi > 0.0) {
        const double m = std::max(-a.lo, a.hi);
        Interval r{1.0, 1.0};
        Interval base{0.0, m};
        for (int i = 0; i < e; ++i) r = imul(r, base);
        return {0.0, r.hi};
    }
    Interval r = a;
    for (int i = 1; i < e; ++i) r = imul(r, a);
    return r;
}

inline double magnitude(Interval a) { return std::max(std::abs(a.lo), std::abs(a.hi)); }

} // namespace sustar
