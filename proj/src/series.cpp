#include "sustar/series.hpp"

#include <cmath>
#include <stdexcept>

namespace sustar {

namespace {
void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}
} // namespace

TruncatedSeries::TruncatedSeries(int order) {
    require(order >= 1, "series order must be >= 1");
    c_.assign(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Complex> coeffs) {
    require(order >= 1, "series order must be >= 1");
    require(coeffs.size() == static_cast<std::size_t>(order) + 1,
            "coefficient count must be order + 1");
    c_ = std::move(coeffs);
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    TruncatedSeries r(order);
    const int n = std::min(order, this->order());
    for (int k = 0; k <= n; ++k) r[k] = c_[static_cast<std::size_t>(k)];
    return r;
}

TruncatedSeries TruncatedSeries::constant(int order, Complex value) {
    TruncatedSeries r(order);
    r[0] = value;
    return r;
}

TruncatedSeries TruncatedSeries::monomial(int order, int degree, Complex value) {
    require(degree >= 0 && degree <= order, "monomial degree out of range");
    TruncatedSeries r(order);
    r[degree] = value;
    return r;
}

TruncatedSeries TruncatedSeries::identity(int order) { return monomial(order, 1, 1.0); }

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require(a.order() == b.order(), "mismatched series orders");
    TruncatedSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = a[k] + b[k];
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require(a.order() == b.order(), "mismatched series orders");
    TruncatedSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = a[k] - b[k];
    return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require(a.order() == b.order(), "mismatched series orders");
    const int n = a.order();
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) {
        Complex s{0.0, 0.0};
        for (int i = 0; i <= k; ++i) s += a[i] * b[k - i];
        r[k] = s;
    }
    return r;
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
    if (a[0] == Complex{0.0, 0.0})
        throw std::domain_error("reciprocal of a series with zero constant term");
    const int n = a.order();
    TruncatedSeries r(n);
    const Complex inv0 = 1.0 / a[0];
    r[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Complex s{0.0, 0.0};
        for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
        r[k] = -inv0 * s;
    }
    return r;
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
    require(a[0] == Complex{0.0, 0.0}, "exp_series requires zero constant term");
    const int n = a.order();
    TruncatedSeries r(n);
    r[0] = 1.0;
    // g' = a' g termwise: k g_k = sum_{j=1..k} j a_j g_{k-j}
    for (int k = 1; k <= n; ++k) {
        Complex s{0.0, 0.0};
        for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * r[k - j];
        r[k] = s / static_cast<double>(k);
    }
    return r;
}

TruncatedSeries integrate_over_z(const TruncatedSeries& w) {
    require(w[0] == Complex{0.0, 0.0}, "integrate_over_z requires w(0) = 0");
    const int n = w.order();
    TruncatedSeries r(n);
    for (int k = 1; k <= n; ++k) r[k] = w[k] / static_cast<double>(k);
    return r;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    require(outer.order() == inner.order(), "mismatched series orders");
    require(inner[0] == Complex{0.0, 0.0}, "compose requires inner(0) = 0");
    const int n = outer.order();
    TruncatedSeries r = TruncatedSeries::constant(n, outer[n]);
    for (int k = n - 1; k >= 0; --k) {
        r = mul(r, inner);
        r[0] += outer[k];
    }
    return r;
}

Complex evaluate(const TruncatedSeries& s, Complex z) {
    Complex r = s[s.order()];
    for (int k = s.order() - 1; k >= 0; --k) r = r * z + s[k];
    return r;
}

NormalizedSeries::NormalizedSeries(TruncatedSeries s) : s_(std::move(s)) {
    require(s_[0] == Complex{0.0, 0.0} && s_[1] == Complex{1.0, 0.0},
            "normalized series requires c0 = 0 and c1 = 1 exactly");
}

TruncatedSeries log_over_z(const NormalizedSeries& f) {
    const int n = f.order();
    // u = f/z treated as a polynomial prefix (top coefficient 0)
    TruncatedSeries u(n);
    for (int k = 0; k < n; ++k) u[k] = f[k + 1];
    TruncatedSeries r(n);
    // L' u = u': k L_k = k u_k - sum_{j=1..k-1} j L_j u_{k-j}
    for (int k = 1; k <= n; ++k) {
        Complex s = static_cast<double>(k) * u[k];
        for (int j = 1; j < k; ++j) s -= static_cast<double>(j) * r[j] * u[k - j];
        r[k] = s / static_cast<double>(k);
    }
    return r;
}

NormalizedSeries revert(const NormalizedSeries& f) {
    const int n = f.order();
    // f'(z) as an order-n polynomial prefix
    TruncatedSeries fprime(n);
    for (int k = 1; k <= n; ++k) fprime[k - 1] = static_cast<double>(k) * f[k];

    TruncatedSeries g = TruncatedSeries::identity(n);
    const TruncatedSeries w = TruncatedSeries::identity(n);
    // Newton doubles the number of correct coefficients per step.
    int correct = 1;
    while (correct < n) {
        const TruncatedSeries residual = sub(compose(f.series(), g), w);
        const TruncatedSeries slope = compose(fprime, g);
        g = sub(g, mul(residual, reciprocal(slope)));
        correct *= 2;
    }
    g[0] = 0.0; // exact by construction; scrub rounding dust
    g[1] = 1.0;
    return NormalizedSeries(std::move(g));
}

TruncatedSeries z_fprime_over_f(const NormalizedSeries& f) {
    const int n = f.order();
    require(n >= 2, "z_fprime_over_f requires order >= 2");
    // divide numerator z f' and denominator f by z; both order n-1
    TruncatedSeries num(n - 1), den(n - 1);
    for (int k = 0; k < n; ++k) {
        num[k] = static_cast<double>(k + 1) * f[k + 1];
        den[k] = f[k + 1];
    }
    return mul(num, reciprocal(den));
}

NormalizedSeries rotated(const NormalizedSeries& f, double theta) {
    const int n = f.order();
    TruncatedSeries r(n);
    for (int k = 1; k <= n; ++k) {
        const double phase = static_cast<double>(k - 1) * theta;
        r[k] = f[k] * Complex{std::cos(phase), std::sin(phase)};
    }
    r[1] = 1.0; // k = 1 phase is exactly zero
    return NormalizedSeries(std::move(r));
}

} // namespace sustar
