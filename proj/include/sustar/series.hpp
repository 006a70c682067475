#pragma once

#include <complex>
#include <vector>

namespace sustar {

using Complex = std::complex<double>;

// Finite Taylor prefix c_0 + c_1 z + ... + c_N z^N of an analytic function.
// Every operation is exact through the shared order and drops higher terms;
// where an operation needs coefficients beyond the stored order (composition,
// log of a shifted series) the prefix is treated as a polynomial.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Complex> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    Complex operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Complex& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<Complex>& coeffs() const { return c_; }

    TruncatedSeries truncated(int order) const; // shorten or zero-extend

    static TruncatedSeries constant(int order, Complex value);
    static TruncatedSeries monomial(int order, int degree, Complex value);
    static TruncatedSeries identity(int order); // z

private:
    std::vector<Complex> c_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// 1/a; requires a(0) != 0
TruncatedSeries reciprocal(const TruncatedSeries& a);

// exp(a); requires a(0) = 0
TruncatedSeries exp_series(const TruncatedSeries& a);

// term-wise antiderivative of w(z)/z; requires w(0) = 0
TruncatedSeries integrate_over_z(const TruncatedSeries& w);

// outer(inner); requires inner(0) = 0 and equal orders
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

Complex evaluate(const TruncatedSeries& s, Complex z);

// A series with c_0 = 0 and c_1 = 1 exactly (the usual class-A normalization).
class NormalizedSeries {
public:
    explicit NormalizedSeries(TruncatedSeries s);
    const TruncatedSeries& series() const { return s_; }
    int order() const { return s_.order(); }
    Complex operator[](int k) const { return s_[k]; }

private:
    TruncatedSeries s_;
};

// log(f(z)/z); inverse of g -> z*exp(g) on normalized prefixes
TruncatedSeries log_over_z(const NormalizedSeries& f);

// compositional inverse: f(revert(f)(w)) = w + O(w^{N+1}).
// Newton on the composition residual with order doubling.
NormalizedSeries revert(const NormalizedSeries& f);

// z f'(z)/f(z) as a series of order N-1 (constant term 1)
TruncatedSeries z_fprime_over_f(const NormalizedSeries& f);

// f_theta(z) = e^{-i theta} f(e^{i theta} z): c_n -> e^{i(n-1)theta} c_n
NormalizedSeries rotated(const NormalizedSeries& f, double theta);

} // namespace sustar
