#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sustar/interval.hpp"
#include "sustar/rational.hpp"

namespace sustar {

using Box = std::array<Interval, 3>; // unused trailing dims stay [0,0]

// Multivariate polynomial (d <= 3) with exact rational coefficients,
// restricted to a coordinate box (default [0,1]^d). Point evaluation at
// rational arguments is exact; interval evaluation is outward-rounded.
class BoxPolynomial {
public:
    explicit BoxPolynomial(int dims, std::string name = "");

    int dims() const { return dims_; }
    const std::string& name() const { return name_; }
    const Box& box() const { return box_; }
    void set_box(const Box& b) { box_ = b; }

    void add_term(std::array<int, 3> exponents, const Rational& coeff);
    const std::map<std::array<int, 3>, Rational>& terms() const { return terms_; }

    BoxPolynomial operator+(const BoxPolynomial& other) const;
    BoxPolynomial operator-(const BoxPolynomial& other) const;
    BoxPolynomial operator*(const BoxPolynomial& other) const;
    BoxPolynomial scaled(const Rational& c) const;
    bool operator==(const BoxPolynomial& other) const;
    bool is_zero() const;

    BoxPolynomial derivative(int dim) const;

    Rational evaluate_exact(const std::array<Rational, 3>& x) const;
    double evaluate(const std::array<double, 3>& x) const;
    Interval interval_evaluate(const Box& b) const;

    // helpers for building from factored displays
    static BoxPolynomial constant(int dims, const Rational& c);
    static BoxPolynomial variable(int dims, int dim); // x_dim

private:
    int dims_;
    std::string name_;
    std::map<std::array<int, 3>, Rational> terms_;
    Box box_;
};

// The reduced polynomials of the third-order Hankel bound, on [0,1]^d.
BoxPolynomial build_gamma();        // Gamma(x,y,u), 3-d
BoxPolynomial build_gamma_i(int i); // Gamma_1..Gamma_4, 2-d
BoxPolynomial build_R();            // Gamma1+Gamma2+Gamma3; construction asserts
BoxPolynomial build_S();            // Gamma1+Gamma2+Gamma4; both against the expanded displays

// One-dimensional bound chains on [0,1]:
// (3-2t^2)/12, (3+t^2)(1-t^2)/48, (3+4t^2-2t^4)/12
BoxPolynomial build_chain_h22();
BoxPolynomial build_chain_log();
BoxPolynomial build_chain_inv();

} // namespace sustar
