#include "sustar/boxpoly.hpp"

#include <stdexcept>

namespace sustar {

BoxPolynomial::BoxPolynomial(int dims, std::string name) : dims_(dims), name_(std::move(name)) {
    if (dims < 1 || dims > 3) throw std::invalid_argument("BoxPolynomial supports 1..3 dims");
    for (int d = 0; d < 3; ++d) box_[static_cast<std::size_t>(d)] = d < dims ? Interval{0.0, 1.0} : Interval{0.0, 0.0};
}

void BoxPolynomial::add_term(std::array<int, 3> exponents, const Rational& coeff) {
    for (int d = dims_; d < 3; ++d)
        if (exponents[static_cast<std::size_t>(d)] != 0)
            throw std::invalid_argument("exponent on unused dimension");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BoxPolynomial BoxPolynomial::operator+(const BoxPolynomial& other) const {
    BoxPolynomial r = *this;
    for (const auto& [e, c] : other.terms_) r.add_term(e, c);
    return r;
}

BoxPolynomial BoxPolynomial::operator-(const BoxPolynomial& other) const {
    BoxPolynomial r = *this;
    for (const auto& [e, c] : other.terms_) r.add_term(e, -c);
    return r;
}

BoxPolynomial BoxPolynomial::operator*(const BoxPolynomial& other) const {
    BoxPolynomial r(std::max(dims_, other.dims_), name_);
    r.box_ = box_;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

BoxPolynomial BoxPolynomial::scaled(const Rational& c) const {
    BoxPolynomial r(dims_, name_);
    r.box_ = box_;
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

bool BoxPolynomial::operator==(const BoxPolynomial& other) const {
    return terms_ == other.terms_;
}

bool BoxPolynomial::is_zero() const { return terms_.empty(); }

BoxPolynomial BoxPolynomial::derivative(int dim) const {
    BoxPolynomial r(dims_, name_);
    r.box_ = box_;
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(dim)];
        if (k == 0) continue;
        std::array<int, 3> d = e;
        d[static_cast<std::size_t>(dim)] = k - 1;
        r.add_term(d, c * Rational(k));
    }
    return r;
}

Rational BoxPolynomial::evaluate_exact(const std::array<Rational, 3>& x) const {
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int d = 0; d < 3; ++d) term = term * x[static_cast<std::size_t>(d)].pow(e[static_cast<std::size_t>(d)]);
        sum = sum + term;
    }
    return sum;
}

double BoxPolynomial::evaluate(const std::array<double, 3>& x) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.to_double();
        for (int d = 0; d < 3; ++d)
            for (int i = 0; i < e[static_cast<std::size_t>(d)]; ++i) term *= x[static_cast<std::size_t>(d)];
        sum += term;
    }
    return sum;
}

Interval BoxPolynomial::interval_evaluate(const Box& b) const {
    Interval sum{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
        // coefficient as an interval: num/den rounds once
        const double cd = c.to_double();
        Interval term = interval_point(cd);
        for (int d = 0; d < 3; ++d) {
            const int k = e[static_cast<std::size_t>(d)];
            if (k > 0) term = imul(term, ipow(b[static_cast<std::size_t>(d)], k));
        }
        sum = iadd(sum, term);
    }
    return sum;
}

BoxPolynomial BoxPolynomial::constant(int dims, const Rational& c) {
    BoxPolynomial r(dims);
    r.add_term({0, 0, 0}, c);
    return r;
}

BoxPolynomial BoxPolynomial::variable(int dims, int dim) {
    BoxPolynomial r(dims);
    std::array<int, 3> e{0, 0, 0};
    e[static_cast<std::size_t>(dim)] = 1;
    r.add_term(e, Rational(1));
    return r;
}

namespace {

// (1 - v^2) as a polynomial
BoxPolynomial one_minus_sq(int dims, int dim) {
    BoxPolynomial v = BoxPolynomial::variable(dims, dim);
    return BoxPolynomial::constant(dims, Rational(1)) - v * v;
}

BoxPolynomial gamma_factored(int i) {
    const int dims = 2;
    const BoxPolynomial x = BoxPolynomial::variable(dims, 0);
    const BoxPolynomial y = BoxPolynomial::variable(dims, 1);
    const BoxPolynomial one = BoxPolynomial::constant(dims, Rational(1));
    const BoxPolynomial mx = one_minus_sq(dims, 0); // 1 - x^2
    const BoxPolynomial my = one_minus_sq(dims, 1); // 1 - y^2
    const BoxPolynomial x2 = x * x;

    switch (i) {
        case 1: {
            BoxPolynomial g = x2 * x2 * x2;
            g = g + x2 * x2 * mx * y;
            g = g + x2 * mx * (BoxPolynomial::constant(dims, Rational(9)) - x2) * y * y;
            g = g + (mx * (x2 * x2 + x2.scaled(Rational(2)) + BoxPolynomial::constant(dims, Rational(3)))).scaled(Rational(3)) * y * y * y;
            g = g + (x2 * mx * mx).scaled(Rational(2)) * y * y * y * y;
            return g;
        }
        case 2: {
            BoxPolynomial inner = x2.scaled(Rational(2));
            inner = inner + (x2.scaled(Rational(3)) + BoxPolynomial::constant(dims, Rational(6))) * y;
            inner = inner + mx * y * y;
            return (x * mx * my).scaled(Rational(4)) * inner;
        }
        case 3: {
            BoxPolynomial inner = (x2 * y).scaled(Rational(9));
            inner = inner + mx * (y * y + BoxPolynomial::constant(dims, Rational(8)));
            return (mx * my).scaled(Rational(2)) * inner;
        }
        case 4: {
            const BoxPolynomial inner = x2 + mx * y;
            return (mx * my).scaled(Rational(18)) * inner;
        }
        default: throw std::invalid_argument("gamma index must be 1..4");
    }
}

// expanded coefficient tables for the two boundary-case sums
BoxPolynomial r_expanded() {
    BoxPolynomial r(2, "R");
    struct Row {
        int ydeg;
        int coeff[7]; // x^0..x^6
    };
    // R(x,y) = sum_d y^d * (c0 + c1 x + ... + c6 x^6)
    static constexpr Row rows[] = {
        {0, {16, 0, -32, 8, 16, -8, 1}},
        {1, {0, 24, 18, -12, -17, -12, -1}},
        {2, {-14, 4, 37, -16, -24, 12, 1}},
        {3, {9, -24, -21, 12, 15, 12, -3}},
        {4, {-2, -4, 6, 8, -6, -4, 2}},
    };
    for (const auto& row : rows)
        for (int k = 0; k <= 6; ++k) r.add_term({k, row.ydeg, 0}, Rational(row.coeff[k]));
    return r;
}

BoxPolynomial s_expanded() {
    BoxPolynomial s(2, "S");
    struct Row {
        int ydeg;
        int coeff[7];
    };
    static constexpr Row rows[] = {
        {0, {0, 0, 18, 8, -18, -8, 1}},
        {1, {18, 24, -36, -12, 19, -12, -1}},
        {2, {0, 4, -9, -16, 8, 12, 1}},
        {3, {-9, -24, 33, 12, -21, 12, -3}},
        {4, {0, -4, 2, 8, -4, -4, 2}},
    };
    for (const auto& row : rows)
        for (int k = 0; k <= 6; ++k) s.add_term({k, row.ydeg, 0}, Rational(row.coeff[k]));
    return s;
}

BoxPolynomial lift_to_3d(const BoxPolynomial& p2d, const std::string& name) {
    BoxPolynomial r(3, name);
    for (const auto& [e, c] : p2d.terms()) r.add_term(e, c);
    return r;
}

} // namespace

BoxPolynomial build_gamma_i(int i) {
    BoxPolynomial g = gamma_factored(i);
    return g; // already on [0,1]^2
}

BoxPolynomial build_gamma() {
    const BoxPolynomial g1 = lift_to_3d(build_gamma_i(1), "");
    const BoxPolynomial g2 = lift_to_3d(build_gamma_i(2), "");
    const BoxPolynomial g3 = lift_to_3d(build_gamma_i(3), "");
    const BoxPolynomial g4 = lift_to_3d(build_gamma_i(4), "");
    const BoxPolynomial u = BoxPolynomial::variable(3, 2);

    BoxPolynomial g = g1 + g4 + g2 * u + (g3 - g4) * u * u;
    BoxPolynomial named(3, "gamma");
    for (const auto& [e, c] : g.terms()) named.add_term(e, c);
    return named;
}

BoxPolynomial build_R() {
    const BoxPolynomial sum = build_gamma_i(1) + build_gamma_i(2) + build_gamma_i(3);
    BoxPolynomial r = r_expanded();
    if (!(sum == r))
        throw std::logic_error("R coefficient table != Gamma1+Gamma2+Gamma3");
    return r;
}

BoxPolynomial build_S() {
    const BoxPolynomial sum = build_gamma_i(1) + build_gamma_i(2) + build_gamma_i(4);
    BoxPolynomial s = s_expanded();
    if (!(sum == s))
        throw std::logic_error("S coefficient table != Gamma1+Gamma2+Gamma4");
    return s;
}

BoxPolynomial build_chain_h22() {
    BoxPolynomial p(1, "chain-h22"); // (3 - 2t^2)/12
    p.add_term({0, 0, 0}, Rational(1, 4));
    p.add_term({2, 0, 0}, Rational(-1, 6));
    return p;
}

BoxPolynomial build_chain_log() {
    BoxPolynomial p(1, "chain-log"); // (3 + t^2)(1 - t^2)/48 = (3 - 2t^2 - t^4)/48
    p.add_term({0, 0, 0}, Rational(1, 16));
    p.add_term({2, 0, 0}, Rational(-1, 24));
    p.add_term({4, 0, 0}, Rational(-1, 48));
    return p;
}

BoxPolynomial build_chain_inv() {
    BoxPolynomial p(1, "chain-inv"); // (3 + 4t^2 - 2t^4)/12
    p.add_term({0, 0, 0}, Rational(1, 4));
    p.add_term({2, 0, 0}, Rational(1, 3));
    p.add_term({4, 0, 0}, Rational(-1, 6));
    return p;
}

} // namespace sustar
