#include "sustar/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace sustar {

std::string to_string(FunctionalId id) {
    switch (id) {
        case FunctionalId::H21: return "H21";
        case FunctionalId::H22: return "H22";
        case FunctionalId::H31: return "H31";
        case FunctionalId::LogH21: return "LOG_H21";
        case FunctionalId::InvH22: return "INV_H22";
        case FunctionalId::SuccDiff: return "SUCC_DIFF";
    }
    return "?";
}

FunctionalId functional_from_string(const std::string& name) {
    if (name == "H21") return FunctionalId::H21;
    if (name == "H22") return FunctionalId::H22;
    if (name == "H31") return FunctionalId::H31;
    if (name == "LOG_H21") return FunctionalId::LogH21;
    if (name == "INV_H22") return FunctionalId::InvH22;
    if (name == "SUCC_DIFF") return FunctionalId::SuccDiff;
    throw std::invalid_argument("unknown functional: " + name);
}

Complex hankel21(const CoeffPrefix& c) { return c.a3 - c.a2 * c.a2; }

Complex hankel22(const CoeffPrefix& c) { return c.a2 * c.a4 - c.a3 * c.a3; }

Complex hankel31(const CoeffPrefix& c) {
    const Complex a2 = c.a2, a3 = c.a3, a4 = c.a4, a5 = c.a5;
    return (a3 * a5 - a4 * a4) - a2 * (a2 * a5 - a3 * a4) + a3 * (a2 * a4 - a3 * a3);
}

Complex log_hankel21(const CoeffPrefix& c) {
    const Complex a2 = c.a2;
    return (c.a2 * c.a4 - c.a3 * c.a3 + a2 * a2 * a2 * a2 / 12.0) / 4.0;
}

Complex log_hankel21(const NormalizedSeries& f) {
    if (f.order() < 4) throw std::invalid_argument("log_hankel21 requires order >= 4");
    const TruncatedSeries big_f = log_over_z(f);
    const Complex g1 = big_f[1] / 2.0;
    const Complex g2 = big_f[2] / 2.0;
    const Complex g3 = big_f[3] / 2.0;
    return g1 * g3 - g2 * g2;
}

Complex inverse_hankel22(const CoeffPrefix& c) {
    const Complex a2 = c.a2, a3 = c.a3, a4 = c.a4;
    return a2 * a4 - a2 * a2 * a3 + a2 * a2 * a2 * a2 - a3 * a3;
}

Complex inverse_hankel22(const NormalizedSeries& f) {
    if (f.order() < 4) throw std::invalid_argument("inverse_hankel22 requires order >= 4");
    const NormalizedSeries inv = revert(f);
    const Complex value = inv[2] * inv[4] - inv[3] * inv[3];
    // The reversion route and the closed form are the same polynomial in the
    // a_n; disagreement means a reversion bug, not input noise.
    const Complex direct = inverse_hankel22(CoeffPrefix{f[2], f[3], f[4], Complex{0.0, 0.0}});
    if (std::abs(value - direct) > 1e-12 * std::max(1.0, std::abs(value)))
        throw std::logic_error("inverse_hankel22 routes disagree");
    return value;
}

double successive_diff(const NormalizedSeries& f, int n) {
    if (n < 2) throw std::invalid_argument("successive_diff requires n >= 2");
    if (f.order() < n + 1) throw std::invalid_argument("successive_diff requires order >= n+1");
    return std::abs(f[n + 1]) - std::abs(f[n]);
}

Complex assemble_h31_from_p(const CaratheodoryPrefix& p) {
    // the p2 term is cubic; the dual-route test against hankel31 pins it
    const Complex p1 = p.p1, p2 = p.p2, p3 = p.p3, p4 = p.p4;
    return p4 / 32.0 * (p2 - p1 * p1) - 3.0 * p2 * p2 * p2 / 128.0 +
           13.0 * p1 * p2 * p3 / 288.0 - p1 * p1 * p2 * p2 / 576.0 - p3 * p3 / 36.0 +
           p1 * p1 * p1 * p3 / 96.0 - p1 * p1 * p1 * p1 * p2 / 384.0;
}

HParts h_decomposition(Complex z1, Complex z2) {
    if (std::abs(z1) > 1.0 + 1e-12 || std::abs(z2) > 1.0 + 1e-12)
        throw std::invalid_argument("h_decomposition arguments must lie in the closed disk");
    const Complex w1 = 1.0 - z1 * z1;
    const double m2 = 1.0 - std::norm(z2);
    const Complex z1sq = z1 * z1;
    const Complex z1q = z1sq * z1sq;

    HParts h;
    h.h1 = -z1q * z1sq + 3.0 * z1q * z2 * w1 - z1sq * z2 * z2 * w1 * (9.0 - z1sq) -
           3.0 * z2 * z2 * z2 * w1 * (z1q + 2.0 * z1sq + 3.0) +
           2.0 * z1sq * z2 * z2 * z2 * z2 * w1 * w1;
    h.h2 = 4.0 * z1 * w1 * m2 * (2.0 * z1sq + (6.0 + 3.0 * z1sq) * z2 - w1 * z2 * z2);
    h.h3 = 2.0 * w1 * m2 * (9.0 * z1sq * std::conj(z2) - w1 * (8.0 + std::norm(z2)));
    h.h4 = 18.0 * w1 * m2 * (-z1sq + z2 * w1);
    return h;
}

Complex h31_assembled(const HParts& h, Complex z3, Complex z4) {
    const double m3 = 1.0 - std::norm(z3);
    return (h.h1 + h.h2 * z3 + h.h3 * z3 * z3 + m3 * h.h4 * z4) / 144.0;
}

double functional_modulus(FunctionalId id, const CoeffPrefix& c) {
    switch (id) {
        case FunctionalId::H21: return std::abs(hankel21(c));
        case FunctionalId::H22: return std::abs(hankel22(c));
        case FunctionalId::H31: return std::abs(hankel31(c));
        case FunctionalId::LogH21: return std::abs(log_hankel21(c));
        case FunctionalId::InvH22: return std::abs(inverse_hankel22(c));
        case FunctionalId::SuccDiff: break;
    }
    throw std::invalid_argument("functional_modulus: SUCC_DIFF needs a series, not a prefix");
}

FunctionalValue make_functional_value(FunctionalId id, Complex value, std::string source,
                                      int diff_index) {
    FunctionalValue v;
    v.id = id;
    v.diff_index = diff_index;
    v.value = value;
    v.modulus = std::abs(value);
    v.source = std::move(source);
    return v;
}

} // namespace sustar
