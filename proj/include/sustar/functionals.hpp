#pragma once

#include <string>

#include "sustar/genclass.hpp"
#include "sustar/series.hpp"

namespace sustar {

enum class FunctionalId { H21, H22, H31, LogH21, InvH22, SuccDiff };

std::string to_string(FunctionalId id);
FunctionalId functional_from_string(const std::string& name);

// a3 - a2^2
Complex hankel21(const CoeffPrefix& c);
// a2 a4 - a3^2
Complex hankel22(const CoeffPrefix& c);
// (a3 a5 - a4^2) - a2 (a2 a5 - a3 a4) + a3 (a2 a4 - a3^2)
Complex hankel31(const CoeffPrefix& c);

// gamma1 gamma3 - gamma2^2, closed form (a2 a4 - a3^2 + a2^4/12)/4
Complex log_hankel21(const CoeffPrefix& c);
// series route through log_over_z; agrees with the closed form to rounding
Complex log_hankel21(const NormalizedSeries& f);

// A2 A4 - A3^2, closed form a2 a4 - a2^2 a3 + a2^4 - a3^2
Complex inverse_hankel22(const CoeffPrefix& c);
// series route through revert; cross-checked against the closed form
Complex inverse_hankel22(const NormalizedSeries& f);

// |a_{n+1}| - |a_n|, n >= 2; requires order >= n+1
double successive_diff(const NormalizedSeries& f, int n);

// H31 evaluated directly from (p1..p4); equals hankel31 through the
// coefficient route.
Complex assemble_h31_from_p(const CaratheodoryPrefix& p);

// The four weight functions of the z3/z4 split of 144*H31 at z1 = x real.
struct HParts {
    Complex h1, h2, h3, h4;
};
HParts h_decomposition(Complex z1, Complex z2);

// (1/144)(h1 + h2 z3 + h3 z3^2 + (1-|z3|^2) h4 z4)
Complex h31_assembled(const HParts& h, Complex z3, Complex z4);

// Evaluates the functional's modulus for a prefix (SuccDiff not applicable).
double functional_modulus(FunctionalId id, const CoeffPrefix& c);

struct FunctionalValue {
    FunctionalId id;
    int diff_index = 0; // n for SuccDiff, else 0
    Complex value;
    double modulus = 0.0;
    std::string source;
};

FunctionalValue make_functional_value(FunctionalId id, Complex value, std::string source,
                                      int diff_index = 0);

} // namespace sustar
