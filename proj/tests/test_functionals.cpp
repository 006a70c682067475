#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sustar/functionals.hpp"
#include "sustar/genclass.hpp"

using namespace sustar;

namespace {
double cdev(Complex a, Complex b) { return std::abs(a - b); }

CoeffPrefix prefix_of(const NormalizedSeries& f) { return coeff_prefix(f); }
} // namespace

TEST_CASE("hankel21: sharp value on z e^z") {
    CHECK(cdev(hankel21(prefix_of(NormalizedSeries(TruncatedSeries::identity(6)))), 0.0) == 0.0);
    const Complex v2 = hankel21(prefix_of(extremal(2, 6)));
    CHECK(cdev(v2, -0.5) <= 1e-15);
    CHECK(std::abs(v2) == doctest::Approx(0.5));
    CHECK(cdev(hankel21(prefix_of(extremal(3, 6))), 0.5) <= 1e-15);
}

TEST_CASE("hankel22: f3 sharp, f2 value -1/12") {
    CHECK(cdev(hankel22(prefix_of(extremal(3, 6))), -0.25) <= 1e-15);
    CHECK(cdev(hankel22(prefix_of(extremal(2, 6))), -1.0 / 12.0) <= 1e-15);
}

TEST_CASE("hankel31: f4 sharp, f2 value -1/144") {
    CHECK(cdev(hankel31(prefix_of(extremal(4, 6))), -1.0 / 9.0) <= 1e-15);
    CHECK(cdev(hankel31(prefix_of(extremal(2, 6))), -1.0 / 144.0) <= 1e-15);
}

TEST_CASE("log_hankel21: f3 sharp, f2 zero, routes agree") {
    CHECK(cdev(log_hankel21(extremal(3, 8)), -1.0 / 16.0) <= 1e-15);
    CHECK(cdev(log_hankel21(extremal(2, 8)), 0.0) <= 1e-15);
    for (long i = 0; i < 500; ++i) {
        Rng rng = Rng::stream(31337, static_cast<std::uint64_t>(i));
        const NormalizedSeries f = function_from_p(herglotz_series(sample_herglotz(rng), 8));
        CHECK(cdev(log_hankel21(f), log_hankel21(prefix_of(f))) <= 1e-13);
    }
}

TEST_CASE("inverse_hankel22: f2 sharp, f3 value -1/4, routes agree") {
    CHECK(cdev(inverse_hankel22(extremal(2, 8)), 5.0 / 12.0) <= 1e-14);
    CHECK(cdev(inverse_hankel22(extremal(3, 8)), -0.25) <= 1e-14);
    for (long i = 0; i < 500; ++i) {
        Rng rng = Rng::stream(4242, static_cast<std::uint64_t>(i));
        const NormalizedSeries f = function_from_p(herglotz_series(sample_herglotz(rng), 8));
        CHECK(cdev(inverse_hankel22(f), inverse_hankel22(prefix_of(f))) <= 1e-13);
    }
}

TEST_CASE("successive_diff: extremal equalities") {
    // f_n has a_{n+1} = 0 only for n >= 3 ((n-1) divides n only at n = 2),
    // so the lower bound -1/(n-1) is attained by f_n exactly for n >= 3.
    for (int n = 3; n <= 8; ++n)
        CHECK(successive_diff(extremal(n, n + 2), n) ==
              doctest::Approx(-1.0 / (n - 1)).epsilon(1e-14));
    // at n = 2 the same function gives |a3| - |a2| = 1/2 - 1
    CHECK(successive_diff(extremal(2, 4), 2) == doctest::Approx(-0.5).epsilon(1e-14));

    // f_{n+1} has a_n = 0 for every n >= 2: upper equality holds throughout
    for (int n = 2; n <= 8; ++n)
        CHECK(successive_diff(extremal(n + 1, n + 2), n) ==
              doctest::Approx(1.0 / n).epsilon(1e-14));

    CHECK(successive_diff(NormalizedSeries(TruncatedSeries::identity(8)), 3) == 0.0);
    CHECK_THROWS_AS(successive_diff(extremal(2, 6), 6), std::invalid_argument);
}

TEST_CASE("assemble_h31_from_p: examples and route equivalence") {
    CHECK(cdev(assemble_h31_from_p(CaratheodoryPrefix(0, 0, 0, 0)), 0.0) == 0.0);
    // the f4 data: only the -p3^2/36 term survives
    CHECK(cdev(assemble_h31_from_p(CaratheodoryPrefix(0, 0, 2, 0)), -1.0 / 9.0) <= 1e-15);
    // the f2 data: all seven terms cancel to -1/144
    CHECK(cdev(assemble_h31_from_p(CaratheodoryPrefix(2, 2, 2, 2)), -1.0 / 144.0) <= 1e-15);

    for (long i = 0; i < 2000; ++i) {
        Rng rng = Rng::stream(99, static_cast<std::uint64_t>(i));
        const CaratheodoryPrefix p = caratheodory_from_schur(sample_schur(rng));
        CHECK(cdev(assemble_h31_from_p(p), hankel31(coeffs_from_caratheodory(p))) <= 1e-12);
    }
}

TEST_CASE("h_decomposition: corner values and exact split") {
    const HParts origin = h_decomposition(0.0, 0.0);
    CHECK(cdev(origin.h1, 0.0) == 0.0);
    CHECK(cdev(origin.h2, 0.0) == 0.0);
    CHECK(cdev(origin.h3, -16.0) <= 1e-15);
    CHECK(cdev(origin.h4, 0.0) == 0.0);
    // |H31| = 16/144 = 1/9 at |z3| = 1, the extremal configuration
    CHECK(std::abs(h31_assembled(origin, 1.0, 0.0)) == doctest::Approx(1.0 / 9.0));

    const HParts edge = h_decomposition(1.0, Complex{0.3, 0.4});
    CHECK(cdev(edge.h1, -1.0) <= 1e-15);
    CHECK(cdev(edge.h2, 0.0) <= 1e-15);
    CHECK(cdev(edge.h3, 0.0) <= 1e-15);
    CHECK(cdev(edge.h4, 0.0) <= 1e-15);

    for (long i = 0; i < 4000; ++i) {
        Rng rng = Rng::stream(2024, static_cast<std::uint64_t>(i));
        const double x = rng.uniform01();
        const Complex z2 = rng.unit_disk(), z3 = rng.unit_disk(), z4 = rng.unit_disk();
        const SchurPoint sp(Complex{x, 0.0}, z2, z3, z4);
        const Complex direct = assemble_h31_from_p(caratheodory_from_schur(sp));
        const Complex split = h31_assembled(h_decomposition(sp.z1, z2), z3, z4);
        CHECK(cdev(direct, split) <= 1e-10);
    }
}

TEST_CASE("property: bridge identities on random members") {
    for (long i = 0; i < 1000; ++i) {
        Rng rng = Rng::stream(5150, static_cast<std::uint64_t>(i));
        const NormalizedSeries f = function_from_p(herglotz_series(sample_herglotz(rng), 10));
        const CoeffPrefix c = prefix_of(f);
        const Complex a2p4 = c.a2 * c.a2 * c.a2 * c.a2;
        CHECK(cdev(4.0 * log_hankel21(f) - hankel22(c), a2p4 / 12.0) <= 1e-12);
        CHECK(cdev(inverse_hankel22(f) - hankel22(c), -c.a2 * c.a2 * c.a3 + a2p4) <= 1e-12);
    }
}

TEST_CASE("property: rotation invariance of the four moduli") {
    for (long i = 0; i < 1000; ++i) {
        Rng rng = Rng::stream(606, static_cast<std::uint64_t>(i));
        const NormalizedSeries f = function_from_p(herglotz_series(sample_herglotz(rng), 10));
        const CoeffPrefix c = prefix_of(f);
        const CoeffPrefix cr = prefix_of(rotated(f, rng.uniform(0.0, 2.0 * Rng::pi())));
        CHECK(std::abs(std::abs(hankel22(cr)) - std::abs(hankel22(c))) <= 1e-12);
        CHECK(std::abs(std::abs(hankel31(cr)) - std::abs(hankel31(c))) <= 1e-12);
        CHECK(std::abs(std::abs(log_hankel21(cr)) - std::abs(log_hankel21(c))) <= 1e-12);
        CHECK(std::abs(std::abs(inverse_hankel22(cr)) - std::abs(inverse_hankel22(c))) <= 1e-12);
    }
}

TEST_CASE("property: sampled bound membership and bridge differences") {
    double worst_h21 = 0, worst_h22 = 0, worst_h31 = 0, worst_log = 0, worst_inv = 0;
    double worst_bridge_log = 0, worst_bridge_inv = 0;
    for (long i = 0; i < 20000; ++i) {
        Rng rng = Rng::stream(112233, static_cast<std::uint64_t>(i));
        const CoeffPrefix c = coeffs_from_caratheodory(caratheodory_from_schur(sample_schur(rng)));
        worst_h21 = std::max(worst_h21, std::abs(hankel21(c)));
        worst_h22 = std::max(worst_h22, std::abs(hankel22(c)));
        worst_h31 = std::max(worst_h31, std::abs(hankel31(c)));
        worst_log = std::max(worst_log, std::abs(log_hankel21(c)));
        worst_inv = std::max(worst_inv, std::abs(inverse_hankel22(c)));
        worst_bridge_log =
            std::max(worst_bridge_log, std::abs(4.0 * log_hankel21(c) - hankel22(c)));
        worst_bridge_inv =
            std::max(worst_bridge_inv, std::abs(inverse_hankel22(c) - hankel22(c)));
    }
    CHECK(worst_h21 <= 0.5 + 1e-9);
    CHECK(worst_h22 <= 0.25 + 1e-9);
    CHECK(worst_h31 <= 1.0 / 9.0 + 1e-9);
    CHECK(worst_log <= 1.0 / 16.0 + 1e-9);
    CHECK(worst_inv <= 5.0 / 12.0 + 1e-9);
    CHECK(worst_bridge_log <= 1.0 / 12.0 + 1e-9);
    CHECK(worst_bridge_inv <= 0.5 + 1e-9);
}

TEST_CASE("functional id round trip") {
    for (const char* name : {"H21", "H22", "H31", "LOG_H21", "INV_H22", "SUCC_DIFF"})
        CHECK(to_string(functional_from_string(name)) == name);
    CHECK_THROWS_AS(functional_from_string("H99"), std::invalid_argument);
    const FunctionalValue v = make_functional_value(FunctionalId::H22, Complex{0.3, -0.4}, "test");
    CHECK(v.modulus == doctest::Approx(0.5).epsilon(1e-15));
}
