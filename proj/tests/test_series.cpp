#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sustar/rng.hpp"
#include "sustar/series.hpp"

using namespace sustar;

namespace {

double coeff_dev(const TruncatedSeries& a, const TruncatedSeries& b) {
    REQUIRE(a.order() == b.order());
    double dev = 0.0;
    for (int k = 0; k <= a.order(); ++k) dev = std::max(dev, std::abs(a[k] - b[k]));
    return dev;
}

// random class-member-like prefix: c1 = 1, |c_n| <= 1/(n-1)
NormalizedSeries random_member(Rng& rng, int order) {
    TruncatedSeries s(order);
    s[1] = 1.0;
    for (int k = 2; k <= order; ++k) s[k] = rng.unit_disk() / static_cast<double>(k - 1);
    return NormalizedSeries(std::move(s));
}

} // namespace

TEST_CASE("mul: identity, square, exp product") {
    const TruncatedSeries one = TruncatedSeries::constant(2, 1.0);
    TruncatedSeries onepz(2);
    onepz[0] = 1.0;
    onepz[1] = 1.0;
    CHECK(coeff_dev(mul(one, onepz), onepz) == 0.0);

    const TruncatedSeries sq = mul(onepz, onepz);
    CHECK(sq[0] == Complex{1.0, 0.0});
    CHECK(sq[1] == Complex{2.0, 0.0});
    CHECK(sq[2] == Complex{1.0, 0.0});

    // truncations of e^z and e^-z multiply to 1 through order 2
    TruncatedSeries ep(2), em(2);
    ep[0] = 1.0; ep[1] = 1.0; ep[2] = 0.5;
    em[0] = 1.0; em[1] = -1.0; em[2] = 0.5;
    const TruncatedSeries prod = mul(ep, em);
    CHECK(prod[0].real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(prod[1]) < 1e-15);
    CHECK(std::abs(prod[2]) < 1e-15);

    CHECK_THROWS_AS(mul(one, TruncatedSeries(3)), std::invalid_argument);
}

TEST_CASE("reciprocal: constants, geometric series, affine") {
    const TruncatedSeries one = TruncatedSeries::constant(4, 1.0);
    CHECK(coeff_dev(reciprocal(one), one) == 0.0);

    TruncatedSeries a(4);
    a[0] = 1.0;
    a[1] = -1.0;
    const TruncatedSeries geo = reciprocal(a);
    for (int k = 0; k <= 4; ++k) CHECK(geo[k] == Complex{1.0, 0.0});

    TruncatedSeries b(1);
    b[0] = 2.0;
    b[1] = 2.0;
    const TruncatedSeries r = reciprocal(b);
    CHECK(r[0] == Complex{0.5, 0.0});
    CHECK(r[1] == Complex{-0.5, 0.0});

    CHECK_THROWS_AS(reciprocal(TruncatedSeries(3)), std::domain_error);
}

TEST_CASE("exp_series: zero, e^z, e^{z^2/2}") {
    CHECK(exp_series(TruncatedSeries(3))[0] == Complex{1.0, 0.0});

    const TruncatedSeries ez = exp_series(TruncatedSeries::identity(4));
    CHECK(ez[0].real() == doctest::Approx(1.0));
    CHECK(ez[1].real() == doctest::Approx(1.0));
    CHECK(ez[2].real() == doctest::Approx(0.5));
    CHECK(ez[3].real() == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(ez[4].real() == doctest::Approx(1.0 / 24.0).epsilon(1e-15));

    const TruncatedSeries g = exp_series(TruncatedSeries::monomial(4, 2, 0.5));
    CHECK(g[0].real() == doctest::Approx(1.0));
    CHECK(std::abs(g[1]) == 0.0);
    CHECK(g[2].real() == doctest::Approx(0.5));
    CHECK(std::abs(g[3]) == 0.0);
    CHECK(g[4].real() == doctest::Approx(0.125));

    CHECK_THROWS_AS(exp_series(TruncatedSeries::constant(3, 1.0)), std::invalid_argument);
}

TEST_CASE("log_over_z: z, z e^z, z + z^2") {
    CHECK(coeff_dev(log_over_z(NormalizedSeries(TruncatedSeries::identity(4))),
                    TruncatedSeries(4)) == 0.0);

    // f = z e^z prefix -> log(f/z) = z, so gamma_1 = c_1/2 = 1/2
    TruncatedSeries f(5);
    f[1] = 1.0; f[2] = 1.0; f[3] = 0.5; f[4] = 1.0 / 6.0; f[5] = 1.0 / 24.0;
    const TruncatedSeries lf = log_over_z(NormalizedSeries(std::move(f)));
    CHECK(lf[1].real() == doctest::Approx(1.0).epsilon(1e-15));
    for (int k : {2, 3, 4}) CHECK(std::abs(lf[k]) < 1e-15);

    TruncatedSeries g(3);
    g[1] = 1.0; g[2] = 1.0;
    const TruncatedSeries lg = log_over_z(NormalizedSeries(std::move(g)));
    CHECK(lg[1].real() == doctest::Approx(1.0));
    CHECK(lg[2].real() == doctest::Approx(-0.5));
    CHECK(lg[3].real() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("integrate_over_z: monomials") {
    CHECK(coeff_dev(integrate_over_z(TruncatedSeries::identity(3)),
                    TruncatedSeries::identity(3)) == 0.0);
    const TruncatedSeries i2 = integrate_over_z(TruncatedSeries::monomial(4, 2, 1.0));
    CHECK(i2[2].real() == doctest::Approx(0.5));
    const TruncatedSeries i3 = integrate_over_z(TruncatedSeries::monomial(4, 3, 1.0));
    CHECK(i3[3].real() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(integrate_over_z(TruncatedSeries::constant(3, 1.0)), std::invalid_argument);
}

TEST_CASE("revert: identity, Moebius prefix, z e^z prefix") {
    const NormalizedSeries id(TruncatedSeries::identity(6));
    CHECK(coeff_dev(revert(id).series(), id.series()) == 0.0);

    // z/(1-z) prefix inverts to w/(1+w) prefix
    TruncatedSeries m(4);
    for (int k = 1; k <= 4; ++k) m[k] = 1.0;
    const NormalizedSeries minv = revert(NormalizedSeries(std::move(m)));
    for (int k = 1; k <= 4; ++k)
        CHECK(minv[k].real() == doctest::Approx(k % 2 == 1 ? 1.0 : -1.0).epsilon(1e-12));

    // z e^z prefix: A2 = -1, A3 = 3/2, A4 = -8/3
    TruncatedSeries f(4);
    f[1] = 1.0; f[2] = 1.0; f[3] = 0.5; f[4] = 1.0 / 6.0;
    const NormalizedSeries g = revert(NormalizedSeries(std::move(f)));
    CHECK(g[2].real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(g[3].real() == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(g[4].real() == doctest::Approx(-8.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("z_fprime_over_f: z, z e^z, z e^{z^2/2}") {
    const TruncatedSeries r1 = z_fprime_over_f(NormalizedSeries(TruncatedSeries::identity(6)));
    CHECK(r1[0] == Complex{1.0, 0.0});
    for (int k = 1; k <= r1.order(); ++k) CHECK(std::abs(r1[k]) == 0.0);

    TruncatedSeries f(6);
    f[1] = 1.0; f[2] = 1.0; f[3] = 0.5; f[4] = 1.0 / 6.0; f[5] = 1.0 / 24.0; f[6] = 1.0 / 120.0;
    const TruncatedSeries r2 = z_fprime_over_f(NormalizedSeries(std::move(f)));
    CHECK(r2[0].real() == doctest::Approx(1.0));
    CHECK(r2[1].real() == doctest::Approx(1.0).epsilon(1e-14));
    for (int k = 2; k <= r2.order(); ++k) CHECK(std::abs(r2[k]) < 1e-14);

    TruncatedSeries g(6);
    g[1] = 1.0; g[3] = 0.5; g[5] = 0.125;
    const TruncatedSeries r3 = z_fprime_over_f(NormalizedSeries(std::move(g)));
    CHECK(r3[0].real() == doctest::Approx(1.0));
    CHECK(std::abs(r3[1]) < 1e-14);
    CHECK(r3[2].real() == doctest::Approx(1.0).epsilon(1e-14));
    for (int k = 3; k <= r3.order(); ++k) CHECK(std::abs(r3[k]) < 1e-14);
}

TEST_CASE("property: exp(log) round trip on random members") {
    Rng rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        const NormalizedSeries f = random_member(rng, 12);
        const TruncatedSeries e = exp_series(log_over_z(f));
        // shift up by one: compare z * e with f
        double dev = 0.0;
        for (int k = 1; k <= 12; ++k) dev = std::max(dev, std::abs(e[k - 1] - f[k]));
        CHECK(dev <= 1e-12);
    }
}

TEST_CASE("property: reversion composition and closed-form coefficients") {
    Rng rng(918273);
    for (int trial = 0; trial < 200; ++trial) {
        const NormalizedSeries f = random_member(rng, 12);
        const NormalizedSeries g = revert(f);

        const TruncatedSeries round = compose(f.series(), g.series());
        double dev = 0.0;
        for (int k = 0; k <= 12; ++k) {
            const Complex expect = k == 1 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            dev = std::max(dev, std::abs(round[k] - expect));
        }
        CHECK(dev <= 1e-10);

        const Complex a2 = f[2], a3 = f[3], a4 = f[4];
        CHECK(std::abs(g[2] - (-a2)) <= 1e-12);
        CHECK(std::abs(g[3] - (2.0 * a2 * a2 - a3)) <= 1e-12);
        CHECK(std::abs(g[4] - (-a4 + 5.0 * a2 * a3 - 5.0 * a2 * a2 * a2)) <= 1e-12);
    }
}

TEST_CASE("property: reciprocal multiplies back to one") {
    Rng rng(24680);
    for (int trial = 0; trial < 200; ++trial) {
        TruncatedSeries a(10);
        a[0] = Complex{1.0, 0.0} + 0.5 * rng.unit_disk();
        for (int k = 1; k <= 10; ++k) a[k] = rng.unit_disk();
        const TruncatedSeries prod = mul(a, reciprocal(a));
        CHECK(std::abs(prod[0] - Complex{1.0, 0.0}) <= 1e-12);
        for (int k = 1; k <= 10; ++k) CHECK(std::abs(prod[k]) <= 1e-10);
    }
}

TEST_CASE("property: integrate then scale back is exact") {
    Rng rng(5551);
    for (int trial = 0; trial < 100; ++trial) {
        TruncatedSeries w(10);
        for (int k = 1; k <= 10; ++k) w[k] = rng.unit_disk();
        const TruncatedSeries integrated = integrate_over_z(w);
        for (int k = 1; k <= 10; ++k)
            CHECK(std::abs(integrated[k] * static_cast<double>(k) - w[k]) <= 1e-15);
    }
}

TEST_CASE("rotation: coefficient phases") {
    Rng rng(88);
    const NormalizedSeries f = random_member(rng, 8);
    const double theta = 0.7345;
    const NormalizedSeries fr = rotated(f, theta);
    for (int k = 2; k <= 8; ++k) {
        const Complex phase{std::cos((k - 1) * theta), std::sin((k - 1) * theta)};
        CHECK(std::abs(fr[k] - f[k] * phase) <= 1e-15);
    }
}
