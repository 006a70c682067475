#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace sustar {

// xoshiro256++ seeded through splitmix64. Used instead of <random> engines so
// that a given (seed, stream) pair produces the same doubles on every
// platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : state_) w = splitmix64(x);
    }

    // Independent stream for batch item `index`; scheduling-order independent.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t x = index + 0x9E3779B97F4A7C15ULL;
        return Rng(seed ^ splitmix64(x));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform in [0,1) with 53 random bits
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // uniform w.r.t. area on the closed unit disk (radius^2 law)
    std::complex<double> unit_disk() {
        const double r = std::sqrt(uniform01());
        const double t = uniform(0.0, 2.0 * pi());
        return {r * std::cos(t), r * std::sin(t)};
    }

    // flat Dirichlet weights (normalized exponentials)
    std::vector<double> dirichlet(int k) {
        std::vector<double> w(static_cast<std::size_t>(k));
        double sum = 0.0;
        for (auto& v : w) {
            v = -std::log(1.0 - uniform01());
            sum += v;
        }
        for (auto& v : w) v /= sum;
        return w;
    }

    static constexpr double pi() { return 3.14159265358979323846; }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::uint64_t state_[4];
};

} // namespace sustar
