#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sustar::kernels {

// Structure-of-arrays batch of Schur points; the layout the SIMD lanes read.
struct SchurBatch {
    std::vector<double> z1re, z1im, z2re, z2im, z3re, z3im, z4re, z4im;

    std::size_t size() const { return z1re.size(); }
    void resize(std::size_t n);
    void set(std::size_t i, double x1re, double x1im, double x2re, double x2im, double x3re,
             double x3im, double x4re, double x4im);
};

// Per-sample moduli of the five closed-form functionals.
struct BoundsBatch {
    std::vector<double> h21, h22, h31, log_h21, inv_h22;
    void resize(std::size_t n);
    std::size_t size() const { return h21.size(); }
};

enum class Isa { Scalar, Avx2 };

// Variant picked at startup from cpuid; override for equivalence tests.
Isa active_isa();
void force_isa(std::optional<Isa> isa);
bool avx2_available();

// Schur -> p -> (a2..a5) -> five moduli, whole batch.
void eval_bounds(const SchurBatch& in, BoundsBatch& out);

// direct entry points for the equivalence tests
void eval_bounds_scalar(const SchurBatch& in, BoundsBatch& out);
#if defined(__x86_64__) || defined(_M_X64)
void eval_bounds_avx2(const SchurBatch& in, BoundsBatch& out);
#endif

// Deterministic batch fill from (seed, index) streams; scheduling-independent.
void fill_random(SchurBatch& batch, std::size_t n, std::uint64_t seed);

} // namespace sustar::kernels
