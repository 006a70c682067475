#include "sustar/kernels.hpp"

#include "sustar/rng.hpp"

namespace sustar::kernels {

namespace {
std::optional<Isa> g_forced;
} // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa active_isa() {
    if (g_forced) return *g_forced == Isa::Avx2 && !avx2_available() ? Isa::Scalar : *g_forced;
    return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

void force_isa(std::optional<Isa> isa) { g_forced = isa; }

void eval_bounds(const SchurBatch& in, BoundsBatch& out) {
    switch (active_isa()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::Avx2: eval_bounds_avx2(in, out); return;
#endif
        default: eval_bounds_scalar(in, out); return;
    }
}

void fill_random(SchurBatch& batch, std::size_t n, std::uint64_t seed) {
    batch.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng = Rng::stream(seed, i);
        const auto z1 = rng.unit_disk();
        const auto z2 = rng.unit_disk();
        const auto z3 = rng.unit_disk();
        const auto z4 = rng.unit_disk();
        batch.set(i, z1.real(), z1.imag(), z2.real(), z2.imag(), z3.real(), z3.imag(), z4.real(),
                  z4.imag());
    }
}

} // namespace sustar::kernels
