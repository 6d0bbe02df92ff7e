#include "rmi/kernels.hpp"

#include <cstdlib>

#if defined(__x86_64__) || defined(_M_X64)
#include <cpuid.h>
#define RMI_X86 1
#endif

namespace rmi {

PackedExponents PackedExponents::pack(int n, std::span<const Monomial> gens) {
    PackedExponents p;
    p.n = n;
    p.rows = gens.size();
    p.stride = (static_cast<std::size_t>(n) + 15) / 16 * 16;
    p.data.assign(p.rows * p.stride, 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& e = gens[i].exponents();
        for (std::size_t j = 0; j < e.size(); ++j) p.data[i * p.stride + j] = e[j];
    }
    return p;
}

namespace {

long scalar_first_divisor(const PackedExponents& pack, const Exponent* v) {
    for (std::size_t r = 0; r < pack.rows; ++r) {
        const Exponent* g = pack.row(r);
        bool ok = true;
        for (std::size_t j = 0; j < pack.stride; ++j)
            if (g[j] > v[j]) { ok = false; break; }
        if (ok) return static_cast<long>(r);
    }
    return -1;
}

long scalar_first_strong_divisor(const PackedExponents& pack, const Exponent* v) {
    for (std::size_t r = 0; r < pack.rows; ++r) {
        const Exponent* g = pack.row(r);
        bool ok = true;
        for (std::size_t j = 0; j < pack.stride; ++j)
            if (g[j] != 0 && g[j] >= v[j]) { ok = false; break; }
        if (ok) return static_cast<long>(r);
    }
    return -1;
}

constexpr KernelSet kScalar{scalar_first_divisor, scalar_first_strong_divisor, "scalar"};

#ifdef RMI_X86
bool cpu_has_avx2() {
    unsigned eax, ebx, ecx, edx;
    if (!__get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx)) return false;
    return (ebx & (1u << 5)) != 0;  // AVX2 bit
}
#endif

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

#ifndef RMI_HAVE_AVX2_TU
const KernelSet* avx2_kernels() { return nullptr; }
#else
// defined in kernels_avx2.cpp
#endif

const KernelSet& active_kernels() {
    static const KernelSet* chosen = [] {
        const char* force = std::getenv("RMI_FORCE_SCALAR");
        if (force && force[0] == '1') return &kScalar;
#ifdef RMI_X86
        if (const KernelSet* k = avx2_kernels(); k && cpu_has_avx2()) return k;
#endif
        return &kScalar;
    }();
    return *chosen;
}

bool any_divides(const PackedExponents& pack, const PaddedQuery& q) {
    return active_kernels().first_divisor(pack, q.data.data()) >= 0;
}

bool any_strongly_divides(const PackedExponents& pack, const PaddedQuery& q) {
    return active_kernels().first_strong_divisor(pack, q.data.data()) >= 0;
}

}  // namespace rmi
