// AVX2 variants of the exponent-vector kernels. This TU is the only one built
// with -mavx2; callers reach it through active_kernels() after a cpuid check.
#include <immintrin.h>

#include "rmi/kernels.hpp"

namespace rmi {
namespace {

// row divides v  <=>  every lane g[j] <= v[j]
long avx2_first_divisor(const PackedExponents& pack, const Exponent* v) {
    const std::size_t chunks = pack.stride / 16;
    for (std::size_t r = 0; r < pack.rows; ++r) {
        const Exponent* g = pack.row(r);
        bool ok = true;
        for (std::size_t c = 0; c < chunks; ++c) {
            __m256i gv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(g + 16 * c));
            __m256i vv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + 16 * c));
            // g <= v per uint16 lane: min(g, v) == g
            __m256i le = _mm256_cmpeq_epi16(_mm256_min_epu16(gv, vv), gv);
            if (_mm256_movemask_epi8(le) != -1) { ok = false; break; }
        }
        if (ok) return static_cast<long>(r);
    }
    return -1;
}

// row strongly divides v  <=>  per lane: g == 0  or  g < v
long avx2_first_strong_divisor(const PackedExponents& pack, const Exponent* v) {
    const std::size_t chunks = pack.stride / 16;
    const __m256i zero = _mm256_setzero_si256();
    const __m256i one = _mm256_set1_epi16(1);
    for (std::size_t r = 0; r < pack.rows; ++r) {
        const Exponent* g = pack.row(r);
        bool ok = true;
        for (std::size_t c = 0; c < chunks; ++c) {
            __m256i gv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(g + 16 * c));
            __m256i vv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + 16 * c));
            __m256i isz = _mm256_cmpeq_epi16(gv, zero);
            // g < v (unsigned)  <=>  g <= v-1 with saturating v-1 (v==0 -> no g qualifies)
            __m256i vm1 = _mm256_subs_epu16(vv, one);
            __m256i lt = _mm256_cmpeq_epi16(_mm256_min_epu16(gv, vm1), gv);
            // v == 0 lanes must not pass the "lt" test unless g == 0 (then isz covers them);
            // with v == 0, vm1 == 0 and lt fires only for g == 0, so the union is exact.
            __m256i okv = _mm256_or_si256(isz, lt);
            if (_mm256_movemask_epi8(okv) != -1) { ok = false; break; }
        }
        if (ok) return static_cast<long>(r);
    }
    return -1;
}

constexpr KernelSet kAvx2{avx2_first_divisor, avx2_first_strong_divisor, "avx2"};

}  // namespace

const KernelSet* avx2_kernels() { return &kAvx2; }

}  // namespace rmi
