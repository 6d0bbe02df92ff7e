#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rmi/monomial.hpp"

namespace rmi {

/// Generators packed row-major into a flat uint16 array, rows padded with
/// zeros to a multiple of 16 lanes. Padding lanes are divisibility-neutral:
/// a zero exponent divides (and never strongly blocks) anything.
struct PackedExponents {
    int n = 0;
    std::size_t rows = 0;
    std::size_t stride = 0;
    std::vector<Exponent> data;

    static PackedExponents pack(int n, std::span<const Monomial> gens);
    const Exponent* row(std::size_t i) const { return data.data() + i * stride; }
};

/// Query vector padded to the same stride. Divisor queries pad with 0
/// (nothing constrains the padding), strong-divisor queries likewise.
struct PaddedQuery {
    std::size_t stride = 0;
    std::vector<Exponent> data;

    PaddedQuery() = default;
    PaddedQuery(const PackedExponents& pack) : stride(pack.stride), data(pack.stride, 0) {}
    void set(std::span<const Exponent> v) {
        for (std::size_t i = 0; i < v.size(); ++i) data[i] = v[i];
    }
};

/// The data-parallel inner loops: "does any packed row divide v" and "does
/// any packed row strongly divide v". Everything else in the library is
/// built on exact bignum arithmetic and stays scalar on purpose.
struct KernelSet {
    // returns index of first matching row, or -1
    long (*first_divisor)(const PackedExponents&, const Exponent* v);
    long (*first_strong_divisor)(const PackedExponents&, const Exponent* v);
    const char* name;
};

const KernelSet& scalar_kernels();
/// nullptr when this build or CPU lacks AVX2.
const KernelSet* avx2_kernels();

/// Runtime-selected implementation: AVX2 when the CPU supports it, scalar
/// otherwise. RMI_FORCE_SCALAR=1 in the environment pins the scalar path.
const KernelSet& active_kernels();

// convenience wrappers over active_kernels()
bool any_divides(const PackedExponents& pack, const PaddedQuery& q);
bool any_strongly_divides(const PackedExponents& pack, const PaddedQuery& q);

}  // namespace rmi
