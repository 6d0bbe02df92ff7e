#include <doctest.h>

#include "rmi/kernels.hpp"
#include "rmi/monomial.hpp"
#include "rmi/rng.hpp"

using namespace rmi;

namespace {

std::vector<Monomial> random_pack(Xoshiro256StarStar& rng, int n, int rows, Exponent cap) {
    std::vector<Monomial> out;
    for (int r = 0; r < rows; ++r) {
        std::vector<Exponent> e(static_cast<std::size_t>(n));
        for (auto& x : e) x = static_cast<Exponent>(rng.next() % (cap + 1));
        out.emplace_back(std::move(e));
    }
    return out;
}

}  // namespace

TEST_CASE("scalar kernels match the definitional predicates") {
    Xoshiro256StarStar rng(21);
    const KernelSet& k = scalar_kernels();
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng.next() % 40);  // crosses the 16/32 lane boundaries
        auto gens = random_pack(rng, n, 1 + static_cast<int>(rng.next() % 8), 4);
        PackedExponents pack = PackedExponents::pack(n, gens);
        PaddedQuery q(pack);
        std::vector<Exponent> v(static_cast<std::size_t>(n));
        for (auto& x : v) x = static_cast<Exponent>(rng.next() % 5);
        q.set(v);
        Monomial vm{std::vector<Exponent>(v)};

        long expect_div = -1, expect_strong = -1;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (expect_div < 0 && divides(gens[i], vm)) expect_div = static_cast<long>(i);
            if (expect_strong < 0 && strongly_divides(gens[i], vm))
                expect_strong = static_cast<long>(i);
        }
        CHECK(k.first_divisor(pack, q.data.data()) == expect_div);
        CHECK(k.first_strong_divisor(pack, q.data.data()) == expect_strong);
    }
}

TEST_CASE("simd variant agrees with scalar reference") {
    const KernelSet* simd = avx2_kernels();
    if (simd == nullptr) return;  // build or CPU without AVX2: scalar-only is fine
    const KernelSet& ref = scalar_kernels();
    Xoshiro256StarStar rng(22);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 1 + static_cast<int>(rng.next() % 48);
        auto gens = random_pack(rng, n, 1 + static_cast<int>(rng.next() % 12), 3);
        PackedExponents pack = PackedExponents::pack(n, gens);
        PaddedQuery q(pack);
        std::vector<Exponent> v(static_cast<std::size_t>(n));
        for (auto& x : v) x = static_cast<Exponent>(rng.next() % 4);
        q.set(v);
        CHECK(simd->first_divisor(pack, q.data.data()) == ref.first_divisor(pack, q.data.data()));
        CHECK(simd->first_strong_divisor(pack, q.data.data()) ==
              ref.first_strong_divisor(pack, q.data.data()));
    }
}

TEST_CASE("simd strong-divisor edge lanes: zeros in query and rows") {
    const KernelSet* simd = avx2_kernels();
    if (simd == nullptr) return;
    const KernelSet& ref = scalar_kernels();
    // v with zero coordinates: rows nonzero there must be rejected
    std::vector<Monomial> gens = {Monomial{{1, 0, 0}}, Monomial{{0, 2, 0}}, Monomial{{0, 0, 0}}};
    PackedExponents pack = PackedExponents::pack(3, gens);
    PaddedQuery q(pack);
    for (std::vector<Exponent> v : {std::vector<Exponent>{0, 3, 1}, {2, 0, 0}, {0, 0, 0}, {2, 3, 1}}) {
        q.set(v);
        CHECK(simd->first_strong_divisor(pack, q.data.data()) ==
              ref.first_strong_divisor(pack, q.data.data()));
        CHECK(simd->first_divisor(pack, q.data.data()) == ref.first_divisor(pack, q.data.data()));
    }
}

TEST_CASE("active kernel set resolves") {
    const KernelSet& k = active_kernels();
    CHECK((std::string(k.name) == "scalar" || std::string(k.name) == "avx2"));
}
