#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace rmi {

/// splitmix64 step (Steele/Lea/Flood mixing constants). Used both as the
/// seed-derivation hash and to expand one 64-bit seed into generator state.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic per-stream seed: two splitmix64 rounds over
/// master ^ 0x9E3779B97F4A7C15 * (stream + 1). Distinct streams give
/// distinct, decorrelated seeds; identical inputs give identical seeds on
/// every platform.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Trial stream id used by the experiment harness: cell_index * 2^32 + trial.
inline std::uint64_t trial_stream(std::uint64_t cell_index, std::uint64_t trial_index) {
    return (cell_index << 32) | (trial_index & 0xFFFFFFFFULL);
}

/// xoshiro256** 1.0 (Blackman/Vigna), seeded via splitmix64 expansion.
class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed);
    std::uint64_t next();

private:
    std::uint64_t s_[4];
};

/// Bernoulli(p) realized as a 64-bit threshold test: draw u, accept iff
/// u < threshold, where threshold = round(2^64 * p) computed exactly from the
/// rational p. p >= 1 always accepts; the quantization error is <= 2^-65.
struct BernoulliSpec {
    std::uint64_t threshold = 0;
    bool always = false;

    static BernoulliSpec from_rational(const mpq_class& p);
    bool draw(Xoshiro256StarStar& rng) const {
        if (always) return true;
        return rng.next() < threshold;
    }
    /// The rational actually sampled (threshold / 2^64, or 1).
    mpq_class sampled_probability() const;
};

}  // namespace rmi
