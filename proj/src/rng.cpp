#include "rmi/rng.hpp"

#include "rmi/monomial.hpp"

namespace rmi {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
    splitmix64(s);
    splitmix64(s);
    return s;
}

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : s_) w = splitmix64(s);
}

static inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

std::uint64_t Xoshiro256StarStar::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

BernoulliSpec BernoulliSpec::from_rational(const mpq_class& p) {
    if (p < 0 || p > 1) throw usage_error("probability must be in [0,1]");
    BernoulliSpec b;
    if (p == 1) { b.always = true; return b; }
    // threshold = round(2^64 * num / den), exactly
    mpz_class scaled = p.get_num() << 65;  // 2 * 2^64 * num
    mpz_class q = (scaled / p.get_den() + 1) >> 1;  // round half up
    if (q >= (mpz_class(1) << 64)) { b.always = true; return b; }
    // assemble from 32-bit halves so the result is limb-size independent
    mpz_class lo = q & 0xFFFFFFFF;
    mpz_class hi = q >> 32;
    b.threshold = (static_cast<std::uint64_t>(hi.get_ui()) << 32) |
                  static_cast<std::uint64_t>(lo.get_ui());
    return b;
}

mpq_class BernoulliSpec::sampled_probability() const {
    if (always) return mpq_class(1);
    mpz_class t;
    mpz_import(t.get_mpz_t(), 1, 1, sizeof(threshold), 0, 0, &threshold);
    mpq_class q(t, mpz_class(1) << 64);
    q.canonicalize();
    return q;
}

}  // namespace rmi
