#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "rmi/monomial.hpp"
#include "rmi/rng.hpp"

namespace rmi {

/// Parse an exact decimal or fraction string ("0.05", ".5", "1/20", "1e-3")
/// into a canonical rational. No binary floating point is involved.
mpq_class parse_exact_probability(const std::string& text);

/// The graded model: every monomial of total degree D in n variables is a
/// minimal generator independently with probability p.
struct ModelParams {
    int n = 1;
    long D = 1;
    mpq_class p = 0;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SamplerGuards {
    unsigned long long max_enumeration = kDefaultEnumerationGuard;
};

/// One draw from the model. Bernoulli decisions are consumed in the canonical
/// lex-descending monomial order, so a fixed (n, D, p, seed) yields the same
/// ideal on every platform. The result is automatically minimal
/// (equigenerated sets have no internal divisibilities).
MonomialIdeal sample_ideal(const ModelParams& params, const SamplerGuards& guards = {});

/// Same, with a prebuilt Bernoulli threshold (the experiment harness derives
/// one per cell and reuses it across trials).
MonomialIdeal sample_ideal(int n, long D, const BernoulliSpec& p, std::uint64_t seed,
                           const SamplerGuards& guards = {});

}  // namespace rmi
