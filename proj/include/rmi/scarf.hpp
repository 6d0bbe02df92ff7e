#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rmi/betti.hpp"
#include "rmi/monomial.hpp"

namespace rmi {

/// Faces are generator-index subsets whose subset lcm is unshared among all
/// 2^r subset lcms. Stored sorted by (size, lexicographic index order).
struct ScarfComplex {
    int r = 0;
    std::vector<std::vector<int>> faces;
    std::map<std::vector<int>, std::vector<Exponent>> face_multidegrees;
    /// f_vector[s] = number of faces of cardinality s (f_{s-1} in dimension
    /// terms), s = 0..r; f_vector[0] == 1 is the empty face.
    std::vector<long long> f_vector;

    long long faces_of_size(int s) const {
        return s >= 0 && s < static_cast<int>(f_vector.size()) ? f_vector[static_cast<std::size_t>(s)] : 0;
    }
};

struct ScarfGuards {
    /// witness scan enumerates binomial(r, n) subsets
    unsigned long long witness_subset_budget = 20'000'000ULL;
};

/// Built by the local criterion: I is a face iff no single-element insertion
/// or deletion preserves its lcm (equivalent to global lcm uniqueness), grown
/// upward level by level. Face size never exceeds n.
ScarfComplex scarf_complex(const MonomialIdeal& M);

/// Reference implementation comparing each subset lcm against all 2^r others;
/// exponential, for tests and small r only.
ScarfComplex scarf_complex_bruteforce(const MonomialIdeal& M, int max_generators = 16);

/// The Scarf complex supports a subcomplex of every minimal free resolution,
/// so M is Scarf exactly when beta_i == f_{i-1} for all i.
bool is_scarf(const MonomialIdeal& M, const CoefficientField& field = {},
              BettiEngine engine = BettiEngine::Auto, const BettiGuards& guards = {});

/// No variable occurs with the same nonzero exponent in two generators.
bool is_strongly_generic(const MonomialIdeal& M);

/// Shared positive exponents are excused by a third generator strongly
/// dividing the pair lcm.
bool is_generic(const MonomialIdeal& M);

struct WitnessReport {
    /// dominant n-subsets of generators whose lcm has no strong divisor in G,
    /// in lexicographic subset order
    std::vector<std::vector<int>> witness_sets;
    /// deduplicated, lex-sorted witness lcm exponent vectors
    std::vector<std::vector<Exponent>> witness_lcms;
    /// witness lcm -> number of witness sets sharing it
    std::map<std::vector<Exponent>, long long> lcm_multiplicity;
    /// (witness set L, extra generator g) with g | lcm(L), g not in L
    std::vector<std::pair<std::vector<int>, int>> nonscarf_pairs;
    /// deduplicated, lex-sorted lcms of the non-Scarf pairs' witness sets
    std::vector<std::vector<Exponent>> nonscarf_lcms;

    bool any() const { return !witness_sets.empty(); }
};

/// Enumerates all n-subsets of the generators and keeps the witnesses.
WitnessReport find_witness_sets(const MonomialIdeal& M, const ScarfGuards& guards = {});

/// Degree-restricted counts used by the W/Y statistics: witness lcms alpha
/// with |alpha| = D + a, a in [a_min, a_max], and alpha_i >= a for all i.
struct RestrictedWitnessCounts {
    long long witness_lcms = 0;        ///< counts toward W
    long long multi_witness_lcms = 0;  ///< lcms carried by >= 2 witness sets (toward Y)
};
RestrictedWitnessCounts restricted_witness_counts(const WitnessReport& report, long D, long a_min,
                                                  long a_max);

}  // namespace rmi
