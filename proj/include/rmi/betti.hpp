#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rmi/monomial.hpp"

namespace rmi {

/// Coefficient field for homology ranks: characteristic 0 (exact rationals)
/// or a prime p (arithmetic mod p).
struct CoefficientField {
    unsigned long characteristic = 0;
    void validate() const;
};

struct BettiGuards {
    /// Taylor route enumerates 2^r subsets.
    int taylor_max_generators = 20;
    /// Refuse Taylor strands whose elimination work estimate exceeds this.
    unsigned long long taylor_strand_budget = 30'000'000ULL;
    /// Koszul route: candidate multidegrees * 2^n must fit the budget.
    unsigned long long koszul_budget = 2'000'000ULL;
    /// When Taylor is not feasible either, Koszul is still accepted up to here.
    unsigned long long koszul_fallback_budget = 80'000'000ULL;
};

enum class BettiEngine {
    Auto,    ///< cheapest feasible exact route (deterministic in the ideal)
    Taylor,  ///< homology of multidegree strands of the Taylor complex
    Koszul,  ///< reduced homology of the divisibility complexes K^b on n vertices
};

/// Multigraded Betti numbers of S/M plus the total column.
struct BettiTable {
    int n = 0;
    /// (homological degree i, multidegree) -> rank; zero ranks absent.
    std::map<std::pair<int, std::vector<Exponent>>, long long> entries;
    /// beta_0 .. beta_n
    std::vector<long long> totals;

    int projective_dimension() const;
    long long entry(int i, const std::vector<Exponent>& b) const;
    /// "1,10,45,..." over beta_0..beta_pdim (trailing zeros trimmed to pdim).
    std::string totals_line() const;
    /// rows (i, dash-joined multidegree, rank) followed by a totals line
    void write_csv(std::ostream& out) const;
};

/// All 2^r generator-index subsets grouped by the exponent vector of their
/// lcm (subsets encoded as bitmasks, bit i = generator i in canonical order).
/// The key set is the lcm lattice of M plus the zero multidegree for the
/// empty subset.
std::map<std::vector<Exponent>, std::vector<std::uint32_t>> lcm_closure(
    const MonomialIdeal& M, int max_generators = 20);

BettiTable betti_table(const MonomialIdeal& M, const CoefficientField& field = {},
                       BettiEngine engine = BettiEngine::Auto, const BettiGuards& guards = {});

int projective_dimension(const MonomialIdeal& M, const CoefficientField& field = {},
                         BettiEngine engine = BettiEngine::Auto, const BettiGuards& guards = {});

/// dim(S/M) == n - pdim(S/M)
bool is_cohen_macaulay(const MonomialIdeal& M, const CoefficientField& field = {},
                       BettiEngine engine = BettiEngine::Auto, const BettiGuards& guards = {});

}  // namespace rmi
