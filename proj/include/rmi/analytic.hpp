#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "rmi/monomial.hpp"

namespace rmi {

/// m_n(D) = binomial(D+n-1, n-1), the number of degree-D monomials in n
/// variables; zero for D < 0 (the convention the closed-form expressions
/// rely on for small excess degrees).
mpz_class count_monomials(int n, long D);

/// Probability that a fixed exponent vector alpha with |alpha| = D + a and
/// alpha_i >= a for all i is a witness lcm:
///   (1 - q^{m_{n-1}(a-n+1)})^n * q^{m_n(a-n)},  q = 1 - p.
mpq_class prob_witness_lcm(int n, long a, const mpq_class& p);

/// Probability that such an alpha is a witness lcm carried by at least two
/// witness sets (some facet interior doubly occupied):
///   ((1 - q^m)^n - (m p q^{m-1})^n) * q^{m_n(a-n)},  m = m_{n-1}(a-n+1).
mpq_class prob_multi_witness_lcm(int n, long a, const mpq_class& p);

/// Cutoff A = floor((p/2)^{-1/(n-1)}) - n, computed by exact integer root
/// extraction. Requires p > 0 and n >= 2.
long witness_degree_cutoff(int n, const mpq_class& p);

struct ExpectedCounts {
    /// a -> expected count; empty when the summation range is empty
    std::vector<std::pair<long, mpq_class>> per_a;
    mpq_class total = 0;
    /// set when the cutoff made the range empty (p too large)
    bool empty_range = false;
};

/// E[W_a] = m_n(D+a-na) * prob_witness_lcm(n, a, p), summed over
/// a in [n-1, A] by default.
ExpectedCounts expected_W(int n, long D, const mpq_class& p);
mpq_class expected_Wa(int n, long D, long a, const mpq_class& p);

/// E[Y_a] = m_n(D+a-na) * prob_multi_witness_lcm(n, a, p), summed over
/// a in [2, A] by default (a_min overridable; the surrounding bounds use
/// a >= n-1).
ExpectedCounts expected_Y(int n, long D, const mpq_class& p, long a_min = 2);
mpq_class expected_Ya(int n, long D, long a, const mpq_class& p);

/// The three threshold exponents for p = D^e as exact rationals:
/// projective dimension -n+1, genericity -n+3/2, non-Scarf -n+2-1/n.
struct ThresholdExponents {
    mpq_class pdim;
    mpq_class generic;
    mpq_class scarf;

    /// double evaluators p(D) = D^e, for positioning experiment grids only
    double pdim_p(long D) const;
    double generic_p(long D) const;
    double scarf_p(long D) const;
};
ThresholdExponents thresholds(int n);

/// Decimal rendering of an exact rational with the given number of fractional
/// digits, round-half-up, no floating point involved.
std::string decimal_string(const mpq_class& v, int digits);

}  // namespace rmi
