#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmi {

/// Per-variable exponent. Degrees are capped by kMaxDegree, so 16 bits suffice
/// and 16 exponents fit one AVX2 lane group (see kernels.hpp).
using Exponent = std::uint16_t;

inline constexpr int kMaxVars = 64;
inline constexpr long kMaxDegree = 10000;

/// Input/contract violations (bad flags, malformed files, dimension mismatch).
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A computation was refused because it would exceed a configured size guard.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A monomial x^a in n variables, stored as its exponent vector.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    static Monomial unit(int n) { return Monomial(std::vector<Exponent>(n, 0)); }

    int vars() const { return static_cast<int>(exps_.size()); }
    Exponent operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<Exponent>& exponents() const { return exps_; }

    long total_degree() const {
        long d = 0;
        for (Exponent e : exps_) d += e;
        return d;
    }

    bool is_unit() const {
        for (Exponent e : exps_) if (e != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

/// Canonical order used everywhere determinism matters: lexicographic on
/// exponent vectors, larger vector first.
bool lex_greater(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);

/// a | b componentwise.
bool divides(const Monomial& a, const Monomial& b);

/// a strongly divides b: a_i < b_i wherever a_i != 0.
bool strongly_divides(const Monomial& a, const Monomial& b);

/// m is dominant in the set: some variable where m's exponent strictly exceeds
/// every other element's.
bool is_dominant_in(const Monomial& m, std::span<const Monomial> set);

/// Every member is dominant. Empty sets are vacuously dominant.
bool is_dominant_set(std::span<const Monomial> set);

inline constexpr unsigned long long kDefaultEnumerationGuard = 4'000'000ULL;

/// Number of degree-D monomials in n variables, or nullopt-style overflow
/// signalling via guard_error when it exceeds the guard.
unsigned long long monomial_count_guarded(int n, long D,
                                          unsigned long long guard = kDefaultEnumerationGuard);

/// All monomials of total degree exactly D in n variables, in the canonical
/// (lex-descending) order. Length is binomial(D+n-1, n-1).
std::vector<Monomial> enumerate_monomials(int n, long D,
                                          unsigned long long guard = kDefaultEnumerationGuard);

/// In-place lex-descending walk over degree-D exponent vectors, so callers can
/// stream m_n(D) monomials without materializing them.
class GradedEnumerator {
public:
    GradedEnumerator(int n, long D);
    /// False once exhausted. First call yields (D, 0, ..., 0).
    bool next(std::vector<Exponent>& out);

private:
    int n_;
    long degree_;
    bool first_ = true;
    bool done_ = false;
    std::vector<Exponent> cur_;
};

/// A monomial ideal given by its minimal generating set (possibly empty: the
/// zero ideal). The unit ideal <1> is representable but rejected by the
/// resolution/scarf layers.
class MonomialIdeal {
public:
    static MonomialIdeal zero(int n);
    /// Minimalizes (drops divisible generators). A unit generator collapses
    /// the whole set to <1>.
    static MonomialIdeal from_generators(int n, std::vector<Monomial> gens);
    /// Trusted equigenerated/minimal input; only sorts into canonical order.
    static MonomialIdeal from_minimal(int n, std::vector<Monomial> gens);

    int vars() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t num_generators() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}
    int n_ = 0;
    std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(int n, const std::vector<Monomial>& monomials);

/// Krull dimension of S/M: n minus the least number of variables covering
/// every generator's support (exhaustive search, n <= 20).
int krull_dimension(const MonomialIdeal& M);

// --- text format ---------------------------------------------------------
// Header "n=<int>", then one monomial per line as space-separated exponents,
// e.g. "3 1 2" for x1^3 x2 x3^2. Blank lines and '#' comments are skipped.

MonomialIdeal read_ideal(std::istream& in);
MonomialIdeal read_ideal_file(const std::string& path);
void write_ideal(std::ostream& out, const MonomialIdeal& M);
std::string format_monomial(const Monomial& m);

}  // namespace rmi
