#include "rmi/analytic.hpp"

#include <cmath>

namespace rmi {

namespace {

// guards amount of exact exponentiation one formula call may do
constexpr unsigned long kMaxExactExponent = 2'000'000UL;

unsigned long to_exponent(const mpz_class& e) {
    if (e < 0) throw std::logic_error("negative exponent");
    if (!e.fits_ulong_p() || e.get_ui() > kMaxExactExponent)
        throw guard_error("exact exponent " + e.get_str() + " exceeds formula guard");
    return e.get_ui();
}

mpq_class mpq_pow(const mpq_class& base, unsigned long e) {
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    // base canonical => powers canonical
    return out;
}

void check_np(int n, const mpq_class& p) {
    if (n < 1) throw usage_error("need n >= 1");
    if (p < 0 || p > 1) throw usage_error("need 0 <= p <= 1");
}

}  // namespace

mpz_class count_monomials(int n, long D) {
    if (n < 1) throw usage_error("need n >= 1");
    if (D < 0) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(D) + static_cast<unsigned long>(n) - 1,
                 static_cast<unsigned long>(n) - 1);
    return out;
}

mpq_class prob_witness_lcm(int n, long a, const mpq_class& p) {
    check_np(n, p);
    if (n < 2) throw usage_error("prob_witness_lcm needs n >= 2");
    if (a < 0) throw usage_error("need a >= 0");
    mpq_class q = 1 - p;
    unsigned long facet = to_exponent(count_monomials(n - 1, a - n + 1));
    unsigned long interior = to_exponent(count_monomials(n, a - n));
    mpq_class occupied = 1 - mpq_pow(q, facet);
    return mpq_pow(occupied, static_cast<unsigned long>(n)) * mpq_pow(q, interior);
}

mpq_class prob_multi_witness_lcm(int n, long a, const mpq_class& p) {
    check_np(n, p);
    if (n < 2) throw usage_error("prob_multi_witness_lcm needs n >= 2");
    if (a < 0) throw usage_error("need a >= 0");
    mpq_class q = 1 - p;
    mpz_class m_z = count_monomials(n - 1, a - n + 1);
    unsigned long m = to_exponent(m_z);
    if (m == 0) return 0;  // empty facet interiors: both events impossible
    unsigned long interior = to_exponent(count_monomials(n, a - n));
    mpq_class all_occupied = mpq_pow(1 - mpq_pow(q, m), static_cast<unsigned long>(n));
    mpq_class exactly_one = mpq_pow(mpq_class(m_z) * p * mpq_pow(q, m - 1),
                                    static_cast<unsigned long>(n));
    return (all_occupied - exactly_one) * mpq_pow(q, interior);
}

long witness_degree_cutoff(int n, const mpq_class& p) {
    if (n < 2) throw usage_error("cutoff needs n >= 2");
    if (p <= 0 || p > 1) throw usage_error("cutoff needs 0 < p <= 1");
    // A + n = floor((2/p)^{1/(n-1)}): largest t with t^{n-1} * p_num <= 2 * p_den
    mpz_class num = p.get_num(), den = p.get_den();
    mpz_class rhs = 2 * den;
    unsigned long e = static_cast<unsigned long>(n) - 1;
    mpz_class lo = 0, hi = 2;
    auto fits = [&](const mpz_class& t) {
        mpz_class tp;
        mpz_pow_ui(tp.get_mpz_t(), t.get_mpz_t(), e);
        return tp * num <= rhs;
    };
    while (fits(hi)) hi *= 2;
    while (lo < hi - 1) {
        mpz_class mid = (lo + hi) / 2;
        if (fits(mid)) lo = mid;
        else hi = mid;
    }
    if (!lo.fits_slong_p()) throw guard_error("cutoff A out of range");
    return lo.get_si() - n;
}

mpq_class expected_Wa(int n, long D, long a, const mpq_class& p) {
    return mpq_class(count_monomials(n, D + a - static_cast<long>(n) * a)) *
           prob_witness_lcm(n, a, p);
}

mpq_class expected_Ya(int n, long D, long a, const mpq_class& p) {
    return mpq_class(count_monomials(n, D + a - static_cast<long>(n) * a)) *
           prob_multi_witness_lcm(n, a, p);
}

ExpectedCounts expected_W(int n, long D, const mpq_class& p) {
    if (n < 2) throw usage_error("expected_W needs n >= 2");
    if (p < 0) throw usage_error("expected_W needs p >= 0");
    ExpectedCounts out;
    if (p == 0) return out;  // no generators, no witnesses
    long A = witness_degree_cutoff(n, p);
    if (A < n - 1) {
        out.empty_range = true;
        return out;
    }
    for (long a = n - 1; a <= A; ++a) {
        mpq_class term = expected_Wa(n, D, a, p);
        out.per_a.emplace_back(a, term);
        out.total += term;
    }
    return out;
}

ExpectedCounts expected_Y(int n, long D, const mpq_class& p, long a_min) {
    if (n < 2) throw usage_error("expected_Y needs n >= 2");
    if (p < 0) throw usage_error("expected_Y needs p >= 0");
    ExpectedCounts out;
    if (p == 0) return out;
    long A = witness_degree_cutoff(n, p);
    if (A < a_min) {
        out.empty_range = true;
        return out;
    }
    for (long a = a_min; a <= A; ++a) {
        mpq_class term = expected_Ya(n, D, a, p);
        out.per_a.emplace_back(a, term);
        out.total += term;
    }
    return out;
}

ThresholdExponents thresholds(int n) {
    if (n < 2) throw usage_error("thresholds need n >= 2");
    ThresholdExponents t;
    t.pdim = mpq_class(-n + 1);
    t.generic = mpq_class(-2 * n + 3, 2);
    t.scarf = mpq_class(static_cast<long>(-n + 2) * n - 1, n);
    return t;
}

namespace {
double pow_D(long D, const mpq_class& e) {
    return std::pow(static_cast<double>(D), e.get_d());
}
}  // namespace

double ThresholdExponents::pdim_p(long D) const { return pow_D(D, pdim); }
double ThresholdExponents::generic_p(long D) const { return pow_D(D, generic); }
double ThresholdExponents::scarf_p(long D) const { return pow_D(D, scarf); }

std::string decimal_string(const mpq_class& v, int digits) {
    bool neg = v < 0;
    mpq_class av = neg ? mpq_class(-v) : v;
    mpz_class scale;
    mpz_class ten(10);
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(digits));
    // round half up: floor((2*num*scale/den + 1) / 2)
    mpz_class scaled = (2 * av.get_num() * scale / av.get_den() + 1) / 2;
    mpz_class ip = scaled / scale, fp = scaled % scale;
    std::string out = ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
        out += "." + frac;
    }
    if (neg && (ip != 0 || fp != 0)) out.insert(out.begin(), '-');
    return out;
}

}  // namespace rmi
