#include "rmi/sampler.hpp"

#include <cctype>

namespace rmi {

mpq_class parse_exact_probability(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw usage_error("empty probability");
    if (s.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw usage_error("bad fraction: " + text);
        q.canonicalize();
        if (q < 0 || q > 1) throw usage_error("probability out of [0,1]: " + text);
        return q;
    }
    // decimal with optional exponent: [+-]?digits[.digits][e[+-]digits]
    std::size_t epos = s.find_first_of("eE");
    long exp10 = 0;
    std::string mant = s;
    if (epos != std::string::npos) {
        try {
            exp10 = std::stol(s.substr(epos + 1));
        } catch (const std::exception&) {
            throw usage_error("bad exponent in probability: " + text);
        }
        mant = s.substr(0, epos);
    }
    bool neg = false;
    std::size_t i = 0;
    if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) neg = mant[i++] == '-';
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < mant.size(); ++i) {
        char c = mant[i];
        if (c == '.') {
            if (seen_dot) throw usage_error("bad probability: " + text);
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw usage_error("bad probability: " + text);
        }
    }
    if (!seen_digit) throw usage_error("bad probability: " + text);
    mpz_class num(digits.empty() ? "0" : digits, 10);  // base forced: "09" is not octal
    if (neg) num = -num;
    mpz_class den(1);
    long e = exp10 - frac_digits;
    mpz_class ten(10);
    if (e >= 0) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(e));
        num *= scale;
    } else {
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-e));
    }
    mpq_class q(num, den);
    q.canonicalize();
    if (q < 0 || q > 1) throw usage_error("probability out of [0,1]: " + text);
    return q;
}

void ModelParams::validate() const {
    if (n < 1 || n > kMaxVars) throw usage_error("need 1 <= n <= " + std::to_string(kMaxVars));
    if (D < 1 || D > kMaxDegree) throw usage_error("need 1 <= D <= " + std::to_string(kMaxDegree));
    if (p < 0 || p > 1) throw usage_error("need 0 <= p <= 1");
}

MonomialIdeal sample_ideal(int n, long D, const BernoulliSpec& p, std::uint64_t seed,
                           const SamplerGuards& guards) {
    monomial_count_guarded(n, D, guards.max_enumeration);
    Xoshiro256StarStar rng(seed);
    std::vector<Monomial> gens;
    GradedEnumerator it(n, D);
    std::vector<Exponent> e;
    while (it.next(e))
        if (p.draw(rng)) gens.emplace_back(e);
    // equigenerated distinct monomials: already a minimal generating set
    return MonomialIdeal::from_minimal(n, std::move(gens));
}

MonomialIdeal sample_ideal(const ModelParams& params, const SamplerGuards& guards) {
    params.validate();
    return sample_ideal(params.n, params.D, BernoulliSpec::from_rational(params.p), params.seed,
                        guards);
}

}  // namespace rmi
