#include "rmi/monomial.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rmi {

namespace {

void require_same_vars(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars())
        throw usage_error("monomial dimension mismatch: " + std::to_string(a.vars()) +
                          " vs " + std::to_string(b.vars()));
}

}  // namespace

bool lex_greater(const Monomial& a, const Monomial& b) {
    return a.exponents() > b.exponents();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    std::vector<Exponent> e(a.exponents());
    for (int i = 0; i < b.vars(); ++i)
        if (b[i] > e[static_cast<std::size_t>(i)]) e[static_cast<std::size_t>(i)] = b[i];
    return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    for (int i = 0; i < a.vars(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool strongly_divides(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    for (int i = 0; i < a.vars(); ++i)
        if (a[i] != 0 && a[i] >= b[i]) return false;
    return true;
}

bool is_dominant_in(const Monomial& m, std::span<const Monomial> set) {
    // m is compared against the other elements by address, so it must be one
    // of the span's elements (or absent entirely, in which case it is checked
    // against the whole span).
    for (int i = 0; i < m.vars(); ++i) {
        bool strict = true;
        for (const Monomial& other : set) {
            if (&other == &m) continue;
            if (other[i] >= m[i]) { strict = false; break; }
        }
        if (strict) return true;
    }
    return false;
}

bool is_dominant_set(std::span<const Monomial> set) {
    for (const Monomial& m : set)
        if (!is_dominant_in(m, set)) return false;
    return true;
}

unsigned long long monomial_count_guarded(int n, long D, unsigned long long guard) {
    if (n < 1) throw usage_error("need n >= 1");
    if (D < 0) return 0;
    // binomial(D+n-1, n-1); c*(D+i)/i is exact at every step
    unsigned long long c = 1;
    for (int i = 1; i <= n - 1; ++i) {
        unsigned __int128 t = static_cast<unsigned __int128>(c) *
                              (static_cast<unsigned long long>(D) + static_cast<unsigned long long>(i));
        t /= static_cast<unsigned long long>(i);
        if (t > static_cast<unsigned __int128>(guard))
            throw guard_error("monomial count for n=" + std::to_string(n) + ", D=" +
                              std::to_string(D) + " exceeds enumeration guard " +
                              std::to_string(guard));
        c = static_cast<unsigned long long>(t);
    }
    if (c > guard)
        throw guard_error("monomial count " + std::to_string(c) + " exceeds enumeration guard " +
                          std::to_string(guard));
    return c;
}

std::vector<Monomial> enumerate_monomials(int n, long D, unsigned long long guard) {
    if (n < 1) throw usage_error("need n >= 1");
    if (D < 0) throw usage_error("need D >= 0");
    if (D > kMaxDegree) throw guard_error("degree above configured bound " + std::to_string(kMaxDegree));
    unsigned long long count = monomial_count_guarded(n, D, guard);
    std::vector<Monomial> out;
    out.reserve(count);
    GradedEnumerator it(n, D);
    std::vector<Exponent> e;
    while (it.next(e)) out.emplace_back(e);
    return out;
}

GradedEnumerator::GradedEnumerator(int n, long D) : n_(n), degree_(D) {
    if (n < 1) throw usage_error("need n >= 1");
    if (D < 0 || D > kMaxDegree) throw usage_error("degree out of range");
    cur_.assign(static_cast<std::size_t>(n), 0);
    cur_[0] = static_cast<Exponent>(D);
    if (n == 1 && D == 0) cur_[0] = 0;
}

bool GradedEnumerator::next(std::vector<Exponent>& out) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        out = cur_;
        return true;
    }
    // lex-descending successor: pull one unit off the rightmost nonzero entry
    // left of the last slot and dump that slot's tail just after it.
    int i = n_ - 2;
    while (i >= 0 && cur_[static_cast<std::size_t>(i)] == 0) --i;
    if (i < 0) { done_ = true; return false; }
    long tail = cur_[static_cast<std::size_t>(n_ - 1)];
    cur_[static_cast<std::size_t>(n_ - 1)] = 0;
    cur_[static_cast<std::size_t>(i)] -= 1;
    cur_[static_cast<std::size_t>(i + 1)] = static_cast<Exponent>(tail + 1);
    for (int j = i + 2; j < n_; ++j) cur_[static_cast<std::size_t>(j)] = 0;
    out = cur_;
    return true;
}

MonomialIdeal MonomialIdeal::zero(int n) {
    if (n < 1 || n > kMaxVars) throw usage_error("variable count out of range");
    return MonomialIdeal(n, {});
}

MonomialIdeal MonomialIdeal::from_minimal(int n, std::vector<Monomial> gens) {
    if (n < 1 || n > kMaxVars) throw usage_error("variable count out of range");
    for (const Monomial& g : gens)
        if (g.vars() != n) throw usage_error("generator has wrong variable count");
    std::sort(gens.begin(), gens.end(), lex_greater);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Monomial> gens) {
    return minimalize(n, gens);
}

MonomialIdeal minimalize(int n, const std::vector<Monomial>& monomials) {
    if (n < 1 || n > kMaxVars) throw usage_error("variable count out of range");
    for (const Monomial& g : monomials) {
        if (g.vars() != n) throw usage_error("generator has wrong variable count");
        if (g.is_unit()) {
            // 1 in the set generates everything: the unit ideal.
            return MonomialIdeal::from_minimal(n, {Monomial::unit(n)});
        }
    }
    std::vector<Monomial> sorted(monomials);
    std::sort(sorted.begin(), sorted.end(),
              [](const Monomial& a, const Monomial& b) {
                  long da = a.total_degree(), db = b.total_degree();
                  if (da != db) return da < db;
                  return lex_greater(a, b);
              });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Monomial> kept;
    for (const Monomial& m : sorted) {
        bool redundant = false;
        for (const Monomial& k : kept)
            if (divides(k, m)) { redundant = true; break; }
        if (!redundant) kept.push_back(m);
    }
    return MonomialIdeal::from_minimal(n, std::move(kept));
}

int krull_dimension(const MonomialIdeal& M) {
    const int n = M.vars();
    if (n > 20) throw guard_error("krull_dimension limited to n <= 20");
    if (M.is_unit()) throw usage_error("krull_dimension: unit ideal");
    if (M.is_zero()) return n;
    std::vector<std::uint32_t> supports;
    supports.reserve(M.num_generators());
    for (const Monomial& g : M.generators()) {
        std::uint32_t s = 0;
        for (int i = 0; i < n; ++i)
            if (g[i] != 0) s |= (1u << i);
        supports.push_back(s);
    }
    // smallest variable set meeting every support, by increasing cardinality
    for (int k = 1; k <= n; ++k) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != k) continue;
            bool covers = true;
            for (std::uint32_t s : supports)
                if ((s & mask) == 0) { covers = false; break; }
            if (covers) return n - k;
        }
    }
    return 0;  // unreachable for nonempty proper ideals
}

std::string format_monomial(const Monomial& m) {
    std::string s;
    for (int i = 0; i < m.vars(); ++i) {
        if (i) s += ' ';
        s += std::to_string(m[i]);
    }
    return s;
}

MonomialIdeal read_ideal(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Monomial> gens;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        std::string body = line.substr(a, b - a + 1);
        if (n < 0) {
            if (body.rfind("n=", 0) != 0)
                throw usage_error("line " + std::to_string(lineno) + ": expected header n=<int>");
            try {
                n = std::stoi(body.substr(2));
            } catch (const std::exception&) {
                throw usage_error("line " + std::to_string(lineno) + ": bad variable count");
            }
            if (n < 1 || n > kMaxVars)
                throw usage_error("line " + std::to_string(lineno) + ": variable count out of range");
            continue;
        }
        std::istringstream ss(body);
        std::vector<Exponent> e;
        long v;
        while (ss >> v) {
            if (v < 0 || v > kMaxDegree)
                throw usage_error("line " + std::to_string(lineno) + ": exponent out of range");
            e.push_back(static_cast<Exponent>(v));
        }
        if (!ss.eof())
            throw usage_error("line " + std::to_string(lineno) + ": malformed exponent");
        if (static_cast<int>(e.size()) != n)
            throw usage_error("line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                              " exponents, got " + std::to_string(e.size()));
        gens.emplace_back(std::move(e));
    }
    if (n < 0) throw usage_error("missing header line n=<int>");
    return minimalize(n, gens);
}

MonomialIdeal read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open ideal file: " + path);
    try {
        return read_ideal(in);
    } catch (const usage_error& e) {
        throw usage_error(path + ": " + e.what());
    }
}

void write_ideal(std::ostream& out, const MonomialIdeal& M) {
    out << "n=" << M.vars() << "\n";
    for (const Monomial& g : M.generators()) out << format_monomial(g) << "\n";
}

}  // namespace rmi
