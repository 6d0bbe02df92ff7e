#include "rmi/betti.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include <gmpxx.h>

#include "rmi/kernels.hpp"

namespace rmi {

void CoefficientField::validate() const {
    if (characteristic == 0) return;
    if (characteristic < 2) throw usage_error("field characteristic must be 0 or prime");
    for (unsigned long d = 2; d * d <= characteristic; ++d)
        if (characteristic % d == 0)
            throw usage_error("field characteristic must be 0 or prime");
    if (characteristic >= (1UL << 31))
        throw usage_error("prime characteristic limited to < 2^31");
}

namespace {

// ---------------------------------------------------------------------------
// exact rank over the coefficient field
// ---------------------------------------------------------------------------

// Rows arrive sparse with entries +-1; elimination is dense but row-reduced
// over exact arithmetic. Sizes here are strand/complex-local and small.
using SparseRow = std::vector<std::pair<std::uint32_t, int>>;

long rank_q(const std::vector<SparseRow>& rows, std::size_t ncols) {
    std::vector<std::vector<mpq_class>> m;
    m.reserve(rows.size());
    for (const SparseRow& r : rows) {
        if (r.empty()) continue;
        std::vector<mpq_class> dense(ncols, mpq_class(0));
        for (auto [c, s] : r) dense[c] = s;
        m.push_back(std::move(dense));
    }
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            mpq_class f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

long rank_gf(const std::vector<SparseRow>& rows, std::size_t ncols, unsigned long p) {
    std::vector<std::vector<std::uint64_t>> m;
    m.reserve(rows.size());
    for (const SparseRow& r : rows) {
        if (r.empty()) continue;
        std::vector<std::uint64_t> dense(ncols, 0);
        for (auto [c, s] : r) dense[c] = s > 0 ? 1 : p - 1;
        m.push_back(std::move(dense));
    }
    auto inv_mod = [p](std::uint64_t a) {
        // Fermat: p prime
        std::uint64_t e = p - 2, base = a % p, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return acc;
    };
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        std::uint64_t inv = inv_mod(m[row][col]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            std::uint64_t f = m[i][col] * inv % p;
            for (std::size_t j = col; j < ncols; ++j)
                m[i][j] = (m[i][j] + (p - f) * m[row][j]) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

long rank_over(const std::vector<SparseRow>& rows, std::size_t ncols,
               const CoefficientField& field) {
    if (rows.empty() || ncols == 0) return 0;
    return field.characteristic == 0 ? rank_q(rows, ncols)
                                     : rank_gf(rows, ncols, field.characteristic);
}

// ---------------------------------------------------------------------------
// shared chain-complex homology: bases graded by |basis element|, boundary of
// a set-like element drops one member with alternating signs, terms kept only
// when the target exists in the complex (Taylor strands) or always (Koszul).
// ---------------------------------------------------------------------------

struct GradedComplex {
    // basis[s] = sorted masks of popcount s; index lookup per grade
    std::map<int, std::vector<std::uint64_t>> basis;
    std::map<int, std::unordered_map<std::uint64_t, std::uint32_t>> index;

    void add(std::uint64_t mask) {
        basis[std::popcount(mask)].push_back(mask);
    }
    void freeze(bool index_lex_order) {
        for (auto& [s, v] : basis) {
            if (index_lex_order)
                std::sort(v.begin(), v.end(), [](std::uint64_t a, std::uint64_t b) {
                    // lexicographic on increasing index sequences
                    while (a && b) {
                        int ia = std::countr_zero(a), ib = std::countr_zero(b);
                        if (ia != ib) return ia < ib;
                        a &= a - 1;
                        b &= b - 1;
                    }
                    return a < b;
                });
            else
                std::sort(v.begin(), v.end());
            auto& ix = index[s];
            ix.reserve(v.size());
            for (std::uint32_t i = 0; i < v.size(); ++i) ix.emplace(v[i], i);
        }
    }

    // boundary rows of grade s (each row: the image of one basis mask)
    std::vector<SparseRow> boundary(int s) const {
        std::vector<SparseRow> rows;
        auto it = basis.find(s);
        auto below = index.find(s - 1);
        if (it == basis.end()) return rows;
        rows.reserve(it->second.size());
        const bool has_below = below != index.end();
        for (std::uint64_t mask : it->second) {
            SparseRow row;
            std::uint64_t rest = mask;
            int pos = 0;
            while (rest) {
                int i = std::countr_zero(rest);
                rest &= rest - 1;
                std::uint64_t sub = mask & ~(1ULL << i);
                if (has_below) {
                    auto f = below->second.find(sub);
                    if (f != below->second.end())
                        row.emplace_back(f->second, pos % 2 == 0 ? 1 : -1);
                }
                ++pos;
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }

    // homology dimension at every grade present
    std::map<int, long long> homology(const CoefficientField& field,
                                      bool check_dd = true) const {
        std::map<int, long long> h;
        std::map<int, long> ranks;
        for (const auto& [s, v] : basis) {
            auto below = basis.find(s - 1);
            std::size_t ncols = below == basis.end() ? 0 : below->second.size();
            auto rows = boundary(s);
            ranks[s] = rank_over(rows, ncols, field);
            if (check_dd && s >= 2 && below != basis.end()) {
                // d(d(e)) must cancel exactly (signed composition over Z)
                auto lower = boundary(s - 1);
                for (const SparseRow& row : rows) {
                    std::unordered_map<std::uint32_t, long> acc;
                    for (auto [c, sg] : row)
                        for (auto [c2, sg2] : lower[c]) acc[c2] += static_cast<long>(sg) * sg2;
                    for (auto& [c2, v2] : acc)
                        if (v2 != 0)
                            throw std::logic_error("taylor differential does not square to zero");
                }
            }
        }
        long long euler_basis = 0, euler_h = 0;
        for (const auto& [s, v] : basis) {
            long long dim = static_cast<long long>(v.size());
            long long hs = dim - ranks[s];
            auto above = ranks.find(s + 1);
            if (above != ranks.end()) hs -= above->second;
            if (hs < 0) throw std::logic_error("negative homology dimension");
            h[s] = hs;
            euler_basis += (s % 2 == 0 ? dim : -dim);
            euler_h += (s % 2 == 0 ? hs : -hs);
        }
        if (euler_basis != euler_h)
            throw std::logic_error("euler characteristic mismatch in strand homology");
        return h;
    }
};

// ---------------------------------------------------------------------------
// Taylor strand engine
// ---------------------------------------------------------------------------

// flat row-major buffer of all 2^r subset lcms (row mask*n .. mask*n+n-1)
std::vector<Exponent> subset_lcms_flat(const MonomialIdeal& M) {
    const std::size_t n = static_cast<std::size_t>(M.vars());
    const std::size_t r = M.num_generators();
    std::vector<Exponent> flat((std::size_t(1) << r) * n, 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << r); ++mask) {
        std::uint32_t low = mask & (mask - 1);
        int i = std::countr_zero(mask);
        const auto& g = M.generators()[static_cast<std::size_t>(i)].exponents();
        Exponent* out = flat.data() + static_cast<std::size_t>(mask) * n;
        const Exponent* prev = flat.data() + static_cast<std::size_t>(low) * n;
        for (std::size_t j = 0; j < n; ++j) out[j] = std::max(prev[j], g[j]);
    }
    return flat;
}

BettiTable betti_taylor(const MonomialIdeal& M, const CoefficientField& field,
                        const BettiGuards& guards) {
    const int n = M.vars();
    const std::size_t r = M.num_generators();
    if (static_cast<int>(r) > guards.taylor_max_generators)
        throw guard_error("taylor engine: " + std::to_string(r) +
                          " generators exceeds subset-enumeration guard " +
                          std::to_string(guards.taylor_max_generators));
    auto flat = subset_lcms_flat(M);
    std::map<std::vector<Exponent>, GradedComplex> strands;
    std::vector<Exponent> key(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << r); ++mask) {
        const Exponent* row = flat.data() + static_cast<std::size_t>(mask) * static_cast<std::size_t>(n);
        key.assign(row, row + n);
        strands[key].add(mask);
    }
    flat.clear();
    flat.shrink_to_fit();

    unsigned long long work = 0;
    for (auto& [b, strand] : strands) {
        strand.freeze(true);
        unsigned long long prev = 0;
        for (const auto& [s, v] : strand.basis) {
            work += static_cast<unsigned long long>(v.size()) * (prev + 1);
            prev = v.size();
        }
    }
    if (work > guards.taylor_strand_budget)
        throw guard_error("taylor engine: strand elimination budget exceeded; "
                          "use the koszul engine");

    BettiTable table;
    table.n = n;
    table.totals.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto& [b, strand] : strands) {
        auto h = strand.homology(field);
        for (auto [s, dim] : h) {
            if (dim == 0) continue;
            if (s > n) throw std::logic_error("betti number above variable count");
            table.entries[{s, b}] = dim;
            table.totals[static_cast<std::size_t>(s)] += dim;
        }
    }
    return table;
}

// ---------------------------------------------------------------------------
// upper-Koszul engine: beta_{i,b}(S/M) is the reduced homology of the
// complex K^b = { W subset of variables : x^(b-W) in M } in dimension i-2.
// Candidate multidegrees have every coordinate realized by some generator
// (otherwise K^b is a cone), so they live in the product of the per-variable
// exponent value sets.
// ---------------------------------------------------------------------------

unsigned long long koszul_candidate_count(const MonomialIdeal& M) {
    const int n = M.vars();
    unsigned long long count = 1;
    for (int j = 0; j < n; ++j) {
        std::vector<Exponent> vals;
        for (const Monomial& g : M.generators()) vals.push_back(g[j]);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        if (count > (1ULL << 62) / (vals.size() + 1)) return 1ULL << 62;
        count *= vals.size();
    }
    return count;
}

BettiTable betti_koszul(const MonomialIdeal& M, const CoefficientField& field,
                        unsigned long long budget) {
    const int n = M.vars();
    if (n > 26) throw guard_error("koszul engine limited to n <= 26");
    BettiTable table;
    table.n = n;
    table.totals.assign(static_cast<std::size_t>(n) + 1, 0);
    table.entries[{0, std::vector<Exponent>(static_cast<std::size_t>(n), 0)}] = 1;
    table.totals[0] = 1;
    if (M.is_zero()) return table;

    std::vector<std::vector<Exponent>> vals(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (const Monomial& g : M.generators()) vals[static_cast<std::size_t>(j)].push_back(g[j]);
        auto& v = vals[static_cast<std::size_t>(j)];
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    unsigned long long count = koszul_candidate_count(M);
    if (count > budget / (1ULL << n))
        throw guard_error("koszul engine: candidate budget exceeded");

    PackedExponents pack = PackedExponents::pack(n, M.generators());
    PaddedQuery q(pack);
    const KernelSet& k = active_kernels();

    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<Exponent> b(static_cast<std::size_t>(n), 0);
    bool more = true;
    while (more) {
        for (int j = 0; j < n; ++j)
            b[static_cast<std::size_t>(j)] = vals[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]];

        // cull: if x^(b - supp(b)) lies in M, K^b is a full simplex
        bool all_zero = true;
        for (int j = 0; j < n; ++j) {
            Exponent bj = b[static_cast<std::size_t>(j)];
            q.data[static_cast<std::size_t>(j)] = bj > 0 ? static_cast<Exponent>(bj - 1) : 0;
            if (bj > 0) all_zero = false;
        }
        bool skip = all_zero || k.first_divisor(pack, q.data.data()) >= 0;

        if (!skip) {
            // membership of x^(b-W) for every W inside supp(b)
            std::uint32_t supp = 0;
            for (int j = 0; j < n; ++j)
                if (b[static_cast<std::size_t>(j)] > 0) supp |= (1u << j);
            GradedComplex K;
            bool any_face = false;
            for (std::uint32_t w = 0;; w = ((w | ~supp) + 1) & supp) {  // subsets of supp
                for (int j = 0; j < n; ++j) {
                    Exponent bj = b[static_cast<std::size_t>(j)];
                    q.data[static_cast<std::size_t>(j)] =
                        (w >> j & 1) ? static_cast<Exponent>(bj - 1) : bj;
                }
                if (k.first_divisor(pack, q.data.data()) >= 0) {
                    K.add(w);
                    any_face = true;
                }
                if (w == supp) break;
            }
            if (any_face) {
                K.freeze(false);
                auto h = K.homology(field, /*check_dd=*/false);
                for (auto [s, dim] : h) {
                    if (dim == 0) continue;
                    int i = s + 1;  // face size s has simplex dimension s-1
                    if (i > n) throw std::logic_error("betti number above variable count");
                    table.entries[{i, b}] += dim;
                    table.totals[static_cast<std::size_t>(i)] += dim;
                }
            }
        }

        // advance mixed-radix candidate index
        int j = n - 1;
        while (j >= 0) {
            if (++idx[static_cast<std::size_t>(j)] < vals[static_cast<std::size_t>(j)].size()) break;
            idx[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        more = j >= 0;
    }
    return table;
}

}  // namespace

std::map<std::vector<Exponent>, std::vector<std::uint32_t>> lcm_closure(const MonomialIdeal& M,
                                                                        int max_generators) {
    if (M.is_unit()) throw usage_error("lcm_closure: unit ideal");
    const std::size_t r = M.num_generators();
    if (static_cast<int>(r) > max_generators)
        throw guard_error("lcm_closure: " + std::to_string(r) +
                          " generators exceeds subset-enumeration guard " +
                          std::to_string(max_generators));
    auto flat = subset_lcms_flat(M);
    const std::size_t n = static_cast<std::size_t>(M.vars());
    std::map<std::vector<Exponent>, std::vector<std::uint32_t>> out;
    std::vector<Exponent> key(n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << r); ++mask) {
        const Exponent* row = flat.data() + static_cast<std::size_t>(mask) * n;
        key.assign(row, row + n);
        out[key].push_back(mask);
    }
    return out;
}

BettiTable betti_table(const MonomialIdeal& M, const CoefficientField& field, BettiEngine engine,
                       const BettiGuards& guards) {
    field.validate();
    if (M.is_unit()) throw usage_error("betti_table: unit ideal");
    const std::size_t r = M.num_generators();

    if (engine == BettiEngine::Taylor) return betti_taylor(M, field, guards);
    if (engine == BettiEngine::Koszul)
        return betti_koszul(M, field, guards.koszul_fallback_budget);

    // Auto: prefer the Koszul route when the candidate grid is small (few
    // variables or few distinct exponents), otherwise Taylor under its guard,
    // otherwise Koszul with the larger fallback budget.
    unsigned long long cand = koszul_candidate_count(M);
    const int n = M.vars();
    if (n <= 32 && cand <= guards.koszul_budget / (1ULL << n))
        return betti_koszul(M, field, guards.koszul_budget);
    if (static_cast<int>(r) <= guards.taylor_max_generators) {
        try {
            return betti_taylor(M, field, guards);
        } catch (const guard_error&) {
            // fall through to the Koszul fallback
        }
    }
    if (n <= 26 && cand <= guards.koszul_fallback_budget / (1ULL << n))
        return betti_koszul(M, field, guards.koszul_fallback_budget);
    throw guard_error("betti_table: ideal exceeds both taylor (r <= " +
                      std::to_string(guards.taylor_max_generators) +
                      ") and koszul candidate budgets");
}

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (std::size_t i = 0; i < totals.size(); ++i)
        if (totals[i] != 0) pd = static_cast<int>(i);
    return pd;
}

long long BettiTable::entry(int i, const std::vector<Exponent>& b) const {
    auto it = entries.find({i, b});
    return it == entries.end() ? 0 : it->second;
}

std::string BettiTable::totals_line() const {
    const int pd = projective_dimension();
    std::string s;
    for (int i = 0; i <= pd; ++i) {
        if (i) s += ',';
        s += std::to_string(totals[static_cast<std::size_t>(i)]);
    }
    return s;
}

void BettiTable::write_csv(std::ostream& out) const {
    out << "i,multidegree,rank\n";
    for (const auto& [key, rank] : entries) {
        out << key.first << ",";
        for (std::size_t j = 0; j < key.second.size(); ++j) {
            if (j) out << '-';
            out << key.second[j];
        }
        out << "," << rank << "\n";
    }
    out << "totals," << totals_line() << "\n";
}

int projective_dimension(const MonomialIdeal& M, const CoefficientField& field, BettiEngine engine,
                         const BettiGuards& guards) {
    if (M.is_zero()) return 0;
    return betti_table(M, field, engine, guards).projective_dimension();
}

bool is_cohen_macaulay(const MonomialIdeal& M, const CoefficientField& field, BettiEngine engine,
                       const BettiGuards& guards) {
    return krull_dimension(M) == M.vars() - projective_dimension(M, field, engine, guards);
}

}  // namespace rmi
