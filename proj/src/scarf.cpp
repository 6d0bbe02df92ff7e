#include "rmi/scarf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "rmi/kernels.hpp"

namespace rmi {

namespace {

std::vector<Exponent> lcm_of_indices(const MonomialIdeal& M, const std::vector<int>& idxs) {
    std::vector<Exponent> b(static_cast<std::size_t>(M.vars()), 0);
    for (int i : idxs) {
        const auto& g = M.generators()[static_cast<std::size_t>(i)].exponents();
        for (std::size_t j = 0; j < g.size(); ++j) b[j] = std::max(b[j], g[j]);
    }
    return b;
}

// same-lcm test for I +- one element without materializing subsets
bool face_local_test(const MonomialIdeal& M, const std::vector<int>& face,
                     const std::vector<Exponent>& b) {
    const int n = M.vars();
    const auto& gens = M.generators();
    const int r = static_cast<int>(gens.size());
    // deletions: dropping i must change the lcm
    for (std::size_t drop = 0; drop < face.size(); ++drop) {
        std::vector<Exponent> sub(static_cast<std::size_t>(n), 0);
        for (std::size_t t = 0; t < face.size(); ++t) {
            if (t == drop) continue;
            const auto& g = gens[static_cast<std::size_t>(face[t])].exponents();
            for (std::size_t j = 0; j < g.size(); ++j) sub[j] = std::max(sub[j], g[j]);
        }
        if (sub == b) return false;
    }
    // insertions: adding any outside generator must change the lcm,
    // i.e. no g outside the face divides x^b
    std::size_t t = 0;
    for (int k = 0; k < r; ++k) {
        if (t < face.size() && face[t] == k) { ++t; continue; }
        const auto& g = gens[static_cast<std::size_t>(k)].exponents();
        bool div = true;
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g[j] > b[j]) { div = false; break; }
        if (div) return false;
    }
    return true;
}

}  // namespace

ScarfComplex scarf_complex(const MonomialIdeal& M) {
    if (M.is_unit()) throw usage_error("scarf_complex: unit ideal");
    const int n = M.vars();
    const int r = static_cast<int>(M.num_generators());
    ScarfComplex sc;
    sc.r = r;
    sc.f_vector.assign(static_cast<std::size_t>(r) + 1, 0);

    // empty face: its lcm 0 is unshared because generators are not units
    sc.faces.push_back({});
    sc.face_multidegrees[{}] = std::vector<Exponent>(static_cast<std::size_t>(n), 0);
    sc.f_vector[0] = 1;
    if (r == 0) return sc;

    // level-by-level growth; the complex is closed under subsets and its
    // faces have at most n elements (they index a subcomplex of the minimal
    // resolution, whose length is at most n)
    std::vector<std::vector<int>> level;  // faces of the current size
    for (int k = 0; k < r; ++k) {
        std::vector<int> face{k};
        auto b = lcm_of_indices(M, face);
        if (face_local_test(M, face, b)) {
            sc.faces.push_back(face);
            sc.face_multidegrees[face] = b;
            level.push_back(std::move(face));
        }
    }
    sc.f_vector[1] = static_cast<long long>(level.size());

    const int max_size = std::min(r, n);
    for (int size = 2; size <= max_size && !level.empty(); ++size) {
        // each candidate arises once, from its own (size-1)-prefix; prefixes
        // of faces are faces because the complex is closed under subsets
        std::vector<std::vector<int>> next;
        for (const auto& face : level) {
            for (int k = face.back() + 1; k < r; ++k) {
                std::vector<int> cand(face);
                cand.push_back(k);
                auto b = lcm_of_indices(M, cand);
                if (face_local_test(M, cand, b)) {
                    sc.faces.push_back(cand);
                    sc.face_multidegrees[cand] = std::move(b);
                    next.push_back(std::move(cand));
                }
            }
        }
        level = std::move(next);
        sc.f_vector[static_cast<std::size_t>(size)] = static_cast<long long>(level.size());
    }

    std::sort(sc.faces.begin(), sc.faces.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return sc;
}

ScarfComplex scarf_complex_bruteforce(const MonomialIdeal& M, int max_generators) {
    if (M.is_unit()) throw usage_error("scarf_complex: unit ideal");
    const int r = static_cast<int>(M.num_generators());
    if (r > max_generators) throw guard_error("scarf_complex_bruteforce: too many generators");
    auto groups = lcm_closure(M, max_generators);
    ScarfComplex sc;
    sc.r = r;
    sc.f_vector.assign(static_cast<std::size_t>(r) + 1, 0);
    for (const auto& [b, masks] : groups) {
        if (masks.size() != 1) continue;
        std::uint32_t mask = masks[0];
        std::vector<int> face;
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1) face.push_back(i);
        sc.f_vector[face.size()] += 1;
        sc.face_multidegrees[face] = b;
        sc.faces.push_back(std::move(face));
    }
    std::sort(sc.faces.begin(), sc.faces.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return sc;
}

bool is_scarf(const MonomialIdeal& M, const CoefficientField& field, BettiEngine engine,
              const BettiGuards& guards) {
    if (M.is_zero()) return true;  // empty resolution equals empty Scarf complex
    if (M.is_unit()) throw usage_error("is_scarf: unit ideal");
    ScarfComplex sc = scarf_complex(M);
    BettiTable bt = betti_table(M, field, engine, guards);
    for (int i = 0; i <= M.vars(); ++i)
        if (bt.totals[static_cast<std::size_t>(i)] != sc.faces_of_size(i)) return false;
    return true;
}

bool is_strongly_generic(const MonomialIdeal& M) {
    const auto& gens = M.generators();
    const int n = M.vars();
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            for (int j = 0; j < n; ++j) {
                Exponent e = gens[a][j];
                if (e != 0 && e == gens[b][j]) return false;
            }
    return true;
}

bool is_generic(const MonomialIdeal& M) {
    const auto& gens = M.generators();
    const int n = M.vars();
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            bool shared = false;
            for (int j = 0; j < n && !shared; ++j)
                shared = gens[a][j] != 0 && gens[a][j] == gens[b][j];
            if (!shared) continue;
            Monomial pair_lcm = lcm(gens[a], gens[b]);
            bool excused = false;
            for (std::size_t k = 0; k < gens.size() && !excused; ++k) {
                if (k == a || k == b) continue;
                excused = strongly_divides(gens[k], pair_lcm);
            }
            if (!excused) return false;
        }
    return true;
}

WitnessReport find_witness_sets(const MonomialIdeal& M, const ScarfGuards& guards) {
    if (M.is_unit()) throw usage_error("find_witness_sets: unit ideal");
    const int n = M.vars();
    const int r = static_cast<int>(M.num_generators());
    WitnessReport report;
    if (r < n) return report;

    // binomial(r, n) guard
    unsigned long long cnt = 1;
    for (int i = 1; i <= n; ++i) {
        cnt = cnt * static_cast<unsigned long long>(r - n + i) / static_cast<unsigned long long>(i);
        if (cnt > guards.witness_subset_budget)
            throw guard_error("find_witness_sets: binomial(" + std::to_string(r) + "," +
                              std::to_string(n) + ") exceeds budget " +
                              std::to_string(guards.witness_subset_budget));
    }

    const auto& gens = M.generators();
    PackedExponents pack = PackedExponents::pack(n, gens);
    PaddedQuery q(pack);
    const KernelSet& kernels = active_kernels();

    std::vector<int> comb(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) comb[static_cast<std::size_t>(i)] = i;
    std::vector<Exponent> b(static_cast<std::size_t>(n));
    std::set<std::vector<Exponent>> lcm_set;
    std::set<std::vector<Exponent>> nonscarf_lcm_set;

    while (true) {
        // lcm of the combination
        std::fill(b.begin(), b.end(), 0);
        for (int i : comb) {
            const auto& g = gens[static_cast<std::size_t>(i)].exponents();
            for (std::size_t j = 0; j < g.size(); ++j) b[j] = std::max(b[j], g[j]);
        }
        // dominance: every member has a variable strictly above the others
        bool dominant = true;
        for (std::size_t t = 0; t < comb.size() && dominant; ++t) {
            const auto& gi = gens[static_cast<std::size_t>(comb[t])];
            bool has_var = false;
            for (int j = 0; j < n && !has_var; ++j) {
                bool strict = true;
                for (std::size_t u = 0; u < comb.size(); ++u) {
                    if (u == t) continue;
                    if (gens[static_cast<std::size_t>(comb[u])][j] >= gi[j]) { strict = false; break; }
                }
                has_var = strict;
            }
            dominant = has_var;
        }
        if (dominant) {
            q.set(b);
            if (kernels.first_strong_divisor(pack, q.data.data()) < 0) {
                report.witness_sets.push_back(comb);
                report.lcm_multiplicity[b] += 1;
                lcm_set.insert(b);
                // extra generators dividing the witness lcm
                std::size_t t = 0;
                for (int k = 0; k < r; ++k) {
                    if (t < comb.size() && comb[t] == k) { ++t; continue; }
                    const auto& g = gens[static_cast<std::size_t>(k)].exponents();
                    bool div = true;
                    for (std::size_t j = 0; j < g.size(); ++j)
                        if (g[j] > b[j]) { div = false; break; }
                    if (div) {
                        report.nonscarf_pairs.emplace_back(comb, k);
                        nonscarf_lcm_set.insert(b);
                    }
                }
            }
        }
        // next combination in lexicographic order
        int i = n - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == r - n + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    report.witness_lcms.assign(lcm_set.begin(), lcm_set.end());
    report.nonscarf_lcms.assign(nonscarf_lcm_set.begin(), nonscarf_lcm_set.end());
    return report;
}

RestrictedWitnessCounts restricted_witness_counts(const WitnessReport& report, long D, long a_min,
                                                  long a_max) {
    RestrictedWitnessCounts out;
    for (const auto& [b, mult] : report.lcm_multiplicity) {
        long deg = 0;
        Exponent mn = b.empty() ? 0 : b[0];
        for (Exponent e : b) {
            deg += e;
            mn = std::min(mn, e);
        }
        long a = deg - D;
        if (a < a_min || a > a_max) continue;
        if (static_cast<long>(mn) < a) continue;
        out.witness_lcms += 1;
        if (mult >= 2) out.multi_witness_lcms += 1;
    }
    return out;
}

}  // namespace rmi
