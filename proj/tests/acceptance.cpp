// End-to-end verification suite. Each criterion prints PASS/FAIL lines and
// the process exits nonzero if any requested check fails.
//
// Two clauses are kept faithful to their sources and are genuinely red, with
// exact counterexamples printed rather than weakened tolerances: parts of the
// printed sandwich constants in criterion 6, and the "generic equals strongly
// generic" clause of criterion 8. Everything else is green.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rmi/analytic.hpp"
#include "rmi/betti.hpp"
#include "rmi/experiments.hpp"
#include "rmi/monomial.hpp"
#include "rmi/rng.hpp"
#include "rmi/sampler.hpp"
#include "rmi/scarf.hpp"

using namespace rmi;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string secs(const Timer& t) {
    std::ostringstream ss;
    ss.precision(1);
    ss << std::fixed << t.seconds() << " s";
    return ss.str();
}

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

std::string data_path(const std::string& name) { return std::string(RMI_DATA_DIR) + "/" + name; }

MonomialIdeal pure_powers(int n, Exponent D) {
    std::vector<Monomial> gens;
    for (int i = 0; i < n; ++i) {
        std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = D;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::from_minimal(n, std::move(gens));
}

// ---------------------------------------------------------------------------
// criterion 1: the 10-variable golden ideal
// ---------------------------------------------------------------------------
void criterion1() {
    Timer timer;
    MonomialIdeal M = read_ideal_file(data_path("example_ideal_10vars.txt"));
    BettiTable bt = betti_table(M, {}, BettiEngine::Taylor);
    const std::vector<long long> expect{1, 10, 45, 114, 168, 147, 75, 20, 2, 0, 0};
    report("c1 Betti totals equal 1,10,45,114,168,147,75,20,2", bt.totals == expect,
           "got " + bt.totals_line());
    report("c1 ideal is Scarf", is_scarf(M));
    report("c1 ideal is not strongly generic", !is_strongly_generic(M));
    report("c1 runtime <= 60 s", timer.seconds() <= 60.0, secs(timer));
}

// ---------------------------------------------------------------------------
// criterion 2: pure-power ideals, n = 2..5, D = 3
// ---------------------------------------------------------------------------
void criterion2() {
    Timer timer;
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 5 && ok; ++n) {
        MonomialIdeal M = pure_powers(n, 3);
        BettiTable bt = betti_table(M);
        for (int i = 0; i <= n; ++i)
            if (bt.totals[static_cast<std::size_t>(i)] != binom_ll(n, i)) {
                ok = false;
                detail = "beta mismatch at n=" + std::to_string(n) + ", i=" + std::to_string(i);
            }
        if (bt.projective_dimension() != n) { ok = false; detail = "pdim"; }
        if (krull_dimension(M) != 0) { ok = false; detail = "dim"; }
        if (!is_cohen_macaulay(M)) { ok = false; detail = "cm"; }
        ScarfComplex sc = scarf_complex(M);
        for (int s = 0; s <= n; ++s)
            if (sc.faces_of_size(s) != binom_ll(n, s)) { ok = false; detail = "scarf simplex"; }
    }
    report("c2 pure powers n=2..5: beta_i = C(n,i), pdim = n, dim = 0, CM, full simplex", ok,
           detail);
    report("c2 runtime <= 5 s", timer.seconds() <= 5.0, secs(timer));
}

// shared invariant checks for one sampled ideal; returns a short violation
// tag or empty
std::string hard_invariants(const MonomialIdeal& M, const BettiTable& bt,
                            const WitnessReport& wr, const ScarfComplex& sc) {
    const int n = M.vars();
    const int pdim = bt.projective_dimension();
    if (pdim > n) return "pdim > n";
    if (wr.any() != (pdim == n)) return "dual oracle";
    for (const auto& alpha : wr.witness_lcms)
        if (bt.entry(n, alpha) == 0) return "witness lcm without Betti entry";
    for (int i = 1; i <= n; ++i)
        if (sc.faces_of_size(i) > bt.totals[static_cast<std::size_t>(i)]) return "f > beta";
    if (pdim == n)
        for (int i = 1; i <= n; ++i)
            if (bt.totals[static_cast<std::size_t>(i)] < binom_ll(n, i)) return "beta < C(n,i)";
    bool scarf = true;
    for (int i = 0; i <= n; ++i) {
        long long fv = i == 0 ? 1 : (M.is_zero() ? 0 : sc.faces_of_size(i));
        if (bt.totals[static_cast<std::size_t>(i)] != fv) { scarf = false; break; }
    }
    if (is_strongly_generic(M) && !scarf) return "strongly generic but not Scarf";
    if (is_generic(M) && !scarf) return "generic but not Scarf";
    if (!wr.nonscarf_pairs.empty() && scarf) return "non-Scarf pair on Scarf ideal";
    if (is_cohen_macaulay(M) != (krull_dimension(M) == n - pdim)) return "CM identity";
    return "";
}

// ---------------------------------------------------------------------------
// criterion 3: dual oracle over sampled ideals
// ---------------------------------------------------------------------------
void criterion3() {
    Timer timer;
    const int n = 3;
    const long D = 8;
    const std::vector<mpq_class> ps{{1, 100}, {1, 20}, {1, 10}, {3, 10}};
    const long per_p = 150;
    long total = 0, mismatches = 0, missing_entries = 0, other_violations = 0, skipped = 0;
    long gen_sg = 0;
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        BernoulliSpec bern = BernoulliSpec::from_rational(ps[pi]);
        for (long t = 0; t < per_p; ++t) {
            std::uint64_t seed = derive_seed(
                0xACCE97, trial_stream(static_cast<std::uint64_t>(pi), static_cast<std::uint64_t>(t)));
            MonomialIdeal M = sample_ideal(n, D, bern, seed);
            WitnessReport wr;
            BettiTable bt;
            try {
                wr = find_witness_sets(M);
                bt = betti_table(M);
            } catch (const guard_error&) {
                ++skipped;
                continue;
            }
            ++total;
            if (wr.any() != (bt.projective_dimension() == n)) ++mismatches;
            for (const auto& alpha : wr.witness_lcms)
                if (bt.entry(n, alpha) == 0) ++missing_entries;
            ScarfComplex sc = scarf_complex(M);
            std::string v = hard_invariants(M, bt, wr, sc);
            if (!v.empty() && v != "dual oracle") ++other_violations;
            if (is_generic(M) != is_strongly_generic(M)) ++gen_sg;
        }
    }
    report("c3 witness existence == (pdim == n) over " + std::to_string(total) + " ideals",
           total >= 500 && mismatches == 0,
           std::to_string(mismatches) + " mismatches, " + std::to_string(skipped) + " skipped");
    report("c3 every witness lcm has a nonzero Betti entry at (n, alpha)", missing_entries == 0,
           std::to_string(missing_entries) + " missing");
    report("c3 companion hard invariants on the same samples", other_violations == 0,
           std::to_string(other_violations) + " violations; generic/sg disagreements " +
               std::to_string(gen_sg) + " (tallied under c8)");
    report("c3 runtime <= 600 s", timer.seconds() <= 600.0, secs(timer));
}

// ---------------------------------------------------------------------------
// criterion 4: the explicit non-Scarf witness construction
// ---------------------------------------------------------------------------
void criterion4() {
    Timer timer;
    auto mono = [](std::vector<Exponent> e) { return Monomial(std::move(e)); };
    MonomialIdeal M = MonomialIdeal::from_minimal(
        3, {mono({3, 1, 0}), mono({0, 3, 1}), mono({2, 0, 2}), mono({1, 1, 2})});
    // canonical (lex-descending) generator order:
    // 0 = x^3y, 1 = x^2z^2, 2 = xyz^2, 3 = y^3z
    WitnessReport wr = find_witness_sets(M);
    const std::vector<int> L{0, 1, 3};  // {x^3y, x^2z^2, y^3z}
    bool has_L = false;
    for (const auto& s : wr.witness_sets) has_L |= s == L;
    bool has_pair = false;
    for (const auto& [s, g] : wr.nonscarf_pairs) has_pair |= (s == L && g == 2);
    bool lcm_ok = !wr.witness_lcms.empty() && wr.witness_lcms[0] == std::vector<Exponent>{3, 3, 2};
    report("c4 witness set {x^3y, y^3z, x^2z^2} with lcm (3,3,2)", has_L && lcm_ok);
    report("c4 non-Scarf pair (L, xyz^2)", has_pair);
    BettiTable bt = betti_table(M);
    ScarfComplex sc = scarf_complex(M);
    report("c4 not Scarf and beta_3 > f_2", !is_scarf(M) && bt.totals[3] > sc.faces_of_size(3),
           "beta_3 = " + std::to_string(bt.totals[3]) +
               ", f_2 = " + std::to_string(sc.faces_of_size(3)));
    report("c4 runtime <= 1 s", timer.seconds() <= 1.0, secs(timer));
}

// ---------------------------------------------------------------------------
// criterion 5: witness-lcm probability formula vs restricted Monte Carlo
// ---------------------------------------------------------------------------
void criterion5() {
    Timer timer;
    const long trials = 100000;

    auto mc_check = [&](int n, long a, const mpq_class& p, std::uint64_t salt) {
        // alpha = (a,...,a) with D = (n-1)a; only the divisors of x^alpha can
        // influence the event, so the trial samples exactly those and asks
        // the witness machinery whether alpha shows up as a witness lcm.
        const long D = static_cast<long>(n - 1) * a;
        std::vector<Monomial> divisors;
        {
            GradedEnumerator it(n, D);
            std::vector<Exponent> e;
            while (it.next(e)) {
                bool div = true;
                for (int j = 0; j < n; ++j)
                    if (e[static_cast<std::size_t>(j)] > a) { div = false; break; }
                if (div) divisors.emplace_back(e);
            }
        }
        std::vector<Exponent> alpha(static_cast<std::size_t>(n), static_cast<Exponent>(a));
        BernoulliSpec bern = BernoulliSpec::from_rational(p);
        long hits = 0;
        for (long t = 0; t < trials; ++t) {
            Xoshiro256StarStar rng(derive_seed(salt, static_cast<std::uint64_t>(t)));
            std::vector<Monomial> gens;
            for (const Monomial& d : divisors)
                if (bern.draw(rng)) gens.push_back(d);
            MonomialIdeal M = MonomialIdeal::from_minimal(n, std::move(gens));
            WitnessReport wr = find_witness_sets(M);
            for (const auto& b : wr.witness_lcms)
                if (b == alpha) { ++hits; break; }
        }
        double freq = static_cast<double>(hits) / static_cast<double>(trials);
        double expect = prob_witness_lcm(n, a, p).get_d();
        double se = std::sqrt(std::max(1e-12, expect * (1 - expect) / static_cast<double>(trials)));
        double dev = std::abs(freq - expect) / se;
        std::ostringstream d;
        d.precision(5);
        d << std::fixed << "freq " << freq << " vs formula " << expect << ", " << std::setprecision(2)
          << dev << " sigma";
        report("c5 n=" + std::to_string(n) + " a=" + std::to_string(a) + " p=" + p.get_str(),
               dev <= 4.0, d.str());
    };

    const mpq_class p(1, 10);
    mc_check(3, 3, p, 0xC5A0);
    mc_check(3, 4, p, 0xC5A1);
    mc_check(3, 5, p, 0xC5A2);
    // n = 2: the closed form collapses to p^2 q^{a-1}
    mc_check(2, 3, p, 0xC5B0);
    mc_check(2, 4, p, 0xC5B1);
    mc_check(2, 5, p, 0xC5B2);
    report("c5 runtime <= 300 s", timer.seconds() <= 300.0, secs(timer));
}

// ---------------------------------------------------------------------------
// criterion 6: printed sandwich bounds over the dyadic grid
// ---------------------------------------------------------------------------
void criterion6() {
    Timer timer;
    struct Fails {
        long points = 0;
        long fails = 0;
        std::string example;
    };
    Fails w_lo, w_hi, y_lo, y_hi, y_hi_n2;
    auto note = [](Fails& f, bool ok, int n, int k, long a) {
        ++f.points;
        if (!ok) {
            ++f.fails;
            if (f.example.empty())
                f.example = "first at n=" + std::to_string(n) + " p=2^-" + std::to_string(k) +
                            " a=" + std::to_string(a);
        }
    };
    for (int n = 2; n <= 4; ++n) {
        for (int k = 4; k <= 12; ++k) {
            mpq_class p(1, 1L << k);
            long cap = 1;
            while (true) {
                mpz_class t;
                mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(cap + 1),
                              static_cast<unsigned long>(n - 1));
                if (mpq_class(t) * p > 1) break;
                ++cap;
            }
            for (long a = 1; a <= cap; ++a) {
                mpq_class m(count_monomials(n - 1, a - n + 1));
                mpq_class pw = prob_witness_lcm(n, a, p);
                mpq_class py = prob_multi_witness_lcm(n, a, p);
                mpq_class pmn = 1;
                for (int i = 0; i < n; ++i) pmn *= p * m;
                mpq_class pmn1 = pmn * p * m;
                note(w_lo, 2 * pw >= pmn, n, k, a);
                note(w_hi, pw <= pmn, n, k, a);
                note(y_lo, 4 * py >= pmn1, n, k, a);
                note(y_hi, 2 * py <= pmn1, n, k, a);
                note(y_hi_n2, 2 * py <= n * pmn1, n, k, a);
            }
        }
    }
    auto line = [&](const std::string& name, const Fails& f) {
        report(name, f.fails == 0,
               std::to_string(f.fails) + "/" + std::to_string(f.points) + " grid points fail" +
                   (f.fails ? "; " + f.example : ""));
    };
    line("c6 (1/2) p^n m^n <= P(w_alpha)", w_lo);
    line("c6 P(w_alpha) <= p^n m^n", w_hi);
    line("c6 (1/4) p^{n+1} m^{n+1} <= P(y_alpha)", y_lo);
    line("c6 P(y_alpha) <= (1/2) p^{n+1} m^{n+1}", y_hi);
    std::cout << "INFO  c6 with the union-bound constant n/2 instead of 1/2, the upper bound "
              << (y_hi_n2.fails == 0 ? "holds at every grid point" : "still fails") << std::endl;
    std::cout << "INFO  c6 the failing families are exact-arithmetic counterexamples to the "
                 "printed constants; see tests and notes for the derivation" << std::endl;
    report("c6 runtime <= 60 s", timer.seconds() <= 60.0, secs(timer));
}

// ---------------------------------------------------------------------------
// criterion 7: monotone threshold trends at n = 3
// ---------------------------------------------------------------------------
SweepRecord run_trend_cell(long D, const mpq_class& coeff, const mpq_class& expo, long trials,
                           std::uint64_t cell_index) {
    ExperimentConfig cfg;
    Cell cell;
    cell.n = 3;
    cell.D = D;
    cell.p = PSpec::power_law(coeff, expo).resolve(D);
    if (cell.p > 1) cell.p = 1;
    cfg.cells.push_back(cell);
    cfg.trials = trials;
    cfg.master_seed = 0x7EEDC0DE;
    cfg.seed_set = true;
    cfg.workers = 2;
    return run_cell(cfg, cell, cell_index);
}

double freq_of(const SweepRecord& r, long long count) {
    return r.denominator() > 0 ? static_cast<double>(count) / static_cast<double>(r.denominator())
                               : 0.0;
}

void criterion7() {
    Timer timer;
    const long trials = 1000;
    const std::vector<long> Ds{10, 20, 40};
    std::uint64_t cell_index = 0;
    const double slack = 3.0 * std::sqrt(0.25 / static_cast<double>(trials));
    auto fmt = [](double x) {
        std::ostringstream ss;
        ss.precision(3);
        ss << std::fixed << x;
        return ss.str();
    };

    // (a) pdim trend along p = c * D^-2
    {
        const std::vector<mpq_class> cs{{1, 10}, 1, 10, 100};
        bool monotone = true, top_ok = true, bottom_ok = true;
        std::string detail;
        for (long D : Ds) {
            std::vector<double> freq_pdim, freq_nonzero;
            for (const mpq_class& c : cs) {
                SweepRecord r = run_trend_cell(D, c, mpq_class(-2), trials, cell_index++);
                freq_pdim.push_back(freq_of(r, r.count_pdim_n));
                freq_nonzero.push_back(freq_of(r, r.count_nonzero));
            }
            for (std::size_t i = 1; i < freq_pdim.size(); ++i)
                if (freq_pdim[i] + slack < freq_pdim[i - 1]) monotone = false;
            if (freq_pdim.back() < 0.9) top_ok = false;
            if (freq_nonzero.front() > 0.1) bottom_ok = false;
            detail += "D=" + std::to_string(D) + ":";
            for (double f : freq_pdim) detail += " " + fmt(f);
            detail += ";";
        }
        report("c7a freq(pdim = 3) non-decreasing along p = c*D^-2, c in {0.1,1,10,100}", monotone,
               detail);
        report("c7a freq(pdim = 3) >= 0.9 at c = 100", top_ok);
        report("c7a freq(nonzero ideal) <= 0.1 at c = 0.1", bottom_ok);
    }

    // (b) strongly-generic trend along p = c * D^-3/2, conditioned on G nonempty
    {
        const std::vector<mpq_class> cs{{1, 10}, 1, 10};
        bool decreasing = true;
        std::string detail;
        for (long D : Ds) {
            std::vector<double> freq_sg;
            for (const mpq_class& c : cs) {
                SweepRecord r = run_trend_cell(D, c, mpq_class(-3, 2), trials, cell_index++);
                long long nz = r.count_nonzero;
                long long zero_trials = r.denominator() - nz;
                // empty samples are vacuously strongly generic; strip them
                freq_sg.push_back(nz > 0 ? static_cast<double>(r.count_strongly_generic -
                                                               zero_trials) /
                                               static_cast<double>(nz)
                                         : 1.0);
            }
            for (std::size_t i = 1; i < freq_sg.size(); ++i)
                if (freq_sg[i] > freq_sg[i - 1] + slack) decreasing = false;
            detail += "D=" + std::to_string(D) + ":";
            for (double f : freq_sg) detail += " " + fmt(f);
            detail += ";";
        }
        report("c7b freq(strongly generic | nonzero) decreasing along p = c*D^-3/2, c in {0.1,1,10}",
               decreasing, detail);
    }

    // (c) Scarf frequency above the non-Scarf curve vs below the generic curve
    {
        bool ordered = true;
        std::string detail;
        for (long D : Ds) {
            SweepRecord hi = run_trend_cell(D, 10, mpq_class(-4, 3), trials, cell_index++);
            SweepRecord lo = run_trend_cell(D, mpq_class(1, 10), mpq_class(-3, 2), trials,
                                            cell_index++);
            auto cond_scarf = [](const SweepRecord& r) {
                long long nz = r.count_nonzero;
                long long zero_trials = r.denominator() - nz;
                return nz > 0 ? static_cast<double>(r.count_scarf - zero_trials) /
                                    static_cast<double>(nz)
                              : 1.0;
            };
            double f_hi = cond_scarf(hi), f_lo = cond_scarf(lo);
            if (!(f_hi < f_lo + slack)) ordered = false;
            detail += "D=" + std::to_string(D) + ": " + fmt(f_hi) + " < " + fmt(f_lo) + ";";
        }
        report("c7c freq(Scarf | nonzero) at p = 10*D^-4/3 below its value at p = 0.1*D^-3/2",
               ordered, detail);
    }
    report("c7 runtime <= 1800 s", timer.seconds() <= 1800.0, secs(timer));
}

// ---------------------------------------------------------------------------
// criterion 8: invariant suite over sampled ideals
// ---------------------------------------------------------------------------
void criterion8() {
    Timer timer;
    // The criterion-7 sweeps enforce the hard invariants on every single
    // trial inside the harness (any violation throws and fails c7). This
    // pass re-checks a representative slice of the criterion-3/7 cells
    // standalone, recomputing each invariant from its independent
    // ingredients, and tallies the one clause with genuine counterexamples.
    long total = 0, violations = 0, gen_sg_disagree = 0, skipped = 0;
    std::string first_violation, example;
    struct CellSpec {
        long D;
        mpq_class p;
    };
    std::vector<CellSpec> cells{
        {8, {1, 20}}, {8, {1, 10}}, {8, {3, 10}}, {10, {1, 25}}, {20, {1, 89}}};
    const long per_cell = 200;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        BernoulliSpec bern = BernoulliSpec::from_rational(cells[ci].p);
        for (long t = 0; t < per_cell; ++t) {
            std::uint64_t seed = derive_seed(
                0x8BA51A5, trial_stream(static_cast<std::uint64_t>(ci), static_cast<std::uint64_t>(t)));
            MonomialIdeal M = sample_ideal(3, cells[ci].D, bern, seed);
            BettiTable bt;
            WitnessReport wr;
            try {
                wr = find_witness_sets(M);
                bt = betti_table(M);
            } catch (const guard_error&) {
                ++skipped;
                continue;
            }
            ++total;
            ScarfComplex sc = scarf_complex(M);
            std::string v = hard_invariants(M, bt, wr, sc);
            if (!v.empty()) {
                ++violations;
                if (first_violation.empty()) first_violation = v;
            }
            if (is_generic(M) != is_strongly_generic(M)) {
                ++gen_sg_disagree;
                if (example.empty()) {
                    std::ostringstream e;
                    write_ideal(e, M);
                    example = e.str();
                    for (auto& ch : example)
                        if (ch == '\n') ch = ';';
                }
            }
        }
    }
    report("c8 hard invariants: pdim <= n, dual oracle, witness Betti entries, f <= beta, "
           "BEH bound, sg/generic => Scarf, CM identity",
           violations == 0,
           std::to_string(total) + " ideals, " + std::to_string(violations) + " violations" +
               (first_violation.empty() ? "" : "; first: " + first_violation));
    report("c8 generic == strongly generic on every equigenerated sample", gen_sg_disagree == 0,
           std::to_string(gen_sg_disagree) + "/" + std::to_string(total) +
               " samples are generic but not strongly generic" +
               (example.empty() ? "" : "; e.g. " + example));
    report("c8 runtime", timer.seconds() <= 60.0, secs(timer));
}

// ---------------------------------------------------------------------------
// criterion 9: byte-identical sweep outputs across runs and worker counts
// ---------------------------------------------------------------------------
void criterion9() {
    Timer timer;
    auto run_once = [&](int workers, const std::string& tag) {
        std::istringstream cfg_text(
            "n = 3\n"
            "D = 6, 8\n"
            "p = 0.05, 0.2\n"
            "trials = 120\n"
            "seed = 987654321\n");
        ExperimentConfig cfg = parse_config(cfg_text);
        cfg.workers = workers;
        cfg.csv_path = "/tmp/rmi_acceptance_" + tag + ".csv";
        cfg.pgm_path = "/tmp/rmi_acceptance_" + tag + ".pgm";
        cfg.pgm_event = "scarf";
        run_sweep(cfg);
        auto slurp = [](const std::string& p) {
            std::ifstream in(p, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        std::string all = slurp(cfg.csv_path) + "\x01" + slurp(cfg.pgm_path) + "\x01" +
                          slurp(cfg.pgm_path + ".txt");
        std::remove(cfg.csv_path.c_str());
        std::remove(cfg.pgm_path.c_str());
        std::remove((cfg.pgm_path + ".txt").c_str());
        return all;
    };
    std::string w1 = run_once(1, "w1");
    std::string w1b = run_once(1, "w1b");
    std::string w8 = run_once(8, "w8");
    report("c9 identical CSV+PGM across repeated runs", w1 == w1b && !w1.empty());
    report("c9 identical CSV+PGM at workers 1 and 8", w1 == w8);
    report("c9 runtime", timer.seconds() <= 900.0, secs(timer));
}

}  // namespace

int main(int argc, char** argv) {
    int which = 0;  // 0 = all
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) which = std::atoi(argv[++i]);
    void (*runners[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                           criterion6, criterion7, criterion8, criterion9};
    try {
        if (which >= 1 && which <= 9) {
            runners[which - 1]();
        } else {
            for (auto* r : runners) r();
        }
    } catch (const std::exception& e) {
        std::cout << "FAIL  unexpected exception: " << e.what() << std::endl;
        return 1;
    }
    if (g_failures) {
        std::cout << g_failures << " criterion check(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all requested criteria passed" << std::endl;
    return 0;
}
