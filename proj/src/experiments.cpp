#include "rmi/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "rmi/analytic.hpp"
#include "rmi/rng.hpp"

namespace rmi {

// ---------------------------------------------------------------------------
// probability specs
// ---------------------------------------------------------------------------

PSpec PSpec::exact_value(mpq_class p) {
    PSpec s;
    s.kind = Kind::Exact;
    s.exact = std::move(p);
    return s;
}

PSpec PSpec::power_law(mpq_class coeff, mpq_class exponent) {
    PSpec s;
    s.kind = Kind::PowerLaw;
    s.coeff = std::move(coeff);
    s.exponent = std::move(exponent);
    return s;
}

mpq_class PSpec::resolve(long D) const {
    if (kind == Kind::Exact) return exact;
    if (D < 1) throw usage_error("power-law p needs D >= 1");
    if (coeff < 0) throw usage_error("power-law coefficient must be >= 0");
    if (coeff == 0) return mpq_class(0);
    // X = 2^65 * coeff * D^(u/v); the sampled p is ((floor(X)+1)>>1) / 2^64,
    // i.e. c*D^e rounded to the nearest multiple of 2^-64 (half up).
    mpz_class u = exponent.get_num(), v = exponent.get_den();  // v > 0 canonical
    if (!v.fits_ulong_p() || v.get_ui() > 64) throw usage_error("exponent denominator too large");
    unsigned long ve = v.get_ui();
    mpz_class cn = coeff.get_num(), cd = coeff.get_den();
    mpz_class Dz(D);
    mpz_class du;  // D^|u|
    if (!mpz_class(abs(u)).fits_ulong_p()) throw usage_error("exponent too large");
    mpz_pow_ui(du.get_mpz_t(), Dz.get_mpz_t(), mpz_class(abs(u)).get_ui());
    mpz_class base = (mpz_class(1) << 65) * cn;  // 2^65 * cn
    mpz_class lhs_fixed, rhs_fixed;
    mpz_pow_ui(rhs_fixed.get_mpz_t(), base.get_mpz_t(), ve);  // (2^65 cn)^v
    if (u >= 0) rhs_fixed *= du;
    // t <= X  <=>  t^v * cd^v * (u<0 ? D^|u| : 1) <= (2^65 cn)^v * (u>=0 ? D^u : 1)
    mpz_class cdv;
    mpz_pow_ui(cdv.get_mpz_t(), cd.get_mpz_t(), ve);
    mpz_class lhs_mult = cdv;
    if (u < 0) lhs_mult *= du;
    auto le_X = [&](const mpz_class& t) {
        mpz_class tp;
        mpz_pow_ui(tp.get_mpz_t(), t.get_mpz_t(), ve);
        return tp * lhs_mult <= rhs_fixed;
    };
    mpz_class lo = 0, hi = 1;
    while (le_X(hi)) hi <<= 1;
    while (lo < hi - 1) {
        mpz_class mid = (lo + hi) / 2;
        if (le_X(mid)) lo = mid;
        else hi = mid;
    }
    mpz_class T = (lo + 1) >> 1;
    mpz_class cap = mpz_class(1) << 64;
    if (T >= cap) return mpq_class(1);
    mpq_class p(T, cap);
    p.canonicalize();
    return p;
}

Measurements Measurements::none() {
    Measurements m;
    m.pdim = m.generic = m.strongly_generic = m.scarf = m.cohen_macaulay = false;
    m.betti_means = m.witness_counts = false;
    return m;
}

void ExperimentConfig::validate() const {
    if (cells.empty()) throw usage_error("config has no cells");
    if (trials < 1) throw usage_error("trials must be >= 1");
    if (!seed_set) throw usage_error("sweep requires an explicit seed");
    if (workers < 1) throw usage_error("workers must be >= 1");
    field.validate();
    for (const Cell& c : cells) {
        if (c.n < 1 || c.n > kMaxVars) throw usage_error("cell n out of range");
        if (c.D < 1 || c.D > kMaxDegree) throw usage_error("cell D out of range");
        if (c.p < 0 || c.p > 1) throw usage_error("cell p out of [0,1]");
    }
}

// ---------------------------------------------------------------------------
// config file parsing
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& t : out) {
        std::size_t a = t.find_first_not_of(" \t");
        std::size_t b = t.find_last_not_of(" \t");
        t = a == std::string::npos ? "" : t.substr(a, b - a + 1);
        if (t.empty()) throw usage_error("empty list element");
    }
    return out;
}

mpq_class parse_rational(const std::string& s) {
    // fractions or decimals, sign allowed (exponents use this too)
    if (s.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw usage_error("bad rational: " + s);
        q.canonicalize();
        return q;
    }
    bool neg = !s.empty() && s[0] == '-';
    std::string body = neg || (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    mpq_class q = parse_exact_probability("0");  // placeholder canonical zero
    // reuse the exact decimal parser but without the [0,1] clamp
    std::size_t dot = body.find('.');
    std::string digits = body;
    long frac = 0;
    if (dot != std::string::npos) {
        digits = body.substr(0, dot) + body.substr(dot + 1);
        frac = static_cast<long>(body.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw usage_error("bad rational: " + s);
    mpz_class num(digits, 10);
    mpz_class den, ten(10);
    mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(frac));
    q = mpq_class(neg ? -num : num, den);
    q.canonicalize();
    return q;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    std::vector<int> n_list;
    std::vector<long> D_list;
    std::vector<PSpec> p_list;
    std::vector<mpq_class> coeff_list;
    std::optional<mpq_class> p_exponent;
    bool measure_set = false;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw usage_error("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            std::size_t x = s.find_first_not_of(" \t\r");
            std::size_t y = s.find_last_not_of(" \t\r");
            s = x == std::string::npos ? "" : s.substr(x, y - x + 1);
        };
        trim(key);
        trim(value);
        try {
            if (key == "n") {
                for (const auto& t : split_list(value)) n_list.push_back(std::stoi(t));
            } else if (key == "D") {
                for (const auto& t : split_list(value)) D_list.push_back(std::stol(t));
            } else if (key == "p") {
                for (const auto& t : split_list(value))
                    p_list.push_back(PSpec::exact_value(parse_exact_probability(t)));
            } else if (key == "p_coeff") {
                for (const auto& t : split_list(value)) coeff_list.push_back(parse_rational(t));
            } else if (key == "p_exponent") {
                p_exponent = parse_rational(value);
            } else if (key == "trials") {
                cfg.trials = std::stol(value);
            } else if (key == "seed") {
                cfg.master_seed = std::stoull(value);
                cfg.seed_set = true;
            } else if (key == "workers") {
                cfg.workers = std::stoi(value);
            } else if (key == "field") {
                cfg.field.characteristic = std::stoul(value);
            } else if (key == "csv") {
                cfg.csv_path = value;
            } else if (key == "pgm") {
                cfg.pgm_path = value;
            } else if (key == "pgm_event") {
                cfg.pgm_event = value;
            } else if (key == "bucket_by_generators") {
                cfg.bucket_by_generators = value == "1" || value == "true";
            } else if (key == "measure") {
                measure_set = true;
                cfg.measure = Measurements::none();
                for (const auto& t : split_list(value)) {
                    if (t == "pdim") cfg.measure.pdim = true;
                    else if (t == "generic") cfg.measure.generic = true;
                    else if (t == "strongly_generic") cfg.measure.strongly_generic = true;
                    else if (t == "scarf") cfg.measure.scarf = true;
                    else if (t == "cohen_macaulay") cfg.measure.cohen_macaulay = true;
                    else if (t == "betti_means") cfg.measure.betti_means = true;
                    else if (t == "witness_counts") cfg.measure.witness_counts = true;
                    else if (t == "all") cfg.measure = Measurements::all();
                    else throw usage_error("unknown measurement: " + t);
                }
            } else {
                throw usage_error("unknown key: " + key);
            }
        } catch (const usage_error&) {
            throw;
        } catch (const std::exception& e) {
            throw usage_error("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    (void)measure_set;

    if (n_list.empty()) throw usage_error("config missing n");
    if (D_list.empty()) throw usage_error("config missing D");
    if (!coeff_list.empty()) {
        if (!p_exponent) throw usage_error("p_coeff requires p_exponent");
        for (const auto& c : coeff_list) p_list.push_back(PSpec::power_law(c, *p_exponent));
    }
    if (p_list.empty()) throw usage_error("config missing p (or p_coeff/p_exponent)");
    for (int n : n_list)
        for (long D : D_list)
            for (const PSpec& ps : p_list) {
                Cell c;
                c.n = n;
                c.D = D;
                c.p = ps.resolve(D);
                if (c.p > 1) c.p = 1;
                cfg.cells.push_back(std::move(c));
            }
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open config file: " + path);
    return parse_config(in);
}

// ---------------------------------------------------------------------------
// per-trial measurement
// ---------------------------------------------------------------------------

namespace {

struct TrialOutcome {
    bool skipped = false;
    std::string skip_reason;
    long long num_gens = 0;
    int pdim = 0;
    bool witness_exists = false;
    bool generic = false;
    bool strongly_generic = false;
    bool scarf = false;
    bool cm = false;
    std::vector<long long> beta;  // 0..n when betti measured
    std::vector<long long> f;     // f_0..f_{n-1} when scarf complex measured
    long long witness_lcms = 0;
    long long nonscarf_lcms = 0;
    bool has_betti = false;
    bool has_scarfc = false;
    bool has_witness = false;
};

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

void check_trial_invariants(const Cell& cell, std::uint64_t seed, const TrialOutcome& t,
                            const BettiTable* bt, const WitnessReport* wr) {
    const int n = cell.n;
    auto fail = [&](const std::string& what) {
        throw std::logic_error("invariant violation (n=" + std::to_string(n) +
                               ", D=" + std::to_string(cell.D) + ", seed=" + std::to_string(seed) +
                               "): " + what);
    };
    if (t.has_betti) {
        if (t.pdim > n) fail("pdim exceeds variable count");
        if (t.pdim == n)
            for (int i = 1; i <= n; ++i)
                if (t.beta[static_cast<std::size_t>(i)] < binom_ll(n, i))
                    fail("beta_i below binomial(n,i) at full projective dimension");
    }
    if (t.has_betti && t.has_witness && t.witness_exists != (t.pdim == n))
        fail("witness oracle disagrees with homology projective dimension");
    if (t.has_betti && t.has_witness && bt && wr) {
        for (const auto& alpha : wr->witness_lcms)
            if (bt->entry(n, alpha) == 0) fail("witness lcm missing from Betti table at degree n");
    }
    if (t.has_betti && t.has_scarfc) {
        // f_{i-1} <= beta_i, i = 1..n (f stored as f_0..f_{n-1})
        for (int i = 1; i <= n; ++i) {
            long long fv = i - 1 < static_cast<int>(t.f.size()) ? t.f[static_cast<std::size_t>(i - 1)] : 0;
            if (fv > t.beta[static_cast<std::size_t>(i)]) fail("scarf face count exceeds Betti number");
        }
        if (t.strongly_generic && !t.scarf) fail("strongly generic sample is not Scarf");
        if (t.generic && !t.scarf) fail("generic sample is not Scarf");
    }
    // generic vs strongly generic can genuinely disagree on equigenerated
    // samples (a third generator may strongly divide a sharing pair's lcm);
    // disagreements are counted and reported, not fatal.
    if (t.has_witness && t.has_betti && wr && !wr->nonscarf_pairs.empty() && t.has_scarfc && t.scarf)
        fail("non-Scarf witness pair on a Scarf sample");
}

TrialOutcome measure_trial(const ExperimentConfig& cfg, const Cell& cell,
                           const BernoulliSpec& bern, std::uint64_t seed) {
    TrialOutcome out;
    MonomialIdeal M = sample_ideal(cell.n, cell.D, bern, seed, cfg.sampler_guards);
    out.num_gens = static_cast<long long>(M.num_generators());
    const Measurements& m = cfg.measure;
    const bool need_witness = m.pdim || m.witness_counts;
    const bool need_betti = m.pdim || m.scarf || m.cohen_macaulay || m.betti_means;
    const bool need_scarfc = m.scarf || m.betti_means;

    std::optional<BettiTable> bt;
    std::optional<WitnessReport> wr;
    try {
        if (need_witness) {
            wr = find_witness_sets(M, cfg.scarf_guards);
            out.has_witness = true;
            out.witness_exists = wr->any();
            out.witness_lcms = static_cast<long long>(wr->witness_lcms.size());
            out.nonscarf_lcms = static_cast<long long>(wr->nonscarf_lcms.size());
        }
        if (need_betti) {
            bt = betti_table(M, cfg.field, BettiEngine::Auto, cfg.betti_guards);
            out.has_betti = true;
            out.beta = bt->totals;
            out.pdim = bt->projective_dimension();
        }
        if (need_scarfc) {
            ScarfComplex sc = scarf_complex(M);
            out.has_scarfc = true;
            out.f.assign(static_cast<std::size_t>(cell.n), 0);
            for (int i = 0; i < cell.n; ++i)
                out.f[static_cast<std::size_t>(i)] = sc.faces_of_size(i + 1);
            if (out.has_betti) {
                out.scarf = true;
                for (int i = 0; i <= cell.n; ++i) {
                    long long fv = i == 0 ? 1 : out.f[static_cast<std::size_t>(i - 1)];
                    if (M.is_zero()) fv = i == 0 ? 1 : 0;
                    if (bt->totals[static_cast<std::size_t>(i)] != fv) { out.scarf = false; break; }
                }
            }
        }
        if (m.cohen_macaulay && out.has_betti)
            out.cm = krull_dimension(M) == cell.n - out.pdim;
    } catch (const guard_error& e) {
        out.skipped = true;
        out.skip_reason = e.what();
        return out;
    }
    out.generic = is_generic(M);
    out.strongly_generic = is_strongly_generic(M);
    check_trial_invariants(cell, seed, out, bt ? &*bt : nullptr, wr ? &*wr : nullptr);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// cells and sweeps
// ---------------------------------------------------------------------------

SweepRecord run_cell(const ExperimentConfig& config, const Cell& cell, std::uint64_t cell_index) {
    auto t0 = std::chrono::steady_clock::now();
    SweepRecord rec;
    rec.cell = cell;
    rec.trials = config.trials;
    rec.seed = config.master_seed;
    rec.measured = config.measure;
    rec.sum_beta.assign(static_cast<std::size_t>(cell.n) + 1, 0);
    rec.sum_f.assign(static_cast<std::size_t>(cell.n), 0);

    BernoulliSpec bern = BernoulliSpec::from_rational(cell.p);
    const long T = config.trials;
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(T));
    const int W = static_cast<int>(std::min<long>(config.workers, T));

    auto work = [&](int w, std::exception_ptr& err) {
        try {
            for (long t = w; t < T; t += W) {
                std::uint64_t seed =
                    derive_seed(config.master_seed, trial_stream(cell_index, static_cast<std::uint64_t>(t)));
                outcomes[static_cast<std::size_t>(t)] = measure_trial(config, cell, bern, seed);
            }
        } catch (...) {
            err = std::current_exception();
        }
    };
    if (W <= 1) {
        std::exception_ptr err;
        work(0, err);
        if (err) std::rethrow_exception(err);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errs(static_cast<std::size_t>(W));
        for (int w = 0; w < W; ++w)
            threads.emplace_back(work, w, std::ref(errs[static_cast<std::size_t>(w)]));
        for (auto& th : threads) th.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    }

    for (const TrialOutcome& t : outcomes) {
        if (t.skipped) {
            rec.skipped += 1;
            rec.skip_reasons[t.skip_reason] += 1;
            continue;
        }
        rec.sum_num_gens += t.num_gens;
        if (t.num_gens > 0) rec.count_nonzero += 1;
        if (t.has_betti && t.pdim == cell.n) rec.count_pdim_n += 1;
        if (t.has_betti && t.pdim == 0) rec.count_pdim_0 += 1;
        if (t.generic) rec.count_generic += 1;
        if (t.strongly_generic) rec.count_strongly_generic += 1;
        if (t.generic != t.strongly_generic) rec.count_gen_sg_disagree += 1;
        if (t.has_scarfc && t.has_betti && t.scarf) rec.count_scarf += 1;
        if (t.cm) rec.count_cm += 1;
        if (t.has_betti)
            for (std::size_t i = 0; i < t.beta.size() && i < rec.sum_beta.size(); ++i)
                rec.sum_beta[i] += t.beta[i];
        if (t.has_betti && cell.n >= 2)
            rec.max_beta2 = std::max(rec.max_beta2, t.beta.size() > 2 ? t.beta[2] : 0);
        if (t.has_scarfc)
            for (std::size_t i = 0; i < t.f.size() && i < rec.sum_f.size(); ++i)
                rec.sum_f[i] += t.f[i];
        rec.sum_witness_lcms += t.witness_lcms;
        rec.sum_nonscarf_lcms += t.nonscarf_lcms;
    }
    rec.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

std::vector<SweepRecord> run_sweep(const ExperimentConfig& config) {
    config.validate();
    std::vector<SweepRecord> records;
    records.reserve(config.cells.size());
    for (std::size_t i = 0; i < config.cells.size(); ++i)
        records.push_back(run_cell(config, config.cells[i], static_cast<std::uint64_t>(i)));
    if (!config.csv_path.empty()) {
        std::ofstream out(config.csv_path, std::ios::binary);
        if (!out) throw usage_error("cannot write csv: " + config.csv_path);
        write_sweep_csv(out, records);
    }
    if (!config.pgm_path.empty()) emit_phase_diagram(records, config.pgm_event, config.pgm_path);
    return records;
}

std::vector<BettiStatsRecord> betti_stats(const ExperimentConfig& config) {
    config.validate();
    std::vector<BettiStatsRecord> out;
    for (std::size_t ci = 0; ci < config.cells.size(); ++ci) {
        const Cell& cell = config.cells[ci];
        BettiStatsRecord rec;
        rec.cell = cell;
        rec.trials = config.trials;
        BernoulliSpec bern = BernoulliSpec::from_rational(cell.p);
        std::map<long long, BettiBucket> buckets;
        for (long t = 0; t < config.trials; ++t) {
            std::uint64_t seed = derive_seed(config.master_seed,
                                             trial_stream(static_cast<std::uint64_t>(ci),
                                                          static_cast<std::uint64_t>(t)));
            TrialOutcome o = measure_trial(config, cell, bern, seed);
            if (o.skipped) {
                rec.skipped += 1;
                continue;
            }
            BettiBucket& b = buckets[o.num_gens];
            b.r = o.num_gens;
            if (b.sum_beta.empty()) b.sum_beta.assign(static_cast<std::size_t>(cell.n) + 1, 0);
            if (b.sum_f.empty()) b.sum_f.assign(static_cast<std::size_t>(cell.n), 0);
            b.count += 1;
            if (o.has_betti)
                for (std::size_t i = 0; i < o.beta.size() && i < b.sum_beta.size(); ++i)
                    b.sum_beta[i] += o.beta[i];
            if (o.has_betti && o.beta.size() > 2) b.max_beta2 = std::max(b.max_beta2, o.beta[2]);
            if (o.has_scarfc)
                for (std::size_t i = 0; i < o.f.size() && i < b.sum_f.size(); ++i)
                    b.sum_f[i] += o.f[i];
        }
        for (auto& [r, b] : buckets) rec.buckets.push_back(std::move(b));
        out.push_back(std::move(rec));
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV / PGM output
// ---------------------------------------------------------------------------

namespace {

std::string freq_str(long long count, long denom) {
    if (denom <= 0) return "nan";
    return decimal_string(mpq_class(static_cast<long>(count), denom), 6);
}

std::string mean_str(long long sum, long denom) {
    if (denom <= 0) return "nan";
    return decimal_string(mpq_class(static_cast<long>(sum), denom), 6);
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    int max_n = 1;
    for (const auto& r : records) max_n = std::max(max_n, r.cell.n);
    out << "# rmi sweep csv; frequencies/means have 6 fixed digits; exact fractions are"
           " count_*/(trials-skipped)\n";
    out << "schema_version,n,D,p_num,p_den,trials,skipped,seed,mean_num_gens,freq_pdim_n,"
           "freq_pdim_0,freq_generic,freq_strongly_generic,freq_scarf,freq_cm";
    for (int i = 1; i <= max_n; ++i) out << ",mean_beta_" << i;
    out << ",max_beta_2";
    for (int i = 0; i < max_n; ++i) out << ",mean_f_" << i;
    out << ",mean_witness_count,mean_nonscarf_count,count_nonzero,count_pdim_n,count_pdim_0,"
           "count_generic,count_strongly_generic,count_scarf,count_cm,count_gen_sg_disagree\n";
    for (const auto& r : records) {
        const long d = r.denominator();
        out << 1 << ',' << r.cell.n << ',' << r.cell.D << ',' << r.cell.p.get_num().get_str()
            << ',' << r.cell.p.get_den().get_str() << ',' << r.trials << ',' << r.skipped << ','
            << r.seed;
        out << ',' << mean_str(r.sum_num_gens, d);
        out << ',' << (r.measured.pdim ? freq_str(r.count_pdim_n, d) : "");
        out << ',' << (r.measured.pdim ? freq_str(r.count_pdim_0, d) : "");
        out << ',' << (r.measured.generic ? freq_str(r.count_generic, d) : "");
        out << ',' << (r.measured.strongly_generic ? freq_str(r.count_strongly_generic, d) : "");
        out << ',' << (r.measured.scarf ? freq_str(r.count_scarf, d) : "");
        out << ',' << (r.measured.cohen_macaulay ? freq_str(r.count_cm, d) : "");
        for (int i = 1; i <= max_n; ++i) {
            out << ',';
            if (r.measured.betti_means && i <= r.cell.n)
                out << mean_str(r.sum_beta[static_cast<std::size_t>(i)], d);
        }
        out << ',' << (r.measured.betti_means ? std::to_string(r.max_beta2) : "");
        for (int i = 0; i < max_n; ++i) {
            out << ',';
            if (r.measured.betti_means && i < r.cell.n)
                out << mean_str(r.sum_f[static_cast<std::size_t>(i)], d);
        }
        out << ',' << (r.measured.witness_counts ? mean_str(r.sum_witness_lcms, d) : "");
        out << ',' << (r.measured.witness_counts ? mean_str(r.sum_nonscarf_lcms, d) : "");
        auto count_col = [&](bool measured, long long v) {
            out << ',';
            if (measured) out << v;
        };
        out << ',' << r.count_nonzero;
        count_col(r.measured.pdim, r.count_pdim_n);
        count_col(r.measured.pdim, r.count_pdim_0);
        count_col(r.measured.generic, r.count_generic);
        count_col(r.measured.strongly_generic, r.count_strongly_generic);
        count_col(r.measured.scarf, r.count_scarf);
        count_col(r.measured.cohen_macaulay, r.count_cm);
        count_col(r.measured.generic && r.measured.strongly_generic, r.count_gen_sg_disagree);
        out << "\n";
    }
}

void write_betti_stats_csv(std::ostream& out, const std::vector<BettiStatsRecord>& records) {
    int max_n = 1;
    for (const auto& r : records) max_n = std::max(max_n, r.cell.n);
    out << "# rmi betti-stats csv; one row per (cell, generator-count bucket)\n";
    out << "schema_version,n,D,p_num,p_den,trials,skipped,bucket_r,count";
    for (int i = 1; i <= max_n; ++i) out << ",mean_beta_" << i;
    out << ",max_beta_2";
    for (int i = 0; i < max_n; ++i) out << ",mean_f_" << i;
    out << "\n";
    for (const auto& r : records) {
        for (const auto& b : r.buckets) {
            out << 1 << ',' << r.cell.n << ',' << r.cell.D << ',' << r.cell.p.get_num().get_str()
                << ',' << r.cell.p.get_den().get_str() << ',' << r.trials << ',' << r.skipped
                << ',' << b.r << ',' << b.count;
            for (int i = 1; i <= max_n; ++i) {
                out << ',';
                if (i <= r.cell.n && !b.sum_beta.empty())
                    out << mean_str(b.sum_beta[static_cast<std::size_t>(i)],
                                    static_cast<long>(b.count));
            }
            out << ',' << b.max_beta2;
            for (int i = 0; i < max_n; ++i) {
                out << ',';
                if (i < r.cell.n && !b.sum_f.empty())
                    out << mean_str(b.sum_f[static_cast<std::size_t>(i)],
                                    static_cast<long>(b.count));
            }
            out << "\n";
        }
    }
}

std::vector<std::string> phase_event_names() {
    return {"pdim_n", "pdim_0", "generic", "strongly_generic", "scarf", "cm", "nonzero"};
}

void emit_phase_diagram(const std::vector<SweepRecord>& records, const std::string& event,
                        const std::string& path) {
    if (records.empty()) throw usage_error("phase diagram needs records");
    auto count_of = [&event](const SweepRecord& r) -> long long {
        if (event == "pdim_n") return r.count_pdim_n;
        if (event == "pdim_0") return r.count_pdim_0;
        if (event == "generic") return r.count_generic;
        if (event == "strongly_generic") return r.count_strongly_generic;
        if (event == "scarf") return r.count_scarf;
        if (event == "cm") return r.count_cm;
        if (event == "nonzero") return r.count_nonzero;
        throw usage_error("unknown phase event: " + event);
    };
    int n = records[0].cell.n;
    std::set<long> Ds;
    std::set<mpq_class> ps;
    for (const auto& r : records) {
        if (r.cell.n != n) throw usage_error("phase diagram needs a single n");
        Ds.insert(r.cell.D);
        ps.insert(r.cell.p);
    }
    if (Ds.size() * ps.size() != records.size())
        throw usage_error("phase diagram needs a full rectangular (D, p) grid");
    std::map<std::pair<long, mpq_class>, const SweepRecord*> lookup;
    for (const auto& r : records) {
        if (!lookup.emplace(std::make_pair(r.cell.D, r.cell.p), &r).second)
            throw usage_error("phase diagram: duplicate (D, p) cell");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw usage_error("cannot write pgm: " + path);
    out << "P5\n" << ps.size() << " " << Ds.size() << "\n255\n";
    for (long D : Ds) {
        for (const mpq_class& p : ps) {
            const SweepRecord* r = lookup.at({D, p});
            long denom = r->denominator();
            long long c = count_of(*r);
            unsigned char px = 0;
            if (denom > 0) {
                mpz_class v = (510 * mpz_class(static_cast<long>(c)) + denom) / (2 * denom);
                px = static_cast<unsigned char>(v.get_ui());
            }
            out.put(static_cast<char>(px));
        }
    }
    std::ofstream side(path + ".txt");
    if (!side) throw usage_error("cannot write pgm sidecar: " + path + ".txt");
    side << "event " << event << "\nrows D ascending:";
    for (long D : Ds) side << " " << D;
    side << "\ncols p ascending:";
    for (const mpq_class& p : ps) side << " " << p.get_num().get_str() << "/" << p.get_den().get_str();
    side << "\nintensity round(255*frequency)\n";
}

}  // namespace rmi
