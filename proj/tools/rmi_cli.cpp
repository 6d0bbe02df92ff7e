// rmi: sample random equigenerated monomial ideals, compute resolution
// invariants (Betti tables, Scarf complexes, witness sets), evaluate the
// closed-form expectation formulas, and run Monte Carlo sweeps.
//
// Exit codes: 0 success, 1 usage error, 2 size/guard refusal.
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "rmi/analytic.hpp"
#include "rmi/betti.hpp"
#include "rmi/experiments.hpp"
#include "rmi/monomial.hpp"
#include "rmi/rng.hpp"
#include "rmi/sampler.hpp"
#include "rmi/scarf.hpp"

namespace {

using namespace rmi;

MonomialIdeal load_or_sample(const std::string& input, int n, long D, const std::string& p,
                             std::uint64_t seed, bool seed_set) {
    if (!input.empty()) {
        if (input == "-") return read_ideal(std::cin);
        return read_ideal_file(input);
    }
    if (n <= 0 || D <= 0 || p.empty())
        throw usage_error("need --input, or --n/--D/--p to sample");
    ModelParams params;
    params.n = n;
    params.D = D;
    params.p = parse_exact_probability(p);
    params.seed = seed_set ? seed : std::random_device{}();
    return sample_ideal(params);
}

BettiEngine parse_engine(const std::string& s) {
    if (s == "auto") return BettiEngine::Auto;
    if (s == "taylor") return BettiEngine::Taylor;
    if (s == "koszul") return BettiEngine::Koszul;
    throw usage_error("unknown engine: " + s);
}

std::string join(const std::vector<Exponent>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<Exponent> subset_lcm(const MonomialIdeal& M, const std::vector<int>& idxs) {
    std::vector<Exponent> b(static_cast<std::size_t>(M.vars()), 0);
    for (int i : idxs) {
        const auto& g = M.generators()[static_cast<std::size_t>(i)].exponents();
        for (std::size_t j = 0; j < g.size(); ++j) b[j] = std::max(b[j], g[j]);
    }
    return b;
}

void cmd_sample(int n, long D, const std::string& p, std::uint64_t seed, bool seed_set) {
    ModelParams params;
    params.n = n;
    params.D = D;
    params.p = parse_exact_probability(p);
    params.seed = seed_set ? seed : std::random_device{}();
    MonomialIdeal M = sample_ideal(params);
    std::cout << "# seed=" << params.seed << "\n";
    write_ideal(std::cout, M);
}

void cmd_analyze(const MonomialIdeal& M, unsigned long characteristic) {
    CoefficientField field{characteristic};
    BettiTable bt = betti_table(M, field);
    ScarfComplex sc = scarf_complex(M);
    WitnessReport wr = find_witness_sets(M);
    const int n = M.vars();
    int pdim = bt.projective_dimension();
    int dim = krull_dimension(M);
    bool scarf = true;
    for (int i = 0; i <= n; ++i) {
        long long fv = i == 0 ? 1 : sc.faces_of_size(i);
        if (M.is_zero()) fv = i == 0 ? 1 : 0;
        if (bt.totals[static_cast<std::size_t>(i)] != fv) { scarf = false; break; }
    }
    long deg = M.is_zero() ? 0 : M.generators()[0].total_degree();
    std::ostringstream out;
    out << "{\"n\":" << n << ",\"num_generators\":" << M.num_generators() << ",\"degree\":" << deg
        << ",\"pdim\":" << pdim << ",\"dim\":" << dim << ",\"cohen_macaulay\":"
        << (dim == n - pdim ? "true" : "false") << ",\"scarf\":" << (scarf ? "true" : "false")
        << ",\"generic\":" << (is_generic(M) ? "true" : "false") << ",\"strongly_generic\":"
        << (is_strongly_generic(M) ? "true" : "false") << ",\"witness_sets\":"
        << wr.witness_sets.size() << ",\"witness_lcms\":" << wr.witness_lcms.size()
        << ",\"nonscarf_pairs\":" << wr.nonscarf_pairs.size() << ",\"betti_totals\":[";
    for (int i = 0; i <= n; ++i) out << (i ? "," : "") << bt.totals[static_cast<std::size_t>(i)];
    out << "],\"f_vector\":[";
    for (int i = 0; i <= n; ++i) out << (i ? "," : "") << (M.is_zero() && i > 0 ? 0 : sc.faces_of_size(i));
    out << "]}";
    std::cout << out.str() << "\n";
}

void cmd_formulas(const std::string& quantity, int n, long D, long a_min, long a_max,
                  const std::string& p_text) {
    std::cout << "n,D_or_a,p,quantity,decimal,fraction\n";
    auto row = [&](long d_or_a, const mpq_class& p, const std::string& q, const mpq_class& v) {
        std::cout << n << "," << d_or_a << "," << (p < 0 ? "" : p.get_str()) << "," << q << ","
                  << decimal_string(v, 12) << "," << v.get_str() << "\n";
    };
    if (quantity == "count") {
        if (D < 0 && a_min > a_max) throw usage_error("count needs --D or --a-min/--a-max");
        if (D >= 0) row(D, mpq_class(-1), "m_n", mpq_class(count_monomials(n, D)));
        for (long a = a_min; a <= a_max; ++a)
            row(a, mpq_class(-1), "m_n", mpq_class(count_monomials(n, a)));
        return;
    }
    if (quantity == "thresholds") {
        ThresholdExponents t = thresholds(n);
        row(0, mpq_class(-1), "exponent_pdim", t.pdim);
        row(0, mpq_class(-1), "exponent_generic", t.generic);
        row(0, mpq_class(-1), "exponent_scarf", t.scarf);
        return;
    }
    mpq_class p = parse_exact_probability(p_text);
    if (quantity == "prob_witness") {
        for (long a = a_min; a <= a_max; ++a)
            row(a, p, "prob_witness_lcm", prob_witness_lcm(n, a, p));
    } else if (quantity == "prob_multi_witness") {
        for (long a = a_min; a <= a_max; ++a)
            row(a, p, "prob_multi_witness_lcm", prob_multi_witness_lcm(n, a, p));
    } else if (quantity == "expected_w") {
        if (D < 1) throw usage_error("expected_w needs --D");
        ExpectedCounts w = expected_W(n, D, p);
        if (w.empty_range)
            std::cerr << "warning: cutoff made the summation range empty (p too large)\n";
        for (const auto& [a, v] : w.per_a) row(a, p, "expected_W_a", v);
        row(D, p, "expected_W", w.total);
    } else if (quantity == "expected_y") {
        if (D < 1) throw usage_error("expected_y needs --D");
        ExpectedCounts y = expected_Y(n, D, p, a_min >= 0 ? std::max<long>(a_min, 2) : 2);
        if (y.empty_range)
            std::cerr << "warning: cutoff made the summation range empty (p too large)\n";
        for (const auto& [a, v] : y.per_a) row(a, p, "expected_Y_a", v);
        row(D, p, "expected_Y", y.total);
    } else if (quantity == "cutoff") {
        row(0, p, "cutoff_A", mpq_class(witness_degree_cutoff(n, p)));
    } else {
        throw usage_error("unknown quantity: " + quantity);
    }
}

ExperimentConfig build_sweep_config(const std::string& config_path, const std::vector<int>& ns,
                                    const std::vector<long>& Ds,
                                    const std::vector<std::string>& ps,
                                    const std::vector<std::string>& coeffs,
                                    const std::string& exponent, long trials, std::uint64_t seed,
                                    bool seed_set, int workers, const std::string& csv,
                                    const std::string& pgm, const std::string& pgm_event,
                                    unsigned long field, bool bucket,
                                    const std::vector<std::string>& measure) {
    ExperimentConfig cfg;
    if (!config_path.empty()) {
        cfg = parse_config_file(config_path);
    } else {
        std::ostringstream text;
        if (ns.empty() || Ds.empty()) throw usage_error("sweep needs --config or --n/--D/--p");
        text << "n=";
        for (std::size_t i = 0; i < ns.size(); ++i) text << (i ? "," : "") << ns[i];
        text << "\nD=";
        for (std::size_t i = 0; i < Ds.size(); ++i) text << (i ? "," : "") << Ds[i];
        text << "\n";
        if (!ps.empty()) {
            text << "p=";
            for (std::size_t i = 0; i < ps.size(); ++i) text << (i ? "," : "") << ps[i];
            text << "\n";
        }
        if (!coeffs.empty()) {
            text << "p_coeff=";
            for (std::size_t i = 0; i < coeffs.size(); ++i) text << (i ? "," : "") << coeffs[i];
            text << "\np_exponent=" << exponent << "\n";
        }
        std::istringstream in(text.str());
        cfg = parse_config(in);
    }
    if (trials > 0) cfg.trials = trials;
    if (seed_set) {
        cfg.master_seed = seed;
        cfg.seed_set = true;
    }
    if (workers > 0) cfg.workers = workers;
    if (!csv.empty()) cfg.csv_path = csv;
    if (!pgm.empty()) cfg.pgm_path = pgm;
    if (!pgm_event.empty()) cfg.pgm_event = pgm_event;
    cfg.field.characteristic = field;
    cfg.bucket_by_generators = cfg.bucket_by_generators || bucket;
    if (!measure.empty()) {
        cfg.measure = Measurements::none();
        for (const std::string& t : measure) {
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
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random monomial ideal toolkit", "rmi"};
    app.require_subcommand(1);

    // shared flags
    std::string input, p_text;
    int n = 0;
    long D = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    unsigned long field = 0;
    std::string engine = "auto";

    auto add_ideal_source = [&](CLI::App* sub) {
        sub->add_option("--input", input, "ideal file (- for stdin)");
        sub->add_option("--n", n, "variable count (sampling)");
        sub->add_option("--D", D, "generator degree (sampling)");
        sub->add_option("--p", p_text, "inclusion probability, exact decimal or fraction");
        sub->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) { seed_set = true; });
    };

    auto* sample = app.add_subcommand("sample", "draw one ideal and print it");
    sample->add_option("--n", n, "variable count")->required();
    sample->add_option("--D", D, "generator degree")->required();
    sample->add_option("--p", p_text, "inclusion probability")->required();
    sample->add_option("--seed", seed, "RNG seed (default: system entropy, echoed)")
        ->each([&](const std::string&) { seed_set = true; });

    auto* analyze = app.add_subcommand("analyze", "print a one-line record of all invariants");
    add_ideal_source(analyze);
    analyze->add_option("--field", field, "coefficient field characteristic (0 or prime)");

    bool totals_only = false;
    auto* betti = app.add_subcommand("betti", "print the multigraded Betti table as CSV");
    add_ideal_source(betti);
    betti->add_option("--field", field, "coefficient field characteristic (0 or prime)");
    betti->add_option("--engine", engine, "auto|taylor|koszul");
    betti->add_flag("--totals-only", totals_only, "print only the compact totals line");

    auto* scarf = app.add_subcommand("scarf", "print the Scarf complex faces and f-vector");
    add_ideal_source(scarf);

    auto* witness = app.add_subcommand("witness", "print the witness-set report as CSV");
    add_ideal_source(witness);

    std::string quantity = "count";
    long a_min = -1, a_max = -2;
    auto* formulas = app.add_subcommand("formulas", "evaluate closed-form counts/probabilities");
    formulas->add_option("--quantity", quantity,
                         "count|prob_witness|prob_multi_witness|expected_w|expected_y|cutoff|thresholds")
        ->required();
    formulas->add_option("--n", n, "variable count")->required();
    formulas->add_option("--D", D, "degree / total-degree parameter");
    formulas->add_option("--p", p_text, "probability (exact decimal or fraction)");
    formulas->add_option("--a-min", a_min, "first excess degree a");
    formulas->add_option("--a-max", a_max, "last excess degree a");

    std::string config_path, csv_path, pgm_path, pgm_event;
    std::vector<int> ns;
    std::vector<long> Ds;
    std::vector<std::string> ps, coeffs, measure;
    std::string exponent;
    long trials = 0;
    int workers = 0;
    bool bucket = false;
    auto add_sweep_flags = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value config file");
        sub->add_option("--n", ns, "variable counts")->delimiter(',');
        sub->add_option("--D", Ds, "degrees")->delimiter(',');
        sub->add_option("--p", ps, "exact probabilities")->delimiter(',');
        sub->add_option("--p-coeff", coeffs, "power-law coefficients c for p = c*D^e")->delimiter(',');
        sub->add_option("--p-exponent", exponent, "power-law exponent e (rational, e.g. -3/2)");
        sub->add_option("--trials", trials, "trials per cell");
        sub->add_option("--seed", seed, "master seed (required)")
            ->each([&](const std::string&) { seed_set = true; });
        sub->add_option("--workers", workers, "worker threads");
        sub->add_option("--csv", csv_path, "output CSV path");
        sub->add_option("--field", field, "coefficient field characteristic");
        sub->add_option("--measure", measure,
                        "measurements: all|pdim|generic|strongly_generic|scarf|"
                        "cohen_macaulay|betti_means|witness_counts")
            ->delimiter(',');
    };
    auto* sweep = app.add_subcommand("sweep", "run a Monte Carlo sweep over (n, D, p) cells");
    add_sweep_flags(sweep);
    sweep->add_option("--pgm", pgm_path, "also write a phase diagram PGM");
    sweep->add_option("--pgm-event", pgm_event, "phase event (default scarf)");
    sweep->add_flag("--bucket-by-generators", bucket,
                    "write per-generator-count Betti statistics instead of the sweep CSV");

    auto* phase = app.add_subcommand("phase", "run a sweep and write a phase-diagram PGM");
    add_sweep_flags(phase);
    phase->add_option("--pgm", pgm_path, "output PGM path")->required();
    phase->add_option("--pgm-event", pgm_event, "phase event (default scarf)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*sample) {
            cmd_sample(n, D, p_text, seed, seed_set);
        } else if (*analyze) {
            cmd_analyze(load_or_sample(input, n, D, p_text, seed, seed_set), field);
        } else if (*betti) {
            MonomialIdeal M = load_or_sample(input, n, D, p_text, seed, seed_set);
            BettiTable bt = betti_table(M, CoefficientField{field}, parse_engine(engine));
            if (totals_only)
                std::cout << bt.totals_line() << "\n";
            else
                bt.write_csv(std::cout);
        } else if (*scarf) {
            MonomialIdeal M = load_or_sample(input, n, D, p_text, seed, seed_set);
            ScarfComplex sc = scarf_complex(M);
            std::cout << "f_vector";
            for (long long f : sc.f_vector) std::cout << "," << f;
            std::cout << "\nface,lcm\n";
            for (const auto& face : sc.faces)
                std::cout << (face.empty() ? "()" : join_ints(face, '-')) << ","
                          << join(sc.face_multidegrees.at(face), '-') << "\n";
        } else if (*witness) {
            MonomialIdeal M = load_or_sample(input, n, D, p_text, seed, seed_set);
            WitnessReport wr = find_witness_sets(M);
            std::set<std::vector<int>> in_pair;
            for (const auto& [L, g] : wr.nonscarf_pairs) in_pair.insert(L);
            std::cout << "witness_set,lcm,nonscarf\n";
            for (const auto& L : wr.witness_sets)
                std::cout << join_ints(L, '-') << "," << join(subset_lcm(M, L), '-') << ","
                          << (in_pair.count(L) ? 1 : 0) << "\n";
        } else if (*formulas) {
            cmd_formulas(quantity, n, D, a_min, a_max, p_text);
        } else if (*sweep) {
            ExperimentConfig cfg =
                build_sweep_config(config_path, ns, Ds, ps, coeffs, exponent, trials, seed,
                                   seed_set, workers, csv_path, pgm_path, pgm_event, field,
                                   bucket, measure);
            if (cfg.bucket_by_generators) {
                auto records = betti_stats(cfg);
                if (!cfg.csv_path.empty()) {
                    std::ofstream out(cfg.csv_path, std::ios::binary);
                    if (!out) throw usage_error("cannot write csv: " + cfg.csv_path);
                    write_betti_stats_csv(out, records);
                } else {
                    write_betti_stats_csv(std::cout, records);
                }
            } else {
                auto records = run_sweep(cfg);
                if (cfg.csv_path.empty()) write_sweep_csv(std::cout, records);
            }
        } else if (*phase) {
            ExperimentConfig cfg =
                build_sweep_config(config_path, ns, Ds, ps, coeffs, exponent, trials, seed,
                                   seed_set, workers, csv_path, pgm_path, pgm_event, field,
                                   false, measure);
            run_sweep(cfg);
        }
    } catch (const guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
