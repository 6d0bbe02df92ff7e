#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rmi/betti.hpp"
#include "rmi/monomial.hpp"
#include "rmi/sampler.hpp"
#include "rmi/scarf.hpp"

namespace rmi {

/// Per-cell probability: an exact rational, or a power law c * D^e resolved
/// per cell. Power-law values are irrational in general and are quantized to
/// the nearest multiple of 2^-64 (exact integer-root arithmetic, no floats);
/// the quantized rational is what gets sampled and reported.
struct PSpec {
    enum class Kind { Exact, PowerLaw };
    Kind kind = Kind::Exact;
    mpq_class exact;
    mpq_class coeff;
    mpq_class exponent;

    static PSpec exact_value(mpq_class p);
    static PSpec power_law(mpq_class coeff, mpq_class exponent);
    mpq_class resolve(long D) const;
};

struct Cell {
    int n = 1;
    long D = 1;
    mpq_class p;
};

struct Measurements {
    bool pdim = true;
    bool generic = true;
    bool strongly_generic = true;
    bool scarf = true;
    bool cohen_macaulay = true;
    bool betti_means = true;
    bool witness_counts = true;

    static Measurements all() { return {}; }
    static Measurements none();
};

struct ExperimentConfig {
    std::vector<Cell> cells;
    long trials = 1;
    std::uint64_t master_seed = 0;
    bool seed_set = false;
    Measurements measure;
    CoefficientField field;
    int workers = 1;
    std::string csv_path;
    std::string pgm_path;
    std::string pgm_event = "scarf";
    bool bucket_by_generators = false;

    SamplerGuards sampler_guards;
    BettiGuards betti_guards;
    ScarfGuards scarf_guards;

    void validate() const;
};

/// Flat key=value config text (see README for the grammar). Lists are
/// comma-separated; cells are the cross product n x D x p in file order.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

struct SweepRecord {
    Cell cell;
    long trials = 0;
    long skipped = 0;
    std::uint64_t seed = 0;
    Measurements measured;

    long long sum_num_gens = 0;
    long long count_nonzero = 0;
    long long count_pdim_n = 0;
    long long count_pdim_0 = 0;
    long long count_generic = 0;
    long long count_strongly_generic = 0;
    long long count_gen_sg_disagree = 0;
    long long count_scarf = 0;
    long long count_cm = 0;
    std::vector<long long> sum_beta;  // index 1..n used
    long long max_beta2 = 0;
    std::vector<long long> sum_f;  // f_0 .. f_{n-1}
    long long sum_witness_lcms = 0;
    long long sum_nonscarf_lcms = 0;
    std::map<std::string, long> skip_reasons;
    double wall_seconds = 0;

    long denominator() const { return trials - skipped; }
};

/// Aggregates for the generator-count buckets (Betti statistics runs).
struct BettiBucket {
    long long r = 0;
    long long count = 0;
    std::vector<long long> sum_beta;
    std::vector<long long> sum_f;
    long long max_beta2 = 0;
};
struct BettiStatsRecord {
    Cell cell;
    long trials = 0;
    long skipped = 0;
    std::vector<BettiBucket> buckets;  // ascending r
};

/// Runs `trials` independent draws for one cell with per-trial derived seeds
/// (stream id = cell_index * 2^32 + trial). Reduction order is fixed, so any
/// worker count yields identical records. Per-trial algebraic invariants are
/// asserted and any violation aborts the run.
SweepRecord run_cell(const ExperimentConfig& config, const Cell& cell, std::uint64_t cell_index);

std::vector<SweepRecord> run_sweep(const ExperimentConfig& config);

std::vector<BettiStatsRecord> betti_stats(const ExperimentConfig& config);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_betti_stats_csv(std::ostream& out, const std::vector<BettiStatsRecord>& records);

/// P5 (binary) graymap over a full rectangular (D, p) grid: one pixel per
/// cell, row per D ascending top-to-bottom, column per p ascending
/// left-to-right, intensity round(255 * frequency of `event`). A text sidecar
/// at path + ".txt" documents the axes. Ragged grids are a usage error.
void emit_phase_diagram(const std::vector<SweepRecord>& records, const std::string& event,
                        const std::string& path);

/// Events accepted by emit_phase_diagram / pgm_event.
std::vector<std::string> phase_event_names();

}  // namespace rmi
