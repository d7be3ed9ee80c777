#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "palinsum/assembler.hpp"
#include "palinsum/numeral.hpp"
#include "palinsum/oracle.hpp"

namespace palinsum {

// Deterministic experiment drivers. Every run is a pure function of its
// parameters: results are byte-identical across thread counts and reruns.

unsigned resolve_threads(std::optional<unsigned> requested);  // PALINSUM_THREADS wins over `requested`

struct SweepOptions {
    digit_t base = 10;
    std::uint64_t n_max = 1000;
    unsigned threads = 1;
    bool shortcut = false;
};

struct SweepRecord {
    std::uint64_t n = 0;
    std::uint32_t count = 0;
    bool verified = false;
};

struct SweepReport {
    digit_t base = 0;
    std::uint64_t n_max = 0;
    std::vector<SweepRecord> records;  // index = n
    std::vector<std::string> violations;  // ordered by n
    std::uint32_t max_count = 0;
    std::uint64_t argmax_n = 0;  // smallest n attaining max_count
    std::uint64_t count_sum = 0;
    std::map<std::uint32_t, std::uint64_t> count_histogram;  // part count -> frequency
    // Stage-0 loop-count table over construct-path inputs: observed
    // (loop1, loop2) pairs must be exactly (d-1, d).
    std::uint64_t construct_inputs = 0;
    std::uint64_t stage0_expected = 0;  // how many of them had (d-1, d)

    bool all_verified() const;
    std::string mean_count() const;  // 6 decimal places, exact integer arithmetic
};

// Decomposes and verifies every n in [0, n_max]; invariant violations,
// pipeline errors, and bound breaches are collected as data.
SweepReport run_sweep(const SweepOptions& options);

// detail rows: base,n,count,verified ; summary: base,max_count,argmax_n,mean_count,violations
void write_sweep_detail_csv(const SweepReport& report, std::ostream& out);
void write_sweep_summary_csv(const SweepReport& report, std::ostream& out);

struct CompareRow {
    std::uint64_t n = 0;
    std::uint32_t construct_count = 0;
    std::uint32_t optimal_count = 0;  // exact, from the brute-force oracle
    std::int64_t gap = 0;             // construct_count - optimal_count
};

struct CompareReport {
    digit_t base = 0;
    std::uint64_t n_max = 0;
    std::vector<CompareRow> rows;
    std::vector<std::string> violations;  // dominance breaches, witness failures
};

// Construction versus exact optimum for every n in [0, n_max] (oracle scale).
CompareReport run_compare(digit_t base, std::uint64_t n_max, unsigned threads);

void write_compare_csv(const CompareReport& report, std::ostream& out);  // n,construct_count,optimal_count,gap

// Uniform random numeral of exactly `length` digits (leading digit nonzero).
Numeral random_numeral(std::mt19937_64& rng, digit_t base, std::size_t length);

struct RandomBatchOptions {
    digit_t base = 10;
    std::size_t length = 64;
    std::size_t count = 10;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool shortcut = false;
    Format format = Format::decimal;
};

struct RandomBatchResult {
    std::vector<std::string> certificates;  // JSON lines, input order
    std::vector<std::string> violations;
    std::vector<double> millis;  // per-input decompose+verify wall time
};

// Seeded batch: inputs are drawn from one generator stream, so the batch is a
// pure function of (base, length, count, seed) at any thread count.
RandomBatchResult run_random_batch(const RandomBatchOptions& options);

}  // namespace palinsum
