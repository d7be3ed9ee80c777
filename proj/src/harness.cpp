#include "palinsum/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "palinsum/certificate.hpp"

namespace palinsum {

namespace {

constexpr std::uint64_t kChunk = 1024;

std::uint32_t count_bound(digit_t base) { return std::uint32_t(6 * base + 12); }

// run fn(chunk_index) over chunk_count chunks on `threads` workers; chunk
// payloads land in preallocated slots, so the outcome is order-independent
template <typename Fn>
void parallel_chunks(std::uint64_t chunk_count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || chunk_count <= 1) {
        for (std::uint64_t c = 0; c < chunk_count; ++c) fn(c);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= chunk_count) return;
            fn(c);
        }
    };
    std::vector<std::thread> pool;
    const unsigned spawn = unsigned(std::min<std::uint64_t>(threads, chunk_count));
    pool.reserve(spawn);
    for (unsigned i = 0; i < spawn; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace

unsigned resolve_threads(std::optional<unsigned> requested) {
    if (const char* env = std::getenv("PALINSUM_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 4096) return unsigned(v);
    }
    if (requested && *requested >= 1) return *requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

bool SweepReport::all_verified() const {
    for (const auto& r : records)
        if (!r.verified) return false;
    return true;
}

std::string SweepReport::mean_count() const {
    const std::uint64_t denom = records.empty() ? 1 : records.size();
    const std::uint64_t whole = count_sum / denom;
    const std::uint64_t rem = count_sum % denom;
    std::uint64_t frac = 0;  // 6 decimal places, round half up
    std::uint64_t scaled = rem * 1'000'000;
    frac = scaled / denom;
    if ((scaled % denom) * 2 >= denom) ++frac;
    std::uint64_t w = whole;
    if (frac == 1'000'000) {
        ++w;
        frac = 0;
    }
    std::string f = std::to_string(frac);
    return std::to_string(w) + "." + std::string(6 - f.size(), '0') + f;
}

SweepReport run_sweep(const SweepOptions& options) {
    SweepReport report;
    report.base = options.base;
    report.n_max = options.n_max;
    report.records.resize(options.n_max + 1);

    const std::uint64_t chunk_count = (options.n_max + kChunk) / kChunk;
    std::vector<std::vector<std::string>> chunk_violations(chunk_count);
    std::vector<std::uint64_t> chunk_construct(chunk_count, 0), chunk_expected(chunk_count, 0);

    parallel_chunks(chunk_count, options.threads, [&](std::uint64_t ci) {
        const std::uint64_t lo = ci * kChunk;
        const std::uint64_t hi = std::min(options.n_max, lo + kChunk - 1);
        auto& violations = chunk_violations[ci];
        for (std::uint64_t n = lo; n <= hi; ++n) {
            SweepRecord rec{n, 0, false};
            try {
                const Decomposition dec =
                    decompose(Numeral::from_value(options.base, n), {options.shortcut, true});
                const VerifyOutcome ver = verify_certificate(dec);
                rec.count = std::uint32_t(dec.count());
                rec.verified = ver.ok;
                if (!ver.ok)
                    violations.push_back("n=" + std::to_string(n) + ": certificate failed: " + ver.reason);
                if (dec.count() > count_bound(options.base))
                    violations.push_back("n=" + std::to_string(n) + ": part count " +
                                         std::to_string(dec.count()) + " exceeds 6d+12");
                if (dec.method == Method::construct) {
                    ++chunk_construct[ci];
                    const auto& st0 = dec.stage_report.stages.front();
                    if (st0.loop1 == options.base - 1 && st0.loop2 == options.base)
                        ++chunk_expected[ci];
                    else
                        violations.push_back("n=" + std::to_string(n) + ": stage-0 loops (" +
                                             std::to_string(st0.loop1) + "," + std::to_string(st0.loop2) +
                                             ") differ from (d-1,d)");
                }
            } catch (const PipelineError& e) {
                violations.push_back("n=" + std::to_string(n) + ": pipeline: " + e.what());
            }
            report.records[n] = rec;
        }
    });

    for (std::uint64_t ci = 0; ci < chunk_count; ++ci) {
        for (auto& v : chunk_violations[ci]) report.violations.push_back(std::move(v));
        report.construct_inputs += chunk_construct[ci];
        report.stage0_expected += chunk_expected[ci];
    }
    for (const auto& rec : report.records) {
        report.count_sum += rec.count;
        ++report.count_histogram[rec.count];
        if (rec.count > report.max_count) {
            report.max_count = rec.count;
            report.argmax_n = rec.n;
        }
    }
    return report;
}

void write_sweep_detail_csv(const SweepReport& report, std::ostream& out) {
    out << "base,n,count,verified\n";
    for (const auto& rec : report.records) {
        out << report.base << ',' << rec.n << ',' << rec.count << ','
            << (rec.verified ? "true" : "false") << '\n';
        if (!rec.verified) break;  // the violation row is the last one written
    }
}

void write_sweep_summary_csv(const SweepReport& report, std::ostream& out) {
    out << "base,max_count,argmax_n,mean_count,violations\n";
    out << report.base << ',' << report.max_count << ',' << report.argmax_n << ','
        << report.mean_count() << ',' << report.violations.size() << '\n';
}

CompareReport run_compare(digit_t base, std::uint64_t n_max, unsigned threads) {
    CompareReport report;
    report.base = base;
    report.n_max = n_max;
    report.rows.resize(n_max + 1);

    const oracle::PalindromeTable table = oracle::enumerate_palindromes(base, n_max);
    const std::uint64_t chunk_count = (n_max + kChunk) / kChunk;
    std::vector<std::vector<std::string>> chunk_violations(chunk_count);

    parallel_chunks(chunk_count, threads, [&](std::uint64_t ci) {
        oracle::MinimalSearcher searcher(table);  // per-worker-chunk memo, no shared mutation
        const std::uint64_t lo = ci * kChunk;
        const std::uint64_t hi = std::min(n_max, lo + kChunk - 1);
        auto& violations = chunk_violations[ci];
        for (std::uint64_t n = lo; n <= hi; ++n) {
            CompareRow row{n, 0, 0, 0};
            try {
                const Decomposition dec = decompose(Numeral::from_value(base, n));
                row.construct_count = std::uint32_t(dec.count());
                const oracle::MinimalResult mr = searcher.minimal_count(n);
                if (!mr.within_limit) {
                    violations.push_back("n=" + std::to_string(n) + ": exact search exceeded its depth limit");
                } else {
                    row.optimal_count = mr.count;
                    std::uint64_t sum = 0;
                    for (std::uint64_t w : mr.witness) {
                        if (!oracle::is_palindrome_value(w, base) || w == 0)
                            violations.push_back("n=" + std::to_string(n) + ": oracle witness part " +
                                                 std::to_string(w) + " is not a nonzero palindrome");
                        sum += w;
                    }
                    if (sum != n)
                        violations.push_back("n=" + std::to_string(n) + ": oracle witness does not sum to n");
                }
                row.gap = std::int64_t(row.construct_count) - std::int64_t(row.optimal_count);
                if (mr.within_limit && row.gap < 0)
                    violations.push_back("n=" + std::to_string(n) +
                                         ": construction undercut the exact optimum (oracle fault)");
            } catch (const PipelineError& e) {
                violations.push_back("n=" + std::to_string(n) + ": pipeline: " + e.what());
            }
            report.rows[n] = row;
        }
    });

    for (auto& vs : chunk_violations)
        for (auto& v : vs) report.violations.push_back(std::move(v));
    return report;
}

void write_compare_csv(const CompareReport& report, std::ostream& out) {
    out << "n,construct_count,optimal_count,gap\n";
    for (const auto& row : report.rows)
        out << row.n << ',' << row.construct_count << ',' << row.optimal_count << ',' << row.gap << '\n';
}

Numeral random_numeral(std::mt19937_64& rng, digit_t base, std::size_t length) {
    if (length == 0) return Numeral::zero(base);
    std::vector<digit_t> ds(length);
    for (std::size_t i = 0; i + 1 < length; ++i) ds[i] = rng() % base;
    ds[length - 1] = 1 + rng() % (base - 1);
    return Numeral::from_digits(base, std::move(ds));
}

RandomBatchResult run_random_batch(const RandomBatchOptions& options) {
    RandomBatchResult result;
    result.certificates.resize(options.count);
    result.millis.resize(options.count, 0.0);
    std::vector<std::string> violations(options.count);

    std::mt19937_64 rng(options.seed);
    std::vector<Numeral> inputs;
    inputs.reserve(options.count);
    for (std::size_t i = 0; i < options.count; ++i)
        inputs.push_back(random_numeral(rng, options.base, options.length));

    parallel_chunks(options.count, options.threads, [&](std::uint64_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            // skip the per-stage self-audit: it costs O(base * length) per stage, which
            // dominates on very long inputs, and the certificate is re-verified below anyway
            const Decomposition dec = decompose(inputs[i], {options.shortcut, false});
            const VerifyOutcome ver = verify_certificate(dec);
            result.certificates[i] = certificate_json(dec, ver.ok, options.format);
            if (!ver.ok)
                violations[i] = "input " + std::to_string(i) + ": certificate failed: " + ver.reason;
        } catch (const PipelineError& e) {
            violations[i] = "input " + std::to_string(i) + ": pipeline: " + std::string(e.what());
        }
        const auto t1 = std::chrono::steady_clock::now();
        result.millis[i] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    });

    for (auto& v : violations)
        if (!v.empty()) result.violations.push_back(std::move(v));
    return result;
}

}  // namespace palinsum
