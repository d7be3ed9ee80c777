#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "palinsum/assembler.hpp"
#include "palinsum/certificate.hpp"
#include "palinsum/harness.hpp"
#include "palinsum/oracle.hpp"
#include "palinsum/palindrome.hpp"

namespace {

using namespace palinsum;

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> gather_inputs(const std::string& n_flag, const std::string& in_path) {
    if (!n_flag.empty()) return {n_flag};
    if (!in_path.empty()) {
        std::ifstream f(in_path);
        if (!f) throw std::invalid_argument("cannot open input file '" + in_path + "'");
        return read_lines(f);
    }
    return read_lines(std::cin);
}

class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string summary_path_for(const std::string& detail_path) {
    const std::string suffix = ".csv";
    if (detail_path.size() > suffix.size() &&
        detail_path.compare(detail_path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return detail_path.substr(0, detail_path.size() - suffix.size()) + ".summary.csv";
    return detail_path + ".summary.csv";
}

Decomposition decompose_with_method(const Numeral& n, Method method, bool shortcut) {
    switch (method) {
        case Method::construct:
            return decompose(n, DecomposeOptions{shortcut, true});
        case Method::sparse: {
            Decomposition dec;
            dec.base = n.base();
            dec.n = n;
            dec.parts = sparse_decompose(n);
            dec.method = Method::sparse;
            return dec;
        }
        case Method::optimal: {
            std::uint64_t value = 0;
            try {
                value = n.to_value();
            } catch (const std::overflow_error&) {
                throw std::invalid_argument("method 'optimal' needs n within the oracle range (n <= 10^7)");
            }
            if (value > oracle::kMaxEnumerationBound)
                throw std::invalid_argument("method 'optimal' needs n within the oracle range (n <= 10^7)");
            const auto table = oracle::enumerate_palindromes(n.base(), value);
            const auto res = oracle::minimal_count(value, table);
            if (!res.within_limit)
                throw PipelineError("exact search exceeded its depth limit", n.render(Format::decimal),
                                    "oracle", {});
            Decomposition dec;
            dec.base = n.base();
            dec.n = n;
            for (std::uint64_t w : res.witness) dec.parts.push_back(Numeral::from_value(n.base(), w));
            dec.method = Method::optimal;
            return dec;
        }
    }
    throw std::invalid_argument("unknown method");
}

struct CommonFlags {
    std::uint64_t base = 10;
    std::string out;
    Format format = Format::decimal;
    std::optional<unsigned> threads;
};

int cmd_decompose(const CommonFlags& common, const std::string& n_flag, const std::string& in_path,
                  Method method, bool shortcut) {
    const std::vector<std::string> lines = gather_inputs(n_flag, in_path);
    OutputTarget target(common.out);
    bool all_ok = true;
    for (const std::string& line : lines) {
        const Numeral n = Numeral::parse(line, common.base, common.format);  // malformed -> exit 2
        try {
            const Decomposition dec = decompose_with_method(n, method, shortcut);
            const VerifyOutcome ver = verify_certificate(dec);
            target.stream() << certificate_json(dec, ver.ok, common.format) << '\n';
            if (!ver.ok) {
                std::cerr << "verification failed for " << line << ": " << ver.reason << '\n';
                all_ok = false;
            }
        } catch (const PipelineError& e) {
            std::cerr << "decomposition failed for " << line << ": " << e.what() << '\n';
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_verify(const std::string& in_path) {
    std::vector<std::string> lines;
    if (!in_path.empty()) {
        std::ifstream f(in_path);
        if (!f) throw std::invalid_argument("cannot open input file '" + in_path + "'");
        lines = read_lines(f);
    } else {
        lines = read_lines(std::cin);
    }
    bool all_ok = true;
    for (const std::string& line : lines) {
        const ParsedCertificate cert = parse_certificate(line);  // malformed -> exit 2
        const VerifyOutcome outcome = recheck_certificate(cert);
        if (outcome.ok) {
            std::cout << "ok base=" << cert.base << " n=" << cert.n << " parts=" << cert.parts.size()
                      << '\n';
        } else {
            std::cout << "fail base=" << cert.base << " n=" << cert.n << ": " << outcome.reason << '\n';
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_sweep(const CommonFlags& common, std::uint64_t n_max, bool shortcut,
              const std::string& summary_flag) {
    if (common.out.empty()) throw std::invalid_argument("sweep needs --out");
    SweepOptions options;
    options.base = common.base;
    options.n_max = n_max;
    options.threads = resolve_threads(common.threads);
    options.shortcut = shortcut;
    const SweepReport report = run_sweep(options);

    {
        std::ofstream detail(common.out, std::ios::binary);
        if (!detail) throw std::invalid_argument("cannot open output file '" + common.out + "'");
        write_sweep_detail_csv(report, detail);
    }
    const std::string summary_path = summary_flag.empty() ? summary_path_for(common.out) : summary_flag;
    {
        std::ofstream summary(summary_path, std::ios::binary);
        if (!summary) throw std::invalid_argument("cannot open output file '" + summary_path + "'");
        write_sweep_summary_csv(report, summary);
    }
    std::cerr << "sweep base=" << report.base << " max_count=" << report.max_count
              << " argmax_n=" << report.argmax_n << " mean_count=" << report.mean_count()
              << " violations=" << report.violations.size() << '\n';
    for (const auto& v : report.violations) std::cerr << "violation: " << v << '\n';
    return report.all_verified() ? 0 : 1;
}

int cmd_compare(const CommonFlags& common, std::uint64_t n_max) {
    if (n_max > oracle::kMaxEnumerationBound)
        throw std::invalid_argument("compare needs --max within the oracle range (n <= 10^7)");
    const CompareReport report = run_compare(common.base, n_max, resolve_threads(common.threads));
    OutputTarget target(common.out);
    write_compare_csv(report, target.stream());
    for (const auto& v : report.violations) std::cerr << "violation: " << v << '\n';
    return report.violations.empty() ? 0 : 1;
}

int cmd_random(const CommonFlags& common, std::size_t digits, std::size_t count, std::uint64_t seed,
               bool shortcut) {
    RandomBatchOptions options;
    options.base = common.base;
    options.length = digits;
    options.count = count;
    options.seed = seed;
    options.threads = resolve_threads(common.threads);
    options.shortcut = shortcut;
    options.format = common.format;
    const RandomBatchResult result = run_random_batch(options);

    OutputTarget target(common.out);
    for (const std::string& cert : result.certificates)
        if (!cert.empty()) target.stream() << cert << '\n';
    if (!result.millis.empty()) {
        const auto [mn, mx] = std::minmax_element(result.millis.begin(), result.millis.end());
        const double mean =
            std::accumulate(result.millis.begin(), result.millis.end(), 0.0) / double(result.millis.size());
        std::cerr << "decompose+verify wall time ms: min=" << *mn << " mean=" << mean << " max=" << *mx
                  << '\n';
    }
    for (const auto& v : result.violations) std::cerr << "violation: " << v << '\n';
    return result.violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"palinsum: decompose natural numbers into sums of base-d palindromes"};
    app.require_subcommand(1);

    const std::map<std::string, Format> format_map{{"decimal", Format::decimal}, {"digits", Format::digit_list}};
    const std::map<std::string, Method> method_map{
        {"construct", Method::construct}, {"sparse", Method::sparse}, {"optimal", Method::optimal}};

    CommonFlags common;
    std::string n_flag, in_path, summary_flag;
    Method method = Method::construct;
    bool shortcut = false;
    std::uint64_t n_max = 1000;
    std::size_t digits = 64, count = 10;
    std::uint64_t seed = 0;
    unsigned threads_flag = 0;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("--base", common.base, "numeral base d (2..2^32)")
            ->required()
            ->check(CLI::Range(std::uint64_t(2), std::uint64_t(1) << 32));
        sub->add_option("--out", common.out, "output file (default: standard output)");
        if (with_format)
            sub->add_option("--format", common.format, "number rendering: decimal or digits")
                ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
        sub->add_option("--threads", threads_flag,
                        "worker threads (default: hardware; PALINSUM_THREADS overrides)");
    };

    CLI::App* dec = app.add_subcommand("decompose", "decompose numbers into palindrome certificates");
    add_common(dec);
    dec->add_option("--n", n_flag, "single input number");
    dec->add_option("--in", in_path, "input file, one number per line (default: standard input)");
    dec->add_option("--method", method, "construct, sparse, or optimal")
        ->transform(CLI::CheckedTransformer(method_map, CLI::ignore_case));
    dec->add_flag("--shortcut", shortcut, "return palindromic inputs as a single part");

    CLI::App* ver = app.add_subcommand("verify", "re-check certificates (one JSON object per line)");
    ver->add_option("--in", in_path, "certificate file (default: standard input)");

    CLI::App* swp = app.add_subcommand("sweep", "decompose and verify every n in [0, max]");
    add_common(swp, false);
    swp->add_option("--max", n_max, "inclusive upper end of the sweep")->required();
    swp->add_option("--summary", summary_flag, "summary CSV path (default: <out>.summary.csv)");
    swp->add_flag("--shortcut", shortcut, "return palindromic inputs as a single part");

    CLI::App* cmp = app.add_subcommand("compare", "construction size versus the exact optimum");
    add_common(cmp, false);
    cmp->add_option("--max", n_max, "inclusive upper end of the comparison")->required();

    CLI::App* rnd = app.add_subcommand("random", "decompose reproducible pseudo-random inputs");
    add_common(rnd);
    rnd->add_option("--digits", digits, "input length in digits")->check(CLI::Range(std::size_t(1), std::size_t(1) << 24));
    rnd->add_option("--count", count, "number of inputs");
    rnd->add_option("--seed", seed, "generator seed");
    rnd->add_flag("--shortcut", shortcut, "return palindromic inputs as a single part");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (threads_flag != 0) common.threads = threads_flag;

    try {
        if (app.got_subcommand(dec)) return cmd_decompose(common, n_flag, in_path, method, shortcut);
        if (app.got_subcommand(ver)) return cmd_verify(in_path);
        if (app.got_subcommand(swp)) return cmd_sweep(common, n_max, shortcut, summary_flag);
        if (app.got_subcommand(cmp)) return cmd_compare(common, n_max);
        if (app.got_subcommand(rnd)) return cmd_random(common, digits, count, seed, shortcut);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
