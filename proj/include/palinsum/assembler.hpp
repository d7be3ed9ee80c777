#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "palinsum/numeral.hpp"
#include "palinsum/reduction.hpp"

namespace palinsum {

enum class Method { construct, sparse, optimal };

std::string method_name(Method m);

struct StageCounters {
    std::uint32_t loop1 = 0;
    std::uint32_t loop2 = 0;
    digit_t r_digit = 0;
};

struct StageReport {
    std::array<std::uint32_t, 4> preprocess_counts{};
    std::vector<StageCounters> stages;  // index = cursor position k
    bool minus_one_applied = false;
    bool y_split_applied = false;
};

struct Decomposition {
    digit_t base = 0;
    Numeral n{2};
    std::vector<Numeral> parts;  // nonzero palindromes summing to n
    Method method = Method::construct;
    StageReport stage_report;

    std::size_t count() const { return parts.size(); }
};

struct DecomposeOptions {
    // When set, a nonzero n that is already a palindrome is returned as the
    // single part [n] tagged "optimal". Off by default: the default pipeline
    // exercises the construction on every input.
    bool shortcut = false;
    // Re-check every stage postcondition and the final conservation identity;
    // violations raise PipelineError instead of returning a bad certificate.
    bool validate = true;
};

// Internal invariant violation: carries diagnostics instead of a partial result.
class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string message, std::string input_decimal, std::string stage,
                  std::vector<std::string> details);
    const std::string& input() const { return input_; }
    const std::string& stage() const { return stage_; }
    const std::vector<std::string>& details() const { return details_; }

private:
    std::string input_;
    std::string stage_;
    std::vector<std::string> details_;
};

// Digit-wise union of same-column two-spike entries (pairwise disjoint spike
// positions); padding entries contribute nothing. Throws PipelineError on a
// position collision, which signals a driver bug.
Numeral slot_sum(digit_t base, std::span<const TwoSpike> column);

// Replace the last loop-2 entry (c = d-1) of a stage by two entries with
// c = d-2 and c = 1 at the same positions. Patch for an underfull stage-0
// t-row; exposed for direct testing.
void split_last_t_entry(StageOutput& stage, digit_t base);

// Decomposes n into nonzero base-d palindromes. Small n (n <= d^8 + 1) take the
// digit-by-digit sparse route; larger n run the full construction: normalise,
// reduce length stage by stage, assemble per-column slot sums, then decompose
// the short tail sparsely. Part count is at most 6d + 12.
Decomposition decompose(const Numeral& n, const DecomposeOptions& options = {});

struct VerifyOutcome {
    bool ok = true;
    std::string reason;
};

// Independent re-check using only numeral arithmetic and the palindrome
// predicate: every part is a nonzero same-base palindrome and the parts sum to n.
VerifyOutcome verify_certificate(const Decomposition& dec);

}  // namespace palinsum
