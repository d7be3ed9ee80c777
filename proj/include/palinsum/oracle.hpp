#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

namespace palinsum::oracle {

// Brute-force reference implementations on machine integers, independent of
// the Numeral pipeline. Used to cross-check construction output optimality
// and to validate the main palindrome predicate at small scale.

inline constexpr std::uint64_t kMaxEnumerationBound = 10'000'000;
inline constexpr unsigned kDefaultDepthLimit = 8;

bool is_palindrome_value(std::uint64_t n, std::uint64_t base);

struct PalindromeTable {
    std::uint64_t base = 0;
    std::uint64_t bound = 0;
    std::vector<std::uint64_t> ascending;  // all base-`base` palindromes in [0, bound]

    bool contains(std::uint64_t v) const;
};

// Enumerates by mirroring digit prefixes, one length at a time; refuses
// bounds beyond kMaxEnumerationBound explicitly rather than exhausting memory.
PalindromeTable enumerate_palindromes(std::uint64_t base, std::uint64_t bound);

struct MinimalResult {
    bool within_limit = false;  // false: every count <= depth_limit was ruled out
    unsigned count = 0;
    std::vector<std::uint64_t> witness;  // non-increasing palindromes summing to n
};

// Exact minimal number of nonzero palindromes summing to n, by iterative
// deepening over non-increasing palindrome sequences. Reusable across queries;
// the failure memo is sound for any n over the same table.
class MinimalSearcher {
public:
    explicit MinimalSearcher(const PalindromeTable& table);
    MinimalResult minimal_count(std::uint64_t n, unsigned depth_limit = kDefaultDepthLimit);

private:
    bool dfs(std::uint64_t rem, unsigned t_left, std::size_t max_index,
             std::vector<std::uint64_t>& chosen);

    const PalindromeTable* table_;
    std::vector<std::uint64_t> nonzero_;  // ascending nonzero palindromes
    std::unordered_set<std::uint64_t> failed_;  // packed (rem, t_left) with full choice freedom
};

MinimalResult minimal_count(std::uint64_t n, const PalindromeTable& table,
                            unsigned depth_limit = kDefaultDepthLimit);

}  // namespace palinsum::oracle
