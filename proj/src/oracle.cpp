#include "palinsum/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace palinsum::oracle {

namespace {

// packed memo key; enumeration bound < 2^24 leaves ample room for the depth
std::uint64_t memo_key(std::uint64_t rem, unsigned t_left) { return rem * 64 + t_left; }

// lexicographic successor over half-length digit prefixes (MSD first, leading
// digit nonzero); false once the last prefix (d-1, d-1, ...) is exhausted
bool next_prefix(std::vector<std::uint64_t>& prefix, std::uint64_t base) {
    for (std::size_t i = prefix.size(); i-- > 0;) {
        if (prefix[i] + 1 < base) {
            ++prefix[i];
            std::fill(prefix.begin() + i + 1, prefix.end(), 0);
            return true;
        }
        if (i == 0) return false;
    }
    return false;
}

}  // namespace

bool is_palindrome_value(std::uint64_t n, std::uint64_t base) {
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    std::uint64_t digits[64];
    unsigned len = 0;
    while (n != 0) {
        digits[len++] = n % base;
        n /= base;
    }
    for (unsigned i = 0, j = len; i + 1 < j; ++i, --j)
        if (digits[i] != digits[j - 1]) return false;
    return true;
}

bool PalindromeTable::contains(std::uint64_t v) const {
    return std::binary_search(ascending.begin(), ascending.end(), v);
}

PalindromeTable enumerate_palindromes(std::uint64_t base, std::uint64_t bound) {
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    if (bound > kMaxEnumerationBound)
        throw std::invalid_argument("enumeration bound exceeds the supported maximum of 10^7");

    PalindromeTable table;
    table.base = base;
    table.bound = bound;

    if (base > bound) {  // every value in range is a single digit, hence a palindrome
        table.ascending.resize(bound + 1);
        std::iota(table.ascending.begin(), table.ascending.end(), std::uint64_t(0));
        return table;
    }

    table.ascending.push_back(0);
    // Mirror every digit prefix, one length at a time: prefixes ascend, so the
    // produced values ascend within a length and lengths ascend overall.
    for (unsigned len = 1;; ++len) {
        std::uint64_t smallest = 1;  // base^(len-1), the smallest len-digit value
        bool representable = true;
        for (unsigned i = 0; i + 1 < len; ++i) {
            if (smallest > bound / base) {
                representable = false;
                break;
            }
            smallest *= base;
        }
        if (!representable || smallest > bound) break;

        const unsigned half = (len + 1) / 2;
        std::vector<std::uint64_t> prefix(half, 0);
        prefix[0] = 1;
        do {
            std::uint64_t value = 0;  // base <= bound <= 10^7 keeps this well within u64
            for (unsigned i = 0; i < len; ++i)
                value = value * base + prefix[i < half ? i : len - 1 - i];
            if (value > bound) break;  // later prefixes only overshoot further
            table.ascending.push_back(value);
        } while (next_prefix(prefix, base));
    }
    return table;
}

MinimalSearcher::MinimalSearcher(const PalindromeTable& table) : table_(&table) {
    nonzero_.assign(table.ascending.begin(), table.ascending.end());
    if (!nonzero_.empty() && nonzero_.front() == 0) nonzero_.erase(nonzero_.begin());
}

// Can rem be written as exactly t_left nonzero palindromes, each at most
// nonzero_[max_index]? Parts are chosen in non-increasing order.
bool MinimalSearcher::dfs(std::uint64_t rem, unsigned t_left, std::size_t max_index,
                          std::vector<std::uint64_t>& chosen) {
    auto past = std::upper_bound(nonzero_.begin(), nonzero_.end(), rem);
    if (past == nonzero_.begin()) return false;  // nothing fits below rem
    std::size_t top = std::size_t(past - nonzero_.begin()) - 1;
    const bool unconstrained = top <= max_index;  // the cap does not bite at this remainder
    if (!unconstrained) top = max_index;

    if (t_left == 1) {
        if (nonzero_[top] == rem) {
            chosen.push_back(rem);
            return true;
        }
        return false;
    }

    if (failed_.contains(memo_key(rem, t_left))) return false;  // sound even under a cap

    for (std::size_t idx = top + 1; idx-- > 0;) {
        const std::uint64_t p = nonzero_[idx];
        if (p * t_left < rem) break;  // even t_left copies of p cannot reach rem
        chosen.push_back(p);
        if (dfs(rem - p, t_left - 1, idx, chosen)) return true;
        chosen.pop_back();
    }

    if (unconstrained) failed_.insert(memo_key(rem, t_left));
    return false;
}

MinimalResult MinimalSearcher::minimal_count(std::uint64_t n, unsigned depth_limit) {
    if (n > table_->bound) throw std::invalid_argument("query exceeds the palindrome table bound");
    if (n == 0) return {true, 0, {}};
    for (unsigned t = 1; t <= depth_limit; ++t) {
        std::vector<std::uint64_t> chosen;
        if (dfs(n, t, nonzero_.empty() ? 0 : nonzero_.size() - 1, chosen))
            return {true, t, std::move(chosen)};
    }
    return {false, 0, {}};
}

MinimalResult minimal_count(std::uint64_t n, const PalindromeTable& table, unsigned depth_limit) {
    MinimalSearcher searcher(table);
    return searcher.minimal_count(n, depth_limit);
}

}  // namespace palinsum::oracle
