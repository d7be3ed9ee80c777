#pragma once

#include <vector>

#include "palinsum/numeral.hpp"

namespace palinsum {

// True iff the canonical digit sequence reads the same in both directions.
// Zero (empty sequence) and single-digit numbers are palindromes.
bool is_palindrome(const Numeral& n);

// Digit companion map used by the sparse decomposition:
//   f(0) = 0, f(1) = 1, f(x) = d - x + 1 for 2 <= x <= d-1.
// For every digit x and position j >= 1, x*d^j - f(x) is a palindrome.
struct DigitMap {
    digit_t base;
    digit_t operator()(digit_t x) const;
};

// Decomposes n digit-by-digit into at most 2*length(n) nonzero palindromes:
// each nonzero digit x at position j >= 1 contributes f(x) and x*d^j - f(x);
// a nonzero digit at position 0 contributes itself. n = 0 yields no parts.
std::vector<Numeral> sparse_decompose(const Numeral& n);

}  // namespace palinsum
