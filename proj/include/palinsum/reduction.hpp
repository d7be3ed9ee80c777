#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "palinsum/numeral.hpp"

namespace palinsum {

// c*(d^high + d^low), a palindrome whenever its digits outside {high, low} are zero.
// c = 0 encodes slot padding. For nonzero c, high > low is required.
struct TwoSpike {
    digit_t base = 0;
    digit_t c = 0;
    std::size_t high = 0;
    std::size_t low = 0;

    bool is_padding() const { return c == 0; }
    Numeral value() const;
};

Numeral two_spike_value(digit_t base, digit_t c, std::size_t high, std::size_t low);

// One pass of the length-reduction step at cursor position k over an input of
// length L >= k+6 whose digits below position k are zero:
//   loop 1: subtract x = (d-1)*(d^(L-2) + d^k)  while value >= d^(L-1) + x
//   loop 2: subtract y = (d-1)*(d^(L-3) + d^k)  while value >= d^(L-1)
//   close:  subtract z = c*(d^(L-4) + d^k) with c the current digit at position k
// The remainder has length exactly L-1 and zeros through position k.
struct StageOutput {
    std::size_t k = 0;
    std::size_t stage_length = 0;  // L, length of the stage input
    std::vector<TwoSpike> s_parts;  // loop-1 emissions: c = d-1, high = L-2, low = k
    std::vector<TwoSpike> t_parts;  // loop-2 emissions: c = d-1, high = L-3, low = k
    TwoSpike r_part;                // closing emission: c = digit at k, high = L-4, low = k
    std::uint32_t loop1_count = 0;
    std::uint32_t loop2_count = 0;
    Numeral remainder{2};
};

StageOutput pass_once(const Numeral& n, std::size_t k);

// Normalises any n of length l >= 7 into (d-1)*d^(l-2) + (d-1)*d^(l-3) + (d-1)*d^(l-4) + m
// with 0 <= m < d^(l-4), emitting palindromic two-spike parts with low = 0:
//   loop i = 0,1,2: subtract (d-1)*(d^(l-2-i) + 1)  while value >= d^(l-1) + atom
//   loop 3:         subtract (d-1)*(d^(l-5) + 1)    while value >= d^(l-1)
struct PreprocessOutput {
    std::vector<TwoSpike> t_parts;  // all with low = 0, c = d-1
    Numeral reduced{2};             // the normalised value; length exactly l-1
    Numeral m{2};                   // reduced minus its three leading (d-1) digits
    std::array<std::uint32_t, 4> loop_counts{};
};

PreprocessOutput preprocess(const Numeral& n);

// Postcondition checks (the bounds the construction promises), reported as data:
// an empty result means every check passed. `input` is the exact stage input.
std::vector<std::string> validate_stage(const Numeral& input, const StageOutput& out);
std::vector<std::string> validate_preprocess(const Numeral& input, const PreprocessOutput& out);

}  // namespace palinsum
