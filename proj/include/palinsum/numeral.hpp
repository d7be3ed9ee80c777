#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace palinsum {

using digit_t = std::uint64_t;

inline constexpr digit_t kMinBase = 2;
inline constexpr digit_t kMaxBase = digit_t(1) << 32;

enum class Format { decimal, digit_list };

// Arbitrary-precision natural number in an explicit base d (2 <= d <= 2^32).
// Digits are stored least-significant first; zero is the empty digit sequence.
// Values are immutable once constructed; all operations are pure.
class Numeral {
public:
    explicit Numeral(digit_t base);  // zero
    static Numeral zero(digit_t base) { return Numeral(base); }
    static Numeral from_value(digit_t base, std::uint64_t value);
    // Takes digits least-significant first; trims leading zeros; every digit must be < base.
    static Numeral from_digits(digit_t base, std::vector<digit_t> digits_lsd_first);
    static Numeral parse(std::string_view text, digit_t base, Format format);

    std::string render(Format format) const;

    digit_t base() const { return base_; }
    std::size_t length() const { return digits_.size(); }  // number of digits; 0 for zero
    bool is_zero() const { return digits_.empty(); }
    digit_t digit_at(std::size_t j) const { return j < digits_.size() ? digits_[j] : 0; }
    const std::vector<digit_t>& digits() const { return digits_; }  // LSD first, canonical

    // Value as a machine integer; throws std::overflow_error if it does not fit.
    std::uint64_t to_value() const;

private:
    digit_t base_;
    std::vector<digit_t> digits_;
};

// Same-base comparison/arithmetic; base mismatch throws std::invalid_argument.
std::strong_ordering compare(const Numeral& a, const Numeral& b);
Numeral add(const Numeral& a, const Numeral& b);
// Throws std::underflow_error if a < b (signals an algorithm-invariant violation upstream).
Numeral sub(const Numeral& a, const Numeral& b);

inline bool operator==(const Numeral& a, const Numeral& b) { return compare(a, b) == std::strong_ordering::equal; }
inline std::strong_ordering operator<=>(const Numeral& a, const Numeral& b) { return compare(a, b); }
inline Numeral operator+(const Numeral& a, const Numeral& b) { return add(a, b); }
inline Numeral operator-(const Numeral& a, const Numeral& b) { return sub(a, b); }

}  // namespace palinsum
