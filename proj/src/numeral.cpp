#include "palinsum/numeral.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace palinsum {

namespace {

constexpr std::uint64_t kDecChunk = 1'000'000'000;  // 10^9, safe: chunk*base fits u64 for base <= 2^32
constexpr unsigned kDecChunkDigits = 9;

void check_base(digit_t base) {
    if (base < kMinBase || base > kMaxBase)
        throw std::invalid_argument("numeral base must be in [2, 2^32]");
}

void trim(std::vector<digit_t>& ds) {
    while (!ds.empty() && ds.back() == 0) ds.pop_back();
}

// value := value * m + a, in base `base`; requires m, a small enough that
// digit*m + carry fits u64 (holds for m <= 10^9 with base <= 2^32).
void mul_add_small(std::vector<digit_t>& ds, digit_t base, std::uint64_t m, std::uint64_t a) {
    std::uint64_t carry = a;
    for (auto& dg : ds) {
        std::uint64_t cur = dg * m + carry;
        dg = cur % base;
        carry = cur / base;
    }
    while (carry != 0) {
        ds.push_back(carry % base);
        carry /= base;
    }
}

// value := value / m (in place, MSD-first short division); returns remainder.
std::uint64_t div_small(std::vector<digit_t>& ds, digit_t base, std::uint64_t m) {
    std::uint64_t rem = 0;
    for (std::size_t i = ds.size(); i-- > 0;) {
        std::uint64_t cur = rem * base + ds[i];
        ds[i] = cur / m;
        rem = cur % m;
    }
    trim(ds);
    return rem;
}

std::uint64_t parse_token_u64(std::string_view tok) {
    if (tok.empty()) throw std::invalid_argument("empty digit token");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("malformed digit token '" + std::string(tok) + "'");
    return v;
}

}  // namespace

Numeral::Numeral(digit_t base) : base_(base) { check_base(base); }

Numeral Numeral::from_value(digit_t base, std::uint64_t value) {
    Numeral n(base);
    while (value != 0) {
        n.digits_.push_back(value % base);
        value /= base;
    }
    return n;
}

Numeral Numeral::from_digits(digit_t base, std::vector<digit_t> digits_lsd_first) {
    Numeral n(base);
    for (digit_t dg : digits_lsd_first)
        if (dg >= base) throw std::invalid_argument("digit out of range for base");
    trim(digits_lsd_first);
    n.digits_ = std::move(digits_lsd_first);
    return n;
}

Numeral Numeral::parse(std::string_view text, digit_t base, Format format) {
    check_base(base);
    if (format == Format::decimal) {
        if (text.empty()) throw std::invalid_argument("empty decimal numeral");
        for (char ch : text)
            if (ch < '0' || ch > '9') throw std::invalid_argument("malformed decimal numeral");
        Numeral n(base);
        std::size_t pos = 0;
        std::size_t lead = text.size() % kDecChunkDigits;
        if (lead != 0) {
            mul_add_small(n.digits_, base, 1, parse_token_u64(text.substr(0, lead)));
            pos = lead;
        }
        for (; pos < text.size(); pos += kDecChunkDigits)
            mul_add_small(n.digits_, base, kDecChunk, parse_token_u64(text.substr(pos, kDecChunkDigits)));
        return n;
    }
    // digit-list: "(" + most-significant-first comma-separated digits + ")"; "()" is zero
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw std::invalid_argument("digit-list numeral must be parenthesised");
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<digit_t> ds;  // collected MSD-first
    if (!body.empty()) {
        std::size_t start = 0;
        while (true) {
            std::size_t comma = body.find(',', start);
            std::string_view tok = body.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                      : comma - start);
            std::uint64_t v = parse_token_u64(tok);
            if (v >= base) throw std::invalid_argument("digit out of range for base");
            ds.push_back(v);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    std::reverse(ds.begin(), ds.end());
    return from_digits(base, std::move(ds));
}

std::string Numeral::render(Format format) const {
    if (format == Format::digit_list) {
        std::string out = "(";
        for (std::size_t i = digits_.size(); i-- > 0;) {
            out += std::to_string(digits_[i]);
            if (i != 0) out += ',';
        }
        out += ')';
        return out;
    }
    if (is_zero()) return "0";
    std::vector<digit_t> work = digits_;
    std::vector<std::uint64_t> chunks;  // least-significant chunk first
    while (!work.empty()) chunks.push_back(div_small(work, base_, kDecChunk));
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string piece = std::to_string(chunks[i]);
        out.append(kDecChunkDigits - piece.size(), '0');
        out += piece;
    }
    return out;
}

std::uint64_t Numeral::to_value() const {
    std::uint64_t v = 0;
    for (std::size_t i = digits_.size(); i-- > 0;) {
        if (v > (UINT64_MAX - digits_[i]) / base_)
            throw std::overflow_error("numeral exceeds 64-bit range");
        v = v * base_ + digits_[i];
    }
    return v;
}

std::strong_ordering compare(const Numeral& a, const Numeral& b) {
    if (a.base() != b.base()) throw std::invalid_argument("base mismatch in comparison");
    if (a.length() != b.length()) return a.length() <=> b.length();
    const auto& da = a.digits();
    const auto& db = b.digits();
    for (std::size_t i = da.size(); i-- > 0;)
        if (da[i] != db[i]) return da[i] <=> db[i];
    return std::strong_ordering::equal;
}

Numeral add(const Numeral& a, const Numeral& b) {
    if (a.base() != b.base()) throw std::invalid_argument("base mismatch in addition");
    const digit_t base = a.base();
    const auto& da = a.digits();
    const auto& db = b.digits();
    std::vector<digit_t> out;
    out.reserve(std::max(da.size(), db.size()) + 1);
    digit_t carry = 0;
    for (std::size_t i = 0; i < std::max(da.size(), db.size()); ++i) {
        std::uint64_t cur = carry;
        if (i < da.size()) cur += da[i];
        if (i < db.size()) cur += db[i];
        out.push_back(cur % base);
        carry = cur / base;
    }
    if (carry != 0) out.push_back(carry);
    return Numeral::from_digits(base, std::move(out));
}

Numeral sub(const Numeral& a, const Numeral& b) {
    if (a.base() != b.base()) throw std::invalid_argument("base mismatch in subtraction");
    const digit_t base = a.base();
    const auto& da = a.digits();
    const auto& db = b.digits();
    if (da.size() < db.size()) throw std::underflow_error("subtraction underflow");
    std::vector<digit_t> out;
    out.reserve(da.size());
    digit_t borrow = 0;
    for (std::size_t i = 0; i < da.size(); ++i) {
        std::uint64_t need = borrow + (i < db.size() ? db[i] : 0);
        if (da[i] >= need) {
            out.push_back(da[i] - need);
            borrow = 0;
        } else {
            out.push_back(da[i] + base - need);
            borrow = 1;
        }
    }
    if (borrow != 0) throw std::underflow_error("subtraction underflow");
    return Numeral::from_digits(base, std::move(out));
}

}  // namespace palinsum
