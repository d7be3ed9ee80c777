#include "palinsum/reduction.hpp"

#include <stdexcept>

#include "palinsum/palindrome.hpp"

namespace palinsum {

namespace {

using Digits = std::vector<digit_t>;

// w -= c * base^p, in place. Throws if the whole value would go negative;
// inside the reduction loops the guards make that an invariant violation.
void sub_at(Digits& w, digit_t base, digit_t c, std::size_t p) {
    if (c == 0) return;
    if (p >= w.size()) throw std::underflow_error("spike subtraction underflow");
    if (w[p] >= c) {
        w[p] -= c;
        return;
    }
    w[p] += base - c;
    std::size_t i = p + 1;
    while (i < w.size() && w[i] == 0) w[i++] = base - 1;
    if (i == w.size()) throw std::underflow_error("spike subtraction underflow");
    --w[i];
}

std::strong_ordering cmp(const Digits& a, const Digits& b) {
    std::size_t la = a.size(), lb = b.size();
    while (la > 0 && a[la - 1] == 0) --la;  // a may carry transient leading zeros
    if (la != lb) return la <=> lb;
    for (std::size_t i = la; i-- > 0;)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

Digits spiked(std::size_t size, std::initializer_list<std::pair<std::size_t, digit_t>> spikes) {
    Digits ds(size, 0);
    for (auto [p, c] : spikes) ds[p] += c;
    return ds;
}

void append_violation(std::vector<std::string>& out, const std::string& msg) { out.push_back(msg); }

}  // namespace

Numeral TwoSpike::value() const { return two_spike_value(base, c, high, low); }

Numeral two_spike_value(digit_t base, digit_t c, std::size_t high, std::size_t low) {
    if (c == 0) return Numeral::zero(base);
    if (c >= base) throw std::invalid_argument("two-spike coefficient must be below the base");
    if (high <= low) throw std::invalid_argument("two-spike positions must satisfy high > low");
    std::vector<digit_t> ds(high + 1, 0);
    ds[high] = c;
    ds[low] = c;
    return Numeral::from_digits(base, std::move(ds));
}

StageOutput pass_once(const Numeral& n, std::size_t k) {
    const digit_t d = n.base();
    const std::size_t L = n.length();
    if (L < k + 6) throw std::invalid_argument("pass_once needs length(n) >= k + 6");
    for (std::size_t j = 0; j < k; ++j)
        if (n.digit_at(j) != 0) throw std::invalid_argument("pass_once needs zeros below position k");

    StageOutput out;
    out.k = k;
    out.stage_length = L;

    Digits w = n.digits();
    const Digits thr1 = spiked(L, {{L - 1, 1}, {L - 2, d - 1}, {k, d - 1}});  // d^(L-1) + x
    const Digits thr2 = spiked(L, {{L - 1, 1}});                              // d^(L-1)

    while (cmp(w, thr1) >= 0) {  // subtract x = (d-1)*(d^(L-2) + d^k)
        sub_at(w, d, d - 1, L - 2);
        sub_at(w, d, d - 1, k);
        out.s_parts.push_back(TwoSpike{d, d - 1, L - 2, k});
        ++out.loop1_count;
    }
    while (cmp(w, thr2) >= 0) {  // subtract y = (d-1)*(d^(L-3) + d^k)
        sub_at(w, d, d - 1, L - 3);
        sub_at(w, d, d - 1, k);
        out.t_parts.push_back(TwoSpike{d, d - 1, L - 3, k});
        ++out.loop2_count;
    }
    const digit_t c = k < w.size() ? w[k] : 0;
    if (c != 0) {  // subtract z = c*(d^(L-4) + d^k)
        sub_at(w, d, c, L - 4);
        sub_at(w, d, c, k);
    }
    out.r_part = TwoSpike{d, c, L - 4, k};
    out.remainder = Numeral::from_digits(d, std::move(w));
    return out;
}

PreprocessOutput preprocess(const Numeral& n) {
    const digit_t d = n.base();
    const std::size_t l = n.length();
    if (l < 7) throw std::invalid_argument("preprocess needs length(n) >= 7");

    PreprocessOutput out;
    Digits w = n.digits();
    for (unsigned i = 0; i < 4; ++i) {
        const std::size_t hi = i < 3 ? l - 2 - i : l - 5;
        Digits thr = spiked(l, {{l - 1, 1}});
        if (i < 3) {  // guard n >= d^(l-1) + atom for the first three loops
            thr[hi] += d - 1;
            thr[0] += d - 1;
        }
        while (cmp(w, thr) >= 0) {  // subtract (d-1)*(d^hi + 1)
            sub_at(w, d, d - 1, hi);
            sub_at(w, d, d - 1, 0);
            out.t_parts.push_back(TwoSpike{d, d - 1, hi, 0});
            ++out.loop_counts[i];
        }
    }
    out.reduced = Numeral::from_digits(d, std::move(w));

    // m = reduced with its three leading digits dropped, defined when the
    // normalised shape (length l-1, three leading d-1 digits) holds.
    const auto& rd = out.reduced.digits();
    bool shaped = rd.size() == l - 1;
    for (std::size_t t = 0; shaped && t < 3; ++t) shaped = rd[l - 2 - t] == d - 1;
    if (shaped)
        out.m = Numeral::from_digits(d, Digits(rd.begin(), rd.begin() + (l - 4)));
    else
        out.m = Numeral::zero(d);  // validate_preprocess reports the shape breach
    return out;
}

std::vector<std::string> validate_stage(const Numeral& input, const StageOutput& out) {
    std::vector<std::string> v;
    const digit_t d = input.base();
    const std::size_t L = out.stage_length;
    if (input.length() != L) append_violation(v, "stage input length disagrees with recorded stage_length");
    if (out.loop1_count != out.s_parts.size() || out.loop2_count != out.t_parts.size())
        append_violation(v, "loop counters disagree with emitted parts");
    if (out.loop1_count > d - 1) append_violation(v, "first loop exceeded its bound of d-1 iterations");
    if (out.loop2_count > d) append_violation(v, "second loop exceeded its bound of d iterations");
    if (out.loop2_count < 1) append_violation(v, "second loop must run at least once");
    if (out.remainder.length() != L - 1) append_violation(v, "remainder length is not exactly L-1");
    for (std::size_t j = 0; j <= out.k && j < out.remainder.length(); ++j)
        if (out.remainder.digit_at(j) != 0) {
            append_violation(v, "remainder keeps a nonzero digit at or below position k");
            break;
        }

    Numeral total = out.remainder;
    for (const auto& sp : out.s_parts) total = add(total, sp.value());
    for (const auto& sp : out.t_parts) total = add(total, sp.value());
    total = add(total, out.r_part.value());
    if (!(total == input)) append_violation(v, "stage parts plus remainder do not reproduce the input");
    return v;
}

std::vector<std::string> validate_preprocess(const Numeral& input, const PreprocessOutput& out) {
    std::vector<std::string> v;
    const digit_t d = input.base();
    const std::size_t l = input.length();
    std::uint64_t total_loops = 0;
    for (unsigned i = 0; i < 4; ++i) total_loops += out.loop_counts[i];
    const std::uint64_t per_loop_cap = d + 1;
    for (unsigned i = 0; i < 4; ++i)
        if (out.loop_counts[i] > per_loop_cap) {
            append_violation(v, "a preprocessing loop exceeded d+1 iterations");
            break;
        }
    if (total_loops > 4 * d) append_violation(v, "preprocessing emitted more than 4d parts");
    if (out.t_parts.size() != total_loops) append_violation(v, "loop counters disagree with emitted parts");

    if (out.reduced.length() != l - 1) append_violation(v, "normalised value is not one digit shorter");
    const auto& rd = out.reduced.digits();
    bool shaped = rd.size() == l - 1;
    for (std::size_t t = 0; shaped && t < 3; ++t) shaped = rd[l - 2 - t] == d - 1;
    if (!shaped) {
        append_violation(v, "normalised value lacks three leading d-1 digits");
    } else {
        const Numeral m = Numeral::from_digits(d, std::vector<digit_t>(rd.begin(), rd.begin() + (l - 4)));
        // d^2 - 2d = (d-2)*d, digits (0, d-2); upper bound d^(l-4)
        const Numeral lower = Numeral::from_digits(d, {0, d - 2});
        std::vector<digit_t> upper_digits(l - 3, 0);
        upper_digits[l - 4] = 1;
        const Numeral upper = Numeral::from_digits(d, std::move(upper_digits));
        if (compare(m, lower) == std::strong_ordering::less)
            append_violation(v, "residue m fell below d^2 - 2d");
        if (compare(m, upper) != std::strong_ordering::less)
            append_violation(v, "residue m reached d^(l-4)");
        if (!(m == out.m)) append_violation(v, "recorded residue m disagrees with the normalised value");
    }

    Numeral total = out.reduced;
    for (const auto& sp : out.t_parts) {
        if (!is_palindrome(sp.value())) {
            append_violation(v, "a preprocessing part is not palindromic");
        }
        total = add(total, sp.value());
    }
    if (!(total == input)) append_violation(v, "preprocessing parts plus normalised value do not reproduce the input");
    return v;
}

}  // namespace palinsum
