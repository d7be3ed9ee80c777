#include "palinsum/assembler.hpp"

#include <utility>

#include "palinsum/palindrome.hpp"

namespace palinsum {

namespace {

Numeral small_input_threshold(digit_t base) {  // d^8 + 1
    std::vector<digit_t> ds(9, 0);
    ds[8] = 1;
    ds[0] = 1;
    return Numeral::from_digits(base, std::move(ds));
}

void throw_if_violated(const std::vector<std::string>& violations, const Numeral& input,
                       const std::string& stage) {
    if (!violations.empty())
        throw PipelineError("postcondition violated", input.render(Format::decimal), stage, violations);
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::construct: return "construct";
        case Method::sparse: return "sparse";
        case Method::optimal: return "optimal";
    }
    return "construct";
}

PipelineError::PipelineError(std::string message, std::string input_decimal, std::string stage,
                             std::vector<std::string> details)
    : std::runtime_error(message + " [input " + input_decimal + ", " + stage +
                         (details.empty() ? "]" : "]: " + details.front())),
      input_(std::move(input_decimal)),
      stage_(std::move(stage)),
      details_(std::move(details)) {}

Numeral slot_sum(digit_t base, std::span<const TwoSpike> column) {
    std::size_t top = 0;
    for (const auto& sp : column)
        if (!sp.is_padding()) top = std::max(top, sp.high);
    std::vector<digit_t> ds(top + 1, 0);
    for (const auto& sp : column) {
        if (sp.is_padding()) continue;
        if (sp.high <= sp.low || sp.high >= ds.size())
            throw PipelineError("malformed slot entry", "?", "slot assembly", {});
        if (ds[sp.high] != 0 || ds[sp.low] != 0)
            throw PipelineError("slot entries collide", "?", "slot assembly",
                                {"two entries share a digit position in one slot"});
        ds[sp.high] = sp.c;
        ds[sp.low] = sp.c;
    }
    return Numeral::from_digits(base, std::move(ds));
}

void split_last_t_entry(StageOutput& stage, digit_t base) {
    if (stage.t_parts.empty())
        throw PipelineError("cannot split an empty t-row", "?", "stage-0 patch", {});
    TwoSpike last = stage.t_parts.back();
    if (last.c != base - 1)
        throw PipelineError("split target must carry coefficient d-1", "?", "stage-0 patch", {});
    stage.t_parts.back().c = base - 2;
    stage.t_parts.push_back(TwoSpike{base, 1, last.high, last.low});
}

Decomposition decompose(const Numeral& n, const DecomposeOptions& options) {
    const digit_t d = n.base();
    Decomposition dec;
    dec.base = d;
    dec.n = n;

    auto finish = [&](Method method) {
        dec.method = method;
        if (options.validate) {
            VerifyOutcome check = verify_certificate(dec);
            if (!check.ok)
                throw PipelineError("certificate self-check failed", n.render(Format::decimal),
                                    "final verification", {check.reason});
        }
    };

    if (options.shortcut && !n.is_zero() && is_palindrome(n)) {
        dec.parts.push_back(n);
        finish(Method::optimal);
        return dec;
    }

    if (compare(n, small_input_threshold(d)) != std::strong_ordering::greater) {
        dec.parts = sparse_decompose(n);
        finish(Method::sparse);
        return dec;
    }

    // Normalise to (d-1)*d^(l-2) + (d-1)*d^(l-3) + (d-1)*d^(l-4) + m.
    PreprocessOutput pre = preprocess(n);
    if (options.validate) throw_if_violated(validate_preprocess(n, pre), n, "preprocess");
    dec.stage_report.preprocess_counts = pre.loop_counts;
    for (const auto& sp : pre.t_parts) dec.parts.push_back(sp.value());

    // Dry-run stage 0; a zero closing digit would leave slot 0's r-column sum
    // non-palindromic, so emit the palindrome 1, decrement, and rerun.
    Numeral current = pre.reduced;
    StageOutput stage0 = pass_once(current, 0);
    if (stage0.r_part.c == 0) {
        if (current.is_zero())
            throw PipelineError("decrement patch hit zero", n.render(Format::decimal), "stage 0", {});
        const Numeral one = Numeral::from_value(d, 1);
        dec.parts.push_back(one);
        current = sub(current, one);
        dec.stage_report.minus_one_applied = true;
        stage0 = pass_once(current, 0);
        if (stage0.r_part.c == 0)
            throw PipelineError("closing digit still zero after decrement", n.render(Format::decimal),
                                "stage 0", {});
    }
    if (options.validate) throw_if_violated(validate_stage(current, stage0), n, "stage 0");

    // Reduce length stage by stage while the cursor fits.
    std::vector<StageOutput> rows;
    rows.push_back(std::move(stage0));
    Numeral next = rows.back().remainder;
    for (std::size_t k = 1; next.length() >= k + 6; ++k) {
        StageOutput st = pass_once(next, k);
        if (options.validate) throw_if_violated(validate_stage(next, st), n, "stage " + std::to_string(k));
        next = st.remainder;
        rows.push_back(std::move(st));
    }
    const Numeral tail = next;

    // Stage-0 slot rows must fill completely: d-1 s-entries, d t-entries
    // (splitting one t-entry in two when one short), nonzero closing digit.
    if (rows.front().t_parts.size() < d) {
        split_last_t_entry(rows.front(), d);
        dec.stage_report.y_split_applied = true;
    }
    {
        std::vector<std::string> bad;
        if (rows.front().s_parts.size() != d - 1) bad.push_back("stage-0 s-row is not full");
        if (rows.front().t_parts.size() != d) bad.push_back("stage-0 t-row is not full");
        if (rows.front().r_part.c == 0) bad.push_back("stage-0 closing digit is zero");
        if (!bad.empty())
            throw PipelineError("stage-0 slot rows underfull", n.render(Format::decimal), "slot assembly",
                                std::move(bad));
    }

    for (const auto& row : rows)
        dec.stage_report.stages.push_back(StageCounters{row.loop1_count, row.loop2_count, row.r_part.c});

    // Column-wise slot sums: stage k contributes its j-th emission to column j;
    // within one column all spike positions are pairwise distinct, so each sum
    // is a palindrome read off the stage-0 span.
    auto emit_columns = [&](auto member, std::size_t slots) {
        for (std::size_t j = 0; j < slots; ++j) {
            std::vector<TwoSpike> column;
            for (const auto& row : rows) {
                const auto& parts = row.*member;
                if (j < parts.size()) column.push_back(parts[j]);
            }
            Numeral sum = slot_sum(d, column);
            if (sum.is_zero()) continue;
            if (options.validate && !is_palindrome(sum))
                throw PipelineError("slot sum is not palindromic", n.render(Format::decimal),
                                    "slot assembly", {sum.render(Format::decimal)});
            dec.parts.push_back(std::move(sum));
        }
    };
    emit_columns(&StageOutput::s_parts, d - 1);
    emit_columns(&StageOutput::t_parts, d);
    {
        std::vector<TwoSpike> column;
        for (const auto& row : rows) column.push_back(row.r_part);
        Numeral sum = slot_sum(d, column);
        if (!sum.is_zero()) {
            if (options.validate && !is_palindrome(sum))
                throw PipelineError("slot sum is not palindromic", n.render(Format::decimal),
                                    "slot assembly", {sum.render(Format::decimal)});
            dec.parts.push_back(std::move(sum));
        }
    }

    // The tail kept at most five nonzero digits; finish digit by digit.
    for (Numeral& part : sparse_decompose(tail)) dec.parts.push_back(std::move(part));
    finish(Method::construct);
    return dec;
}

VerifyOutcome verify_certificate(const Decomposition& dec) {
    Numeral total = Numeral::zero(dec.base);
    if (dec.n.base() != dec.base) return {false, "certificate base disagrees with its numeral"};
    for (const Numeral& part : dec.parts) {
        if (part.base() != dec.base) return {false, "part base disagrees with the certificate base"};
        if (part.is_zero()) return {false, "zero part"};
        if (!is_palindrome(part)) return {false, "part " + part.render(Format::decimal) + " is not a palindrome"};
        total = add(total, part);
    }
    if (!(total == dec.n))
        return {false, "parts sum to " + total.render(Format::decimal) + ", not " + dec.n.render(Format::decimal)};
    return {};
}

}  // namespace palinsum
