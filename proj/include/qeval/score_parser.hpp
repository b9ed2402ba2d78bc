#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace qeval {

enum class ParseStatus { ok, out_of_range, no_number, ambiguous };

inline const char* to_string(ParseStatus s) {
    switch (s) {
        case ParseStatus::ok: return "ok";
        case ParseStatus::out_of_range: return "out_of_range";
        case ParseStatus::no_number: return "no_number";
        case ParseStatus::ambiguous: return "ambiguous";
    }
    return "no_number";
}

struct ParsedScore {
    std::optional<int> value;  // present iff status == ok, always in [1,100]
    ParseStatus status = ParseStatus::no_number;
    std::string raw_reply;
    std::optional<std::pair<std::size_t, std::size_t>> matched_span;  // [start, end) into raw_reply
};

// Extract a 1-100 score from a free-text continuation. Total: every string
// maps to a status, nothing throws.
//
// Rule: scan left to right for maximal decimal-digit runs; the first run whose
// face value lies in [1,100] wins. A decimal fraction like "87.5" therefore
// yields 87 (the run before the point). If that first in-range run sits right
// after "out of " or "/" and an earlier (out-of-range) run exists, the reply
// looks like a captured denominator and is flagged ambiguous instead of
// scored. No digit runs at all -> no_number; runs but none in range ->
// out_of_range. Non-ASCII numerals are not digits.
inline ParsedScore parse_score(std::string_view reply) {
    ParsedScore result;
    result.raw_reply = std::string(reply);

    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };

    bool saw_any_run = false;
    std::size_t i = 0;
    const std::size_t n = reply.size();
    while (i < n) {
        if (!is_digit(reply[i])) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < n && is_digit(reply[i])) ++i;
        const std::size_t end = i;

        // Face value of the whole run; leading zeros don't change it. More
        // than three significant digits is out of range without parsing.
        std::size_t sig = start;
        while (sig < end && reply[sig] == '0') ++sig;
        long value = 0;
        if (end - sig > 3) {
            value = 101;
        } else {
            for (std::size_t k = sig; k < end; ++k) value = value * 10 + (reply[k] - '0');
        }

        if (value >= 1 && value <= 100) {
            bool after_denominator_marker = false;
            if (start >= 1 && reply[start - 1] == '/') {
                after_denominator_marker = true;
            } else if (start >= 7 && reply.substr(start - 7, 7) == "out of ") {
                after_denominator_marker = true;
            }
            if (after_denominator_marker && saw_any_run) {
                result.status = ParseStatus::ambiguous;
                return result;
            }
            result.status = ParseStatus::ok;
            result.value = static_cast<int>(value);
            result.matched_span = {start, end};
            return result;
        }
        saw_any_run = true;
    }

    result.status = saw_any_run ? ParseStatus::out_of_range : ParseStatus::no_number;
    return result;
}

}  // namespace qeval
