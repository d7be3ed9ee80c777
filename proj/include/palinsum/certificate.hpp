#pragma once

#include <string>
#include <vector>

#include "palinsum/assembler.hpp"
#include "palinsum/numeral.hpp"

namespace palinsum {

// Single-line JSON certificate:
//   {"base": d, "n": "...", "parts": ["...", ...], "count": k,
//    "method": "construct"|"sparse"|"optimal", "verified": true|false}
// Numbers are rendered per `format`; field order is fixed; no whitespace.
std::string certificate_json(const Decomposition& dec, bool verified, Format format);

struct ParsedCertificate {
    digit_t base = 0;
    std::string n;
    std::vector<std::string> parts;
    std::uint64_t count = 0;
    std::string method;
    bool verified = false;
};

// Parses one JSON certificate line; throws std::invalid_argument on anything
// malformed (bad JSON, missing/mistyped fields, unknown method).
ParsedCertificate parse_certificate(const std::string& line);

// Full independent re-check of a parsed certificate: numbers parse in the
// declared base (decimal or digit-list, auto-detected per string), the count
// matches, every part is a nonzero palindrome, and the parts sum to n.
VerifyOutcome recheck_certificate(const ParsedCertificate& cert);

}  // namespace palinsum
