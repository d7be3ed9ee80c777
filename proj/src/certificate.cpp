#include "palinsum/certificate.hpp"

#include <json.hpp>

#include "palinsum/palindrome.hpp"

namespace palinsum {

namespace {

Numeral parse_auto(const std::string& text, digit_t base) {
    const Format f = (!text.empty() && text.front() == '(') ? Format::digit_list : Format::decimal;
    return Numeral::parse(text, base, f);
}

}  // namespace

std::string certificate_json(const Decomposition& dec, bool verified, Format format) {
    nlohmann::ordered_json j;
    j["base"] = dec.base;
    j["n"] = dec.n.render(format);
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (const Numeral& part : dec.parts) parts.push_back(part.render(format));
    j["parts"] = std::move(parts);
    j["count"] = dec.parts.size();
    j["method"] = method_name(dec.method);
    j["verified"] = verified;
    return j.dump();
}

ParsedCertificate parse_certificate(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("certificate must be a JSON object");
    for (const char* field : {"base", "n", "parts", "count", "method", "verified"})
        if (!j.contains(field))
            throw std::invalid_argument(std::string("certificate lacks field '") + field + "'");
    if (!j["base"].is_number_unsigned() && !j["base"].is_number_integer())
        throw std::invalid_argument("certificate field 'base' must be an integer");
    if (j["base"].is_number_integer() && j["base"].get<std::int64_t>() < 0)
        throw std::invalid_argument("certificate field 'base' must be nonnegative");
    if (!j["n"].is_string()) throw std::invalid_argument("certificate field 'n' must be a string");
    if (!j["parts"].is_array()) throw std::invalid_argument("certificate field 'parts' must be an array");
    if (!j["count"].is_number_unsigned() && !j["count"].is_number_integer())
        throw std::invalid_argument("certificate field 'count' must be an integer");
    if (!j["method"].is_string()) throw std::invalid_argument("certificate field 'method' must be a string");
    if (!j["verified"].is_boolean()) throw std::invalid_argument("certificate field 'verified' must be a boolean");

    ParsedCertificate cert;
    cert.base = j["base"].get<std::uint64_t>();
    cert.n = j["n"].get<std::string>();
    for (const auto& p : j["parts"]) {
        if (!p.is_string()) throw std::invalid_argument("certificate parts must be strings");
        cert.parts.push_back(p.get<std::string>());
    }
    cert.count = j["count"].get<std::uint64_t>();
    cert.method = j["method"].get<std::string>();
    if (cert.method != "construct" && cert.method != "sparse" && cert.method != "optimal")
        throw std::invalid_argument("unknown certificate method '" + cert.method + "'");
    cert.verified = j["verified"].get<bool>();
    return cert;
}

VerifyOutcome recheck_certificate(const ParsedCertificate& cert) {
    if (cert.base < kMinBase || cert.base > kMaxBase) return {false, "base out of range"};
    if (cert.count != cert.parts.size()) return {false, "count field disagrees with the number of parts"};
    try {
        const Numeral n = parse_auto(cert.n, cert.base);
        Numeral total = Numeral::zero(cert.base);
        for (const std::string& text : cert.parts) {
            const Numeral part = parse_auto(text, cert.base);
            if (part.is_zero()) return {false, "zero part " + text};
            if (!is_palindrome(part)) return {false, "part " + text + " is not a palindrome"};
            total = add(total, part);
        }
        if (!(total == n))
            return {false, "parts sum to " + total.render(Format::decimal) + ", not " +
                               n.render(Format::decimal)};
    } catch (const std::invalid_argument& e) {
        return {false, std::string("unparseable number: ") + e.what()};
    }
    return {};
}

}  // namespace palinsum
