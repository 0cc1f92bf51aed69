#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "setmax/errors.hpp"

namespace setmax {

/// Exact rational value. Every quantity the solvers and verifiers compare is
/// a Value; no floating point enters solver logic anywhere.
using Value = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Canonical text form: lowest terms, "p" when the denominator is 1,
/// otherwise "p/q" with q > 0.
inline std::string to_rational_string(const Value& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

/// Parses "p" or "p/q" (optional leading '-'). Throws parameter_error on
/// malformed text or zero denominator.
inline Value parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) throw parameter_error("bad rational: " + std::string(text));
            return Value(BigInt(std::string(text)));
        }
        const std::string_view p = text.substr(0, slash);
        const std::string_view q = text.substr(slash + 1);
        if (!is_int(p) || !is_int(q)) throw parameter_error("bad rational: " + std::string(text));
        BigInt den{std::string(q)};
        if (den == 0) throw parameter_error("zero denominator: " + std::string(text));
        return Value(BigInt(std::string(p)), den);
    } catch (const std::runtime_error& e) {
        throw parameter_error(std::string("bad rational '") + std::string(text) + "': " + e.what());
    }
}

/// (1 - 1/k)^e as an exact rational; k >= 1, e >= 0.
inline Value one_minus_inv_pow(long k, long e) {
    if (k < 1 || e < 0) throw parameter_error("one_minus_inv_pow: k >= 1 and e >= 0 required");
    Value base(k - 1, k);
    Value out(1);
    for (long i = 0; i < e; ++i) out *= base;
    return out;
}

} // namespace setmax
