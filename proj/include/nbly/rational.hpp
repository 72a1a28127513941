#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "nbly/errors.hpp"

namespace nbly {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps lowest terms and a positive
// denominator as class invariants, which is exactly the contract we need.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(const Rational& r) {
    if (r > 0) return Sign::positive;
    if (r < 0) return Sign::negative;
    return Sign::zero;
}

inline int to_int(Sign s) { return static_cast<int>(s); }

inline Sign opposite(Sign s) { return static_cast<Sign>(-to_int(s)); }

// Text form "p/q" or "p".
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& text, int line_no = 0) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'", line_no);
        return Rational(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + text + "'", line_no);
    }
}

} // namespace nbly
