#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "shafbound/errors.hpp"

namespace shafbound {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// cpp_rational keeps values in lowest terms with positive denominator, which
// is exactly the canonical form required throughout this library.

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int pow_int(const Int& base, std::uint64_t exp) {
    Int r = 1;
    Int b = base;
    std::uint64_t e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Rat pow_rat(const Rat& base, std::uint64_t exp) {
    Rat r = 1;
    Rat b = base;
    std::uint64_t e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// Exact binomial coefficient for integer arguments, n >= 0.
/// Returns 0 for k < 0 or k > n.
inline Int binomial_int(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int r = 1;
    for (Int i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;  // exact: prefix products are binomials
    }
    return r;
}

inline bool is_integer(const Rat& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline Int numerator_int(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int denominator_int(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

/// Exact conversion; throws NonIntegral when q has a denominator.
inline Int to_int(const Rat& q) {
    if (!is_integer(q)) {
        throw NonIntegral("expected an exact integer, got " + q.str());
    }
    return numerator_int(q);
}

inline Int floor_rat(const Rat& q) {
    Int n = numerator_int(q);
    Int d = denominator_int(q);
    Int t = n / d;
    if (n % d != 0 && n < 0) --t;
    return t;
}

inline Int ceil_rat(const Rat& q) {
    Int n = numerator_int(q);
    Int d = denominator_int(q);
    Int t = n / d;
    if (n % d != 0 && n > 0) ++t;
    return t;
}

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Approximate decimal digit count of |v|, always >= the true count.
inline std::uint64_t decimal_digits_upper(const Int& v) {
    if (v == 0) return 1;
    Int a = v < 0 ? Int(-v) : v;
    const std::uint64_t bits = boost::multiprecision::msb(a) + 1;
    // 1/log2(10) = 0.30102999..., round the ratio up
    return bits * 30103u / 100000u + 2;
}

/// "p" or "p/q" form with q > 0; bit-exact round trip with parse_rat.
inline std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return numerator_int(q).str();
    return numerator_int(q).str() + "/" + denominator_int(q).str();
}

inline Rat parse_rat(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ValidationError("zero denominator in rational: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw ValidationError("cannot parse rational '" + s + "': " + e.what());
    }
}

}  // namespace shafbound
