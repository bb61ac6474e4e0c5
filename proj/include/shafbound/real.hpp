#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <initializer_list>
#include <string>

#include "shafbound/rational.hpp"

namespace shafbound {

/// Arbitrary-precision decimal float (MPFR-backed, correctly rounded).
/// Precision is set in decimal digits through PrecisionGuard; every variable
/// captures the precision in effect at its construction.
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecision = 50;
inline constexpr unsigned kMinPrecision = 30;

/// Scoped default-precision override, never below kMinPrecision.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
        Real::default_precision(std::max(digits, kMinPrecision));
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

/// Working precision for an operation combining the given operand precisions.
inline unsigned combined_precision(std::initializer_list<unsigned> precisions) {
    unsigned d = std::max(Real::default_precision(), kMinPrecision);
    for (unsigned p : precisions) d = std::max(d, p);
    return d;
}

inline Real to_real(const Int& v) { return Real(v); }

inline Real to_real(const Rat& q) { return Real(q); }

inline Real log10_real(const Real& x) { return boost::multiprecision::log10(x); }

/// log10 of a positive integer.
inline Real log10_int(const Int& v) {
    if (v <= 0) throw DomainError("log10 of non-positive integer");
    return boost::multiprecision::log10(Real(v));
}

inline Real log10_rat(const Rat& q) {
    if (q <= 0) throw DomainError("log10 of non-positive rational");
    return boost::multiprecision::log10(Real(q));
}

/// log10(m!) via lngamma; exact to working precision for any m >= 0.
inline Real log10_factorial(const Int& m) {
    if (m < 0) throw DomainError("factorial of negative integer");
    if (m <= 1) return Real(0);
    Real x = Real(m) + 1;
    return boost::multiprecision::lgamma(x) / boost::multiprecision::log(Real(10));
}

inline Int floor_to_int(const Real& x) {
    Real f = boost::multiprecision::floor(x);
    return f.convert_to<Int>();
}

inline Int ceil_to_int(const Real& x) {
    Real c = boost::multiprecision::ceil(x);
    return c.convert_to<Int>();
}

/// Decimal string carrying the full precision of x; deterministic for a
/// fixed precision setting.
inline std::string real_to_string(const Real& x) {
    return x.str(0, std::ios_base::scientific);
}

inline Real parse_real(const std::string& s) {
    try {
        return Real(s);
    } catch (const std::runtime_error& e) {
        throw ValidationError("cannot parse number '" + s + "': " + e.what());
    }
}

}  // namespace shafbound
