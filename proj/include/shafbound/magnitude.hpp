#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "shafbound/rational.hpp"
#include "shafbound/real.hpp"

namespace shafbound {

/// Size thresholds steering the tiered representation.
struct MagnitudePolicy {
    /// Exact integers are kept up to this many decimal digits; beyond it a
    /// value is promoted to the log10 tier.
    std::uint64_t exact_digit_limit = 100000;
    /// A log10 value above this is promoted to the log10(log10) tier.
    double level1_log10_limit = 1e15;
    /// sum_dominant iterates term by term only up to this many terms.
    std::uint64_t sum_iterate_limit = 4096;
    /// binom_magnitude sums per-factor logs only up to this many factors,
    /// switching to log-Gamma afterwards.
    std::uint64_t binom_iterate_limit = 1u << 16;
};

inline MagnitudePolicy& magnitude_policy() {
    static MagnitudePolicy policy;
    return policy;
}

/// Non-negative number in one of three tiers: exact integer (level 0),
/// log10 of the value (level 1), or log10 of log10 of the value (level 2).
///
/// A Magnitude is a certified upper bound for the quantity it stands for:
/// the true value lies in [V / 10^w, V] where V is the stored value and w is
/// enclosure_log10_width() (zero for exactly known values). All operations
/// here are monotone non-decreasing in every argument, so both interval ends
/// propagate soundly.
class Magnitude {
  public:
    Magnitude() : level_(0), exact_(0) {}

    static Magnitude exact(Int v) {
        if (v < 0) throw DomainError("Magnitude cannot be negative");
        if (decimal_digits_upper(v) > magnitude_policy().exact_digit_limit)
            return from_log10(log10_int(v));
        Magnitude m;
        m.level_ = 0;
        m.exact_ = std::move(v);
        return m;
    }

    /// Value 10^l, l >= 0.
    static Magnitude from_log10(Real l) {
        if (l < 0) throw DomainError("Magnitude below 1 is only representable exactly");
        Magnitude m;
        if (l > magnitude_policy().level1_log10_limit) {
            m.level_ = 2;
            m.log_ = log10_real(l);
        } else {
            m.level_ = 1;
            m.log_ = std::move(l);
        }
        return m;
    }

    /// Value 10^(10^ll).
    static Magnitude from_loglog10(Real ll) {
        Magnitude m;
        m.level_ = 2;
        m.log_ = std::move(ll);
        return m;
    }

    int level() const { return level_; }
    bool is_exact() const { return level_ == 0; }

    const Int& exact_value() const {
        if (level_ != 0) throw DomainError("Magnitude is not exact");
        return exact_;
    }

    /// Level 1: log10(value). Level 2: log10(log10(value)).
    const Real& log_payload() const {
        if (level_ == 0) throw DomainError("exact Magnitude has no log payload");
        return log_;
    }

    /// Certified slack: the true value is >= value / 10^width.
    const Real& enclosure_log10_width() const { return width_; }
    bool has_enclosure() const { return width_ > 0; }

    Magnitude with_enclosure_width(Real w) const {
        Magnitude m = *this;
        m.width_ = std::move(w);
        return m;
    }

    /// log10(value) as a Real. Representable at every level: a level-2
    /// payload ll yields 10^ll, which fits in the MPFR exponent range for
    /// every value this library produces. Requires value > 0.
    Real log10_approx() const {
        switch (level_) {
            case 0: return log10_int(exact_);
            case 1: return log_;
            default: return boost::multiprecision::pow(Real(10), log_);
        }
    }

    /// Lower end of the certified enclosure.
    Magnitude lower_end() const {
        if (width_ == 0) return *this;
        if (level_ == 0) return *this;  // exact values carry no slack
        Real l = log10_approx() - width_;
        if (l < 0) l = 0;
        return from_log10(l);
    }

    /// Copy promoted to the given tier (0 -> 1 -> 2). Promotion is value
    /// preserving up to the working precision; demotion is not offered.
    Magnitude promote(int target_level) const {
        if (target_level < level_) throw DomainError("Magnitude demotion is not supported");
        Magnitude m = *this;
        if (m.level_ == 0 && target_level >= 1) {
            if (m.exact_ <= 0) throw DomainError("cannot promote a zero Magnitude");
            m.log_ = log10_int(m.exact_);
            m.exact_ = 0;
            m.level_ = 1;
        }
        if (m.level_ == 1 && target_level == 2) {
            if (m.log_ <= 0) throw DomainError("cannot promote to level 2 below value 10");
            m.log_ = log10_real(m.log_);
            m.level_ = 2;
        }
        return m;
    }

    /// Plain integer, "~10^x" or "~10^10^x" (uses the nominal upper value).
    std::string human() const {
        switch (level_) {
            case 0: return exact_.str();
            case 1: return "~10^" + log_.str(8, std::ios_base::fixed);
            default: return "~10^10^" + log_.str(8, std::ios_base::fixed);
        }
    }

    friend int magnitude_cmp(const Magnitude& a, const Magnitude& b) {
        if (a.level_ == 0 && b.level_ == 0)
            return a.exact_ < b.exact_ ? -1 : (a.exact_ == b.exact_ ? 0 : 1);
        // a non-exact magnitude is >= 1, so exact zero sorts first
        if (a.level_ == 0 && a.exact_ == 0) return -1;
        if (b.level_ == 0 && b.exact_ == 0) return 1;
        PrecisionGuard guard(combined_precision({a.op_precision(), b.op_precision()}));
        Real la = a.log10_approx();
        Real lb = b.log10_approx();
        // a level-2 payload beyond ~1e18 overflows even the MPFR exponent
        // range when exponentiated; fall back to the loglog payloads then
        const bool ia = boost::multiprecision::isinf(la);
        const bool ib = boost::multiprecision::isinf(lb);
        if (ia || ib) {
            if (ia && !ib) return 1;
            if (!ia && ib) return -1;
            return a.log_ < b.log_ ? -1 : (a.log_ == b.log_ ? 0 : 1);
        }
        return la < lb ? -1 : (la == lb ? 0 : 1);
    }

    friend bool operator<(const Magnitude& a, const Magnitude& b) { return magnitude_cmp(a, b) < 0; }
    friend bool operator<=(const Magnitude& a, const Magnitude& b) { return magnitude_cmp(a, b) <= 0; }
    friend bool operator>(const Magnitude& a, const Magnitude& b) { return magnitude_cmp(a, b) > 0; }
    friend bool operator>=(const Magnitude& a, const Magnitude& b) { return magnitude_cmp(a, b) >= 0; }

    unsigned op_precision() const { return level_ == 0 ? 0 : log_.precision(); }

  private:
    int level_;
    Int exact_;
    Real log_ = Real(0);
    Real width_ = Real(0);
};

namespace detail {

/// Auto-tiered construction from log10, keeping sub-tier widths attached.
inline Magnitude tiered_from_log10(const Real& l, const Real& width) {
    Magnitude m = Magnitude::from_log10(l);
    if (width > 0) m = m.with_enclosure_width(width);
    return m;
}

}  // namespace detail

/// Exact product when both factors are exact and small enough per policy;
/// otherwise computed in log space at the wider tier.
inline Magnitude mul(const Magnitude& a, const Magnitude& b) {
    if (a.is_exact() && b.is_exact()) {
        return Magnitude::exact(a.exact_value() * b.exact_value());
    }
    if ((a.is_exact() && a.exact_value() == 0) || (b.is_exact() && b.exact_value() == 0))
        return Magnitude::exact(0);
    PrecisionGuard guard(combined_precision({a.op_precision(), b.op_precision()}));
    Real l = a.log10_approx() + b.log10_approx();
    return detail::tiered_from_log10(l, a.enclosure_log10_width() + b.enclosure_log10_width());
}

/// Exact sum when both are exact; otherwise log-sum-exp at the wider tier.
inline Magnitude add(const Magnitude& a, const Magnitude& b) {
    if (a.is_exact() && b.is_exact()) {
        return Magnitude::exact(a.exact_value() + b.exact_value());
    }
    if (a.is_exact() && a.exact_value() == 0) return b;
    if (b.is_exact() && b.exact_value() == 0) return a;
    PrecisionGuard guard(combined_precision({a.op_precision(), b.op_precision()}));
    Real la = a.log10_approx();
    Real lb = b.log10_approx();
    if (la < lb) std::swap(la, lb);
    // la + log10(1 + 10^(lb-la)); the power underflows harmlessly to 0 when
    // the smaller term is beyond the working precision
    Real l = la + log10_real(1 + boost::multiprecision::pow(Real(10), lb - la));
    Real wa = a.enclosure_log10_width();
    Real wb = b.enclosure_log10_width();
    return detail::tiered_from_log10(l, std::max(wa, wb));
}

/// base^exp for base >= 1. Exact when both are exact and the result stays
/// under the exact-digit policy; log10 tier while exp * log10(base) fits it;
/// log10(log10) tier beyond, where the payload is log10(exp) + log10(log10 base).
inline Magnitude pow(const Magnitude& base, const Magnitude& exp) {
    if (exp.is_exact() && exp.exact_value() == 0) return Magnitude::exact(1);
    if (base.is_exact()) {
        if (base.exact_value() < 1) throw DomainError("pow requires base >= 1");
        if (base.exact_value() == 1) return Magnitude::exact(1);
    }
    PrecisionGuard guard(combined_precision({base.op_precision(), exp.op_precision()}));
    if (base.is_exact() && exp.is_exact()) {
        const Real digits = to_real(exp.exact_value()) * log10_int(base.exact_value());
        if (digits <= Real(static_cast<double>(magnitude_policy().exact_digit_limit))) {
            return Magnitude::exact(
                pow_int(base.exact_value(), exp.exact_value().convert_to<std::uint64_t>()));
        }
    }
    const Real lb = base.log10_approx();  // > 0 since base > 1 here
    // log10 of the result is exp * lb; assemble its own log10 first so the
    // level-2 regime never materialises the oversized product
    Real log10_l = exp.log10_approx() + log10_real(lb);

    Real width(0);
    const Real we = exp.enclosure_log10_width();
    const Real wb = base.enclosure_log10_width();
    if (we > 0 || wb > 0) {
        // width = log10(hi) - log10(lo) with lo = (base/10^wb)^(exp/10^we)
        Real ve_hi = boost::multiprecision::pow(Real(10), exp.log10_approx());
        Real ve_lo = boost::multiprecision::pow(Real(10), exp.log10_approx() - we);
        Real lb_lo = lb - wb;
        if (lb_lo < 0) lb_lo = 0;
        width = ve_hi * lb - ve_lo * lb_lo;
    }

    const Real level1_cap = log10_real(Real(magnitude_policy().level1_log10_limit));
    if (log10_l <= level1_cap) {
        Real l = boost::multiprecision::pow(Real(10), log10_l);
        return detail::tiered_from_log10(l, width);
    }
    Magnitude m = Magnitude::from_loglog10(log10_l);
    if (width > 0) m = m.with_enclosure_width(width);
    return m;
}

namespace detail {

/// Exact binomial; only called when the result size passed the policy check.
inline Int binomial_exact_int(const Int& top, const Int& bottom) {
    Int k = bottom;
    if (top - bottom < k) k = top - bottom;
    Int r = 1;
    const std::uint64_t kk = k.convert_to<std::uint64_t>();
    for (std::uint64_t i = 1; i <= kk; ++i) {
        r *= top - Int(kk) + Int(i);
        r /= Int(i);
    }
    return r;
}

inline Real log10_binomial_via_lgamma(const Real& top, const Int& bottom) {
    // lgamma(top+1) - lgamma(top-bottom+1) - lgamma(bottom+1) suffers
    // catastrophic cancellation when top is large, so widen both the working
    // precision and the operands by the exponent of the leading term
    Real probe = top * boost::multiprecision::log(top + 1);
    long extra = 0;
    if (probe > 1) extra = floor_to_int(log10_real(probe)).convert_to<long>() + 1;
    const unsigned base_digits = Real::default_precision();
    const unsigned digits = base_digits + static_cast<unsigned>(std::max(0L, extra)) + 10;
    PrecisionGuard guard(digits);
    Real t = top;
    t.precision(digits);
    Real bot = to_real(Int(bottom));
    bot.precision(digits);
    Real a = boost::multiprecision::lgamma(t + 1);
    Real b = boost::multiprecision::lgamma(t - bot + 1);
    Real c = boost::multiprecision::lgamma(bot + 1);
    Real l = (a - b - c) / boost::multiprecision::log(Real(10));
    l.precision(base_digits);
    return l;
}

}  // namespace detail

/// binom(top, bottom) with an exact non-negative integer bottom.
///
/// Exact product formula while the policy permits; in log space otherwise:
/// for top far above bottom, bottom*log10(top) - log10(bottom!) (the dropped
/// correction sum_i log10(1 - i/top) is below 1e-12 once log10(top) exceeds
/// log10(bottom) + 25); else a per-factor log sum for small bottom, or the
/// correctly rounded log-Gamma form.
inline Magnitude binom_magnitude(const Magnitude& top, const Int& bottom) {
    if (bottom < 0) throw DomainError("binom_magnitude requires bottom >= 0");
    if (bottom == 0) return Magnitude::exact(1);
    PrecisionGuard guard(combined_precision({top.op_precision()}));

    if (top.is_exact()) {
        const Int& t = top.exact_value();
        if (t < bottom) throw DomainError("binom_magnitude requires top >= bottom");
        // size estimate: binom(t, b) <= t^min(b, t-b)
        Int k = bottom;
        if (t - bottom < k) k = t - bottom;
        if (k == 0) return Magnitude::exact(1);
        const Real est_digits = to_real(k) * log10_int(t);
        if (est_digits <= Real(static_cast<double>(magnitude_policy().exact_digit_limit))) {
            return Magnitude::exact(detail::binomial_exact_int(t, bottom));
        }
    }

    const Real ltop = top.log10_approx();
    const Real width = to_real(Int(bottom)) * top.enclosure_log10_width();
    const Real lbot = log10_int(bottom);
    if (ltop - lbot >= 25) {
        Real l = to_real(Int(bottom)) * ltop - log10_factorial(bottom);
        return detail::tiered_from_log10(l, width);
    }
    if (top.is_exact() && bottom <= Int(magnitude_policy().binom_iterate_limit)) {
        const std::uint64_t m = bottom.convert_to<std::uint64_t>();
        Real l(0);
        for (std::uint64_t i = 0; i < m; ++i) l += log10_int(top.exact_value() - Int(i));
        l -= log10_factorial(bottom);
        return detail::tiered_from_log10(l, width);
    }
    Real t = top.is_exact() ? to_real(top.exact_value())
                            : boost::multiprecision::pow(Real(10), ltop);
    Real l = detail::log10_binomial_via_lgamma(t, bottom);
    return detail::tiered_from_log10(l, width);
}

/// Generator view of the monotone term sequence T_1 <= T_2 <= ... <= T_count.
using MagnitudeTermFn = std::function<Magnitude(const Magnitude& nu)>;

/// Sum of a monotone non-decreasing term sequence of the given length.
///
/// Term-by-term (exact or log-sum-exp) when count is exact and small per
/// policy. Otherwise the certified enclosure [T_count, count*T_count] is
/// returned: the nominal value is the upper end count*T_count and the
/// enclosure width log10(count) records the spread down to T_count.
inline Magnitude sum_dominant(const Magnitude& count, const MagnitudeTermFn& term) {
    if (count.is_exact() && count.exact_value() == 0) return Magnitude::exact(0);
    if (count.is_exact() && count.exact_value() <= Int(magnitude_policy().sum_iterate_limit)) {
        const std::uint64_t n = count.exact_value().convert_to<std::uint64_t>();
        Magnitude acc = Magnitude::exact(0);
        for (std::uint64_t nu = 1; nu <= n; ++nu) acc = add(acc, term(Magnitude::exact(Int(nu))));
        return acc;
    }
    const Magnitude t_max = term(count);
    PrecisionGuard guard(combined_precision({t_max.op_precision(), count.op_precision()}));
    const Magnitude upper = mul(t_max, count);
    return upper.with_enclosure_width(upper.enclosure_log10_width() + count.log10_approx());
}

}  // namespace shafbound
