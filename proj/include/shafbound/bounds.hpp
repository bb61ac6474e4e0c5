#pragma once

#include <optional>
#include <string>
#include <utility>

#include "shafbound/gotzmann.hpp"
#include "shafbound/hilbert.hpp"
#include "shafbound/magnitude.hpp"
#include "shafbound/rational.hpp"
#include "shafbound/ratpoly.hpp"
#include "shafbound/real.hpp"

namespace shafbound {

/// One problem instance: a base curve of genus g with s marked degenerate
/// points, fibers of dimension n with canonical volume v, optionally the
/// fiber Hilbert polynomial h, and the ample-twist degree a (default 2).
struct FamilyParams {
    Int g = 0;
    Int s = 0;
    int n = 1;
    Rat v = 0;
    std::optional<RatPoly> h;
    Int a = 2;

    void validate() const {
        if (g < 0) throw PreconditionViolated("genus g must be >= 0");
        if (s < 0) throw PreconditionViolated("point count s must be >= 0");
        if (n < 1) throw PreconditionViolated("fiber dimension n must be >= 1");
        if (2 * g - 2 + s <= 0) throw PreconditionViolated("2g-2+s must be positive");
        if (a < 2) throw PreconditionViolated("ample twist degree a must be >= 2");
        if (v <= 0) throw PreconditionViolated("canonical volume v must be positive");
        // v/n! must be the leading coefficient of an integer-valued
        // polynomial, which forces v itself to be an integer
        if (!is_integer(v))
            throw PreconditionViolated("canonical volume v must be an integer (n!-compatibility)");
        if (h) {
            if (h->degree() != n)
                throw PreconditionViolated("Hilbert polynomial degree must equal n");
            if (h->leading() != v / Rat(factorial(static_cast<unsigned>(n))))
                throw PreconditionViolated("Hilbert polynomial leading coefficient must equal v/n!");
            if (!h->is_integer_valued())
                throw PreconditionViolated("Hilbert polynomial must be integer-valued");
        }
    }
};

/// Every effective constant of one pipeline run. All fields are pure
/// functions of the FamilyParams (and the precision setting).
struct BoundReport {
    Int m0;
    Int h_m0;
    Int mu;
    Magnitude ell_star;
    Int delta_m0;
    Int d_1;
    Int N;
    Magnitude d_const;
    Int M;
    Magnitude C;
    std::string mode;  // "exact-h" | "volume-bounded"
};

/// Smallest integer not below
/// (e+1/2) n^(7/3) + n^(5/3)/2 + (e+1/2) n^(4/3) + 3n + n^(2/3)/2 + 5,
/// the very-ampleness twist for dimension n. Evaluated at the requested
/// precision and re-checked at twice that precision; a value within 1e-20 of
/// an integer trips PrecisionAmbiguity instead of rounding silently.
inline Int m0_constant(int n, unsigned digits = kDefaultPrecision) {
    if (n < 1) throw PreconditionViolated("m0_constant requires n >= 1");
    const auto eval = [n](unsigned d) {
        PrecisionGuard guard(d);
        const Real rn(n);
        const Real e = boost::multiprecision::exp(Real(1));
        const Real half = Real(1) / 2;
        Real expr = (e + half) * boost::multiprecision::pow(rn, Real(7) / 3);
        expr += half * boost::multiprecision::pow(rn, Real(5) / 3);
        expr += (e + half) * boost::multiprecision::pow(rn, Real(4) / 3);
        expr += 3 * rn;
        expr += half * boost::multiprecision::pow(rn, Real(2) / 3);
        expr += 5;
        return expr;
    };
    const unsigned base = std::max(digits, kMinPrecision);
    const Real v1 = eval(base);
    const Real v2 = eval(2 * base);
    const Real dist = boost::multiprecision::abs(v2 - boost::multiprecision::round(v2));
    if (dist < Real("1e-20"))
        throw PrecisionAmbiguity("m0 expression within 1e-20 of an integer at n = " + std::to_string(n));
    const Int c1 = ceil_to_int(v1);
    const Int c2 = ceil_to_int(v2);
    if (c1 != c2)
        throw PrecisionAmbiguity("m0 ceiling unstable under precision doubling at n = " + std::to_string(n));
    return c2;
}

namespace detail {

/// Values of the Hilbert polynomial as the pipeline consumes them: exact
/// integers in exact-h mode, ceiled upper bounds in volume-bounded mode.
struct HilbertModel {
    RatPoly poly;
    bool upper_bound_mode = false;

    Int value_at(const Int& m) const {
        const Rat val = poly.eval(Rat(m));
        if (val <= 0) throw NonPositive("h(m) <= 0 at m = " + m.str());
        if (upper_bound_mode) return ceil_rat(val);
        if (!is_integer(val)) throw NonIntegral("h(m) is not an integer at m = " + m.str());
        return numerator_int(val);
    }
};

inline Int delta_with(const HilbertModel& model, const Int& m, const FamilyParams& p) {
    if (m < 2) throw PreconditionViolated("delta requires m >= 2");
    const Int factor = Int(p.n) * (2 * p.g - 2 + p.s) + p.s;
    const Int vol = to_int(p.v);
    const Int e_m = pow_int(m, static_cast<std::uint64_t>(p.n)) * vol + 1;
    return factor * m * e_m * model.value_at(m);
}

inline Int d_ka_with(const HilbertModel& model, const Int& k, const FamilyParams& p, const Int& m0) {
    if (k < 1) throw PreconditionViolated("d_ka requires k >= 1");
    const Int mk = m0 * k;
    return delta_with(model, mk, p) + k * (2 * p.g - 2 + p.a) * model.value_at(mk);
}

/// delta at a scale too large to hold exactly: evaluated in floating point
/// from log10(m) and returned as a log-tier Magnitude.
inline Magnitude delta_magnitude(const HilbertModel& model, const Real& log10_m, const FamilyParams& p) {
    const Real m = boost::multiprecision::pow(Real(10), log10_m);
    Real h = 0;
    for (std::size_t i = model.poly.coeffs().size(); i-- > 0;) h = h * m + to_real(model.poly.coeff(i));
    if (h <= 0) throw NonPositive("h(m) <= 0 at log10 m = " + log10_m.str(8, std::ios_base::fixed));
    const Int factor = Int(p.n) * (2 * p.g - 2 + p.s) + p.s;
    const Int vol = to_int(p.v);
    Real val = to_real(factor) * m;
    val *= boost::multiprecision::pow(m, Real(p.n)) * to_real(vol) + 1;
    val *= h;
    return Magnitude::from_log10(log10_real(val));
}

inline Magnitude d_ka_magnitude(const HilbertModel& model, const Magnitude& k, const FamilyParams& p,
                                const Int& m0) {
    if (k.is_exact()) return Magnitude::exact(d_ka_with(model, k.exact_value(), p, m0));
    const Real log10_mk = log10_int(m0) + k.log10_approx();
    const Real mk = boost::multiprecision::pow(Real(10), log10_mk);
    Real h = 0;
    for (std::size_t i = model.poly.coeffs().size(); i-- > 0;) h = h * mk + to_real(model.poly.coeff(i));
    if (h <= 0) throw NonPositive("h(m0 k) <= 0");
    const Magnitude delta = delta_magnitude(model, log10_mk, p);
    const Real tail = boost::multiprecision::pow(Real(10), k.log10_approx()) *
                      to_real(Int(2 * p.g - 2 + p.a)) * h;
    return add(delta, Magnitude::from_log10(log10_real(tail)));
}

}  // namespace detail

/// delta(m) = (n(2g-2+s) + s) m (m^n v + 1) h(m) in exact-h mode.
inline Int delta(const Int& m, const FamilyParams& p) {
    p.validate();
    if (!p.h) throw PreconditionViolated("delta requires the Hilbert polynomial");
    return detail::delta_with({*p.h, false}, m, p);
}

/// d(k, a) = delta(m0 k) + k (2g-2+a) h(m0 k); with a = 2 the factor
/// 2g-2+a collapses to 2g.
inline Int d_ka(const Int& k, const FamilyParams& p, unsigned digits = kDefaultPrecision) {
    p.validate();
    if (!p.h) throw PreconditionViolated("d_ka requires the Hilbert polynomial");
    return detail::d_ka_with({*p.h, false}, k, p, m0_constant(p.n, digits));
}

/// N = d(1, a) + (1-g) h(m0) - 1.
inline Int N_const(const FamilyParams& p, unsigned digits = kDefaultPrecision) {
    p.validate();
    if (!p.h) throw PreconditionViolated("N_const requires the Hilbert polynomial");
    const Int m0 = m0_constant(p.n, digits);
    const detail::HilbertModel model{*p.h, false};
    const Int n = detail::d_ka_with(model, 1, p, m0) + (1 - p.g) * model.value_at(m0) - 1;
    if (n < 1) throw NonPositive("N < 1: degenerate parameters");
    return n;
}

enum class EvalPath { automatic, exact, log_space };

namespace detail {

inline Magnitude d_const_with(const HilbertModel& model, const FamilyParams& p, const Int& m0,
                              const Magnitude& ell_star, EvalPath path) {
    const Int r = model.value_at(m0);
    if (r < p.n + 2)
        throw ExponentNegative("h(m0) must be >= n + 2 (got " + r.str() + ")");
    const Int e1 = r - p.n - 1;
    const Int e2 = r - p.n - 2;
    const Int d1 = d_ka_with(model, 1, p, m0);
    const Int two_g = 2 * p.g;

    bool use_exact = ell_star.is_exact();
    if (use_exact && path == EvalPath::automatic) {
        PrecisionGuard guard(combined_precision({}));
        const Real est = to_real(e1) * log10_int(ell_star.exact_value() + 1) + log10_int(d1) + 1;
        use_exact = est <= Real(static_cast<double>(magnitude_policy().exact_digit_limit));
    }
    if (path == EvalPath::exact && !ell_star.is_exact())
        throw PreconditionViolated("exact d requires an exact ell_star");
    if (path == EvalPath::log_space) use_exact = false;

    if (use_exact) {
        const Int ls = ell_star.exact_value();
        const Int dstar = d_ka_with(model, ls, p, m0);
        const Int d = d1 * pow_int(ls + 1, e1.convert_to<std::uint64_t>()) +
                      e1 * (dstar + two_g) * pow_int(ls + 1, e2.convert_to<std::uint64_t>());
        return Magnitude::exact(d);
    }

    PrecisionGuard guard(combined_precision({ell_star.op_precision()}));
    // a forced log-space run lifts every factor to the log tier so the whole
    // chain exercises the floating path
    const auto lift = [path](const Magnitude& m) {
        return path == EvalPath::log_space && m.is_exact() ? m.promote(1) : m;
    };
    const Magnitude ls1 = lift(add(ell_star, Magnitude::exact(1)));
    const Magnitude dstar = lift(d_ka_magnitude(model, ell_star, p, m0));
    const Magnitude term1 = mul(lift(Magnitude::exact(d1)), pow(ls1, Magnitude::exact(e1)));
    const Magnitude term2 = mul(mul(Magnitude::exact(e1), add(dstar, Magnitude::exact(two_g))),
                                pow(ls1, Magnitude::exact(e2)));
    return add(term1, term2);
}

}  // namespace detail

/// d = d(1,a) (ell*+1)^(h(m0)-n-1) + (h(m0)-n-1)(d(ell*,a)+2g) (ell*+1)^(h(m0)-n-2).
/// Exact big integer whenever ell_star is exact and the digit policy allows;
/// log-space Magnitude otherwise. The path can be forced for cross-checks.
inline Magnitude d_const(const FamilyParams& p, const Magnitude& ell_star,
                         EvalPath path = EvalPath::automatic, unsigned digits = kDefaultPrecision) {
    p.validate();
    if (!p.h) throw PreconditionViolated("d_const requires the Hilbert polynomial");
    PrecisionGuard guard(std::max(digits, kMinPrecision));
    return detail::d_const_with({*p.h, false}, p, m0_constant(p.n, digits), ell_star, path);
}

/// Component-count bound for Chow'_{kappa,delta2}(W) inside P^M, W cut out
/// in degree <= delta1:
/// binom((M+1) max(d1,d2), M) ^ ((M+1)(d2 binom(d2+kappa-1,kappa) + binom(d2+kappa-1,kappa-1))).
inline Magnitude chow_bound(const Int& M, int kappa, const Int& delta1, const Magnitude& delta2) {
    if (M < 1) throw PreconditionViolated("chow_bound requires M >= 1");
    if (kappa < 1) throw PreconditionViolated("chow_bound requires kappa >= 1");
    if (delta1 < 1) throw PreconditionViolated("chow_bound requires delta1 >= 1");
    if (magnitude_cmp(delta2, Magnitude::exact(1)) < 0)
        throw PreconditionViolated("chow_bound requires delta2 >= 1");

    const Magnitude d1m = Magnitude::exact(delta1);
    const Magnitude& dmax = magnitude_cmp(delta2, d1m) >= 0 ? delta2 : d1m;
    const Magnitude base = binom_magnitude(mul(Magnitude::exact(M + 1), dmax), M);
    const Magnitude top = add(delta2, Magnitude::exact(kappa - 1));
    const Magnitude binA = binom_magnitude(top, Int(kappa));
    const Magnitude binB = binom_magnitude(top, Int(kappa - 1));
    const Magnitude expo = mul(Magnitude::exact(M + 1), add(mul(delta2, binA), binB));
    return pow(base, expo);
}

namespace detail {

struct PipelineTerms {
    Int m0;
    Int h_m0;
    Int mu;
    Magnitude ell_star;
};

inline BoundReport run_pipeline(const FamilyParams& p, const HilbertModel& model,
                                const PipelineTerms& terms, const Int& n_middle_term,
                                const std::string& mode) {
    BoundReport rep;
    rep.mode = mode;
    rep.m0 = terms.m0;
    rep.h_m0 = terms.h_m0;
    rep.mu = terms.mu;
    rep.ell_star = terms.ell_star;
    rep.delta_m0 = delta_with(model, terms.m0, p);
    rep.d_1 = d_ka_with(model, 1, p, terms.m0);
    rep.N = rep.d_1 + n_middle_term - 1;
    if (rep.N < 1) throw NonPositive("N < 1: degenerate parameters");
    rep.d_const = d_const_with(model, p, terms.m0, terms.ell_star, EvalPath::automatic);
    rep.M = (rep.N + 1) * (p.g + 2) - 1;

    const Int chow_factor = Int(p.n + 1) * (2 * p.g + 1);
    const Int degree_cut = 2 * p.g + 1;
    const Int big_m = rep.M;
    const int kappa = p.n + 1;
    rep.C = sum_dominant(rep.d_const, [&](const Magnitude& nu) {
        return chow_bound(big_m, kappa, degree_cut, mul(Magnitude::exact(chow_factor), nu));
    });
    return rep;
}

}  // namespace detail

/// Full pipeline for a known Hilbert polynomial: m0, P(x) = h(m0 x), mu,
/// ell0*, delta, d(1,a), N, d, M and the summed Chow bound C(g,s,h).
inline BoundReport C_gsh(const FamilyParams& p, unsigned digits = kDefaultPrecision) {
    p.validate();
    if (!p.h) throw PreconditionViolated("C_gsh requires the Hilbert polynomial");
    PrecisionGuard guard(std::max(digits, kMinPrecision));

    detail::PipelineTerms terms;
    terms.m0 = m0_constant(p.n, digits);
    const detail::HilbertModel model{*p.h, false};
    terms.h_m0 = model.value_at(terms.m0);
    const RatPoly scaled = p.h->substitute_scale(terms.m0);
    terms.mu = mu(scaled, p.n);
    terms.ell_star = tower_length_bound(terms.mu, p.n);

    const Int n_middle = (1 - p.g) * terms.h_m0;
    return detail::run_pipeline(p, model, terms, n_middle, "exact-h");
}

/// The worst-case Hilbert polynomial H+(m) = (v/n!) m^n + sum_k B_{n-k} m^(n-k)
/// with B_{n-k} = coeff_bound(n, k, v): every true h consistent with (n, v)
/// satisfies |h_{n-k}| <= B_{n-k}, so H+ dominates h pointwise for m >= 0.
inline RatPoly volume_bound_poly(int n, const Rat& v) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs[static_cast<std::size_t>(n)] = v / Rat(factorial(static_cast<unsigned>(n)));
    for (int k = 1; k <= n; ++k) coeffs[static_cast<std::size_t>(n - k)] = coeff_bound(n, k, v);
    return RatPoly(std::move(coeffs));
}

/// Volume-bounded pipeline: every h-dependent quantity is replaced by its
/// upper bound from the coefficient estimates, and every downstream constant
/// is monotone in those values, so the report dominates any exact-h report
/// with the same (g, s, n, v).
inline BoundReport C_gsnv(const Int& g, const Int& s, int n, const Rat& v, const Int& a = 2,
                          unsigned digits = kDefaultPrecision) {
    FamilyParams p;
    p.g = g;
    p.s = s;
    p.n = n;
    p.v = v;
    p.a = a;
    p.validate();
    PrecisionGuard guard(std::max(digits, kMinPrecision));

    detail::PipelineTerms terms;
    terms.m0 = m0_constant(n, digits);
    const detail::HilbertModel model{volume_bound_poly(n, v), true};
    terms.h_m0 = model.value_at(terms.m0);

    // mu upper bound: max{ k! m0^k B_k, n } over the coefficients of H+
    Rat mu_bound = Rat(n);
    Int m0k = 1;
    for (int k = 0; k <= n; ++k) {
        const Rat t = Rat(factorial(static_cast<unsigned>(k))) * Rat(m0k) *
                      model.poly.coeff(static_cast<std::size_t>(k));
        if (t > mu_bound) mu_bound = t;
        m0k *= terms.m0;
    }
    terms.mu = ceil_rat(mu_bound);
    terms.ell_star = tower_length_bound(terms.mu, n);

    // (1-g) h(m0) <= 0 for g >= 1 and <= H+(m0) for g = 0
    const Int n_middle = g >= 1 ? Int(0) : terms.h_m0;
    return detail::run_pipeline(p, model, terms, n_middle, "volume-bounded");
}

}  // namespace shafbound
