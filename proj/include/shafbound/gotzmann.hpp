#pragma once

#include <cstdint>
#include <vector>

#include "shafbound/magnitude.hpp"
#include "shafbound/rational.hpp"
#include "shafbound/ratpoly.hpp"

namespace shafbound {

/// The unique non-increasing sequence a_1 >= ... >= a_ell >= 0 with
/// P(x) = sum_i binom(x + a_i - (i-1), a_i); ell is the Gotzmann length.
struct GotzmannDecomposition {
    std::vector<int> a_seq;

    std::uint64_t length() const { return a_seq.size(); }
};

/// The tail lengths ell_k = max{ j : a_j >= k } of a decomposition together
/// with the coefficient table q_{k,m} of the partial sums Q_k. ell is indexed
/// by the subscript: ell[k] holds ell_k for k = 0..n+1, with ell[n+1] = 0 and
/// ell[0] the full length. q[k] holds q_{k,0..k}.
struct LengthTable {
    std::vector<Int> ell;
    std::vector<std::vector<Rat>> q;

    const Int& ell0() const { return ell.front(); }
};

struct GotzmannOptions {
    /// Caps both greedy terms and recursion steps; hit -> NotGotzmann.
    std::uint64_t max_iterations = 10'000'000;
};

/// binom(x + a - (i-1), a) as an exact polynomial; the i-th term of a
/// Gotzmann expansion. For a = 0 this is the constant 1 regardless of i.
inline RatPoly binomial_term(const Int& a, const Int& i) {
    if (a < 0) throw PreconditionViolated("binomial_term requires a >= 0");
    if (i < 1) throw PreconditionViolated("binomial_term requires i >= 1");
    if (a == 0) return RatPoly::constant(1);
    if (a > 100000) throw PreconditionViolated("binomial_term degree too large");
    const std::uint64_t deg = a.convert_to<std::uint64_t>();
    // product (x + a - (i-1) - t) for t = 0..a-1, divided by a!
    RatPoly p = RatPoly::constant(1);
    const Int c0 = a - (i - 1);
    for (std::uint64_t t = 0; t < deg; ++t) {
        p = p * RatPoly({Rat(c0 - Int(t)), Rat(1)});
    }
    return Rat(Int(1), factorial(static_cast<unsigned>(deg))) * p;
}

/// Greedy Gotzmann decomposition: repeatedly strip binom(x + d - (i-1), d)
/// with d the current remainder degree. Serves as the independent oracle for
/// lengths_recursive. Throws NotGotzmann when P admits no such expansion or
/// the term cap is exceeded.
inline GotzmannDecomposition decompose_greedy(const RatPoly& P, const GotzmannOptions& opts = {}) {
    if (P.is_zero()) throw NotGotzmann("zero polynomial has no Gotzmann expansion");
    if (P.leading() <= 0) throw NotGotzmann("leading coefficient must be positive");
    if (!P.is_integer_valued()) throw NotGotzmann("polynomial is not integer-valued");

    GotzmannDecomposition out;
    RatPoly r = P;
    Int i = 1;
    int prev_a = r.degree();
    while (!r.is_zero()) {
        const int d = r.degree();
        if (r.leading() <= 0)
            throw NotGotzmann("remainder with non-positive leading coefficient at term " + i.str());
        if (d > prev_a) throw NotGotzmann("a-sequence fails monotonicity at term " + i.str());
        if (d == 0) {
            // the remaining expansion is a run of constant-1 terms
            const Rat c = r.coeff(0);
            if (!is_integer(c)) throw NotGotzmann("non-integral constant remainder");
            const Int cnt = numerator_int(c);
            if (Int(out.a_seq.size()) + cnt > Int(opts.max_iterations))
                throw NotGotzmann("term cap exceeded");
            out.a_seq.insert(out.a_seq.end(), cnt.convert_to<std::size_t>(), 0);
            break;
        }
        if (out.a_seq.size() >= opts.max_iterations) throw NotGotzmann("term cap exceeded");
        out.a_seq.push_back(d);
        r = r - binomial_term(Int(d), i);
        prev_a = d;
        ++i;
    }
    return out;
}

/// Exact reconstruction sum_i binom(x + a_i - (i-1), a_i) of a decomposition.
inline RatPoly reconstruct(const GotzmannDecomposition& dec) {
    RatPoly sum;
    Int zero_run = 0;
    for (std::size_t idx = 0; idx < dec.a_seq.size(); ++idx) {
        if (dec.a_seq[idx] == 0) {
            ++zero_run;  // every a = 0 term is the constant 1
            continue;
        }
        sum = sum + binomial_term(Int(dec.a_seq[idx]), Int(idx + 1));
    }
    if (zero_run > 0) sum = sum + RatPoly::constant(Rat(zero_run));
    return sum;
}

/// Elementary symmetric polynomial of degree r in the k values
/// u_i = i - j + 1, i = 1..k. Requires 0 <= r <= k.
inline Int sigma_symmetric(int k, const Int& j, int r) {
    if (k < 1) throw PreconditionViolated("sigma_symmetric requires k >= 1");
    if (r < 0 || r > k) throw PreconditionViolated("sigma_symmetric requires 0 <= r <= k");
    std::vector<Int> e(static_cast<std::size_t>(r) + 1);
    e[0] = 1;
    int filled = 0;
    for (int i = 1; i <= k; ++i) {
        const Int u = Int(i) - j + 1;
        filled = std::min(filled + 1, r);
        for (int t = filled; t >= 1; --t) e[static_cast<std::size_t>(t)] += u * e[static_cast<std::size_t>(t) - 1];
    }
    return e[static_cast<std::size_t>(r)];
}

namespace detail {

/// All elementary symmetric values e_0..e_k of u_i = i - j + 1 at once.
inline void sigma_row(int k, const Int& j, std::vector<Int>& e) {
    e.assign(static_cast<std::size_t>(k) + 1, Int(0));
    e[0] = 1;
    for (int i = 1; i <= k; ++i) {
        const Int u = Int(i) - j + 1;
        for (int t = std::min(i, k); t >= 1; --t) e[static_cast<std::size_t>(t)] += u * e[static_cast<std::size_t>(t) - 1];
    }
}

}  // namespace detail

/// Recursive computation of ell_n, ..., ell_0 from the coefficients of P:
/// ell_n = n! p_n, then ell_k = ell_{k+1} + k!(p_k - sum_{j>k} q_{j,k}),
/// where q_{j,k} = (1/j!) sum_{ell_{j+1} < t <= ell_j} sigma^t_{j-k}.
/// A negative p_k - sum q_{j,k} or a non-integral ell_k means P is not a
/// Hilbert polynomial of the Gotzmann form.
///
/// n may be 0, in which case P is the constant p_0 and ell_0 = p_0.
inline LengthTable lengths_recursive(const RatPoly& P, int n, const GotzmannOptions& opts = {}) {
    if (n < 0) throw PreconditionViolated("lengths_recursive requires n >= 0");
    if (P.degree() != n) throw PreconditionViolated("lengths_recursive requires deg(P) = n");

    LengthTable t;
    t.ell.assign(static_cast<std::size_t>(n) + 2, Int(0));
    t.q.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) t.q[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k) + 1, Rat(0));

    const Rat ln = Rat(factorial(static_cast<unsigned>(n))) * P.coeff(static_cast<std::size_t>(n));
    if (ln <= 0) throw NotGotzmann("n! p_n must be positive");
    if (!is_integer(ln)) throw NotGotzmann("n! p_n must be an integer");
    t.ell[static_cast<std::size_t>(n)] = numerator_int(ln);

    std::uint64_t steps = 0;
    std::vector<Int> e;
    // q_{j,m} for row j becomes available as soon as ell_j is known
    auto fill_row = [&](int j) {
        const Int& lo = t.ell[static_cast<std::size_t>(j) + 1];
        const Int& hi = t.ell[static_cast<std::size_t>(j)];
        std::vector<Int> sums(static_cast<std::size_t>(j) + 1, Int(0));
        for (Int tt = lo + 1; tt <= hi; ++tt) {
            if (++steps > opts.max_iterations) throw NotGotzmann("recursion step cap exceeded");
            detail::sigma_row(j, tt, e);
            for (int m = 0; m <= j; ++m) sums[static_cast<std::size_t>(m)] += e[static_cast<std::size_t>(j - m)];
        }
        const Int jfact = factorial(static_cast<unsigned>(j));
        for (int m = 0; m <= j; ++m)
            t.q[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = Rat(sums[static_cast<std::size_t>(m)], jfact);
    };

    if (n >= 1) fill_row(n);
    for (int k = n - 1; k >= 0; --k) {
        Rat qsum = 0;
        for (int j = k + 1; j <= n; ++j) qsum += t.q[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        const Rat head = P.coeff(static_cast<std::size_t>(k)) - qsum;
        if (head < 0)
            throw NotGotzmann("necessary condition p_k - sum q_{j,k} >= 0 fails at k = " + std::to_string(k));
        const Rat lk = Rat(t.ell[static_cast<std::size_t>(k) + 1]) + Rat(factorial(static_cast<unsigned>(k))) * head;
        if (!is_integer(lk)) throw NotGotzmann("ell_k non-integral at k = " + std::to_string(k));
        t.ell[static_cast<std::size_t>(k)] = numerator_int(lk);
        if (k >= 1) fill_row(k);
    }
    // Q_0 is the constant ell_0 - ell_1
    t.q[0][0] = n >= 1 ? Rat(t.ell[0] - t.ell[1]) : Rat(t.ell[0]);

    // the chain 0 = ell_{n+1} < ell_n <= ... <= ell_0 is forced by the
    // checks above; a violation here is a bug
    for (int k = n; k >= 1; --k) {
        if (t.ell[static_cast<std::size_t>(k)] > t.ell[static_cast<std::size_t>(k) - 1])
            throw InternalInconsistency("ell chain not monotone");
    }
    return t;
}

/// mu_P = max{ n! p_n, |(n-1)! p_{n-1}|, ..., |p_0|, n }. Every k! p_k must
/// be an integer and n! p_n positive.
inline Int mu(const RatPoly& P, int n) {
    if (n < 0) throw PreconditionViolated("mu requires n >= 0");
    if (P.degree() != n) throw PreconditionViolated("mu requires deg(P) = n");
    Int best = n;
    for (int k = n; k >= 0; --k) {
        const Rat term = Rat(factorial(static_cast<unsigned>(k))) * P.coeff(static_cast<std::size_t>(k));
        if (!is_integer(term))
            throw NonIntegral("k! p_k is not an integer at k = " + std::to_string(k));
        if (k == n && term <= 0) throw PreconditionViolated("n! p_n must be positive");
        Int v = numerator_int(term);
        if (v < 0) v = -v;
        if (v > best) best = v;
    }
    return best;
}

/// gamma_0 = 1, gamma_1 = 2, gamma_k = k^(k+1) * gamma_{k-1}^(k+1).
inline Int gamma_k(int k) {
    if (k < 0) throw PreconditionViolated("gamma_k requires k >= 0");
    if (k == 0) return 1;
    Int g = 2;
    for (int i = 2; i <= k; ++i) {
        g = pow_int(Int(i), static_cast<std::uint64_t>(i) + 1) * pow_int(g, static_cast<std::uint64_t>(i) + 1);
    }
    return g;
}

/// c_0 = 1, c_1 = 2, c_k = (c_0 + ... + c_{k-1})^(k+1) + 1. Dominated by
/// gamma_k for every k.
inline Int c_seq(int k) {
    if (k < 0) throw PreconditionViolated("c_seq requires k >= 0");
    if (k == 0) return 1;
    Int prev_sum = 1;  // c_0
    Int c = 2;
    for (int i = 2; i <= k; ++i) {
        prev_sum += c;
        c = pow_int(prev_sum, static_cast<std::uint64_t>(i) + 1) + 1;
    }
    return c;
}

/// ell_0^* = sum_{k=0..n} gamma_k * mu^{(k+1)!} for a given mu >= 1; exact
/// while the digit policy allows, log-tiered beyond.
inline Magnitude tower_length_bound(const Int& mu_value, int n) {
    if (n < 0) throw PreconditionViolated("tower_length_bound requires n >= 0");
    if (mu_value < 1) throw PreconditionViolated("tower_length_bound requires mu >= 1");
    PrecisionGuard guard(combined_precision({}));

    // log10 gamma_k: 0, log10 2, then lg_k = (k+1)(log10 k + lg_{k-1})
    std::vector<Real> lg(static_cast<std::size_t>(n) + 1);
    lg[0] = 0;
    if (n >= 1) lg[1] = log10_real(Real(2));
    for (int k = 2; k <= n; ++k)
        lg[static_cast<std::size_t>(k)] = Real(k + 1) * (log10_int(Int(k)) + lg[static_cast<std::size_t>(k) - 1]);

    const Real lmu = log10_int(mu_value);
    std::vector<Int> fact(static_cast<std::size_t>(n) + 1);
    Real max_term_log(0);
    for (int k = 0; k <= n; ++k) {
        fact[static_cast<std::size_t>(k)] = factorial(static_cast<unsigned>(k) + 1);
        Real tl = lg[static_cast<std::size_t>(k)] + to_real(fact[static_cast<std::size_t>(k)]) * lmu;
        if (tl > max_term_log) max_term_log = tl;
    }

    if (max_term_log + 1 <= Real(static_cast<double>(magnitude_policy().exact_digit_limit))) {
        Int sum = 0;
        for (int k = 0; k <= n; ++k)
            sum += gamma_k(k) * pow_int(mu_value, fact[static_cast<std::size_t>(k)].convert_to<std::uint64_t>());
        return Magnitude::exact(sum);
    }
    // log-sum-exp over the term logs
    Real acc(0);
    for (int k = 0; k <= n; ++k) {
        Real tl = lg[static_cast<std::size_t>(k)] + to_real(fact[static_cast<std::size_t>(k)]) * lmu;
        acc += boost::multiprecision::pow(Real(10), tl - max_term_log);
    }
    return Magnitude::from_log10(max_term_log + log10_real(acc));
}

/// ell_0^* for a polynomial: the tower bound at mu(P, n).
inline Magnitude length_upper_bound(const RatPoly& P, int n) {
    return tower_length_bound(mu(P, n), n);
}

}  // namespace shafbound
