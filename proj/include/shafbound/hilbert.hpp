#pragma once

#include <optional>
#include <vector>

#include "shafbound/rational.hpp"
#include "shafbound/ratpoly.hpp"

namespace shafbound {

using RatMatrix = std::vector<std::vector<Rat>>;

/// A canonically polarized manifold seen through its numerical data: the
/// dimension n, the canonical volume v = K^n and, when known, the Hilbert
/// polynomial h(t) = chi(tK) with leading coefficient v/n!.
struct CanonicalPolarization {
    int n = 1;
    Rat volume = 0;
    std::optional<RatPoly> hilbert;

    void validate() const {
        if (n < 1) throw PreconditionViolated("dimension n must be >= 1");
        if (volume <= 0) throw PreconditionViolated("canonical volume must be positive");
        if (hilbert) {
            if (hilbert->degree() != n)
                throw PreconditionViolated("Hilbert polynomial degree must equal n");
            if (hilbert->leading() != volume / Rat(factorial(static_cast<unsigned>(n))))
                throw PreconditionViolated("leading coefficient must equal v/n!");
            if (!hilbert->is_integer_valued())
                throw PreconditionViolated("Hilbert polynomial must be integer-valued");
        }
    }
};

/// Curve base case: a curve of genus g >= 2 has v = 2g - 2 and
/// h(t) = v t - v/2 by Riemann-Roch.
inline CanonicalPolarization curve_canonical_hilbert(const Int& genus) {
    if (genus < 2) throw PreconditionViolated("curve case requires genus >= 2");
    const Rat v = Rat(2 * genus - 2);
    CanonicalPolarization cp;
    cp.n = 1;
    cp.volume = v;
    cp.hilbert = RatPoly({Rat(-v / 2), v});
    cp.validate();
    return cp;
}

/// m_n = 1 + (n+1)(n+2)/2: twisting by m_n K is very ample in dimension n.
inline Int m_n_constant(int n) {
    if (n < 1) throw PreconditionViolated("m_n_constant requires n >= 1");
    return 1 + Int(n + 1) * Int(n + 2) / 2;
}

/// a_p = 2^(p(p+3)/2 - 2) / p!.
inline Rat a_p_constant(int p) {
    if (p < 1) throw PreconditionViolated("a_p_constant requires p >= 1");
    const std::uint64_t e = static_cast<std::uint64_t>(p) * (static_cast<std::uint64_t>(p) + 3) / 2 - 2;
    return Rat(pow_int(Int(2), e), factorial(static_cast<unsigned>(p)));
}

/// The coefficient bound n! a_1...a_n m_n^k (1+m_n)^(nk) v on |h_{n-k}|.
inline Rat coeff_bound(int n, int k, const Rat& v) {
    if (n < 1) throw PreconditionViolated("coeff_bound requires n >= 1");
    if (k < 0 || k > n) throw PreconditionViolated("coeff_bound requires 0 <= k <= n");
    if (v <= 0) throw PreconditionViolated("coeff_bound requires v > 0");
    Rat prod = Rat(factorial(static_cast<unsigned>(n)));
    for (int p = 1; p <= n; ++p) prod *= a_p_constant(p);
    const Int mn = m_n_constant(n);
    prod *= Rat(pow_int(mn, static_cast<std::uint64_t>(k)));
    prod *= Rat(pow_int(mn + 1, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(k)));
    return prod * v;
}

/// Entry k verifies |h_{n-k}| < coeff_bound(n, k, v); the k = 0 entry instead
/// verifies the exact identity h_n = v/n! (the strict k = 0 inequality is
/// vacuous at n = 1, where both sides coincide).
inline std::vector<bool> check_coeff_bounds(const CanonicalPolarization& cp) {
    cp.validate();
    if (!cp.hilbert) throw PreconditionViolated("check_coeff_bounds requires the Hilbert polynomial");
    const RatPoly& h = *cp.hilbert;
    std::vector<bool> ok(static_cast<std::size_t>(cp.n) + 1);
    ok[0] = h.leading() == cp.volume / Rat(factorial(static_cast<unsigned>(cp.n)));
    for (int k = 1; k <= cp.n; ++k) {
        const Rat hk = h.coeff(static_cast<std::size_t>(cp.n - k));
        ok[static_cast<std::size_t>(k)] = abs_rat(hk) < coeff_bound(cp.n, k, cp.volume);
    }
    return ok;
}

namespace detail {

/// Bareiss fraction-free elimination; exact for integer matrices without
/// the gcd churn of rational pivots.
inline Int det_bareiss(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    Int sign = 1;
    Int prev = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            sign = -sign;
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            for (std::size_t c = col + 1; c < n; ++c) {
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[col][col];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace detail

/// Exact determinant: fraction-free elimination for integer matrices,
/// rational Gaussian elimination otherwise.
inline Rat det_rational(const RatMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw PreconditionViolated("det_rational requires a square matrix");
    if (n == 0) return 1;
    bool integral = true;
    for (const auto& row : m)
        for (const Rat& x : row) integral = integral && is_integer(x);
    if (integral) {
        std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = numerator_int(m[i][j]);
        return Rat(detail::det_bareiss(std::move(a)));
    }
    RatMatrix a = m;
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rat f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

/// Lower-triangular change of basis y = U x between the coefficients of a
/// polynomial and of its backward difference, together with its exact
/// inverse W: u_{ij} = (-1)^(i-j) binom(n+1-j, n-i) for j <= i, det U = n!,
/// and every |w_{ij}| < a_n.
struct TransferMatrix {
    int n = 0;
    RatMatrix U;
    RatMatrix W;
};

inline TransferMatrix transfer_matrix(int n) {
    if (n < 1) throw PreconditionViolated("transfer_matrix requires n >= 1");
    const std::size_t sz = static_cast<std::size_t>(n);
    TransferMatrix t;
    t.n = n;
    t.U.assign(sz, std::vector<Rat>(sz, Rat(0)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            Int b = binomial_int(Int(n + 1 - j), Int(n - i));
            if ((i - j) % 2 != 0) b = -b;
            t.U[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = Rat(b);
        }
    }

    // forward substitution on U W = I, one column at a time
    t.W.assign(sz, std::vector<Rat>(sz, Rat(0)));
    for (std::size_t c = 0; c < sz; ++c) {
        for (std::size_t r = c; r < sz; ++r) {
            Rat rhs = r == c ? Rat(1) : Rat(0);
            for (std::size_t k = c; k < r; ++k) rhs -= t.U[r][k] * t.W[k][c];
            t.W[r][c] = rhs / t.U[r][r];
        }
    }

    // self-checks: the diagonal product is the determinant of a triangular
    // matrix, and the inverse entries obey the a_n bound. The bound comes
    // from the minor lemma, which needs n >= 2; at n = 1 the single inverse
    // entry equals a_1 = 1 exactly, so equality is admitted there.
    Rat det = 1;
    for (std::size_t i = 0; i < sz; ++i) det *= t.U[i][i];
    if (det != Rat(factorial(static_cast<unsigned>(n))))
        throw InternalInconsistency("det U != n!");
    const Rat an = a_p_constant(n);
    for (std::size_t i = 0; i < sz; ++i) {
        for (std::size_t j = 0; j < sz; ++j) {
            Rat prod = 0;
            for (std::size_t k = 0; k < sz; ++k) prod += t.U[i][k] * t.W[k][j];
            if (prod != (i == j ? Rat(1) : Rat(0))) throw InternalInconsistency("U W != I");
            const Rat w = abs_rat(t.W[i][j]);
            if (n >= 2 ? !(w < an) : !(w <= an)) throw InternalInconsistency("|w_ij| >= a_n");
        }
    }
    return t;
}

/// Checks |det V| < 2^(n(n+3)/2 - 2) for an (n-1)x(n-1) matrix V subject to
/// the shape hypotheses v_{ij} = 0 for i+1 < j and |v_{ij}| < 2^(n+1-j).
/// Throws HypothesisViolated when V is not an admissible input, so a false
/// return really means the determinant bound fails.
inline bool minor_bound_holds(const RatMatrix& v, int n) {
    if (n < 2) throw PreconditionViolated("minor_bound_holds requires n >= 2");
    const std::size_t sz = static_cast<std::size_t>(n) - 1;
    if (v.size() != sz) throw HypothesisViolated("matrix must be (n-1) x (n-1)");
    for (const auto& row : v)
        if (row.size() != sz) throw HypothesisViolated("matrix must be (n-1) x (n-1)");
    for (std::size_t i = 1; i <= sz; ++i) {
        for (std::size_t j = 1; j <= sz; ++j) {
            const Rat& entry = v[i - 1][j - 1];
            if (i + 1 < j && entry != 0)
                throw HypothesisViolated("v_ij must vanish for i+1 < j");
            if (!(abs_rat(entry) < Rat(pow_int(Int(2), static_cast<std::uint64_t>(n) + 1 - j))))
                throw HypothesisViolated("|v_ij| < 2^(n+1-j) fails");
        }
    }
    const Rat bound = Rat(pow_int(Int(2), static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(n) + 3) / 2 - 2));
    return abs_rat(det_rational(v)) < bound;
}

/// Hilbert polynomial of a general hyperplane section: the backward
/// difference h(t) - h(t-1) of the ambient polynomial.
inline RatPoly hyperplane_section_poly(const RatPoly& hL) {
    if (hL.degree() < 1) throw PreconditionViolated("hyperplane_section_poly requires degree >= 1");
    return hL.backward_difference();
}

}  // namespace shafbound
