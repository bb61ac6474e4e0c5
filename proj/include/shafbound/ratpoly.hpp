#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "shafbound/rational.hpp"

namespace shafbound {

/// Exact univariate polynomial with rational coefficients.
///
/// Coefficients are stored in ascending degree order and kept canonical: no
/// trailing zero is ever stored, so two polynomials are equal iff their
/// coefficient vectors are equal. The zero polynomial has degree -1. All
/// arithmetic is exact; no floating point enters this type.
class RatPoly {
  public:
    RatPoly() = default;

    explicit RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static RatPoly zero() { return RatPoly(); }

    static RatPoly constant(Rat c) {
        std::vector<Rat> v;
        if (c != 0) v.push_back(std::move(c));
        return RatPoly(std::move(v));
    }

    /// c * x^k
    static RatPoly monomial(Rat c, std::size_t k) {
        if (c == 0) return RatPoly();
        std::vector<Rat> v(k + 1);
        v[k] = std::move(c);
        return RatPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^k (zero beyond the degree).
    const Rat& coeff(std::size_t k) const {
        static const Rat kZero = 0;
        return k < coeffs_.size() ? coeffs_[k] : kZero;
    }

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// Leading coefficient; 0 for the zero polynomial.
    const Rat& leading() const {
        static const Rat kZero = 0;
        return coeffs_.empty() ? kZero : coeffs_.back();
    }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return RatPoly(std::move(v));
    }

    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return RatPoly(std::move(v));
    }

    friend RatPoly operator-(const RatPoly& a) {
        std::vector<Rat> v(a.coeffs_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.coeffs_[i];
        return RatPoly(std::move(v));
    }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RatPoly(std::move(v));
    }

    friend RatPoly operator*(const Rat& c, const RatPoly& a) {
        if (c == 0) return RatPoly();
        std::vector<Rat> v(a.coeffs_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * a.coeffs_[i];
        return RatPoly(std::move(v));
    }

    /// Exact value of the polynomial at t (Horner form).
    Rat eval(const Rat& t) const {
        Rat acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
        return acc;
    }

    /// P(x + c), expanded exactly.
    RatPoly shift(const Rat& c) const {
        if (is_zero() || c == 0) return *this;
        const std::size_t n = coeffs_.size();
        std::vector<Rat> v(n);
        // x^i -> sum_j binom(i,j) c^(i-j) x^j
        std::vector<Rat> cpow(n);
        cpow[0] = 1;
        for (std::size_t i = 1; i < n; ++i) cpow[i] = cpow[i - 1] * c;
        for (std::size_t i = 0; i < n; ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j <= i; ++j) {
                v[j] += coeffs_[i] * Rat(binomial_int(Int(i), Int(j))) * cpow[i - j];
            }
        }
        return RatPoly(std::move(v));
    }

    /// P(x) - P(x-1). Lowers the degree by exactly one for deg >= 1 and
    /// multiplies the leading coefficient by the degree.
    RatPoly backward_difference() const { return *this - shift(-1); }

    /// P(m*x): coefficient k becomes m^k * coeff(k). Requires m >= 1.
    RatPoly substitute_scale(const Int& m) const {
        if (m < 1) throw PreconditionViolated("substitute_scale requires a positive integer scale");
        std::vector<Rat> v(coeffs_.size());
        Int mk = 1;
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = coeffs_[i] * Rat(mk);
            mk *= m;
        }
        return RatPoly(std::move(v));
    }

    /// Coefficients in the binomial basis: P = sum_k b_k * binom(x, k),
    /// with b_k the k-th forward difference of P at 0.
    std::vector<Rat> binomial_basis_coeffs() const {
        const int d = degree();
        if (d < 0) return {};
        std::vector<Rat> vals(static_cast<std::size_t>(d) + 1);
        for (int t = 0; t <= d; ++t) vals[static_cast<std::size_t>(t)] = eval(t);
        std::vector<Rat> out(vals.size());
        for (std::size_t k = 0; k < vals.size(); ++k) {
            out[k] = vals[0];
            for (std::size_t i = 0; i + 1 < vals.size() - k; ++i) vals[i] = vals[i + 1] - vals[i];
        }
        return out;
    }

    /// True iff P(t) is an integer for every integer t, decided through the
    /// binomial-basis coefficients.
    bool is_integer_valued() const {
        for (const Rat& b : binomial_basis_coeffs())
            if (!is_integer(b)) return false;
        return true;
    }

    /// Human form, e.g. "2*x - 1" or "1/2*x^2 + 3".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rat& c = coeffs_[i];
            if (c == 0) continue;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            const Rat a = abs_rat(c);
            if (i == 0 || a != 1) {
                out += rat_to_string(a);
                if (i > 0) out += "*";
            }
            if (i >= 1) out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

}  // namespace shafbound
