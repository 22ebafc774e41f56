#pragma once

// Axial functions A(x0, r) + omega(x) B(x0, r), r = |x|, omega = x / r.
//
// A carries only even powers of r and B only odd powers, so every
// AxialPolynomial is a genuine polynomial in x0, x1, ..., xn.

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "cliffex/clifford.hpp"
#include "cliffex/exact_arith.hpp"

namespace cliffex {

/// Exponent pair (first variable degree, second variable degree). In axial
/// use the variables are (x0, r); in the complex monomial split they are (w, y).
using Exponents = std::pair<int, int>;

/// Bivariate polynomial with exact coefficients; zero coefficients are never stored.
class BivariatePoly {
public:
    using TermMap = std::map<Exponents, Rational, std::greater<>>;

    BivariatePoly() = default;

    static BivariatePoly constant(const Rational& c);
    static BivariatePoly monomial(const Rational& c, int x0_degree, int r_degree);

    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(int x0_degree, int r_degree) const;

    /// Adds c x0^i r^j, dropping the term if it cancels.
    void add_term(const Rational& c, int x0_degree, int r_degree);

    [[nodiscard]] bool all_r_degrees_even() const;
    [[nodiscard]] bool all_r_degrees_odd() const;

    [[nodiscard]] BivariatePoly d_x0() const;
    [[nodiscard]] BivariatePoly d_r() const;
    /// Multiplies by r^shift; shift may be negative only if every r-degree stays nonnegative.
    [[nodiscard]] BivariatePoly shift_r(int shift) const;
    /// P(0, r).
    [[nodiscard]] BivariatePoly at_x0_zero() const;

    template <typename Scalar>
    [[nodiscard]] Scalar evaluate(const Scalar& x0, const Scalar& r) const;

    BivariatePoly& operator+=(const BivariatePoly& rhs);
    BivariatePoly& operator-=(const BivariatePoly& rhs);
    BivariatePoly& operator*=(const Rational& s);

    friend BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs += rhs; }
    friend BivariatePoly operator-(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs -= rhs; }
    friend BivariatePoly operator*(BivariatePoly lhs, const Rational& s) { return lhs *= s; }
    friend BivariatePoly operator*(const Rational& s, BivariatePoly rhs) { return rhs *= s; }
    friend BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs);
    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    TermMap terms_;
};

/// Canonical text form: terms by (x0-degree desc, r-degree desc), exact
/// coefficients, unit coefficients elided. Variable names default to x0, r.
std::string to_string(const BivariatePoly& p, const std::string& first = "x0", const std::string& second = "r");

class AxialPolynomial {
public:
    /// The zero polynomial in dimension n.
    explicit AxialPolynomial(int n);
    /// Throws std::invalid_argument when A has an odd or B an even r-degree.
    AxialPolynomial(int n, BivariatePoly scalar_part, BivariatePoly omega_part);

    [[nodiscard]] int dimension() const { return n_; }
    [[nodiscard]] const BivariatePoly& scalar_part() const { return a_; }
    [[nodiscard]] const BivariatePoly& omega_part() const { return b_; }
    [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    [[nodiscard]] AxialPolynomial d_x0() const;
    /// Restriction to the hyperplane x0 = 0.
    [[nodiscard]] AxialPolynomial at_x0_zero() const;

    AxialPolynomial& operator+=(const AxialPolynomial& rhs);
    AxialPolynomial& operator-=(const AxialPolynomial& rhs);
    AxialPolynomial& operator*=(const Rational& s);

    friend AxialPolynomial operator+(AxialPolynomial lhs, const AxialPolynomial& rhs) { return lhs += rhs; }
    friend AxialPolynomial operator-(AxialPolynomial lhs, const AxialPolynomial& rhs) { return lhs -= rhs; }
    friend AxialPolynomial operator*(AxialPolynomial lhs, const Rational& s) { return lhs *= s; }
    friend AxialPolynomial operator*(const Rational& s, AxialPolynomial rhs) { return rhs *= s; }
    friend bool operator==(const AxialPolynomial&, const AxialPolynomial&) = default;

private:
    void require_same_dimension(const AxialPolynomial& other) const;

    int n_;
    BivariatePoly a_;
    BivariatePoly b_;
};

/// Canonical text form; omega is written "w". Terms of A and B are merged in
/// (x0-degree desc, r-degree desc) order, e.g. "x0^2 + 2/3 x0 r w - 1/3 r^2".
std::string to_string(const AxialPolynomial& p);

/// (1/r d/dr): r^(2p) -> 2p r^(2p-2). Requires even r-degrees.
BivariatePoly radial_lower_even(const BivariatePoly& p);

/// (d/dr 1/r): r^(2p+1) -> 2p r^(2p-1). Requires odd r-degrees.
BivariatePoly radial_lower_odd(const BivariatePoly& p);

/// Applies each radial operator (n-1)/2 times to u (even in r) and v (odd in r).
/// Rejects even n: the transform is not pointwise there.
AxialPolynomial apply_radial_powers(const BivariatePoly& u, const BivariatePoly& v, int n);

/// Axial form of D = d/dx0 + sum e_i d/dx_i applied from the left:
///   scalar: dA/dx0 - dB/dr - (n-1) B/r
///   omega:  dB/dx0 + dA/dr
/// F is monogenic iff both components vanish.
std::pair<BivariatePoly, BivariatePoly> vekua_residual(const AxialPolynomial& f);

inline bool is_vekua_monogenic(const AxialPolynomial& f) {
    const auto [s, w] = vekua_residual(f);
    return s.is_zero() && w.is_zero();
}

/// Exact evaluation. Substitutes r^2 = |x|^2 and omega B = x C with B = r C,
/// so no square root appears; x = 0 is handled by the parity of B.
Multivector<Rational> evaluate(const AxialPolynomial& f, const Paravector<Rational>& x);

/// Floating-point evaluation with r = sqrt(|x|^2), omega = x / r.
Multivector<double> evaluate(const AxialPolynomial& f, const Paravector<double>& x);

template <typename Scalar>
Scalar BivariatePoly::evaluate(const Scalar& x0, const Scalar& r) const {
    Scalar out(0);
    for (const auto& [exps, c] : terms_) {
        Scalar term(1);
        for (int i = 0; i < exps.first; ++i) {
            term *= x0;
        }
        for (int j = 0; j < exps.second; ++j) {
            term *= r;
        }
        if constexpr (std::is_same_v<Scalar, Rational>) {
            out += c * term;
        } else {
            out += static_cast<Scalar>(c.to_double()) * term;
        }
    }
    return out;
}

}  // namespace cliffex
