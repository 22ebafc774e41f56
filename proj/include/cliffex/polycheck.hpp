#pragma once

// Brute-force monogenicity oracle: axial polynomials expanded into genuine
// polynomials in x0..xn with Clifford coefficients, and the left
// Cauchy-Riemann operator D = d/dx0 + sum_i e_i d/dx_i applied termwise.
// Term counts grow quickly; intended for n <= 5 and degree <= 8.

#include <map>
#include <string>
#include <vector>

#include "cliffex/axial.hpp"
#include "cliffex/clifford.hpp"

namespace cliffex {

/// Exponents (d0, d1, ..., dn) of x0^d0 x1^d1 ... xn^dn.
using MultiExponent = std::vector<int>;

class CliffordPolynomial {
public:
    using TermMap = std::map<MultiExponent, Multivector<Rational>>;

    explicit CliffordPolynomial(int n);

    static CliffordPolynomial constant(int n, const Multivector<Rational>& c);
    /// The coordinate x_i, 0 <= i <= n.
    static CliffordPolynomial coordinate(int n, int i);

    [[nodiscard]] int dimension() const { return n_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiExponent& exponents, const Multivector<Rational>& c);

    /// Partial derivative in x_i, 0 <= i <= n.
    [[nodiscard]] CliffordPolynomial derivative(int i) const;
    /// e_i * P, coefficientwise from the left.
    [[nodiscard]] CliffordPolynomial left_multiply(const Multivector<Rational>& m) const;

    [[nodiscard]] Multivector<Rational> evaluate(const Paravector<Rational>& x) const;

    CliffordPolynomial& operator+=(const CliffordPolynomial& rhs);
    CliffordPolynomial& operator*=(const Rational& s);

    friend CliffordPolynomial operator+(CliffordPolynomial lhs, const CliffordPolynomial& rhs) { return lhs += rhs; }
    friend CliffordPolynomial operator*(CliffordPolynomial lhs, const Rational& s) { return lhs *= s; }
    /// Polynomial product; coefficients multiply as lhs * rhs in the algebra.
    friend CliffordPolynomial operator*(const CliffordPolynomial& lhs, const CliffordPolynomial& rhs);
    friend bool operator==(const CliffordPolynomial&, const CliffordPolynomial&) = default;

private:
    int n_;
    TermMap terms_;
};

std::string to_string(const CliffordPolynomial& p);

/// Substitutes r^2 -> sum x_i^2 in A and in C (B = r C), and r omega -> sum e_i x_i.
CliffordPolynomial from_axial(const AxialPolynomial& f);

/// D P with D = d/dx0 + sum_i e_i d/dx_i acting from the left.
CliffordPolynomial cauchy_riemann_apply(const CliffordPolynomial& p);

inline bool is_monogenic(const CliffordPolynomial& p) { return cauchy_riemann_apply(p).is_zero(); }

}  // namespace cliffex
