#pragma once

// Fueter-Sce transform of complex monomials z^k and of real power series,
// for odd dimensions n.

#include <vector>

#include "cliffex/axial.hpp"
#include "cliffex/exact_arith.hpp"

namespace cliffex {

struct SeriesSpec;

/// z^k = u_k(w, y) + i v_k(w, y) with z = w + i y. Exponent pairs are (w-degree, y-degree).
struct MonomialSplit {
    int k;
    BivariatePoly u;  // even in y
    BivariatePoly v;  // odd in y
};

MonomialSplit monomial_split(int k);

/// Result of the radial operator power on y^j: coefficient * r^r_exponent,
/// or identically zero when 2p < n-1 (j = 2p or 2p+1).
struct BetaTerm {
    int n;
    int j;
    Rational coefficient;
    int r_exponent;
    bool is_zero;

    /// Value at r = 0: (n-1)!! for j = n-1, zero otherwise.
    [[nodiscard]] Rational at_zero() const;
};

BetaTerm beta(int n, int j);

/// (-1)^((n-1)/2) (n-2)!! (k-n+1)! / k!, the constant making tau_n[z^k](1) = 1.
/// Throws std::domain_error for k < n-1, where tau_n[z^k] vanishes identically.
Rational alpha_monomial(int n, int k);

/// tau_n[z^k] in axial form. The raw operator output when !normalized,
/// scaled by alpha_monomial otherwise. Zero polynomial for k < n-1.
AxialPolynomial fueter_sce_monomial(int n, int k, bool normalized = true);

/// Coefficients of tau_n[f] in the P^n basis, entries k = 0..max_k:
/// alpha * a_(k+n-1) / alpha_n[z^(k+n-1)].
std::vector<Rational> fueter_sce_series(int n, const SeriesSpec& f, const Rational& alpha, int max_k);

}  // namespace cliffex
