#pragma once

// The Appell sequence P_k^n of monogenic paravector polynomials.

#include <optional>
#include <vector>

#include "cliffex/axial.hpp"
#include "cliffex/exact_arith.hpp"

namespace cliffex {

/// Throws std::invalid_argument("n must be odd (> 1)") unless n is odd, 1 < n <= max_dimension.
void require_odd_dimension(int n);

/// c_n^k: (k-1)!!(n-2)!!/(n+k-2)!! for even k, k!!(n-2)!!/(n+k-1)!! for odd k.
Rational c_coeff(int n, int k);

/// Table c_n^0 .. c_n^K for one dimension.
struct AppellCoefficients {
    int n;
    std::vector<Rational> c;

    static AppellCoefficients compute(int n, int max_k);

    [[nodiscard]] int max_k() const { return static_cast<int>(c.size()) - 1; }
};

/// P_k^n(x0 + x) = sum_s C(k,s) c_n^s x0^(k-s) x^s, with
/// x^(2p) = (-1)^p r^(2p) and x^(2p+1) = (-1)^p r^(2p+1) omega.
AxialPolynomial appell_polynomial(int n, int k);

/// Same construction from an explicit coefficient table (k <= table.max_k()).
/// Lets tests feed a perturbed table through every downstream check.
AxialPolynomial appell_polynomial(const AppellCoefficients& table, int k);

/// c x^m for the pure vector x in axial form.
AxialPolynomial vector_power(int n, int m, const Rational& c = 1);

struct AppellPropertyReport {
    int n = 0;
    int max_k = 0;
    /// First k whose derivative identity failed.
    std::optional<int> first_failure;

    [[nodiscard]] bool passed() const { return !first_failure.has_value(); }
};

/// Checks d/dx0 P_k = k P_(k-1) exactly for 1 <= k <= max_k.
AppellPropertyReport appell_property_check(int n, int max_k);
AppellPropertyReport appell_property_check(const AppellCoefficients& table);

}  // namespace cliffex
