#include "cliffex/fueter.hpp"

#include <stdexcept>

#include "cliffex/appell.hpp"
#include "cliffex/series.hpp"

namespace cliffex {

MonomialSplit monomial_split(int k) {
    if (k < 0) {
        throw std::invalid_argument("monomial_split: negative degree");
    }
    MonomialSplit out{k, {}, {}};
    for (int l = 0; l <= k; ++l) {
        // (i y)^l = (-1)^(l/2) y^l for even l, (-1)^((l-1)/2) i y^l for odd l.
        const Rational c = Rational(binomial(k, l)) * Rational(sign_power(l / 2));
        (l % 2 == 0 ? out.u : out.v).add_term(c, k - l, l);
    }
    return out;
}

Rational BetaTerm::at_zero() const {
    if (is_zero || r_exponent > 0) {
        return 0;
    }
    return coefficient;
}

BetaTerm beta(int n, int j) {
    require_odd_dimension(n);
    if (j < 0) {
        throw std::invalid_argument("beta: negative index");
    }
    const int two_p = j - (j % 2);
    if (two_p < n - 1) {
        return BetaTerm{n, j, Rational(0), 0, true};
    }
    const Rational c(double_factorial(two_p), double_factorial(two_p - n + 1));
    const int exponent = (j % 2 == 0) ? two_p - n + 1 : two_p - n + 2;
    return BetaTerm{n, j, c, exponent, false};
}

Rational alpha_monomial(int n, int k) {
    require_odd_dimension(n);
    if (k < n - 1) {
        throw std::domain_error("no normalization possible: tau_n[z^k] vanishes for k < n-1");
    }
    return Rational(sign_power((n - 1) / 2)) *
           Rational(double_factorial(n - 2) * factorial(k - n + 1), factorial(k));
}

AxialPolynomial fueter_sce_monomial(int n, int k, bool normalized) {
    require_odd_dimension(n);
    const auto split = monomial_split(k);
    // (w, y) -> (x0, r): the exponent layout already matches.
    AxialPolynomial out = apply_radial_powers(split.u, split.v, n);
    if (normalized && k >= n - 1) {
        out *= alpha_monomial(n, k);
    }
    return out;
}

std::vector<Rational> fueter_sce_series(int n, const SeriesSpec& f, const Rational& alpha, int max_k) {
    require_odd_dimension(n);
    if (alpha.is_zero()) {
        throw std::invalid_argument("fueter_sce_series: alpha must be nonzero");
    }
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) {
        const int degree = k + n - 1;
        out.push_back(alpha * f.coeff(degree) / alpha_monomial(n, degree));
    }
    return out;
}

}  // namespace cliffex
