#include "cliffex/appell.hpp"

#include <stdexcept>

namespace cliffex {

void require_odd_dimension(int n) {
    if (n <= 1 || n % 2 == 0 || n > max_dimension) {
        throw std::invalid_argument("n must be odd (> 1)");
    }
}

Rational c_coeff(int n, int k) {
    require_odd_dimension(n);
    if (k < 0) {
        throw std::invalid_argument("c_coeff: negative degree");
    }
    if (k % 2 == 0) {
        return Rational(double_factorial(k - 1) * double_factorial(n - 2), double_factorial(n + k - 2));
    }
    return Rational(double_factorial(k) * double_factorial(n - 2), double_factorial(n + k - 1));
}

AppellCoefficients AppellCoefficients::compute(int n, int max_k) {
    require_odd_dimension(n);
    AppellCoefficients out{n, {}};
    out.c.reserve(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) {
        out.c.push_back(c_coeff(n, k));
    }
    return out;
}

AxialPolynomial vector_power(int n, int m, const Rational& c) {
    const int half = m / 2;
    const Rational signed_c = c * Rational(sign_power(half));
    if (m % 2 == 0) {
        return AxialPolynomial(n, BivariatePoly::monomial(signed_c, 0, m), {});
    }
    return AxialPolynomial(n, {}, BivariatePoly::monomial(signed_c, 0, m));
}

AxialPolynomial appell_polynomial(const AppellCoefficients& table, int k) {
    if (k < 0 || k > table.max_k()) {
        throw std::out_of_range("appell_polynomial: degree outside coefficient table");
    }
    BivariatePoly a;
    BivariatePoly b;
    for (int s = 0; s <= k; ++s) {
        const Rational coeff = Rational(binomial(k, s)) * table.c[static_cast<std::size_t>(s)] *
                               Rational(sign_power(s / 2));
        (s % 2 == 0 ? a : b).add_term(coeff, k - s, s);
    }
    return AxialPolynomial(table.n, std::move(a), std::move(b));
}

AxialPolynomial appell_polynomial(int n, int k) {
    return appell_polynomial(AppellCoefficients::compute(n, k), k);
}

AppellPropertyReport appell_property_check(const AppellCoefficients& table) {
    AppellPropertyReport report{table.n, table.max_k(), std::nullopt};
    AxialPolynomial previous = appell_polynomial(table, 0);
    for (int k = 1; k <= table.max_k(); ++k) {
        AxialPolynomial current = appell_polynomial(table, k);
        if (current.d_x0() != previous * Rational(k)) {
            report.first_failure = k;
            break;
        }
        previous = std::move(current);
    }
    return report;
}

AppellPropertyReport appell_property_check(int n, int max_k) {
    if (max_k < 1) {
        throw std::invalid_argument("appell_property_check: max_k must be >= 1");
    }
    return appell_property_check(AppellCoefficients::compute(n, max_k));
}

}  // namespace cliffex
