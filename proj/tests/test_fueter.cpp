#include <doctest.h>

#include "cliffex/appell.hpp"
#include "cliffex/fueter.hpp"
#include "cliffex/series.hpp"

using namespace cliffex;
using BP = BivariatePoly;

namespace {

// (u + i v) * (w + i y) = (u w - v y) + i (u y + v w), iterated k times.
std::pair<BP, BP> complex_power_oracle(int k) {
    BP u = BP::constant(1);
    BP v;
    const BP w = BP::monomial(1, 1, 0);
    const BP y = BP::monomial(1, 0, 1);
    for (int i = 0; i < k; ++i) {
        BP next_u = u * w - v * y;
        BP next_v = u * y + v * w;
        u = std::move(next_u);
        v = std::move(next_v);
    }
    return {u, v};
}

// Radial operator powers applied to the single monomial r^j.
BP radial_power_on_monomial(int n, int j) {
    const BP r_j = BP::monomial(1, 0, j);
    const auto f = (j % 2 == 0) ? apply_radial_powers(r_j, BP{}, n) : apply_radial_powers(BP{}, r_j, n);
    return (j % 2 == 0) ? f.scalar_part() : f.omega_part();
}

}  // namespace

TEST_CASE("monomial split examples") {
    auto s = monomial_split(0);
    CHECK(s.u == BP::constant(1));
    CHECK(s.v.is_zero());

    s = monomial_split(2);
    CHECK(s.u == BP::monomial(1, 2, 0) + BP::monomial(-1, 0, 2));
    CHECK(s.v == BP::monomial(2, 1, 1));

    s = monomial_split(3);
    CHECK(s.u == BP::monomial(1, 3, 0) + BP::monomial(-3, 1, 2));
    CHECK(s.v == BP::monomial(3, 2, 1) + BP::monomial(-1, 0, 3));
    CHECK_THROWS_AS(monomial_split(-1), std::invalid_argument);
}

TEST_CASE("monomial split reassembles z^k") {
    for (int k = 0; k <= 30; ++k) {
        const auto [u, v] = complex_power_oracle(k);
        const auto s = monomial_split(k);
        CHECK(s.u == u);
        CHECK(s.v == v);
        CHECK(s.u.all_r_degrees_even());
        CHECK(s.v.all_r_degrees_odd());
    }
}

TEST_CASE("beta examples") {
    auto b = beta(3, 2);
    CHECK_FALSE(b.is_zero);
    CHECK(b.coefficient == 2);
    CHECK(b.r_exponent == 0);
    CHECK(b.at_zero() == 2);

    CHECK(beta(3, 1).is_zero);

    b = beta(5, 5);
    CHECK(b.coefficient == 8);
    CHECK(b.r_exponent == 1);
    CHECK(b.at_zero() == 0);
}

TEST_CASE("beta matches radial operator powers and its value at zero") {
    for (int n : {3, 5, 7}) {
        for (int j = 0; j <= 40; ++j) {
            CAPTURE(n);
            CAPTURE(j);
            const auto b = beta(n, j);
            const BP direct = radial_power_on_monomial(n, j);
            const BP expected = b.is_zero ? BP{} : BP::monomial(b.coefficient, 0, b.r_exponent);
            CHECK(direct == expected);
            const Rational at_zero = (j % 2 == 0 && j == n - 1) ? Rational(double_factorial(n - 1)) : Rational(0);
            CHECK(b.at_zero() == at_zero);
            CHECK(direct.evaluate(Rational(0), Rational(0)) == at_zero);
        }
    }
}

TEST_CASE("alpha for monomials") {
    CHECK(alpha_monomial(3, 2) == Rational(-1, 2));
    CHECK(alpha_monomial(3, 3) == Rational(-1, 6));
    CHECK(alpha_monomial(5, 4) == Rational(3, 24));
    CHECK_THROWS_AS(alpha_monomial(3, 1), std::domain_error);
    CHECK_THROWS_AS(alpha_monomial(4, 5), std::invalid_argument);
}

TEST_CASE("fueter_sce_monomial examples") {
    CHECK(fueter_sce_monomial(3, 1).is_zero());
    CHECK(fueter_sce_monomial(3, 2) == appell_polynomial(3, 0));
    CHECK(fueter_sce_monomial(3, 3) == appell_polynomial(3, 1));
    CHECK(to_string(fueter_sce_monomial(3, 3)) == "x0 + 1/3 r w");
    CHECK(fueter_sce_monomial(5, 4, false) == AxialPolynomial(5, BP::constant(8), BP{}));
}

TEST_CASE("vanishing below the threshold") {
    for (int n : {3, 5, 7, 9}) {
        for (int k = 0; k < n - 1; ++k) {
            CHECK(fueter_sce_monomial(n, k, true).is_zero());
            CHECK(fueter_sce_monomial(n, k, false).is_zero());
        }
    }
}

TEST_CASE("normalized transform equals the Appell polynomial") {
    for (int n : {3, 5, 7}) {
        const auto table = AppellCoefficients::compute(n, 15);
        Paravector<Rational> one{1, std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
        for (int k = 0; k <= 15; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const auto tau = fueter_sce_monomial(n, k + n - 1);
            CHECK(tau == appell_polynomial(table, k));
            CHECK(is_vekua_monogenic(tau));
            CHECK(evaluate(tau, one) == Multivector<Rational>::scalar(n, 1));
        }
    }
}

TEST_CASE("unnormalized output is monogenic and scaled by 1/alpha at x = 1") {
    for (int n : {3, 5}) {
        for (int k = n - 1; k <= 20; ++k) {
            const auto raw = fueter_sce_monomial(n, k, false);
            CHECK(is_vekua_monogenic(raw));
            CHECK(raw.scalar_part().evaluate(Rational(1), Rational(0)) == alpha_monomial(n, k).inverse());
        }
    }
}

TEST_CASE("restriction to vectors follows the double-factorial formula") {
    for (int n : {3, 5, 7}) {
        for (int l = n - 1; l <= 30; ++l) {
            CAPTURE(n);
            CAPTURE(l);
            const Rational c = (l % 2 == 0)
                                   ? Rational(double_factorial(l - n) * double_factorial(n - 2), double_factorial(l - 1))
                                   : Rational(double_factorial(l - n + 1) * double_factorial(n - 2), double_factorial(l));
            CHECK(fueter_sce_monomial(n, l).at_x0_zero() == vector_power(n, l - n + 1, c));
        }
    }
}

TEST_CASE("fueter_sce_series") {
    auto coeffs = fueter_sce_series(3, monomial_series(2), Rational(-1, 2), 5);
    CHECK(coeffs[0] == 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        CHECK(coeffs[k] == 0);
    }

    coeffs = fueter_sce_series(3, exp_series(), Rational(-1), 20);
    for (int k = 0; k <= 20; ++k) {
        CHECK(coeffs[static_cast<std::size_t>(k)] == Rational(1, factorial(k)));
    }

    for (int n : {3, 5, 7}) {
        for (const auto& c : fueter_sce_series(n, monomial_series(0), Rational(5, 3), 10)) {
            CHECK(c.is_zero());
        }
    }
    CHECK_THROWS_AS(fueter_sce_series(3, exp_series(), Rational(0), 3), std::invalid_argument);
}

TEST_CASE("normalized transform is not additive across degrees") {
    // tau with alpha fixed by z^j + z^k differs from the sum of the individually
    // normalized transforms unless the two monomial constants coincide.
    for (int n : {3, 5}) {
        for (int j = n - 1; j <= n + 4; ++j) {
            for (int k = j + 1; k <= n + 6; ++k) {
                const Rational alpha_j = alpha_monomial(n, j);
                const Rational alpha_k = alpha_monomial(n, k);
                const auto raw_sum = fueter_sce_monomial(n, j, false) + fueter_sce_monomial(n, k, false);
                // common constant: normalize the sum at x = 1
                const Rational common = raw_sum.scalar_part().evaluate(Rational(1), Rational(0)).inverse();
                const auto joint = raw_sum * common;
                const auto separate = fueter_sce_monomial(n, j) + fueter_sce_monomial(n, k);
                CHECK((joint == separate) == (alpha_j == alpha_k));
                CHECK(alpha_j != alpha_k);
            }
        }
    }
}
