#include "cliffex/series.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cliffex/appell.hpp"
#include "cliffex/fueter.hpp"

namespace cliffex {

SeriesSpec exp_series() {
    return {"exp", [](int k) { return Rational(1, factorial(k)); }, "infinite"};
}

SeriesSpec sinh_series() {
    return {"sinh", [](int k) { return k % 2 == 1 ? Rational(1, factorial(k)) : Rational(0); }, "infinite"};
}

SeriesSpec cosh_series() {
    return {"cosh", [](int k) { return k % 2 == 0 ? Rational(1, factorial(k)) : Rational(0); }, "infinite"};
}

SeriesSpec geometric_series() {
    return {"geometric", [](int) { return Rational(1); }, "1"};
}

SeriesSpec monomial_series(int m) {
    if (m < 0) {
        throw std::invalid_argument("monomial_series: negative degree");
    }
    return {"z^" + std::to_string(m), [m](int k) { return k == m ? Rational(1) : Rational(0); }, "infinite"};
}

SeriesSpec finite_series(std::string name, std::vector<Rational> coefficients) {
    return {std::move(name),
            [coefficients = std::move(coefficients)](int k) {
                return k >= 0 && static_cast<std::size_t>(k) < coefficients.size()
                           ? coefficients[static_cast<std::size_t>(k)]
                           : Rational(0);
            },
            "infinite"};
}

SeriesSpec builtin_series(std::string_view name) {
    if (name == "exp") {
        return exp_series();
    }
    if (name == "sinh") {
        return sinh_series();
    }
    if (name == "cosh") {
        return cosh_series();
    }
    if (name == "geometric") {
        return geometric_series();
    }
    for (std::string_view prefix : {"z^", "monomial:"}) {
        if (name.starts_with(prefix)) {
            const std::string digits(name.substr(prefix.size()));
            if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
                return monomial_series(std::stoi(digits));
            }
        }
    }
    throw std::invalid_argument("unknown series '" + std::string(name) + "'");
}

std::vector<std::string> builtin_series_names() { return {"exp", "sinh", "cosh", "geometric", "z^m"}; }

SeriesSpec read_coefficient_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open coefficient file '" + path.string() + "'");
    }
    std::vector<Rational> coefficients;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        try {
            coefficients.push_back(Rational::parse(line));
        } catch (const std::exception& e) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_number) + ": " + e.what());
        }
    }
    return finite_series(path.filename().string(), std::move(coefficients));
}

AppellExtension appell_extension(int n, const SeriesSpec& f, int max_k) {
    const auto table = AppellCoefficients::compute(n, max_k);
    AppellExtension out{n, {}, AxialPolynomial(n)};
    for (int k = 0; k <= max_k; ++k) {
        const Rational a = f.coeff(k);
        out.coefficients.push_back(a);
        if (!a.is_zero()) {
            out.polynomial += appell_polynomial(table, k) * a;
        }
    }
    return out;
}

RecurrenceReport recurrence_check(int n, const SeriesSpec& f, int max_index) {
    require_odd_dimension(n);
    const int shift = n - 1;
    if (max_index < shift) {
        throw std::invalid_argument("recurrence_check: max_index must be at least n-1");
    }
    RecurrenceReport report;
    report.n = n;
    report.checked_up_to = max_index;

    std::vector<Rational> a;
    a.reserve(static_cast<std::size_t>(max_index) + 1);
    for (int k = 0; k <= max_index; ++k) {
        a.push_back(f.coeff(k));
    }

    const int last = max_index - shift;
    for (int k = 0; k <= last; ++k) {
        if (!a[static_cast<std::size_t>(k)].is_zero()) {
            report.gamma = a[static_cast<std::size_t>(k + shift)] * Rational(factorial(k + shift)) /
                           (Rational(factorial(k)) * a[static_cast<std::size_t>(k)]);
            break;
        }
    }

    const Rational gamma = report.gamma.value_or(Rational(0));
    for (int k = 0; k <= last; ++k) {
        Rational lhs = a[static_cast<std::size_t>(k + shift)] * Rational(factorial(k + shift));
        Rational rhs = gamma * Rational(factorial(k)) * a[static_cast<std::size_t>(k)];
        if (lhs != rhs) {
            report.first_violation = RecurrenceViolation{k, std::move(lhs), std::move(rhs)};
            break;
        }
    }
    report.holds = !report.first_violation.has_value();
    return report;
}

void ClassParameters::validate() const {
    require_odd_dimension(n);
    if (initial.size() != static_cast<std::size_t>(n - 1)) {
        throw std::invalid_argument("class parameters need exactly n-1 initial coefficients a_0..a_(n-2)");
    }
}

std::vector<Rational> solve_recurrence(const ClassParameters& params, int max_index) {
    params.validate();
    const int period = params.n - 1;
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(max_index) + 1);
    for (int m = 0; m <= max_index; ++m) {
        const int l = m / period;
        const int r = m % period;
        out.push_back(params.gamma.pow(l) * Rational(factorial(r), factorial(m)) *
                      params.initial[static_cast<std::size_t>(r)]);
    }
    return out;
}

Rational shifted_factorial_variant(const ClassParameters& params, int index) {
    params.validate();
    const int period = params.n - 1;
    const int l = index / period;
    const int r = index % period;
    return params.gamma.pow(l) * Rational(factorial(r), factorial((l + 1) * period + r)) *
           params.initial[static_cast<std::size_t>(r)];
}

std::vector<SolutionFormRow> solution_form_report(const ClassParameters& params, int max_l) {
    const int period = params.n - 1;
    const auto solution = solve_recurrence(params, (max_l + 1) * period - 1);
    std::vector<SolutionFormRow> rows;
    for (int l = 0; l <= max_l; ++l) {
        for (int r = 0; r < period; ++r) {
            const int index = l * period + r;
            const Rational variant = shifted_factorial_variant(params, index);
            const Rational& value = solution[static_cast<std::size_t>(index)];
            rows.push_back({index, l, r, value, variant, value == variant});
        }
    }
    return rows;
}

namespace {

void check_lower_parameters(const std::vector<Rational>& lower) {
    for (const auto& b : lower) {
        if (b.is_integer() && b.sign() <= 0) {
            throw std::invalid_argument("hypergeometric: lower parameter " + b.str() + " is a nonpositive integer");
        }
    }
}

}  // namespace

Rational hypergeometric_term_weight(const Rational& upper, const std::vector<Rational>& lower, int l) {
    check_lower_parameters(lower);
    Rational denominator(factorial(l));
    for (const auto& b : lower) {
        denominator *= pochhammer(b, l);
    }
    return pochhammer(upper, l) / denominator;
}

double hypergeometric_1F(const Rational& upper, const std::vector<Rational>& lower, double z,
                         const SeriesControl& control) {
    check_lower_parameters(lower);
    const double a = upper.to_double();
    std::vector<double> b;
    b.reserve(lower.size());
    for (const auto& x : lower) {
        b.push_back(x.to_double());
    }
    const double threshold = control.tolerance / 10.0;

    double term = 1.0;
    double sum = 1.0;
    for (int l = 0;; ++l) {
        if (control.terms && l + 1 >= *control.terms) {
            return sum;
        }
        double ratio = (a + l) / (l + 1.0) * z;
        for (const double bi : b) {
            ratio /= bi + l;
        }
        if (!control.terms) {
            if (term == 0.0) {
                return sum;
            }
            if (std::abs(term) <= threshold * std::max(1.0, std::abs(sum)) && std::abs(ratio) < 1.0) {
                return sum;
            }
            if (l + 1 >= control.max_terms) {
                throw ConvergenceError("hypergeometric: tolerance not reached within " +
                                       std::to_string(control.max_terms) + " terms");
            }
        }
        term *= ratio;
        sum += term;
    }
}

Rational hypergeometric_1F(const Rational& upper, const std::vector<Rational>& lower, const Rational& z, int terms) {
    check_lower_parameters(lower);
    Rational sum(0);
    Rational z_power(1);
    for (int l = 0; l < terms; ++l) {
        sum += hypergeometric_term_weight(upper, lower, l) * z_power;
        z_power *= z;
    }
    return sum;
}

std::vector<Rational> closed_form_lower_parameters(int n, int r) {
    require_odd_dimension(n);
    std::vector<Rational> lower;
    for (int s = 1; s <= n - 1; ++s) {
        lower.emplace_back(BigInt(r + s), BigInt(n - 1));
    }
    return lower;
}

namespace {

// gamma / (n-1)^(n-1): the hypergeometric argument is this times z^(n-1).
Rational argument_scale(const ClassParameters& params) {
    return params.gamma / Rational(params.n - 1).pow(params.n - 1);
}

}  // namespace

std::vector<Rational> closed_form_coefficients(const ClassParameters& params, int max_index) {
    params.validate();
    const int period = params.n - 1;
    const Rational scale = argument_scale(params);
    const Rational upper(1);
    std::vector<Rational> out(static_cast<std::size_t>(max_index) + 1);
    for (int r = 0; r < period && r <= max_index; ++r) {
        const auto lower = closed_form_lower_parameters(params.n, r);
        const Rational& a_r = params.initial[static_cast<std::size_t>(r)];
        for (int l = 0; l * period + r <= max_index; ++l) {
            out[static_cast<std::size_t>(l * period + r)] =
                a_r * scale.pow(l) * hypergeometric_term_weight(upper, lower, l);
        }
    }
    return out;
}

double closed_form_eval(const ClassParameters& params, double z, const SeriesControl& control) {
    params.validate();
    const int period = params.n - 1;
    const double argument = argument_scale(params).to_double() * std::pow(z, period);
    double sum = 0.0;
    double z_power = 1.0;
    for (int r = 0; r < period; ++r) {
        const double a_r = params.initial[static_cast<std::size_t>(r)].to_double();
        if (a_r != 0.0) {
            sum += a_r * z_power *
                   hypergeometric_1F(Rational(1), closed_form_lower_parameters(params.n, r), argument, control);
        }
        z_power *= z;
    }
    return sum;
}

Rational closed_form_eval(const ClassParameters& params, const Rational& z, int terms) {
    params.validate();
    const int period = params.n - 1;
    const Rational argument = argument_scale(params) * z.pow(period);
    Rational sum(0);
    for (int r = 0; r < period; ++r) {
        const Rational& a_r = params.initial[static_cast<std::size_t>(r)];
        if (!a_r.is_zero()) {
            sum += a_r * z.pow(r) *
                   hypergeometric_1F(Rational(1), closed_form_lower_parameters(params.n, r), argument, terms);
        }
    }
    return sum;
}

ClassParameters exp_parameters(int n) {
    require_odd_dimension(n);
    ClassParameters params{n, Rational(1), {}};
    for (int r = 0; r < n - 1; ++r) {
        params.initial.emplace_back(BigInt(1), factorial(r));
    }
    return params;
}

ExpDecompositionReport exp_decomposition_check(int n, double z, double tolerance) {
    SeriesControl control;
    control.tolerance = tolerance;
    const double value = closed_form_eval(exp_parameters(n), z, control);

    double reference = 0.0;
    double term = 1.0;
    for (int k = 0; k <= 60; ++k) {
        reference += term;
        term *= z / (k + 1);
    }
    const double error = std::abs(value - reference);
    return {n, z, value, reference, error, tolerance, error <= tolerance};
}

Rational alpha_from_gamma(int n, const Rational& gamma) {
    require_odd_dimension(n);
    return Rational(sign_power((n - 1) / 2)) * Rational(double_factorial(n - 2)) / gamma;
}

bool ComparisonReport::agreement_expected() const {
    return recurrence.holds && (!recurrence.gamma || !recurrence.gamma->is_zero());
}

ComparisonReport compare_extensions(int n, const SeriesSpec& f, int max_k, const Rational& fallback_alpha) {
    require_odd_dimension(n);
    if (max_k < 0) {
        throw std::invalid_argument("compare_extensions: negative truncation");
    }
    ComparisonReport report;
    report.series = f.name;
    report.n = n;
    report.recurrence = recurrence_check(n, f, max_k + n - 1);
    if (report.recurrence.gamma && !report.recurrence.gamma->is_zero()) {
        report.alpha = alpha_from_gamma(n, *report.recurrence.gamma);
        report.alpha_from_gamma = true;
    } else {
        report.alpha = fallback_alpha;
    }

    const auto tau = fueter_sce_series(n, f, report.alpha, max_k);
    for (int k = 0; k <= max_k; ++k) {
        const Rational eta = f.coeff(k);
        const bool equal = tau[static_cast<std::size_t>(k)] == eta;
        if (!equal && !report.first_mismatch) {
            report.first_mismatch = k;
        }
        report.coefficients.push_back({k, tau[static_cast<std::size_t>(k)], eta, equal});
    }
    return report;
}

}  // namespace cliffex
