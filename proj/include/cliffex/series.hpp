#pragma once

// Real-coefficient power series: Appell extension, the recurrence
// a_(k+n-1) (k+n-1)! = gamma k! a_k that decides when the Fueter-Sce and
// Appell extensions agree, its explicit solution, and the 1F(n-1)
// hypergeometric closed form of that function class.

#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliffex/axial.hpp"
#include "cliffex/exact_arith.hpp"

namespace cliffex {

/// A formal power series sum a_k z^k with exact rational coefficients.
/// The generator must be deterministic and side-effect free.
struct SeriesSpec {
    std::string name;
    std::function<Rational(int)> coeff;
    std::optional<std::string> radius;  // informational only
};

SeriesSpec exp_series();
SeriesSpec sinh_series();
SeriesSpec cosh_series();
/// 1/(1-z): every coefficient is one.
SeriesSpec geometric_series();
SeriesSpec monomial_series(int m);
/// Coefficients a_0..a_(size-1), zero beyond.
SeriesSpec finite_series(std::string name, std::vector<Rational> coefficients);

/// "exp", "sinh", "cosh", "geometric", or "z^m" / "monomial:m".
SeriesSpec builtin_series(std::string_view name);
std::vector<std::string> builtin_series_names();

/// One rational per data line; text after '#' is a comment and lines left
/// empty are skipped. The i-th data line (from zero) is a_i.
SeriesSpec read_coefficient_file(const std::filesystem::path& path);

struct AppellExtension {
    int n;
    std::vector<Rational> coefficients;  // a_k against P_k^n, k = 0..max_k
    AxialPolynomial polynomial;          // sum_k a_k P_k^n
};

/// eta_n[f] truncated after degree max_k.
AppellExtension appell_extension(int n, const SeriesSpec& f, int max_k);

struct RecurrenceViolation {
    int k;
    Rational lhs;  // a_(k+n-1) (k+n-1)!
    Rational rhs;  // gamma k! a_k
};

struct RecurrenceReport {
    int n = 0;
    bool holds = false;
    /// Empty when no a_k != 0 anchors it.
    std::optional<Rational> gamma;
    std::optional<RecurrenceViolation> first_violation;
    /// Largest coefficient index examined.
    int checked_up_to = 0;

    [[nodiscard]] bool gamma_unconstrained() const { return !gamma.has_value(); }
};

/// Infers gamma from the first k <= max_index-(n-1) with a_k != 0 and checks
/// the recurrence for every k in 0..max_index-(n-1).
RecurrenceReport recurrence_check(int n, const SeriesSpec& f, int max_index);

/// Everything needed to pin down a series in the recurrence class.
struct ClassParameters {
    int n;
    Rational gamma;
    std::vector<Rational> initial;  // a_0 .. a_(n-2)

    /// Throws unless n is odd > 1 and exactly n-1 initial values are given.
    void validate() const;
};

/// a_(l(n-1)+r) = gamma^l r! a_r / (l(n-1)+r)!, for indices 0..max_index.
std::vector<Rational> solve_recurrence(const ClassParameters& params, int max_index);

/// The alternative closed solution with denominator ((l+1)(n-1)+r)! in
/// place of (l(n-1)+r)!. Only used to show where it departs from the recurrence.
Rational shifted_factorial_variant(const ClassParameters& params, int index);

struct SolutionFormRow {
    int index;
    int l;
    int r;
    Rational solution;  // solve_recurrence
    Rational variant;   // shifted_factorial_variant
    bool agree;
};

/// Rows for l = 0..max_l and every residue r.
std::vector<SolutionFormRow> solution_form_report(const ClassParameters& params, int max_l);

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Truncation control for floating-point hypergeometric sums. With `terms`
/// set, exactly that many terms are summed. Otherwise summation stops once a
/// term falls below tolerance/10 (relative to max(1, |sum|)) while the terms
/// are shrinking; ConvergenceError after max_terms.
struct SeriesControl {
    std::optional<int> terms;
    double tolerance = 1e-12;
    int max_terms = 200;
};

/// (upper)_l / (prod_i (lower_i)_l l!).
Rational hypergeometric_term_weight(const Rational& upper, const std::vector<Rational>& lower, int l);

/// 1F_q(upper; lower...; z), q = lower.size().
double hypergeometric_1F(const Rational& upper, const std::vector<Rational>& lower, double z,
                         const SeriesControl& control = {});
/// Exact partial sum over l = 0..terms-1.
Rational hypergeometric_1F(const Rational& upper, const std::vector<Rational>& lower, const Rational& z, int terms);

/// (r+1)/(n-1), ..., (r+n-1)/(n-1).
std::vector<Rational> closed_form_lower_parameters(int n, int r);

/// Taylor coefficients of sum_r a_r z^r 1F(n-1)(1; lower(r); gamma z^(n-1)/(n-1)^(n-1)),
/// expanded from the hypergeometric term weights (not from factorials).
std::vector<Rational> closed_form_coefficients(const ClassParameters& params, int max_index);

double closed_form_eval(const ClassParameters& params, double z, const SeriesControl& control = {});
/// Exact partial sums: `terms` hypergeometric terms per residue class.
Rational closed_form_eval(const ClassParameters& params, const Rational& z, int terms);

/// Parameters of exp in dimension n: gamma = 1, a_r = 1/r!.
ClassParameters exp_parameters(int n);

struct ExpDecompositionReport {
    int n;
    double z;
    double value;      // hypergeometric decomposition
    double reference;  // direct summation of z^k / k!
    double abs_error;
    double tolerance;
    bool passed;
};

ExpDecompositionReport exp_decomposition_check(int n, double z, double tolerance = 1e-12);

struct CoefficientComparison {
    int k;
    Rational tau;  // coefficient of P_k^n in tau_n[f]
    Rational eta;  // coefficient of P_k^n in eta_n[f], i.e. a_k
    bool equal;
};

struct ComparisonReport {
    std::string series;
    int n = 0;
    RecurrenceReport recurrence;
    Rational alpha;
    /// False when alpha is the caller's fallback (no usable nonzero gamma).
    bool alpha_from_gamma = false;
    std::vector<CoefficientComparison> coefficients;
    std::optional<int> first_mismatch;

    [[nodiscard]] bool all_equal() const { return !first_mismatch.has_value(); }
    /// Whether the extensions are expected to coincide: the recurrence holds
    /// with a nonzero (or unconstrained) gamma.
    [[nodiscard]] bool agreement_expected() const;
    /// The extensions agree exactly when the recurrence says they should.
    [[nodiscard]] bool consistent() const { return all_equal() == agreement_expected(); }
};

/// alpha = (-1)^((n-1)/2) (n-2)!! / gamma when gamma is known and nonzero,
/// else fallback_alpha. Compares P^n coefficients of tau_n[f] and eta_n[f]
/// for k = 0..max_k.
ComparisonReport compare_extensions(int n, const SeriesSpec& f, int max_k, const Rational& fallback_alpha = 1);

/// (-1)^((n-1)/2) (n-2)!! / gamma.
Rational alpha_from_gamma(int n, const Rational& gamma);

}  // namespace cliffex
