// cliffex: Appell polynomials, Fueter-Sce transforms and their verification
// from the command line.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliffex/appell.hpp"
#include "cliffex/fueter.hpp"
#include "cliffex/polycheck.hpp"
#include "cliffex/report_json.hpp"
#include "cliffex/series.hpp"

using namespace cliffex;

namespace {

const CLI::Validator odd_dimension(
    [](std::string& value) -> std::string {
        try {
            const int n = std::stoi(value);
            if (n > 1 && n % 2 == 1 && n <= max_dimension) {
                return {};
            }
        } catch (const std::exception&) {
        }
        return "n must be odd (> 1) and at most " + std::to_string(max_dimension);
    },
    "ODD", "odd dimension");

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(item);
    }
    return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& item : split_list(text)) {
        out.push_back(Rational::parse(item));
    }
    return out;
}

SeriesControl control_from_env(double tolerance) {
    SeriesControl control;
    control.tolerance = tolerance;
    if (const char* lmax = std::getenv("CLIFFEX_LMAX")) {
        control.max_terms = std::stoi(lmax);
    }
    return control;
}

struct Options {
    std::string format = "text";

    // appell / fueter
    int n = 3;
    int k = 0;
    bool raw = false;

    // verify
    std::string suite;
    std::vector<int> dims;
    std::optional<int> kmax;
    std::string series = "exp";
    std::string coeff_file;
    int big_k = 40;
    std::optional<int> mutate_c;
    double tolerance = 1e-12;
    std::string z_list = "-1,-1/2,1/2,1,2";

    // compare
    std::string compare_format = "json";
    std::string fallback_alpha = "1";

    // eval
    bool closed_form = false;
    std::string gamma = "1";
    std::string init;
    std::string z;
    std::string point;
    bool exact = false;
    int terms = 40;
};

SeriesSpec selected_series(const Options& opt) {
    return opt.coeff_file.empty() ? builtin_series(opt.series) : read_coefficient_file(opt.coeff_file);
}

int run_appell(const Options& opt) {
    const auto table = AppellCoefficients::compute(opt.n, opt.k);
    const auto p = appell_polynomial(table, opt.k);
    if (opt.format == "json") {
        std::cout << nlohmann::json{{"polynomial", to_json(p)}, {"c", to_json(table)}}.dump(2) << '\n';
        return 0;
    }
    std::cout << to_string(p) << '\n';
    std::cout << "k c_n^k\n";
    for (int k = 0; k <= table.max_k(); ++k) {
        std::cout << k << ' ' << table.c[static_cast<std::size_t>(k)] << '\n';
    }
    return 0;
}

int run_fueter(const Options& opt) {
    const bool vanishes = opt.k < opt.n - 1;
    const auto p = fueter_sce_monomial(opt.n, opt.k, !opt.raw);
    const std::optional<Rational> alpha = vanishes ? std::nullopt : std::optional(alpha_monomial(opt.n, opt.k));
    if (opt.format == "json") {
        nlohmann::json j{{"polynomial", to_json(p)}, {"normalized", !opt.raw}};
        j["alpha"] = alpha ? nlohmann::json(alpha->str()) : nlohmann::json(nullptr);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << to_string(p) << '\n';
    if (vanishes) {
        std::cout << "note: k < n-1, the transform vanishes identically and cannot be normalized\n";
    } else {
        std::cout << "alpha = " << *alpha << (opt.raw ? " (not applied)" : "") << '\n';
    }
    return 0;
}

// --- verify ---------------------------------------------------------------

AppellCoefficients coefficient_table(const Options& opt, int n, int max_k) {
    auto table = AppellCoefficients::compute(n, max_k);
    if (opt.mutate_c && *opt.mutate_c <= max_k) {
        table.c[static_cast<std::size_t>(*opt.mutate_c)] += Rational(1);
    }
    return table;
}

std::vector<int> dims_or(const Options& opt, std::vector<int> fallback) {
    return opt.dims.empty() ? fallback : opt.dims;
}

bool report_line(const std::string& label, bool ok, const std::string& detail = {}) {
    std::cout << label << ": " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) {
        std::cout << ' ' << detail;
    }
    std::cout << '\n';
    return ok;
}

bool verify_theorem1(const Options& opt) {
    const int kmax = opt.kmax.value_or(15);
    bool ok = true;
    for (int n : dims_or(opt, {3, 5, 7})) {
        const auto table = coefficient_table(opt, n, kmax);
        std::optional<int> failure;
        for (int k = 0; k <= kmax && !failure; ++k) {
            if (fueter_sce_monomial(n, k + n - 1) != appell_polynomial(table, k)) {
                failure = k;
            }
        }
        for (int k = 0; k < n - 1 && !failure; ++k) {
            if (!fueter_sce_monomial(n, k).is_zero()) {
                failure = -1 - k;
            }
        }
        std::string detail;
        if (failure) {
            detail = *failure >= 0 ? "first mismatch at k=" + std::to_string(*failure)
                                   : "nonzero transform below threshold at k=" + std::to_string(-1 - *failure);
        }
        ok &= report_line("theorem1 n=" + std::to_string(n) + " kmax=" + std::to_string(kmax), !failure, detail);
    }
    return ok;
}

bool verify_monogenic(const Options& opt) {
    const int kmax = opt.kmax.value_or(30);
    bool ok = true;
    for (int n : dims_or(opt, {3, 5, 7})) {
        const auto table = coefficient_table(opt, n, kmax);
        std::optional<int> failure;
        for (int k = 0; k <= kmax && !failure; ++k) {
            if (!is_vekua_monogenic(appell_polynomial(table, k))) {
                failure = k;
            }
        }
        ok &= report_line("monogenic(axial) n=" + std::to_string(n) + " kmax=" + std::to_string(kmax), !failure,
                          failure ? "residual nonzero at k=" + std::to_string(*failure) : "");
        if (n <= 5) {
            const int cap = std::min(kmax, 8);
            failure.reset();
            for (int k = 0; k <= cap && !failure; ++k) {
                if (!is_monogenic(from_axial(appell_polynomial(table, k)))) {
                    failure = k;
                }
            }
            ok &= report_line("monogenic(expanded) n=" + std::to_string(n) + " kmax=" + std::to_string(cap), !failure,
                              failure ? "D P nonzero at k=" + std::to_string(*failure) : "");
        }
    }
    return ok;
}

bool verify_appell_property(const Options& opt) {
    const int kmax = opt.kmax.value_or(30);
    bool ok = true;
    for (int n : dims_or(opt, {3, 5, 7})) {
        const auto table = coefficient_table(opt, n, kmax);
        const auto report = appell_property_check(table);
        ok &= report_line("appell-property n=" + std::to_string(n) + " kmax=" + std::to_string(kmax), report.passed(),
                          report.passed() ? "" : "first failure at k=" + std::to_string(*report.first_failure));

        Paravector<Rational> one{1, std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
        std::optional<int> failure;
        for (int k = 0; k <= kmax && !failure; ++k) {
            if (evaluate(appell_polynomial(table, k), one) != Multivector<Rational>::scalar(n, 1)) {
                failure = k;
            }
        }
        ok &= report_line("normalization n=" + std::to_string(n) + " kmax=" + std::to_string(kmax), !failure,
                          failure ? "P_k(1) != 1 at k=" + std::to_string(*failure) : "");
    }
    return ok;
}

bool verify_recurrence(const Options& opt) {
    const auto f = selected_series(opt);
    bool ok = true;
    for (int n : dims_or(opt, {3, 5, 7})) {
        const auto report = recurrence_check(n, f, opt.big_k);
        std::string detail;
        if (report.holds) {
            detail = report.gamma ? "gamma=" + report.gamma->str() : "gamma unconstrained (all coefficients zero)";
        } else {
            const auto& v = *report.first_violation;
            detail = "first violation at k=" + std::to_string(v.k) + ": a_(k+n-1)(k+n-1)! = " + v.lhs.str() +
                     ", gamma k! a_k = " + v.rhs.str();
        }
        ok &= report_line("recurrence " + f.name + " n=" + std::to_string(n) + " K=" + std::to_string(opt.big_k),
                          report.holds, detail);
        if (report.holds) {
            const auto cmp = compare_extensions(n, f, opt.big_k - (n - 1));
            ok &= report_line("extensions agree " + f.name + " n=" + std::to_string(n), cmp.all_equal() && cmp.consistent(),
                              cmp.first_mismatch ? "first mismatch at k=" + std::to_string(*cmp.first_mismatch) : "");
        }
    }
    return ok;
}

bool verify_closed_form(const Options& opt) {
    bool ok = true;
    for (int n : dims_or(opt, {3, 5})) {
        const auto params = exp_parameters(n);
        const bool series_ok = closed_form_coefficients(params, 40) == solve_recurrence(params, 40);
        ok &= report_line("closed-form series n=" + std::to_string(n) + " M=40", series_ok);

        const double at_zero = closed_form_eval(params, 0.0, control_from_env(opt.tolerance));
        ok &= report_line("closed-form n=" + std::to_string(n) + " z=0", at_zero == 1.0,
                          "value=" + format_scalar(at_zero));
        for (const auto& z_text : split_list(opt.z_list)) {
            const double z = Rational::parse(z_text).to_double();
            const auto report = exp_decomposition_check(n, z, opt.tolerance);
            std::ostringstream detail;
            detail << "value=" << format_scalar(report.value) << " reference=" << format_scalar(report.reference)
                   << " error=" << std::setprecision(3) << report.abs_error;
            ok &= report_line("exp decomposition n=" + std::to_string(n) + " z=" + z_text, report.passed, detail.str());
        }
        for (const auto& row : solution_form_report(params, 1)) {
            if (row.l == 1 && !row.agree) {
                std::cout << "note: n=" << n << " a_" << row.index << " = " << row.solution
                          << "; the shifted ((l+1)(n-1)+r)! form would give " << row.variant << '\n';
            }
        }
    }
    return ok;
}

int run_verify(const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    if (opt.suite == "theorem1") {
        ok = verify_theorem1(opt);
    } else if (opt.suite == "monogenic") {
        ok = verify_monogenic(opt);
    } else if (opt.suite == "appell-property") {
        ok = verify_appell_property(opt);
    } else if (opt.suite == "recurrence") {
        ok = verify_recurrence(opt);
    } else if (opt.suite == "closed-form") {
        ok = verify_closed_form(opt);
    } else if (opt.suite == "all") {
        ok = verify_theorem1(opt);
        ok &= verify_monogenic(opt);
        ok &= verify_appell_property(opt);
        ok &= verify_recurrence(opt);
        ok &= verify_closed_form(opt);
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed " << std::fixed << std::setprecision(2) << elapsed.count() << " s\n";
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? 0 : 1;
}

int run_compare(const Options& opt) {
    const auto report = compare_extensions(opt.n, selected_series(opt), opt.big_k, Rational::parse(opt.fallback_alpha));
    if (opt.compare_format == "json") {
        std::cout << to_json(report).dump(2) << '\n';
        return 0;
    }
    std::cout << "series " << report.series << " n=" << report.n << " alpha=" << report.alpha << '\n';
    for (const auto& c : report.coefficients) {
        std::cout << c.k << ' ' << c.tau << ' ' << c.eta << (c.equal ? "" : "  MISMATCH") << '\n';
    }
    std::cout << (report.all_equal() ? "equal" : "different") << '\n';
    return 0;
}

int run_eval(const Options& opt) {
    if (opt.closed_form) {
        if (opt.z.empty()) {
            throw CLI::ValidationError("--z", "required with --closed-form");
        }
        ClassParameters params{opt.n, Rational::parse(opt.gamma), parse_rationals(opt.init)};
        params.validate();
        if (opt.exact) {
            std::cout << closed_form_eval(params, Rational::parse(opt.z), opt.terms) << '\n';
        } else {
            const double z = Rational::parse(opt.z).to_double();
            std::cout << format_scalar(closed_form_eval(params, z, control_from_env(opt.tolerance))) << '\n';
        }
        return 0;
    }
    if (opt.point.empty()) {
        throw CLI::ValidationError("--point", "required unless --closed-form is given");
    }
    const auto coords = parse_rationals(opt.point);
    if (coords.size() != static_cast<std::size_t>(opt.n) + 1) {
        throw CLI::ValidationError("--point", "expected n+1 comma-separated coordinates");
    }
    const auto ext = appell_extension(opt.n, selected_series(opt), opt.big_k);
    Paravector<Rational> x{coords[0], std::vector<Rational>(coords.begin() + 1, coords.end())};
    if (opt.exact) {
        std::cout << to_string(evaluate(ext.polynomial, x)) << '\n';
        return 0;
    }
    Paravector<double> xd{x.x0.to_double(), {}};
    for (const auto& xi : x.vec) {
        xd.vec.push_back(xi.to_double());
    }
    std::cout << to_string(evaluate(ext.polynomial, xd)) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cliffex: Clifford-algebra Appell polynomials and Fueter-Sce extensions"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* appell = app.add_subcommand("appell", "Print P_k^n and the c_n^k table");
    appell->add_option("--n", opt.n, "Odd dimension")->required()->check(odd_dimension);
    appell->add_option("--k", opt.k, "Degree")->required()->check(CLI::NonNegativeNumber);
    add_format(appell);

    auto* fueter = app.add_subcommand("fueter", "Print tau_n[z^k] and alpha_n[z^k]");
    fueter->add_option("--n", opt.n, "Odd dimension")->required()->check(odd_dimension);
    fueter->add_option("--k", opt.k, "Degree of the complex monomial")->required()->check(CLI::NonNegativeNumber);
    auto* raw = fueter->add_flag("--raw", opt.raw, "Unnormalized operator output");
    fueter->add_flag("--normalized", "Scale by alpha_n[z^k] (default)")->excludes(raw);
    add_format(fueter);

    auto* verify = app.add_subcommand("verify", "Run a verification suite; exit status 1 on any failure");
    verify->add_option("suite", opt.suite, "Suite")
        ->required()
        ->check(CLI::IsMember({"theorem1", "monogenic", "appell-property", "recurrence", "closed-form", "all"}));
    verify->add_option("--n", opt.dims, "Odd dimension(s); default depends on suite")->check(odd_dimension);
    verify->add_option("--kmax", opt.kmax, "Largest degree checked")->check(CLI::NonNegativeNumber);
    verify->add_option("--series", opt.series, "Built-in series: exp, sinh, cosh, geometric, z^m");
    verify->add_option("--coeff-file", opt.coeff_file, "Coefficient file (one rational per line)")
        ->check(CLI::ExistingFile);
    verify->add_option("--K", opt.big_k, "Largest coefficient index for recurrence checks")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--tol", opt.tolerance, "Tolerance for floating-point checks");
    verify->add_option("--z", opt.z_list, "Comma-separated evaluation points for closed-form");
    verify->add_option("--mutate-c", opt.mutate_c, "Fault injection: add 1 to c_n^k for this k")
        ->check(CLI::NonNegativeNumber);

    auto* compare = app.add_subcommand("compare", "Compare Fueter-Sce and Appell extension coefficients");
    compare->add_option("--n", opt.n, "Odd dimension")->required()->check(odd_dimension);
    compare->add_option("--series", opt.series, "Built-in series: exp, sinh, cosh, geometric, z^m");
    compare->add_option("--coeff-file", opt.coeff_file, "Coefficient file")->check(CLI::ExistingFile);
    compare->add_option("--K", opt.big_k, "Truncation degree")->check(CLI::NonNegativeNumber);
    compare->add_option("--alpha", opt.fallback_alpha, "alpha used when the recurrence gives no nonzero gamma");
    compare->add_option("--format", opt.compare_format, "Output format (default json)")
        ->check(CLI::IsMember({"text", "json"}));

    auto* eval = app.add_subcommand("eval", "Evaluate a closed form or a truncated Appell extension");
    eval->add_option("--n", opt.n, "Odd dimension")->required()->check(odd_dimension);
    eval->add_flag("--closed-form", opt.closed_form, "Evaluate the hypergeometric closed form");
    eval->add_option("--gamma", opt.gamma, "Class parameter gamma");
    eval->add_option("--init", opt.init, "Initial coefficients a_0..a_(n-2), comma-separated");
    eval->add_option("--z", opt.z, "Real argument for --closed-form");
    eval->add_option("--series", opt.series, "Built-in series for the Appell extension");
    eval->add_option("--coeff-file", opt.coeff_file, "Coefficient file")->check(CLI::ExistingFile);
    eval->add_option("--point", opt.point, "Paravector x0,x1,...,xn");
    eval->add_option("--K", opt.big_k, "Truncation degree of the extension")->check(CLI::NonNegativeNumber);
    eval->add_option("--tol", opt.tolerance, "Tolerance for hypergeometric summation");
    eval->add_flag("--exact", opt.exact, "Exact rational evaluation");
    eval->add_option("--terms", opt.terms, "Terms per hypergeometric sum with --exact")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        if (appell->parsed()) {
            return run_appell(opt);
        }
        if (fueter->parsed()) {
            return run_fueter(opt);
        }
        if (verify->parsed()) {
            return run_verify(opt);
        }
        if (compare->parsed()) {
            return run_compare(opt);
        }
        return run_eval(opt);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
