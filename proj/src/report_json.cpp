#include "cliffex/report_json.hpp"

namespace cliffex {

namespace {

nlohmann::json recurrence_fields(const RecurrenceReport& report, const std::string& series) {
    nlohmann::json out;
    out["series"] = series;
    out["n"] = report.n;
    out["holds"] = report.holds;
    out["gamma"] = report.gamma ? nlohmann::json(report.gamma->str()) : nlohmann::json(nullptr);
    out["gamma_unconstrained"] = report.gamma_unconstrained();
    out["checked_up_to"] = report.checked_up_to;
    if (report.first_violation) {
        const auto& v = *report.first_violation;
        out["first_violation"] = {{"k", v.k}, {"lhs", v.lhs.str()}, {"rhs", v.rhs.str()}};
    } else {
        out["first_violation"] = nullptr;
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const RecurrenceReport& report, const std::string& series) {
    auto out = recurrence_fields(report, series);
    out["coefficients"] = nlohmann::json::array();
    return out;
}

nlohmann::json to_json(const ComparisonReport& report) {
    auto out = recurrence_fields(report.recurrence, report.series);
    out["alpha"] = report.alpha.str();
    out["alpha_from_gamma"] = report.alpha_from_gamma;
    out["all_equal"] = report.all_equal();
    out["first_mismatch"] = report.first_mismatch ? nlohmann::json(*report.first_mismatch) : nlohmann::json(nullptr);
    out["consistent"] = report.consistent();
    auto coefficients = nlohmann::json::array();
    for (const auto& c : report.coefficients) {
        coefficients.push_back({{"k", c.k}, {"tau", c.tau.str()}, {"eta", c.eta.str()}, {"equal", c.equal}});
    }
    out["coefficients"] = std::move(coefficients);
    return out;
}

nlohmann::json to_json(const AxialPolynomial& p) {
    auto terms = [](const BivariatePoly& q) {
        auto arr = nlohmann::json::array();
        for (const auto& [exps, c] : q.terms()) {
            arr.push_back({{"x0", exps.first}, {"r", exps.second}, {"c", c.str()}});
        }
        return arr;
    };
    return {{"n", p.dimension()}, {"text", to_string(p)}, {"A", terms(p.scalar_part())}, {"B", terms(p.omega_part())}};
}

nlohmann::json to_json(const AppellCoefficients& table) {
    auto rows = nlohmann::json::array();
    for (int k = 0; k <= table.max_k(); ++k) {
        rows.push_back({{"k", k}, {"c", table.c[static_cast<std::size_t>(k)].str()}});
    }
    return rows;
}

nlohmann::json to_json(const std::vector<SolutionFormRow>& rows) {
    auto out = nlohmann::json::array();
    for (const auto& row : rows) {
        out.push_back({{"index", row.index},
                       {"l", row.l},
                       {"r", row.r},
                       {"solution", row.solution.str()},
                       {"shifted_variant", row.variant.str()},
                       {"agree", row.agree}});
    }
    return out;
}

}  // namespace cliffex
