#pragma once

// JSON encodings of the recurrence and comparison reports. Rationals are
// strings "p/q" so nothing is rounded.
//
// Shared schema:
//   {series, n, holds, gamma: "p/q" | null,
//    first_violation: {k, lhs, rhs} | null,
//    coefficients: [{k, tau, eta, equal}]}
// Comparison reports add alpha, alpha_from_gamma, all_equal, first_mismatch
// and consistent.

#include <string>

#include <json.hpp>

#include "cliffex/appell.hpp"
#include "cliffex/series.hpp"

namespace cliffex {

nlohmann::json to_json(const RecurrenceReport& report, const std::string& series);
nlohmann::json to_json(const ComparisonReport& report);
nlohmann::json to_json(const AxialPolynomial& p);
nlohmann::json to_json(const AppellCoefficients& table);
nlohmann::json to_json(const std::vector<SolutionFormRow>& rows);

}  // namespace cliffex
