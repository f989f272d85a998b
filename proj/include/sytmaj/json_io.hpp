#pragma once

#include <json.hpp>

#include "sytmaj/fakedeg.hpp"
#include "sytmaj/limits.hpp"
#include "sytmaj/moments.hpp"
#include "sytmaj/qpoly.hpp"
#include "sytmaj/rotation.hpp"
#include "sytmaj/scan.hpp"
#include "sytmaj/shapes.hpp"
#include "sytmaj/tableaux.hpp"

namespace sytmaj {

using json = nlohmann::json;

// Shapes: a partition is an array of parts, a block diagonal shape an array
// of such arrays.
json shape_to_json(const Shape& shape);
Shape shape_from_json(const json& j);

// Polynomials: {"min_degree": int, "coeffs": [decimal strings]} with the
// coefficients listed from min_degree through the top nonzero degree.
json qpolynomial_to_json(const QPolynomial& p);
QPolynomial qpolynomial_from_json(const json& j);

// Tableaux: {"shape": …, "rows": [[ints]]}.
json tableau_to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const json& j);

json support_to_json(const SupportClassification& sc);
json moment_table_to_json(const MomentTable& table);
json sweep_report_to_json(const SweepReport& report);
json phi_outcome_to_json(const PhiOutcome& outcome);
json ranked_report_to_json(const RankedIncrementReport& report);
json hook_bound_report_to_json(const HookBoundReport& report);
json local_limit_report_to_json(const LocalLimitReport& report);

}  // namespace sytmaj
