#include "sytmaj/json_io.hpp"

#include <stdexcept>

namespace sytmaj {

json shape_to_json(const Shape& shape) {
    if (const Partition* p = std::get_if<Partition>(&shape)) return json(p->parts());
    json blocks = json::array();
    for (const Partition& b : std::get<BlockDiagonalShape>(shape).blocks())
        blocks.push_back(json(b.parts()));
    return blocks;
}

Shape shape_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("shape JSON must be an array");
    if (j.empty()) return Partition{};
    if (j.front().is_array()) {
        std::vector<Partition> blocks;
        for (const json& b : j) blocks.push_back(Partition(b.get<std::vector<int>>()));
        return BlockDiagonalShape(std::move(blocks));
    }
    return Partition(j.get<std::vector<int>>());
}

json qpolynomial_to_json(const QPolynomial& p) {
    json coeffs = json::array();
    int lo = p.is_zero() ? 0 : p.min_degree();
    for (int k = lo; k <= p.degree(); ++k) coeffs.push_back(p.coeff(k).get_str());
    return json{{"min_degree", lo}, {"coeffs", coeffs}};
}

QPolynomial qpolynomial_from_json(const json& j) {
    int lo = j.at("min_degree").get<int>();
    const json& coeffs = j.at("coeffs");
    std::vector<mpz_class> c(static_cast<std::size_t>(lo) + coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c[static_cast<std::size_t>(lo) + i] = mpz_class(coeffs[i].get<std::string>());
    return QPolynomial(std::move(c));
}

json tableau_to_json(const StandardTableau& t) {
    return json{{"shape", shape_to_json(t.shape())}, {"rows", t.rows()}};
}

StandardTableau tableau_from_json(const json& j) {
    return StandardTableau(shape_from_json(j.at("shape")),
                           j.at("rows").get<std::vector<std::vector<int>>>());
}

json support_to_json(const SupportClassification& sc) {
    return json{{"min", sc.min_maj}, {"max", sc.max_maj}, {"gaps", sc.gaps}};
}

json moment_table_to_json(const MomentTable& table) {
    json raw = json::object(), central = json::object(), cumulants = json::object();
    for (int d = 1; d <= table.max_d(); ++d) raw[std::to_string(d)] = rational_to_string(table.raw_moment(d));
    for (int d = 2; d <= table.max_d(); ++d) {
        central[std::to_string(d)] = rational_to_string(table.central_moment(d));
        cumulants[std::to_string(d)] = rational_to_string(table.cumulant(d));
    }
    return json{{"mean", rational_to_string(table.mean)},
                {"variance", rational_to_string(table.variance)},
                {"raw", raw},
                {"central", central},
                {"cumulants", cumulants}};
}

json sweep_report_to_json(const SweepReport& report) {
    json violations = json::array();
    for (const SweepViolation& v : report.violations)
        violations.push_back(json{{"shape", v.shape}, {"detail", v.detail}});
    return json{{"scope", report.scope},
                {"checked", report.checked},
                {"violations", violations},
                {"elapsed_seconds", report.elapsed_seconds},
                {"passed", report.passed()}};
}

json phi_outcome_to_json(const PhiOutcome& outcome) {
    if (outcome.fixed())
        return json{{"fixed_point", true}, {"hint", fixed_point_hint_name(outcome.hint)}};
    const RotationWitness& w = *outcome.witness;
    return json{{"fixed_point", false},
                {"kind", w.kind == RotationKind::Positive ? "positive" : "negative"},
                {"i", w.i},
                {"j", w.j},
                {"k", w.k},
                {"result", tableau_to_json(w.result)}};
}

json ranked_report_to_json(const RankedIncrementReport& report) {
    json levels = json::array();
    for (const LevelSummary& level : report.levels)
        levels.push_back(json{{"maj", level.maj},
                              {"count", level.count},
                              {"fixed", level.fixed_count},
                              {"images_into_next", level.images_into_next},
                              {"next_fully_covered", level.next_fully_covered}});
    return json{{"all_increments_valid", report.all_increments_valid},
                {"tableaux", report.tableaux},
                {"fixed_total", report.fixed_total},
                {"levels", levels}};
}

json hook_bound_report_to_json(const HookBoundReport& report) {
    json j{{"n", report.n},
           {"d", report.d},
           {"max_hook", report.max_hook},
           {"aft", report.aft_value},
           {"regime", report.large_hook_regime ? "large-hook" : "small-hook"},
           {"lemma_applicable", report.lemma_applicable},
           {"bracket", report.bracket.get_str()},
           {"lower", rational_to_string(report.lower)},
           {"upper", rational_to_string(report.upper)},
           {"holds", report.holds}};
    if (report.theta_ratio) j["theta_ratio"] = *report.theta_ratio;
    return j;
}

json local_limit_report_to_json(const LocalLimitReport& report) {
    return json{{"max_deviation", report.max_deviation},
                {"argmax_k", report.argmax_k},
                {"sigma", report.sigma},
                {"aft", report.aft_value},
                {"ratio", report.ratio}};
}

}  // namespace sytmaj
