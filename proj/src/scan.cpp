#include "sytmaj/scan.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "sytmaj/fakedeg.hpp"
#include "sytmaj/moments.hpp"
#include "sytmaj/qpoly.hpp"
#include "sytmaj/shapes.hpp"
#include "sytmaj/tableaux.hpp"

namespace sytmaj {

namespace {

SweepReport run_sweep(std::string scope, int n_min, int n_max,
                      const std::function<void(const Partition&, SweepReport&)>& check) {
    SweepReport report;
    report.scope = std::move(scope);
    auto start = std::chrono::steady_clock::now();
    for (int n = n_min; n <= n_max; ++n)
        for (const Partition& p : partitions_of(n)) {
            check(p, report);
            ++report.checked;
        }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const SweepViolation& a, const SweepViolation& b) { return a.shape < b.shape; });
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

SweepReport sweep_zeros_theorem(int n_max) {
    return run_sweep("zeros theorem, all partitions of 1.." + std::to_string(n_max), 1, n_max,
                     [](const Partition& p, SweepReport& report) {
                         QPolynomial gf = maj_gf_hook_formula(p);
                         SupportClassification sc = support_classification(p);
                         std::string problem;
                         if (gf.min_degree() != sc.min_maj)
                             problem = "min degree mismatch";
                         else if (gf.degree() != sc.max_maj)
                             problem = "max degree mismatch";
                         else {
                             std::vector<long long> zeros;
                             for (int k = gf.min_degree(); k <= gf.degree(); ++k)
                                 if (gf.coeff(k) == 0) zeros.push_back(k);
                             if (zeros != sc.gaps) problem = "gap set mismatch";
                         }
                         if (!problem.empty()) report.violations.push_back({p.to_string(), problem});
                     });
}

SweepReport sweep_unimodality_conjecture(int n_max) {
    return run_sweep("unimodality of gf for partitions of 1.." + std::to_string(n_max) +
                         " with at least 4 corners",
                     1, n_max, [](const Partition& p, SweepReport& report) {
                         if (corner_count(p) < 4) return;
                         if (!coefficient_shape(maj_gf_hook_formula(p)).unimodal)
                             report.violations.push_back({p.to_string(), "gf is not unimodal"});
                     });
}

SweepReport sweep_parity_unimodality(int n_max, int catalan_n_max) {
    SweepReport report =
        run_sweep("parity-unimodality for partitions of 1.." + std::to_string(n_max) +
                      " and two-row rectangles up to (" + std::to_string(catalan_n_max) + "," +
                      std::to_string(catalan_n_max) + ")",
                  1, n_max, [](const Partition& p, SweepReport& rep) {
                      if (!coefficient_shape(maj_gf_hook_formula(p)).parity_unimodal)
                          rep.violations.push_back({p.to_string(), "gf is not parity-unimodal"});
                  });
    auto start = std::chrono::steady_clock::now();
    for (int k = 1; k <= catalan_n_max; ++k) {
        Partition square({k, k});
        if (!coefficient_shape(maj_gf_hook_formula(square)).parity_unimodal)
            report.violations.push_back({square.to_string(), "gf is not parity-unimodal"});
        ++report.checked;
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const SweepViolation& a, const SweepViolation& b) { return a.shape < b.shape; });
    report.elapsed_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SweepReport sweep_formula_vs_oracle(int n_max) {
    return run_sweep("hook formula and cumulants against the enumeration oracle, partitions of 1.." +
                         std::to_string(n_max),
                     1, n_max, [n_max](const Partition& p, SweepReport& report) {
                         QPolynomial formula = maj_gf_hook_formula(p);
                         QPolynomial oracle = brute_force_maj_gf(Shape(p), std::max(n_max, kDefaultEnumerationCap));
                         if (formula != oracle) {
                             report.violations.push_back({p.to_string(), "hook formula disagrees with enumeration"});
                             return;
                         }
                         MomentTable table = moments_from_gf(formula, 6);
                         for (int d = 2; d <= 6; ++d)
                             if (cumulant_formula(Shape(p), d) != table.cumulant(d)) {
                                 report.violations.push_back(
                                     {p.to_string(), "cumulant formula disagrees at d = " + std::to_string(d)});
                                 return;
                             }
                     });
}

}  // namespace sytmaj
