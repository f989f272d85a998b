#pragma once

#include <string>
#include <vector>

namespace sytmaj {

struct SweepViolation {
    std::string shape;
    std::string detail;
};

struct SweepReport {
    std::string scope;
    long long checked = 0;
    std::vector<SweepViolation> violations;  // sorted by shape, empty iff passed
    double elapsed_seconds = 0;
    bool passed() const { return violations.empty(); }
};

/// Zero pattern of the hook-formula gf equals the support classification for
/// every λ ⊢ n ≤ n_max. Enumeration-free.
SweepReport sweep_zeros_theorem(int n_max);

/// Every λ ⊢ n ≤ n_max with at least 4 corners has a unimodal gf. A violation
/// is a mathematical discovery, not an engine bug.
SweepReport sweep_unimodality_conjecture(int n_max);

/// Every λ ⊢ n ≤ n_max is parity-unimodal; additionally SYT(k,k) for
/// k ≤ catalan_n_max.
SweepReport sweep_parity_unimodality(int n_max, int catalan_n_max);

/// Hook formula against the enumeration oracle, and the cumulant formula
/// against gf-derived cumulants for d ≤ 6, for every λ ⊢ n ≤ n_max.
SweepReport sweep_formula_vs_oracle(int n_max);

}  // namespace sytmaj
