#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sytmaj/moments.hpp"
#include "sytmaj/qpoly.hpp"
#include "sytmaj/shapes.hpp"

namespace sytmaj {

/// Φ(t) to better than 1e−12 absolute accuracy.
double normal_cdf(double t);

/// CDF at t of the standardized sum of m uniform [0,1] variables (mean 0,
/// variance 1). The piecewise polynomial is evaluated in exact rationals.
double irwin_hall_star_cdf(int m, double t);

struct ReferenceLaw {
    enum class Kind { Normal, IrwinHallStar, Discrete };
    Kind kind = Kind::Normal;
    int m = 0;  // IrwinHallStar only

    static ReferenceLaw normal() { return {Kind::Normal, 0}; }
    static ReferenceLaw irwin_hall_star(int m) { return {Kind::IrwinHallStar, m}; }
    static ReferenceLaw discrete() { return {Kind::Discrete, 0}; }

    /// Throws std::invalid_argument for the discrete kind (no reference CDF).
    double cdf(double t) const;
    std::string name() const;
};

/// Parses "normal" or "ih:M".
ReferenceLaw parse_law(const std::string& text);

/// Exact maj distribution standardized to mean 0, variance 1. Atom offsets
/// (k − μ) and masses stay exact; only the final division by σ is floating
/// point (σ from a 256-bit sqrt of the exact variance).
struct NormalizedDistribution {
    std::vector<Rational> offsets;  // k − μ, increasing
    std::vector<Rational> masses;   // sum to 1
    Rational mean;
    Rational variance;  // > 0
    double sigma = 0;
    std::vector<double> points;  // offsets / σ
};

NormalizedDistribution normalized_distribution_from_gf(const QPolynomial& gf);
NormalizedDistribution normalized_distribution(const Shape& shape);

/// Exact equality of atom offsets, masses, and variance.
bool same_normalized_law(const NormalizedDistribution& a, const NormalizedDistribution& b);

/// sup_t |F_dist(t) − F_law(t)|, attained at atom boundaries.
double ks_distance(const NormalizedDistribution& dist, const ReferenceLaw& law);

struct LimitLaw {
    enum class Case { Normal, IrwinHall, Discrete, Divergent };
    Case kind = Case::Divergent;
    int m = 0;  // IrwinHall only
    std::string name() const;
};

/// Decides the limit law from declared limiting behavior: aft_limit and
/// size_limit are finite values or nullopt for ∞. Throws
/// std::invalid_argument on contradictory declarations.
LimitLaw classify_limit(std::optional<long long> aft_limit, std::optional<long long> size_limit,
                        bool eventually_constant_normalized);

/// One hook-cancellation bound check at degree d, exact integer arithmetic.
struct HookBoundReport {
    int n = 0;
    int d = 0;
    int max_hook = 0;
    long long aft_value = 0;
    bool large_hook_regime = false;  // max hook ≥ 0.8n
    bool lemma_applicable = true;    // large regime needs n ≥ 10
    mpz_class bracket;               // Σ j^d − Σ h_c^d
    Rational lower, upper;
    bool holds = false;
    std::optional<double> theta_ratio;  // bracket / (aft·n^d), when aft > 0
};

HookBoundReport check_hook_bounds(const Shape& shape, int d);

/// |κ_d*| · aft^{d/2−1} for even d ≥ 4; the quantity that stays within
/// constant bounds across shapes.
double normalized_cumulant_scaling(const Shape& shape, int d);

/// Deviation of the exact pmf from the Gaussian density with the same mean
/// and variance, and the ratio against 1/(σ·aft).
struct LocalLimitReport {
    double max_deviation = 0;
    long long argmax_k = 0;
    double sigma = 0;
    long long aft_value = 0;
    double ratio = 0;  // max_deviation · σ · aft
};

LocalLimitReport local_limit_deviation(const Partition& p);

}  // namespace sytmaj
