#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sytmaj/qpoly.hpp"
#include "sytmaj/shapes.hpp"

namespace sytmaj {

/// Canonical arbitrary-precision rational (positive denominator, reduced).
using Rational = mpq_class;

/// "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

/// Bernoulli number B_d with the B_1 = +1/2 convention; memoized, safe to
/// call concurrently.
Rational bernoulli(int d);

/// Exact raw moments, central moments, and cumulants of one distribution.
struct MomentTable {
    Rational mean;                    // μ_1
    Rational variance;                // κ_2 = α_2
    std::vector<Rational> raw;        // μ_1..μ_D
    std::vector<Rational> central;    // α_2..α_D
    std::vector<Rational> cumulants;  // κ_2..κ_D
    int max_d() const { return static_cast<int>(raw.size()); }
    const Rational& raw_moment(int d) const { return raw[static_cast<std::size_t>(d - 1)]; }
    const Rational& central_moment(int d) const { return central[static_cast<std::size_t>(d - 2)]; }
    const Rational& cumulant(int d) const { return cumulants[static_cast<std::size_t>(d - 2)]; }
};

/// κ_d = (B_d/d)·[Σ_{j≤n} j^d − Σ_c h_c^d], d ≥ 2.
Rational cumulant_formula(const Shape& shape, int d);

/// Exact mean of maj: b + ½(Σ_{j≤n} j − Σ_c h_c).
Rational mean_formula(const Shape& shape);

/// Raw moments from cumulants κ_1..κ_D via the binomial recurrence; central
/// moments from the same recurrence with κ_1 zeroed.
MomentTable cumulants_to_moments(const std::vector<Rational>& kappa);

/// Treats p's normalized coefficients as a probability mass function. Throws
/// on the zero polynomial or a negative coefficient.
MomentTable moments_from_gf(const QPolynomial& p, int max_d);

/// κ_d / κ_2^{d/2} for even d; zero for odd d ≥ 3. Throws std::domain_error
/// when the variance vanishes.
Rational normalized_cumulant(const Shape& shape, int d);

}  // namespace sytmaj
