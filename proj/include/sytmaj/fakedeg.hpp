#pragma once

#include <vector>

#include "sytmaj/qpoly.hpp"
#include "sytmaj/shapes.hpp"

namespace sytmaj {

/// Support of the maj generating function on [min_maj, max_maj]. Coefficients
/// vanish inside the interval only for rectangles with at least two rows and
/// columns, exactly at min_maj+1 and max_maj−1.
struct SupportClassification {
    long long min_maj = 0;  // b(λ)
    long long max_maj = 0;  // n(n−1)/2 − b(λ′)
    std::vector<long long> gaps;
    bool is_rectangle_exception = false;
};

/// q^{b(λ)}·[n]_q! / ∏_c [h_c]_q, computed by exact division.
QPolynomial maj_gf_hook_formula(const Partition& p);

/// Throws std::invalid_argument on the empty partition.
SupportClassification support_classification(const Partition& p);

/// Closed-form decision, no enumeration.
bool fake_degree_positive(const Partition& p, long long k);

/// [n over (|λ⁽¹⁾|,…)]_q · ∏_i gf(λ⁽ⁱ⁾)(q^power). With power = 1 this equals
/// the maj generating function of the stacked shape.
QPolynomial maj_gf_block_diagonal(const BlockDiagonalShape& s, int power);

/// Hook formula for straight shapes, block-diagonal product formula otherwise.
QPolynomial maj_gf(const Shape& shape);

}  // namespace sytmaj
