#include "sytmaj/fakedeg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sytmaj {

QPolynomial maj_gf_hook_formula(const Partition& p) {
    QPolynomial result = q_factorial(p.cells());
    std::vector<int> hooks = hook_lengths(p);
    for (auto it = hooks.rbegin(); it != hooks.rend(); ++it)
        result = exact_divide(result, q_integer(*it));
    return result.shifted(static_cast<int>(b_stat(p)));
}

SupportClassification support_classification(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("support_classification: empty partition");
    long long n = p.cells();
    SupportClassification sc;
    sc.min_maj = b_stat(p);
    sc.max_maj = n * (n - 1) / 2 - b_stat(conjugate(p));
    sc.is_rectangle_exception = p.is_rectangle() && p.rows() >= 2 && p.part(0) >= 2;
    if (sc.is_rectangle_exception) {
        sc.gaps.push_back(sc.min_maj + 1);
        if (sc.max_maj - 1 != sc.min_maj + 1) sc.gaps.push_back(sc.max_maj - 1);
    }
    return sc;
}

bool fake_degree_positive(const Partition& p, long long k) {
    SupportClassification sc = support_classification(p);
    if (k < sc.min_maj || k > sc.max_maj) return false;
    return std::find(sc.gaps.begin(), sc.gaps.end(), k) == sc.gaps.end();
}

QPolynomial maj_gf_block_diagonal(const BlockDiagonalShape& s, int power) {
    if (power < 1)
        throw std::invalid_argument("maj_gf_block_diagonal: power must be positive");
    std::vector<int> sizes;
    sizes.reserve(s.blocks().size());
    for (const Partition& b : s.blocks()) sizes.push_back(b.cells());
    QPolynomial result = q_multinomial(s.cells(), sizes);
    for (const Partition& b : s.blocks())
        result *= substitute_power(maj_gf_hook_formula(b), power);
    return result;
}

QPolynomial maj_gf(const Shape& shape) {
    if (const Partition* p = std::get_if<Partition>(&shape)) return maj_gf_hook_formula(*p);
    return maj_gf_block_diagonal(std::get<BlockDiagonalShape>(shape), 1);
}

}  // namespace sytmaj
