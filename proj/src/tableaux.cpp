#include "sytmaj/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sytmaj {

StackedGeometry stacked_geometry(const Shape& shape) {
    StackedGeometry geom;
    const std::vector<Partition>* blocks = nullptr;
    Partition single;
    std::vector<Partition> single_vec;
    if (const Partition* p = std::get_if<Partition>(&shape)) {
        single_vec.push_back(*p);
        blocks = &single_vec;
    } else {
        blocks = &std::get<BlockDiagonalShape>(shape).blocks();
    }
    // Block i+1 sits strictly below and strictly left of block i.
    std::vector<int> offsets(blocks->size(), 0);
    for (std::size_t b = 0; b < blocks->size(); ++b)
        for (std::size_t later = b + 1; later < blocks->size(); ++later)
            offsets[b] += (*blocks)[later].empty() ? 0 : (*blocks)[later].part(0);
    for (std::size_t b = 0; b < blocks->size(); ++b) {
        const Partition& block = (*blocks)[b];
        for (int r = 0; r < block.rows(); ++r) {
            geom.rows.push_back({static_cast<int>(b), block.part(r), offsets[b], r == 0});
            geom.cells += block.part(r);
        }
    }
    return geom;
}

std::vector<std::vector<int>> hook_grid(const Shape& shape) {
    std::vector<std::vector<int>> grid;
    auto add_block = [&grid](const Partition& p) {
        Partition conj = conjugate(p);
        for (int i = 0; i < p.rows(); ++i) {
            std::vector<int> row(static_cast<std::size_t>(p.part(i)));
            for (int j = 0; j < p.part(i); ++j)
                row[static_cast<std::size_t>(j)] = p.part(i) + conj.part(j) - i - j - 1;
            grid.push_back(std::move(row));
        }
    };
    if (const Partition* p = std::get_if<Partition>(&shape)) {
        add_block(*p);
    } else {
        for (const Partition& b : std::get<BlockDiagonalShape>(shape).blocks()) add_block(b);
    }
    return grid;
}

void StandardTableau::index_values() {
    StackedGeometry geom = stacked_geometry(shape_);
    n_ = geom.cells;
    row_of_.assign(static_cast<std::size_t>(n_) + 1, -1);
    col_of_.assign(static_cast<std::size_t>(n_) + 1, -1);
    if (rows_.size() != geom.rows.size())
        throw std::invalid_argument("tableau: row count does not match the shape");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (static_cast<int>(rows_[r].size()) != geom.rows[r].length)
            throw std::invalid_argument("tableau: row length does not match the shape");
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            int v = rows_[r][c];
            if (v < 1 || v > n_ || row_of_[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("tableau: entries must be a bijection with 1..n");
            row_of_[static_cast<std::size_t>(v)] = static_cast<int>(r);
            col_of_[static_cast<std::size_t>(v)] = geom.rows[r].offset + static_cast<int>(c);
        }
    }
}

StandardTableau::StandardTableau(Shape shape, std::vector<std::vector<int>> rows) {
    shape_ = std::move(shape);
    rows_ = std::move(rows);
    index_values();
    StackedGeometry geom = stacked_geometry(shape_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0 && rows_[r][c - 1] >= rows_[r][c])
                throw std::invalid_argument("tableau: rows must strictly increase");
            if (!geom.rows[r].first_of_block && rows_[r - 1][c] >= rows_[r][c])
                throw std::invalid_argument("tableau: columns must strictly increase");
        }
    }
}

StandardTableau StandardTableau::unchecked(Shape shape, std::vector<std::vector<int>> rows) {
    StandardTableau t;
    t.shape_ = std::move(shape);
    t.rows_ = std::move(rows);
    t.index_values();
    return t;
}

std::string StandardTableau::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += '|';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) out += ' ';
            out += std::to_string(rows_[r][c]);
        }
    }
    return out;
}

ReverseStandardTableau::ReverseStandardTableau(Shape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    StackedGeometry geom = stacked_geometry(shape_);
    n_ = geom.cells;
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    if (rows_.size() != geom.rows.size())
        throw std::invalid_argument("reverse tableau: row count does not match the shape");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (static_cast<int>(rows_[r].size()) != geom.rows[r].length)
            throw std::invalid_argument("reverse tableau: row length does not match the shape");
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            int v = rows_[r][c];
            if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("reverse tableau: entries must be a bijection with 1..n");
            seen[static_cast<std::size_t>(v)] = true;
            if (c > 0 && rows_[r][c - 1] <= v)
                throw std::invalid_argument("reverse tableau: rows must strictly decrease");
            if (!geom.rows[r].first_of_block && rows_[r - 1][c] <= v)
                throw std::invalid_argument("reverse tableau: columns must strictly decrease");
        }
    }
}

namespace {

std::vector<std::vector<int>> complement_rows(const std::vector<std::vector<int>>& rows, int n) {
    std::vector<std::vector<int>> out = rows;
    for (auto& row : out)
        for (int& v : row) v = n + 1 - v;
    return out;
}

}  // namespace

ReverseStandardTableau complement(const StandardTableau& t) {
    return ReverseStandardTableau(t.shape(), complement_rows(t.rows(), t.n()));
}

StandardTableau complement(const ReverseStandardTableau& t) {
    return StandardTableau(t.shape(), complement_rows(t.rows(), t.n()));
}

DescentData descent_data(const StandardTableau& t) {
    DescentData data;
    for (int i = 1; i < t.n(); ++i)
        if (t.row_of(i + 1) > t.row_of(i)) {
            data.descents.push_back(i);
            data.maj += i;
        }
    return data;
}

void for_each_syt(const Shape& shape, const std::function<bool(const StandardTableau&)>& visit) {
    StackedGeometry geom = stacked_geometry(shape);
    int n = geom.cells;
    std::size_t row_count = geom.rows.size();
    std::vector<std::vector<int>> rows(row_count);
    for (std::size_t r = 0; r < row_count; ++r)
        rows[r].reserve(static_cast<std::size_t>(geom.rows[r].length));
    std::vector<int> fill(row_count, 0);

    bool stopped = false;
    std::function<void(int)> place = [&](int value) {
        if (stopped) return;
        if (value > n) {
            if (!visit(StandardTableau::unchecked(shape, rows))) stopped = true;
            return;
        }
        for (std::size_t r = 0; r < row_count && !stopped; ++r) {
            if (fill[r] >= geom.rows[r].length) continue;
            if (!geom.rows[r].first_of_block && fill[r - 1] <= fill[r]) continue;
            rows[r].push_back(value);
            ++fill[r];
            place(value + 1);
            --fill[r];
            rows[r].pop_back();
        }
    };
    place(1);
}

std::vector<StandardTableau> enumerate_syt(const Shape& shape) {
    std::vector<StandardTableau> out;
    for_each_syt(shape, [&out](const StandardTableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::vector<ReverseStandardTableau> enumerate_rsyt(const Shape& shape) {
    std::vector<ReverseStandardTableau> out;
    for_each_syt(shape, [&out](const StandardTableau& t) {
        out.push_back(complement(t));
        return true;
    });
    return out;
}

mpz_class hook_length_count(const Partition& p) {
    mpz_class numerator;
    mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(p.cells()));
    for (int h : hook_lengths(p)) mpz_divexact_ui(numerator.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(h));
    return numerator;
}

QPolynomial brute_force_maj_gf(const Shape& shape, int cap) {
    int n = shape_cells(shape);
    if (n > cap)
        throw std::invalid_argument("brute_force_maj_gf: shape exceeds the enumeration cap");
    std::size_t max_maj = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<mpz_class> counts(max_maj + 1);
    for_each_syt(shape, [&counts](const StandardTableau& t) {
        counts[static_cast<std::size_t>(descent_data(t).maj)] += 1;
        return true;
    });
    return QPolynomial(std::move(counts));
}

namespace {

mpz_class int_pow(long long base, int exp) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return out;
}

// Complete homogeneous sum Σ_{a+b=d} x^a y^b.
mpz_class homogeneous_sum(long long x, long long y, int d) {
    mpz_class sum = 0;
    for (int a = 0; a <= d; ++a) sum += int_pow(x, a) * int_pow(y, d - a);
    return sum;
}

}  // namespace

RsytBoundReport verify_rsyt_hook_bound(const Shape& shape, int d_min, int d_max, int cap) {
    if (d_min < 1 || d_max < d_min)
        throw std::invalid_argument("verify_rsyt_hook_bound: bad degree range");
    int n = shape_cells(shape);
    if (n > cap)
        throw std::invalid_argument("verify_rsyt_hook_bound: shape exceeds the enumeration cap");
    std::vector<std::vector<int>> hooks = hook_grid(shape);

    std::vector<mpz_class> power_sums(static_cast<std::size_t>(d_max) + 1);
    for (int d = d_min; d <= d_max; ++d) {
        for (int j = 1; j <= n; ++j) power_sums[static_cast<std::size_t>(d)] += int_pow(j, d);
        for (const auto& row : hooks)
            for (int h : row) power_sums[static_cast<std::size_t>(d)] -= int_pow(h, d);
    }

    RsytBoundReport report;
    for_each_syt(shape, [&](const StandardTableau& t) {
        ++report.tableaux_checked;
        const auto& rows = t.rows();
        for (std::size_t r = 0; r < rows.size() && report.holds; ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                int value = t.n() + 1 - rows[r][c];  // reverse tableau entry
                if (value < hooks[r][c]) {
                    report.holds = false;
                    report.falsified = "entry below hook length at row " + std::to_string(r + 1) +
                                       ", col " + std::to_string(c + 1);
                    break;
                }
            }
        for (int d = d_min; d <= d_max && report.holds; ++d) {
            mpz_class direct = 0, telescoped = 0;
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < rows[r].size(); ++c) {
                    long long value = t.n() + 1 - rows[r][c];
                    long long hook = hooks[r][c];
                    direct += int_pow(value, d) - int_pow(hook, d);
                    telescoped += mpz_class(static_cast<long>(value - hook)) *
                                  homogeneous_sum(value, hook, d - 1);
                }
            if (direct != power_sums[static_cast<std::size_t>(d)] || telescoped != direct) {
                report.holds = false;
                report.falsified = "power-sum identity failed at d = " + std::to_string(d);
            }
        }
        return report.holds;
    });
    return report;
}

}  // namespace sytmaj
