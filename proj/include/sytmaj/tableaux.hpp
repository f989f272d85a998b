#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sytmaj/qpoly.hpp"
#include "sytmaj/shapes.hpp"

namespace sytmaj {

/// Row geometry of a straight or block diagonal shape in its stacked drawing.
/// Rows are 0-based top to bottom; columns within a block are left-aligned at
/// the block's offset.
struct StackedGeometry {
    struct Row {
        int block = 0;
        int length = 0;
        int offset = 0;  // leftmost absolute column, 0-based
        bool first_of_block = true;
    };
    std::vector<Row> rows;
    int cells = 0;
};

StackedGeometry stacked_geometry(const Shape& shape);

/// Per-cell hook lengths laid out like the stacked rows.
std::vector<std::vector<int>> hook_grid(const Shape& shape);

/// Bijective filling by 1..n, strictly increasing along rows and columns
/// within each block.
class StandardTableau {
public:
    /// Validates the filling; throws std::invalid_argument if it is not a
    /// standard tableau of the shape.
    StandardTableau(Shape shape, std::vector<std::vector<int>> rows);

    static StandardTableau unchecked(Shape shape, std::vector<std::vector<int>> rows);

    const Shape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int n() const { return n_; }

    /// 0-based stacked row of a value.
    int row_of(int value) const { return row_of_[static_cast<std::size_t>(value)]; }
    /// 0-based absolute column of a value.
    int col_of(int value) const { return col_of_[static_cast<std::size_t>(value)]; }

    /// Row word "1 2 3|4 5" with rows joined by '|'.
    std::string to_string() const;

    bool operator==(const StandardTableau& other) const { return rows_ == other.rows_; }
    bool operator<(const StandardTableau& other) const { return rows_ < other.rows_; }

private:
    StandardTableau() = default;
    void index_values();

    Shape shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_of_, col_of_;
    int n_ = 0;
};

/// Bijective filling strictly decreasing along rows and columns.
class ReverseStandardTableau {
public:
    ReverseStandardTableau(Shape shape, std::vector<std::vector<int>> rows);
    const Shape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int n() const { return n_; }

private:
    Shape shape_;
    std::vector<std::vector<int>> rows_;
    int n_ = 0;
};

/// Values v ↦ n+1−v; a bijection between SYT and RSYT of the same shape.
ReverseStandardTableau complement(const StandardTableau& t);
StandardTableau complement(const ReverseStandardTableau& t);

struct DescentData {
    std::vector<int> descents;  // i with i+1 strictly lower, ascending
    long long maj = 0;
};

DescentData descent_data(const StandardTableau& t);

inline constexpr int kDefaultEnumerationCap = 16;

/// Visits every SYT of the shape exactly once, ordered lexicographically by
/// the row sequence of the values 1..n. Return false from the visitor to stop.
void for_each_syt(const Shape& shape, const std::function<bool(const StandardTableau&)>& visit);

std::vector<StandardTableau> enumerate_syt(const Shape& shape);
std::vector<ReverseStandardTableau> enumerate_rsyt(const Shape& shape);

/// SYT count by the hook length formula (straight shapes).
mpz_class hook_length_count(const Partition& p);

/// Coefficient of q^k counts tableaux with maj = k. Throws
/// std::invalid_argument when the shape exceeds the enumeration cap.
QPolynomial brute_force_maj_gf(const Shape& shape, int cap = kDefaultEnumerationCap);

struct RsytBoundReport {
    bool holds = true;
    long long tableaux_checked = 0;
    std::string falsified;  // first failing instance, empty when holds
};

/// Checks T_c ≥ h_c on every reverse tableau, and for each d in [d_min, d_max]
/// the telescoping identity Σ j^d − Σ h_c^d = Σ (T_c^d − h_c^d)
/// = Σ (T_c − h_c)·h̄_{d−1}(T_c, h_c) with h̄ the complete homogeneous sum.
RsytBoundReport verify_rsyt_hook_bound(const Shape& shape, int d_min, int d_max,
                                       int cap = kDefaultEnumerationCap);

}  // namespace sytmaj
