#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sytmaj {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (zero cells) is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses "5,4,4,2"; the empty string yields the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int cells() const { return cells_; }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

    /// At least one part and all parts equal.
    bool is_rectangle() const;

    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int cells_ = 0;
};

/// Disjoint straight blocks stacked corner to corner: block i+1 sits strictly
/// below and strictly left of block i, so blocks share no rows or columns.
class BlockDiagonalShape {
public:
    explicit BlockDiagonalShape(std::vector<Partition> blocks);

    /// Parses "3,1/2/1,1" (blocks joined by '/').
    static BlockDiagonalShape parse(std::string_view text);

    const std::vector<Partition>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int cells() const { return cells_; }

    std::string to_string() const;

    bool operator==(const BlockDiagonalShape&) const = default;

private:
    std::vector<Partition> blocks_;
    int cells_ = 0;
};

using Shape = std::variant<Partition, BlockDiagonalShape>;

/// Accepts either grammar; a string without '/' parses as a straight shape.
Shape parse_shape(std::string_view text);
std::string shape_to_string(const Shape& shape);
int shape_cells(const Shape& shape);

/// 1-based cell coordinates.
struct Cell {
    int row = 1;
    int col = 1;
    bool operator==(const Cell&) const = default;
};

Partition conjugate(const Partition& p);

/// Hook length multiset, sorted ascending. Blocks contribute the union of
/// their straight-shape hooks.
std::vector<int> hook_lengths(const Partition& p);
std::vector<int> hook_lengths(const BlockDiagonalShape& s);
std::vector<int> hook_lengths(const Shape& shape);

/// Hook length of one cell: arm + leg + 1.
int hook_length_at(const Partition& p, Cell c);

/// b(λ) = Σ (i−1)λ_i; the minimum major index over SYT(λ).
long long b_stat(const Partition& p);
/// Minimum major index over the stacked shape: the blocks' b-statistics add.
long long b_stat(const BlockDiagonalShape& s);
long long b_stat(const Shape& shape);

/// Cells outside the longest row or column: |λ| − max(λ₁, λ′₁).
int aft(const Partition& p);
int aft(const BlockDiagonalShape& s);
int aft(const Shape& shape);

/// Number of distinct part values (removable corners).
int corner_count(const Partition& p);

/// All partitions of n in lexicographically decreasing order, (n) first.
std::vector<Partition> partitions_of(int n);

}  // namespace sytmaj
