#include "sytmaj/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sytmaj {

namespace {

int parse_int(std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw std::invalid_argument("partition: bad integer '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t at = text.find(sep, start);
        if (at == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, at - start));
        start = at + 1;
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
        cells_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    if (text.empty()) return Partition{};
    std::vector<int> parts;
    for (std::string_view token : split(text, ',')) parts.push_back(parse_int(token));
    return Partition(std::move(parts));
}

bool Partition::is_rectangle() const {
    return !parts_.empty() && parts_.front() == parts_.back();
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

BlockDiagonalShape::BlockDiagonalShape(std::vector<Partition> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty())
        throw std::invalid_argument("block diagonal shape: needs at least one block");
    for (const Partition& b : blocks_) {
        if (b.empty())
            throw std::invalid_argument("block diagonal shape: blocks must be nonempty");
        cells_ += b.cells();
    }
}

BlockDiagonalShape BlockDiagonalShape::parse(std::string_view text) {
    std::vector<Partition> blocks;
    for (std::string_view token : split(text, '/')) blocks.push_back(Partition::parse(token));
    return BlockDiagonalShape(std::move(blocks));
}

std::string BlockDiagonalShape::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += '/';
        out += blocks_[i].to_string();
    }
    return out;
}

Shape parse_shape(std::string_view text) {
    if (text.find('/') == std::string_view::npos) return Partition::parse(text);
    return BlockDiagonalShape::parse(text);
}

std::string shape_to_string(const Shape& shape) {
    return std::visit([](const auto& s) { return s.to_string(); }, shape);
}

int shape_cells(const Shape& shape) {
    return std::visit([](const auto& s) { return s.cells(); }, shape);
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition{};
    std::vector<int> cols(static_cast<std::size_t>(p.part(0)));
    for (int j = 0; j < p.part(0); ++j) {
        int count = 0;
        for (int part : p.parts())
            if (part > j) ++count;
        cols[static_cast<std::size_t>(j)] = count;
    }
    return Partition(std::move(cols));
}

int hook_length_at(const Partition& p, Cell c) {
    Partition conj = conjugate(p);
    return p.part(c.row - 1) + conj.part(c.col - 1) - c.row - c.col + 1;
}

std::vector<int> hook_lengths(const Partition& p) {
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(p.cells()));
    Partition conj = conjugate(p);
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.part(i); ++j)
            hooks.push_back(p.part(i) + conj.part(j) - i - j - 1);
    std::sort(hooks.begin(), hooks.end());
    return hooks;
}

std::vector<int> hook_lengths(const BlockDiagonalShape& s) {
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(s.cells()));
    for (const Partition& b : s.blocks()) {
        std::vector<int> block = hook_lengths(b);
        hooks.insert(hooks.end(), block.begin(), block.end());
    }
    std::sort(hooks.begin(), hooks.end());
    return hooks;
}

std::vector<int> hook_lengths(const Shape& shape) {
    return std::visit([](const auto& s) { return hook_lengths(s); }, shape);
}

long long b_stat(const Partition& p) {
    long long sum = 0;
    for (int i = 0; i < p.rows(); ++i) sum += static_cast<long long>(i) * p.part(i);
    return sum;
}

long long b_stat(const BlockDiagonalShape& s) {
    long long sum = 0;
    for (const Partition& b : s.blocks()) sum += b_stat(b);
    return sum;
}

long long b_stat(const Shape& shape) {
    return std::visit([](const auto& s) { return b_stat(s); }, shape);
}

int aft(const Partition& p) {
    if (p.empty()) return 0;
    return p.cells() - std::max(p.part(0), p.rows());
}

int aft(const BlockDiagonalShape& s) {
    int longest = 0;
    for (const Partition& b : s.blocks())
        longest = std::max(longest, std::max(b.part(0), b.rows()));
    return s.cells() - longest;
}

int aft(const Shape& shape) {
    return std::visit([](const auto& s) { return aft(s); }, shape);
}

int corner_count(const Partition& p) {
    int corners = 0;
    for (int i = 0; i < p.rows(); ++i)
        if (i + 1 == p.rows() || p.part(i) > p.part(i + 1)) ++corners;
    return corners;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> extend = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition(current));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            extend(remaining - part, part);
            current.pop_back();
        }
    };
    extend(n, std::max(n, 1));
    return out;
}

}  // namespace sytmaj
