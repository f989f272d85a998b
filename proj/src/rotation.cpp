#include "sytmaj/rotation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace sytmaj {

namespace {

struct Pos {
    int row = 0;
    int col = 0;
};

// Flat view of a straight-shape tableau for fast candidate tests.
struct View {
    const StandardTableau* t = nullptr;
    int n = 0;
    std::vector<Pos> pos;  // pos[v] for v in 1..n
    const std::vector<std::vector<int>>* rows = nullptr;
};

View make_view(const StandardTableau& t) {
    if (!std::holds_alternative<Partition>(t.shape()))
        throw std::invalid_argument("rotations are defined for straight shapes only");
    View v;
    v.t = &t;
    v.n = t.n();
    v.rows = &t.rows();
    v.pos.resize(static_cast<std::size_t>(v.n) + 1);
    for (int value = 1; value <= v.n; ++value)
        v.pos[static_cast<std::size_t>(value)] = {t.row_of(value), t.col_of(value)};
    return v;
}

bool in_bounding_rect(Pos p, Pos a, Pos b) {
    return p.row >= std::min(a.row, b.row) && p.row <= std::max(a.row, b.row) &&
           p.col >= std::min(a.col, b.col) && p.col <= std::max(a.col, b.col);
}

bool strictly_northeast(Pos a, Pos b) { return a.row < b.row && a.col > b.col; }

// No two cells of the value range [a, b] share a column.
bool horizontal_strip(const View& v, int a, int b) {
    for (int x = a; x <= b; ++x)
        for (int y = x + 1; y <= b; ++y)
            if (v.pos[static_cast<std::size_t>(x)].col == v.pos[static_cast<std::size_t>(y)].col)
                return false;
    return true;
}

// Figure conditions for a positive rotation with i < j < k.
bool positive_strip_conditions(const View& v, int i, int j, int k) {
    const auto& pos = v.pos;
    auto at = [&pos](int value) { return pos[static_cast<std::size_t>(value)]; };
    if (!horizontal_strip(v, i, j - 1)) return false;
    if (at(j - 1).row == at(j).row) return false;  // j−1, j must form a vertical strip
    if (!horizontal_strip(v, j, k)) return false;
    if (!strictly_northeast(at(i), at(k))) return false;
    if (i > 1 && in_bounding_rect(at(i - 1), at(i), at(k))) return false;
    if (!strictly_northeast(at(k), at(k - 1))) return false;
    if (k < v.n && in_bounding_rect(at(k + 1), at(k), at(k - 1))) return false;
    return true;
}

// Relabeled value of w under the cycle on [i, k].
inline int relabeled(RotationKind kind, int i, int k, int w) {
    if (w < i || w > k) return w;
    if (kind == RotationKind::Positive) return w == k ? i : w + 1;
    return w == i ? k : w - 1;
}

// Row of value w after the rotation (the cell holding w in the result).
inline int row_after(const View& v, RotationKind kind, int i, int k, int w) {
    if (w < i || w > k) return v.pos[static_cast<std::size_t>(w)].row;
    int source;  // value whose cell receives w
    if (kind == RotationKind::Positive)
        source = (w == i) ? k : w - 1;
    else
        source = (w == k) ? i : w + 1;
    return v.pos[static_cast<std::size_t>(source)].row;
}

// Tests the cycle on [i, k]: result must be a standard tableau whose descent
// set gains exactly one j and loses j−1, with i ≤ j ≤ k. Returns j.
std::optional<int> try_rotation(const View& v, RotationKind kind, int i, int k) {
    const auto& rows = *v.rows;
    // Only cells holding values in [i, k] change; check their neighborhoods.
    for (int w = i; w <= k; ++w) {
        Pos p = v.pos[static_cast<std::size_t>(w)];
        int nv = relabeled(kind, i, k, w);
        if (p.col > 0 && relabeled(kind, i, k, rows[static_cast<std::size_t>(p.row)][static_cast<std::size_t>(p.col - 1)]) >= nv)
            return std::nullopt;
        if (p.col + 1 < static_cast<int>(rows[static_cast<std::size_t>(p.row)].size()) &&
            relabeled(kind, i, k, rows[static_cast<std::size_t>(p.row)][static_cast<std::size_t>(p.col + 1)]) <= nv)
            return std::nullopt;
        if (p.row > 0 && relabeled(kind, i, k, rows[static_cast<std::size_t>(p.row - 1)][static_cast<std::size_t>(p.col)]) >= nv)
            return std::nullopt;
        if (p.row + 1 < static_cast<int>(rows.size()) &&
            p.col < static_cast<int>(rows[static_cast<std::size_t>(p.row + 1)].size()) &&
            relabeled(kind, i, k, rows[static_cast<std::size_t>(p.row + 1)][static_cast<std::size_t>(p.col)]) <= nv)
            return std::nullopt;
    }
    // Descents can change only at positions touching the relabeled window.
    int lo = std::max(1, i - 1);
    int hi = std::min(v.n - 1, k);
    int added = -1, removed = -1;
    for (int p = lo; p <= hi; ++p) {
        bool was = v.pos[static_cast<std::size_t>(p + 1)].row > v.pos[static_cast<std::size_t>(p)].row;
        bool now = row_after(v, kind, i, k, p + 1) > row_after(v, kind, i, k, p);
        if (now && !was) {
            if (added != -1) return std::nullopt;
            added = p;
        } else if (was && !now) {
            if (removed != -1) return std::nullopt;
            removed = p;
        }
    }
    if (added == -1 || removed != added - 1) return std::nullopt;
    int j = added;
    if (j < i || j > k) return std::nullopt;
    if (kind == RotationKind::Positive && i < j && j < k && !positive_strip_conditions(v, i, j, k))
        return std::nullopt;
    return j;
}

StandardTableau apply_rotation(const View& v, RotationKind kind, int i, int k) {
    std::vector<std::vector<int>> rows = *v.rows;
    for (int w = i; w <= k; ++w) {
        Pos p = v.pos[static_cast<std::size_t>(w)];
        rows[static_cast<std::size_t>(p.row)][static_cast<std::size_t>(p.col)] = relabeled(kind, i, k, w);
    }
    return StandardTableau::unchecked(v.t->shape(), std::move(rows));
}

std::vector<RotationWitness> collect_rotations(const StandardTableau& t, RotationKind kind) {
    View v = make_view(t);
    std::vector<RotationWitness> out;
    for (int i = 1; i < v.n; ++i)
        for (int k = i + 1; k <= v.n; ++k)
            if (std::optional<int> j = try_rotation(v, kind, i, k))
                out.push_back({kind, i, *j, k, apply_rotation(v, kind, i, k)});
    std::sort(out.begin(), out.end(), [](const RotationWitness& a, const RotationWitness& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    return out;
}

bool any_rotation(const StandardTableau& t) {
    View v = make_view(t);
    for (RotationKind kind : {RotationKind::Positive, RotationKind::Negative})
        for (int i = 1; i < v.n; ++i)
            for (int k = i + 1; k <= v.n; ++k)
                if (try_rotation(v, kind, i, k)) return true;
    return false;
}

FixedPointHint classify_fixed_point(const StandardTableau& t) {
    const Partition& p = std::get<Partition>(t.shape());
    long long n = p.cells();
    long long maj = descent_data(t).maj;
    long long max_maj = n * (n - 1) / 2 - b_stat(conjugate(p));
    if (maj == max_maj) return FixedPointHint::MaxMaj;
    bool proper_rectangle = p.is_rectangle() && p.rows() >= 2 && p.part(0) >= 2;
    if (p.is_rectangle() && maj == b_stat(p)) return FixedPointHint::RectangleMin;
    if (proper_rectangle && maj == max_maj - 2) return FixedPointHint::RectangleSubmax;
    return FixedPointHint::Unclassified;
}

}  // namespace

const char* fixed_point_hint_name(FixedPointHint hint) {
    switch (hint) {
        case FixedPointHint::MaxMaj: return "max-maj";
        case FixedPointHint::RectangleMin: return "rectangle-min";
        case FixedPointHint::RectangleSubmax: return "rectangle-submax";
        case FixedPointHint::Unclassified: return "unclassified";
    }
    return "unclassified";
}

std::vector<RotationWitness> positive_rotations(const StandardTableau& t) {
    return collect_rotations(t, RotationKind::Positive);
}

std::vector<RotationWitness> negative_rotations(const StandardTableau& t) {
    return collect_rotations(t, RotationKind::Negative);
}

PhiOutcome phi(const StandardTableau& t) {
    PhiOutcome outcome;
    std::vector<RotationWitness> witnesses = positive_rotations(t);
    if (witnesses.empty()) witnesses = negative_rotations(t);
    if (!witnesses.empty()) {
        outcome.witness = std::move(witnesses.front());
        return outcome;
    }
    outcome.hint = classify_fixed_point(t);
    return outcome;
}

std::vector<StandardTableau> rotation_fixed_points(const Partition& p, int cap) {
    if (p.cells() > cap)
        throw std::invalid_argument("rotation_fixed_points: shape exceeds the enumeration cap");
    std::vector<StandardTableau> fixed;
    for_each_syt(Shape(p), [&fixed](const StandardTableau& t) {
        if (!any_rotation(t)) fixed.push_back(t);
        return true;
    });
    return fixed;
}

RankedIncrementReport verify_ranked_increment(const Partition& p, int cap) {
    if (p.cells() > cap)
        throw std::invalid_argument("verify_ranked_increment: shape exceeds the enumeration cap");
    RankedIncrementReport report;

    std::map<long long, long long> counts;
    std::map<long long, long long> fixed;
    std::map<long long, std::vector<std::vector<std::vector<int>>>> images;  // by target level
    for_each_syt(Shape(p), [&](const StandardTableau& t) {
        ++report.tableaux;
        long long maj = descent_data(t).maj;
        ++counts[maj];
        PhiOutcome out = phi(t);
        if (out.fixed()) {
            ++fixed[maj];
            ++report.fixed_total;
        } else {
            long long target = descent_data(out.witness->result).maj;
            if (target != maj + 1) report.all_increments_valid = false;
            images[target].push_back(out.witness->result.rows());
        }
        return true;
    });

    for (auto& [maj, count] : counts) {
        LevelSummary level;
        level.maj = maj;
        level.count = count;
        if (auto it = fixed.find(maj); it != fixed.end()) level.fixed_count = it->second;
        if (auto it = images.find(maj + 1); it != images.end()) {
            auto& targets = it->second;
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            level.images_into_next = static_cast<long long>(targets.size());
        }
        auto next = counts.find(maj + 1);
        level.next_fully_covered = next != counts.end() && level.images_into_next == next->second;
        report.levels.push_back(level);
    }
    return report;
}

std::string phi_graph_dot(const Partition& p, int cap) {
    if (p.cells() > cap)
        throw std::invalid_argument("phi_graph_dot: shape exceeds the enumeration cap");
    std::vector<StandardTableau> all = enumerate_syt(Shape(p));
    std::map<std::vector<std::vector<int>>, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) index[all[i].rows()] = i;

    std::string dot = "digraph phi {\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
        PhiOutcome out = phi(all[i]);
        dot += "  t" + std::to_string(i) + " [label=\"" + all[i].to_string() + "\"";
        if (out.fixed()) {
            dot += ", shape=box, xlabel=\"";
            dot += fixed_point_hint_name(out.hint);
            dot += "\"";
        }
        dot += "];\n";
        if (!out.fixed())
            dot += "  t" + std::to_string(i) + " -> t" +
                   std::to_string(index.at(out.witness->result.rows())) + ";\n";
    }
    dot += "}\n";
    return dot;
}

}  // namespace sytmaj
