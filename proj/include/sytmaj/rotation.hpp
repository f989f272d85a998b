#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sytmaj/tableaux.hpp"

namespace sytmaj {

enum class RotationKind { Positive, Negative };

/// A valid rotation move: relabeling the entries by the cycle (i,…,k)
/// (positive) or (k,…,i) (negative) yields another standard tableau whose
/// descent set gains j and loses j−1, so maj goes up by exactly one.
struct RotationWitness {
    RotationKind kind = RotationKind::Positive;
    int i = 0, j = 0, k = 0;  // i ≤ j ≤ k
    StandardTableau result;
};

enum class FixedPointHint { MaxMaj, RectangleMin, RectangleSubmax, Unclassified };

const char* fixed_point_hint_name(FixedPointHint hint);

struct PhiOutcome {
    std::optional<RotationWitness> witness;  // empty for fixed points
    FixedPointHint hint = FixedPointHint::Unclassified;
    bool fixed() const { return !witness.has_value(); }
};

/// All positive-rotation witnesses, sorted by (i, j, k). Straight shapes only.
std::vector<RotationWitness> positive_rotations(const StandardTableau& t);
/// All negative-rotation witnesses, sorted by (i, j, k). Straight shapes only.
std::vector<RotationWitness> negative_rotations(const StandardTableau& t);

/// Lexicographically smallest positive witness if any, else smallest negative
/// witness, else a fixed point with a reason hint.
PhiOutcome phi(const StandardTableau& t);

/// All tableaux with no rotation, in enumeration order.
std::vector<StandardTableau> rotation_fixed_points(const Partition& p,
                                                   int cap = kDefaultEnumerationCap);

struct LevelSummary {
    long long maj = 0;
    long long count = 0;
    long long fixed_count = 0;
    long long images_into_next = 0;   // distinct φ-images one level up
    bool next_fully_covered = false;  // images reach every tableau at maj+1
};

struct RankedIncrementReport {
    bool all_increments_valid = true;
    long long tableaux = 0;
    long long fixed_total = 0;
    std::vector<LevelSummary> levels;
};

/// Sweeps the whole shape: confirms maj(φ(T)) = maj(T)+1 for every non-fixed
/// T and summarizes fixed points and level coverage.
RankedIncrementReport verify_ranked_increment(const Partition& p,
                                              int cap = kDefaultEnumerationCap);

/// Functional graph of φ in DOT format; fixed points are boxed and annotated.
std::string phi_graph_dot(const Partition& p, int cap = kDefaultEnumerationCap);

}  // namespace sytmaj
