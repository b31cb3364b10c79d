#pragma once

#include "gridcover/cycles.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace gridcover {

// Number of cells within Manhattan distance r of a fixed cell: 2r^2 + 2r + 1.
std::int64_t manhattan_ball_size(int r);

// Coverage counts h(i) of line positions (i, 0) by the translates of a ball
// B_r under multiples of the diagonal step (shift, 1).
struct ProjectionProfile {
    int r = 0;
    int shift = 0;
    std::map<int, std::int64_t> values; // only nonzero entries

    std::int64_t at(int i) const;
    std::int64_t total() const;
    int min_index() const;
    int max_index() const;
};

// h(i) = #{m in [-r, r] : |i - m*shift| + |m| <= r}, counted directly.
ProjectionProfile project_ball(int r, int shift);

// The shift-1 profile in closed form: r+1 on one parity of [-r, r], r on the
// other (which parity gets r+1 follows the parity of r). Equals
// project_ball(r, 1).
ProjectionProfile closed_form_profile(int r);

// Wrap the profile onto a cycle of length p: w(i) = sum over k of h(i + kp).
WeightedCycle fold_profile(const ProjectionProfile& profile, int p);

// One period of the coloring along a line.
struct LinePattern {
    int p = 0;
    Coloring colors;

    LinePattern() = default;
    LinePattern(Coloring c) : p(c.size()), colors(std::move(c)) {}
};

enum class Orientation { Parallel, Crossed };

const char* orientation_name(Orientation o);

// A coloring of Z^2 built from a line pattern repeated along diagonals.
// Parallel: color depends on (x1 - x2) mod p everywhere. Crossed: the even
// sublattice follows (x1 - x2) mod p, the odd sublattice (x1 + x2) mod p.
class PeriodicColoring {
public:
    PeriodicColoring() = default;
    PeriodicColoring(LinePattern pattern, Orientation orientation);

    const LinePattern& pattern() const { return pattern_; }
    Orientation orientation() const { return orientation_; }
    bool black(std::int64_t x1, std::int64_t x2) const;
    // Two independent vectors under which the coloring is invariant.
    std::array<std::array<int, 2>, 2> period_vectors() const;
    // Cells to scan so that every cell of Z^2 is a translate of one of them.
    std::vector<std::array<int, 2>> fundamental_domain() const;

private:
    LinePattern pattern_;
    Orientation orientation_ = Orientation::Parallel;
};

PeriodicColoring build_diagonal_coloring(const LinePattern& pattern, Orientation orientation);

struct CodeReport {
    enum class Status { Verified, Violated };

    Status status = Status::Verified;
    std::optional<std::int64_t> a; // absent when no cell is black
    std::optional<std::int64_t> b; // absent when no cell is white
    struct Violation {
        std::array<std::int64_t, 2> cell;
        bool center_black = false;
        std::int64_t expected = 0;
        std::int64_t observed = 0;
    };
    std::optional<Violation> violation; // lexicographically least violating cell

    bool verified() const { return status == Status::Verified; }
};

// Checks whether the black cells form an (r, a, b)-code: every radius-r ball
// centered on a black cell must contain the same number a of black cells, and
// every ball centered on a white cell the same number b.
CodeReport verify_code(const PeriodicColoring& coloring, int r);

// Black cells of B_r(c) for a given center, by direct offset scan.
std::int64_t ball_black_count(const PeriodicColoring& coloring, std::int64_t x1, std::int64_t x2,
                              int r);

} // namespace gridcover
