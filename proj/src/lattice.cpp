#include "gridcover/lattice.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gridcover {

std::int64_t manhattan_ball_size(int r) {
    if (r < 0) throw std::invalid_argument("ball radius must be non-negative");
    const std::int64_t rr = r;
    return 2 * rr * rr + 2 * rr + 1;
}

std::int64_t ProjectionProfile::at(int i) const {
    const auto it = values.find(i);
    return it == values.end() ? 0 : it->second;
}

std::int64_t ProjectionProfile::total() const {
    std::int64_t sum = 0;
    for (const auto& [i, h] : values) sum += h;
    return sum;
}

int ProjectionProfile::min_index() const {
    return values.empty() ? 0 : values.begin()->first;
}

int ProjectionProfile::max_index() const {
    return values.empty() ? 0 : values.rbegin()->first;
}

ProjectionProfile project_ball(int r, int shift) {
    if (r < 1) throw std::invalid_argument("projection radius must be at least 1");
    if (shift < 0) throw std::invalid_argument("projection shift must be non-negative");
    ProjectionProfile profile;
    profile.r = r;
    profile.shift = shift;
    for (int i = -r * (shift + 1); i <= r * (shift + 1); ++i) {
        std::int64_t h = 0;
        for (int m = -r; m <= r; ++m)
            if (std::abs(i - m * shift) + std::abs(m) <= r) ++h;
        if (h > 0) profile.values[i] = h;
    }
    return profile;
}

ProjectionProfile closed_form_profile(int r) {
    if (r < 1) throw std::invalid_argument("projection radius must be at least 1");
    ProjectionProfile profile;
    profile.r = r;
    profile.shift = 1;
    for (int i = -r; i <= r; ++i) {
        const bool same_parity = (std::abs(i) % 2) == (r % 2);
        // The parity class of r itself gets the taller columns.
        profile.values[i] = same_parity ? r + 1 : r;
    }
    return profile;
}

WeightedCycle fold_profile(const ProjectionProfile& profile, int p) {
    if (p < 1) throw std::invalid_argument("fold length must be positive");
    std::vector<std::int64_t> w(p, 0);
    for (const auto& [i, h] : profile.values) w[((i % p) + p) % p] += h;
    WeightedCycle cycle;
    cycle.p = p;
    for (std::int64_t v : w) cycle.weights.weights.push_back(WeightExpr::constant(Rational(v)));
    return cycle;
}

const char* orientation_name(Orientation o) {
    return o == Orientation::Parallel ? "parallel" : "crossed";
}

PeriodicColoring::PeriodicColoring(LinePattern pattern, Orientation orientation)
    : pattern_(std::move(pattern)), orientation_(orientation) {
    if (pattern_.p < 1 || pattern_.colors.size() != pattern_.p)
        throw std::invalid_argument("line pattern must have a positive, consistent period");
}

bool PeriodicColoring::black(std::int64_t x1, std::int64_t x2) const {
    const std::int64_t p = pattern_.p;
    const std::int64_t diff = ((x1 - x2) % p + p) % p;
    if (orientation_ == Orientation::Parallel) return pattern_.colors.black(static_cast<int>(diff));
    if (((x1 + x2) % 2 + 2) % 2 == 0) return pattern_.colors.black(static_cast<int>(diff));
    const std::int64_t sum = ((x1 + x2) % p + p) % p;
    return pattern_.colors.black(static_cast<int>(sum));
}

std::array<std::array<int, 2>, 2> PeriodicColoring::period_vectors() const {
    const int p = pattern_.p;
    if (orientation_ == Orientation::Parallel) return {{{p, 0}, {1, 1}}};
    return {{{2 * p, 0}, {0, 2 * p}}};
}

std::vector<std::array<int, 2>> PeriodicColoring::fundamental_domain() const {
    std::vector<std::array<int, 2>> cells;
    const int p = pattern_.p;
    if (orientation_ == Orientation::Parallel) {
        for (int i = 0; i < p; ++i) cells.push_back({i, 0});
    } else {
        for (int x1 = 0; x1 < 2 * p; ++x1)
            for (int x2 = 0; x2 < 2 * p; ++x2) cells.push_back({x1, x2});
    }
    return cells;
}

PeriodicColoring build_diagonal_coloring(const LinePattern& pattern, Orientation orientation) {
    return PeriodicColoring(pattern, orientation);
}

std::int64_t ball_black_count(const PeriodicColoring& coloring, std::int64_t x1, std::int64_t x2,
                              int r) {
    std::int64_t count = 0;
    for (int d1 = -r; d1 <= r; ++d1) {
        const int span = r - std::abs(d1);
        for (int d2 = -span; d2 <= span; ++d2)
            if (coloring.black(x1 + d1, x2 + d2)) ++count;
    }
    return count;
}

CodeReport verify_code(const PeriodicColoring& coloring, int r) {
    if (r < 1) throw std::invalid_argument("code radius must be at least 1");
    CodeReport report;
    for (const auto& cell : coloring.fundamental_domain()) {
        const bool center_black = coloring.black(cell[0], cell[1]);
        const std::int64_t count = ball_black_count(coloring, cell[0], cell[1], r);
        auto& constant = center_black ? report.a : report.b;
        if (!constant) {
            constant = count;
        } else if (*constant != count) {
            report.status = CodeReport::Status::Violated;
            report.violation = CodeReport::Violation{
                {cell[0], cell[1]}, center_black, *constant, count};
            return report;
        }
    }
    return report;
}

} // namespace gridcover
