#pragma once

#include "gridcover/lattice.hpp"

namespace gridcover {

// The five diagonal-coloring families that produce lattice codes.
enum class CodeFamily { Coloring1 = 1, Coloring2, Coloring3, Coloring4, Coloring5 };

enum class Coloring5Variant { TwoPeriodic, ThreePeriodic };

const char* code_family_name(CodeFamily f);

struct FamilySpec {
    CodeFamily family = CodeFamily::Coloring1;
    int r = 2;
    Coloring5Variant variant = Coloring5Variant::TwoPeriodic; // Coloring5 only

    void validate() const;
    // Cycle length the family folds onto at this radius.
    int period() const;
};

// The folded cycle the family lives on, with concrete integer weights.
// Always computed as fold_profile(project_ball(r, 1), period()) and then
// checked against the matching family word; never transcribed from a table.
WeightedCycle family_cycle(const FamilySpec& spec);

struct CodeTableRow {
    CodeFamily family = CodeFamily::Coloring1;
    std::optional<Coloring5Variant> variant;
    int r = 0;
    std::optional<int> alpha;
    std::int64_t a = 0;
    std::int64_t b = 0;
    bool in_scope = false; // |a - b| > 4
};

// Every (a, b) row realized by the five families at radius r, derived by
// instantiating the cycle classification on each family's folded cycle.
std::vector<CodeTableRow> theorem_table(int r);

struct CodePreset {
    enum class Kind { InitialBlock, Alternate, HalfBlack, ThreePattern, Explicit };

    Kind kind = Kind::InitialBlock;
    int alpha = 0;       // InitialBlock block index / ThreePattern black count - 1
    Coloring explicit_coloring;

    static CodePreset initial_block(int alpha) { return {Kind::InitialBlock, alpha, {}}; }
    static CodePreset alternate() { return {Kind::Alternate, 0, {}}; }
    static CodePreset half_black() { return {Kind::HalfBlack, 0, {}}; }
    static CodePreset three_pattern(int alpha) { return {Kind::ThreePattern, alpha, {}}; }
    static CodePreset explicit_pattern(Coloring c) { return {Kind::Explicit, 0, std::move(c)}; }
};

struct GeneratedCode {
    PeriodicColoring coloring;
    WeightedCycle cycle;
    // Cycle-side constants of the validated pattern.
    std::optional<std::int64_t> a;
    std::optional<std::int64_t> b;
};

// Builds the preset's line pattern, proves it constant on the family's folded
// cycle (rejecting otherwise with the witness in the error message), and
// wraps it as a plane coloring.
GeneratedCode generate_code(const FamilySpec& spec, const CodePreset& preset,
                            Orientation orientation);

struct PipelineRow {
    CodeTableRow row;
    bool verified = false;
    std::optional<std::int64_t> observed_a;
    std::optional<std::int64_t> observed_b;
    std::optional<CodeReport::Violation> violation;
};

struct PipelineReport {
    int r = 0;
    std::vector<PipelineRow> rows;
    bool all_verified = false;
};

// For every table row at radius r: generate the representative code, verify
// it on the lattice, and compare against the derived (a, b).
PipelineReport end_to_end(int r);

// The representative preset used for a table row by end_to_end.
CodePreset row_preset(const CodeTableRow& row);

// The FamilySpec a table row belongs to.
FamilySpec row_family_spec(const CodeTableRow& row);

} // namespace gridcover
