#pragma once

#include "gridcover/label_core.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gridcover {

enum class Family {
    Type1 = 1, // z x^(p-1)
    Type2,     // z x^((p-2)/2) t x^((p-2)/2)
    Type3,     // z (xy)^((p-1)/2)
    Type4,     // z (xy)^((p-2)/2) x
    Type5,     // z (xy)^((p-1)/4) (yx)^((p-1)/4)
    Type6,     // z (xy)^((p-3)/4) x x (yx)^((p-3)/4)
    Type7,     // z (xy)^((p-2)/4) t (yx)^((p-2)/4)
    Type8,     // z (xy)^((p-4)/4) x t x (yx)^((p-4)/4)
};

const char* family_name(Family f);

// Which cycle to build: a family word, a length, and a weight mode.
struct CycleSpec {
    Family family = Family::Type1;
    int p = 2;
    // Concrete (z,x,y,t) values; unset means symbolic weights.
    std::optional<std::array<Rational, kSymbolCount>> concrete;
    // Type 8 only: impose t = (p/4)x + (1-p/4)y.
    bool special_t = false;

    void validate() const; // throws std::invalid_argument naming the constraint
    // Distinctness hypotheses of the family word (x!=y etc.).
    std::vector<std::pair<Symbol, Symbol>> inequations() const;
    // The family word as a symbol per vertex.
    std::vector<Symbol> word() const;
};

struct WeightedCycle {
    int p = 0;
    VertexWeighting weights;
    std::optional<CycleSpec> origin;
};

WeightedCycle build_cycle(const CycleSpec& spec);

// The k-rotation i -> i+k mod p.
Automorphism rotation(int p, int k);

// Instance with A = {R_0..R_(p-1)}, base vertex 0, and the origin spec's
// relations (inequations, plus the special-t relation when set).
LabellingInstance rotation_instance(const WeightedCycle& cycle);

// How a predicted row's realizing colorings look, per the structure lemmas.
enum class RowStructure {
    Any,              // only the black count is constrained
    Periodic,         // m-periodic with a fixed black count
    Antiperiodic,     // m-antiperiodic
    Alternate,        // 1-antiperiodic, p even
    ThreePeriodic,    // 3-periodic with a fixed black count
    Balanced,         // non-alternate; per rotation, black x-count tracks y-count
    BalancedPeriodic, // p/2-periodic variant of Balanced with offset 2
    Psi,              // some rotation: evens all black, odd diametral pairs opposite
    PsiComplement,    // complement is in the Psi family
};

const char* row_structure_name(RowStructure s);

// One row of the classification table, instantiated at a concrete p (and,
// for concrete-weight specs, evaluated to numbers).
struct PredictedRow {
    WeightExpr a;
    WeightExpr b;
    std::optional<int> alpha;
    RowStructure structure = RowStructure::Any;
    int period = 0;       // for Periodic / Antiperiodic
    int black_count = -1; // -1 = unconstrained
    long long count = 0;  // number of realizing colorings (0 if not computed)
    std::string note;     // set where the row deviates from the published table
};

// The classification rows for the spec's family at its p, reduced under the
// spec's relations and filtered by side conditions (Types 5/6 need p % 3 == 0;
// Type 8 Psi rows need special_t). Counts are computed unless disabled.
std::vector<PredictedRow> predicted_rows(const CycleSpec& spec, bool with_counts = true);

// Does the coloring fit the row's structural description?
bool row_structure_matches(const CycleSpec& spec, const PredictedRow& row, const Coloring& c);

struct PatternClass {
    std::vector<int> periods;     // all m in 1..p with m-periodicity
    std::vector<int> antiperiods; // all m in 1..p with m-antiperiodicity
    bool is_alternate = false;
};

PatternClass pattern_class(const Coloring& c);

// Enumeration vs table, for one spec.
struct CrossCheckEntry {
    WeightExpr a;
    WeightExpr b;
    long long found_count = 0;
    long long predicted_count = 0;
    bool structure_ok = true; // every realizing coloring fits some contributing row
};

struct CrossCheckReport {
    CycleSpec spec;
    std::vector<CrossCheckEntry> entries; // sorted by (a,b)
    bool match = false;
    std::vector<std::string> notes;     // table deviations carried by the rows
    std::vector<std::string> witnesses; // human-readable discrepancy descriptions
};

CrossCheckReport cross_check(const CycleSpec& spec, int bound = kDefaultEnumerationBound);

// All (family, p) pairs valid for cross-checking with p <= p_max.
std::vector<CycleSpec> all_specs_up_to(int p_max, bool include_special_t = true);

long long binomial(int n, int k);

} // namespace gridcover
