#include "gridcover/codes.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gridcover {

const char* code_family_name(CodeFamily f) {
    switch (f) {
        case CodeFamily::Coloring1: return "coloring1";
        case CodeFamily::Coloring2: return "coloring2";
        case CodeFamily::Coloring3: return "coloring3";
        case CodeFamily::Coloring4: return "coloring4";
        case CodeFamily::Coloring5: return "coloring5";
    }
    return "?";
}

void FamilySpec::validate() const {
    if (r < 2) throw std::invalid_argument("code families are defined for r >= 2");
    if (family == CodeFamily::Coloring4 && (2 * r + 1) % 3 != 0)
        throw std::invalid_argument("coloring4 requires 2r+1 = 0 (mod 3)");
}

int FamilySpec::period() const {
    switch (family) {
        case CodeFamily::Coloring1: return r % 2 == 0 ? r + 1 : r;
        case CodeFamily::Coloring2: return r % 2 == 0 ? 2 * r : 2 * (r + 1);
        case CodeFamily::Coloring3: return r % 2 == 0 ? r : r + 1;
        case CodeFamily::Coloring4: return 2 * r + 1;
        case CodeFamily::Coloring5:
            return variant == Coloring5Variant::TwoPeriodic ? 2 : 3;
    }
    return 0;
}

namespace {

// Which cycle family the folded cycle instantiates. Degenerate small periods
// collapse to type 1 (every non-initial letter equal) or type 2.
Family cycle_family_for(const FamilySpec& spec, int p) {
    switch (spec.family) {
        case CodeFamily::Coloring1: return Family::Type1;
        case CodeFamily::Coloring2: return p == 4 ? Family::Type2 : Family::Type8;
        case CodeFamily::Coloring3: return p == 2 ? Family::Type1 : Family::Type4;
        case CodeFamily::Coloring4: return spec.r % 2 == 0 ? Family::Type5 : Family::Type6;
        case CodeFamily::Coloring5: return Family::Type1;
    }
    return Family::Type1;
}

} // namespace

WeightedCycle family_cycle(const FamilySpec& spec) {
    spec.validate();
    const int p = spec.period();
    WeightedCycle folded = fold_profile(project_ball(spec.r, 1), p);

    // Read the letter values off the folded weights and check the word shape.
    CycleSpec origin;
    origin.family = cycle_family_for(spec, p);
    origin.p = p;
    std::array<Rational, kSymbolCount> values{};
    std::array<bool, kSymbolCount> seen{};
    const std::vector<Symbol> word = origin.word();
    for (int i = 0; i < p; ++i) {
        const int s = static_cast<int>(word[i]);
        const Rational v = folded.weights.weights[i].constant_term();
        if (!seen[s]) {
            seen[s] = true;
            values[s] = v;
        } else if (values[s] != v) {
            throw std::logic_error(std::string("folded cycle for ") +
                                   code_family_name(spec.family) + " at r=" +
                                   std::to_string(spec.r) + " does not match the " +
                                   family_name(origin.family) + " word");
        }
    }
    origin.concrete = values;
    origin.validate(); // distinctness of the derived letter values
    folded.origin = origin;
    return folded;
}

namespace {

std::vector<CodeTableRow> family_rows(const FamilySpec& spec) {
    const WeightedCycle cycle = family_cycle(spec);
    const std::vector<PredictedRow> rows = predicted_rows(*cycle.origin, /*with_counts=*/false);

    auto as_int = [](const WeightExpr& e) {
        const Rational v = e.constant_term();
        if (!v.is_integer()) throw std::logic_error("non-integer table constant");
        return v.num;
    };
    auto make = [&](const PredictedRow& row) {
        CodeTableRow out;
        out.family = spec.family;
        if (spec.family == CodeFamily::Coloring5) out.variant = spec.variant;
        out.r = spec.r;
        out.alpha = row.alpha;
        out.a = as_int(row.a);
        out.b = as_int(row.b);
        out.in_scope = std::llabs(out.a - out.b) > 4;
        return out;
    };

    std::vector<CodeTableRow> out;
    for (const PredictedRow& row : rows) {
        switch (spec.family) {
            case CodeFamily::Coloring1:
            case CodeFamily::Coloring3:
            case CodeFamily::Coloring5:
                // All rows of the folded cycle's family are published.
                out.push_back(make(row));
                break;
            case CodeFamily::Coloring2:
                // Only the p/2-antiperiodic labelling arises from this family.
                if (row.structure == RowStructure::Antiperiodic) out.push_back(make(row));
                break;
            case CodeFamily::Coloring4:
                // Only the heavy 3-periodic row; its complement is |a-b| = 1.
                if (row.structure == RowStructure::ThreePeriodic && row.note.empty())
                    out.push_back(make(row));
                break;
        }
    }
    return out;
}

std::vector<FamilySpec> specs_at(int r) {
    std::vector<FamilySpec> specs;
    specs.push_back({CodeFamily::Coloring1, r, {}});
    specs.push_back({CodeFamily::Coloring2, r, {}});
    specs.push_back({CodeFamily::Coloring3, r, {}});
    if ((2 * r + 1) % 3 == 0) specs.push_back({CodeFamily::Coloring4, r, {}});
    specs.push_back({CodeFamily::Coloring5, r, Coloring5Variant::TwoPeriodic});
    specs.push_back({CodeFamily::Coloring5, r, Coloring5Variant::ThreePeriodic});
    return specs;
}

} // namespace

std::vector<CodeTableRow> theorem_table(int r) {
    if (r < 2) throw std::invalid_argument("table is defined for r >= 2");
    std::vector<CodeTableRow> out;
    for (const FamilySpec& spec : specs_at(r)) {
        std::vector<CodeTableRow> rows = family_rows(spec);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

GeneratedCode generate_code(const FamilySpec& spec, const CodePreset& preset,
                            Orientation orientation) {
    GeneratedCode result;
    result.cycle = family_cycle(spec);
    const int p = result.cycle.p;

    std::vector<bool> black(p, false);
    switch (preset.kind) {
        case CodePreset::Kind::InitialBlock: {
            // Coloring 3 rides a type-4 cycle, where the balanced block has
            // length 2*alpha+2; everywhere else the block is alpha+1 cells.
            const bool balanced = result.cycle.origin->family == Family::Type4;
            const int len = balanced ? 2 * preset.alpha + 2 : preset.alpha + 1;
            if (len < 1 || len >= p)
                throw std::invalid_argument("initial block must leave both colors present");
            for (int i = 0; i < len; ++i) black[i] = true;
            break;
        }
        case CodePreset::Kind::Alternate:
            if (p % 2 != 0) throw std::invalid_argument("alternate pattern needs an even period");
            for (int i = 0; i < p; i += 2) black[i] = true;
            break;
        case CodePreset::Kind::HalfBlack:
            if (p % 2 != 0) throw std::invalid_argument("half-black pattern needs an even period");
            for (int i = 0; i < p / 2; ++i) black[i] = true;
            break;
        case CodePreset::Kind::ThreePattern: {
            if (p % 3 != 0) throw std::invalid_argument("three-pattern needs period divisible by 3");
            const int per = preset.alpha + 1;
            if (per < 1 || per > 2)
                throw std::invalid_argument("three-pattern takes 1 or 2 blacks per period");
            for (int i = 0; i < p; ++i) black[i] = (i % 3) < per;
            break;
        }
        case CodePreset::Kind::Explicit:
            if (preset.explicit_coloring.size() != p)
                throw std::invalid_argument("explicit pattern length must equal the cycle period");
            for (int i = 0; i < p; ++i) black[i] = preset.explicit_coloring.black(i);
            break;
    }
    Coloring pattern{black};

    const LabellingVerdict verdict =
        classify_labelling(rotation_instance(result.cycle), pattern);
    if (!verdict.is_constant()) {
        std::string msg = "pattern " + pattern.str() + " is not constant on the " +
                          code_family_name(spec.family) + " cycle";
        if (verdict.witness)
            msg += " (rotations " + std::to_string(verdict.witness->first) + " and " +
                   std::to_string(verdict.witness->second) + " disagree)";
        throw std::invalid_argument(msg);
    }
    if (verdict.a) result.a = verdict.a->constant_term().num;
    if (verdict.b) result.b = verdict.b->constant_term().num;
    result.coloring = build_diagonal_coloring(LinePattern{pattern}, orientation);
    return result;
}

CodePreset row_preset(const CodeTableRow& row) {
    switch (row.family) {
        case CodeFamily::Coloring1: return CodePreset::initial_block(row.alpha.value_or(0));
        case CodeFamily::Coloring2: return CodePreset::half_black();
        case CodeFamily::Coloring3:
            if (row.alpha) return CodePreset::initial_block(*row.alpha);
            return CodePreset::alternate();
        case CodeFamily::Coloring4: return CodePreset::three_pattern(1); // two blacks per period
        case CodeFamily::Coloring5:
            if (row.variant == Coloring5Variant::ThreePeriodic)
                return CodePreset::three_pattern(row.alpha.value_or(0));
            return CodePreset::initial_block(0);
    }
    return CodePreset::initial_block(0);
}

FamilySpec row_family_spec(const CodeTableRow& row) {
    FamilySpec spec;
    spec.family = row.family;
    spec.r = row.r;
    if (row.variant) spec.variant = *row.variant;
    return spec;
}

PipelineReport end_to_end(int r) {
    PipelineReport report;
    report.r = r;
    report.all_verified = true;
    for (const CodeTableRow& row : theorem_table(r)) {
        PipelineRow entry;
        entry.row = row;
        const GeneratedCode code =
            generate_code(row_family_spec(row), row_preset(row), Orientation::Parallel);
        const CodeReport check = verify_code(code.coloring, r);
        entry.observed_a = check.a;
        entry.observed_b = check.b;
        entry.violation = check.violation;
        entry.verified = check.verified() && check.a && check.b && *check.a == row.a &&
                         *check.b == row.b;
        if (!entry.verified) report.all_verified = false;
        report.rows.push_back(std::move(entry));
    }
    return report;
}

} // namespace gridcover
